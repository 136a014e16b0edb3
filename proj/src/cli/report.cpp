#include "tightcl/report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace tc {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "gb",       "member",      "bracket",   "colon",  "intersect",    "order",
      "star",     "special",     "frobenius", "independent", "reduce",  "closure",
      "sandwich", "reduce-graded", "multiplicity", "hms"};
  return names;
}

Json options_to_json(const CommandOptions& o) {
  Json j;
  j["command"] = o.command;
  j["ideal"] = o.ideal;
  j["elem"] = o.elem;
  j["by"] = o.by;
  j["with"] = o.with;
  j["params"] = o.params;
  j["e"] = o.e ? Json(*o.e) : Json(nullptr);
  j["q0"] = o.q0 ? Json(*o.q0) : Json(nullptr);
  j["emax"] = o.emax ? Json(*o.emax) : Json(nullptr);
  j["degree_cap"] = o.degree_cap ? Json(*o.degree_cap) : Json(nullptr);
  j["n"] = o.n ? Json(*o.n) : Json(nullptr);
  j["strategy"] = o.strategy;
  return j;
}

CommandOptions options_from_json(const Json& j) {
  CommandOptions o;
  o.command = j.at("command").get<std::string>();
  o.ideal = j.value("ideal", "");
  o.elem = j.value("elem", "");
  o.by = j.value("by", "");
  o.with = j.value("with", "");
  if (j.contains("params")) o.params = j.at("params").get<std::vector<std::string>>();
  auto opt = [&](const char* key, auto& out) {
    if (j.contains(key) && !j.at(key).is_null())
      out = j.at(key).get<typename std::decay_t<decltype(out)>::value_type>();
  };
  opt("e", o.e);
  opt("q0", o.q0);
  opt("emax", o.emax);
  opt("degree_cap", o.degree_cap);
  opt("n", o.n);
  o.strategy = j.value("strategy", "direct");
  return o;
}

namespace {

Json polys_json(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json opt_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json checks_json(const std::vector<LevelCheck>& v) {
  Json a = Json::array();
  for (const auto& l : v) a.push_back({{"e", l.e}, {"holds", l.holds}});
  return a;
}

std::vector<LevelCheck> checks_from(const Json& a) {
  std::vector<LevelCheck> v;
  for (const auto& l : a) v.push_back({l.at("e").get<int>(), l.at("holds").get<bool>()});
  return v;
}

// Subject: the (f, I) pair the witness certifies.
Json witness_json(const Witness& w, const Polynomial& f, const Ideal& I) {
  Json j;
  j["c"] = w.c.to_string();
  j["kind"] = to_string(w.kind);
  j["family"] = to_string(w.family);
  j["e_from"] = w.e_from;
  j["e_to"] = w.e_to;
  j["subject"] = {{"f", f.to_string()}, {"ideal", polys_json(I.generators())}};
  j["membership"] = checks_json(w.membership);
  j["decomposition"] = checks_json(w.decomposition);
  return j;
}

Json verdict_json(const ClosureVerdict& v, const Polynomial& f, const Ideal& I) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["reason"] = to_string(v.reason);
  j["e_max"] = v.e_max;
  Json orders = Json::array();
  for (const auto& o : v.orders) orders.push_back(opt_json(o));
  j["orders"] = orders;
  if (v.growth_rate) {
    // Fixed precision keeps the serialized form stable.
    j["growth_rate"] = std::round(*v.growth_rate * 1e6) / 1e6;
  } else {
    j["growth_rate"] = nullptr;
  }
  j["notes"] = v.notes;
  j["witness"] = v.witness ? witness_json(*v.witness, f, I) : Json(nullptr);
  return j;
}

Json closure_json(const ClosureReport& r, const Ideal& I) {
  Json j;
  j["window"] = {r.window_lo, r.window_hi};
  j["degree_window_applied"] = r.degree_window_applied;
  Json space = Json::array();
  for (const auto& [d, n] : r.search_space) space.push_back({{"degree", d}, {"monomials", n}});
  j["search_space"] = space;
  j["multipliers"] = polys_json(r.multipliers);
  auto adds = [&](const std::vector<ClosureAddition>& v) {
    Json a = Json::array();
    for (const auto& x : v)
      a.push_back({{"element", x.element.to_string()},
                   {"degree", x.degree},
                   {"verdict", verdict_json(x.verdict, x.element, I)}});
    return a;
  };
  j["certified"] = adds(r.certified);
  j["leveled"] = adds(r.leveled);
  j["unconfirmed"] = adds(r.unconfirmed);
  j["warnings"] = r.warnings;
  j["closure"] = r.closure ? polys_json(r.closure->generators()) : Json(nullptr);
  return j;
}

Json ring_json(const Session& s) {
  const auto& R = *s.ring;
  const auto& S = *R.ambient();
  Json j;
  j["char"] = R.characteristic();
  j["vars"] = S.names();
  j["weights"] = S.weights();
  j["relations"] = polys_json(R.relations());
  Json flags = Json::array();
  if (asserted(R.flags().domain)) flags.push_back("domain");
  if (asserted(R.flags().normal)) flags.push_back("normal");
  if (asserted(R.flags().graded_reduced)) flags.push_back("graded_reduced");
  if (asserted(R.flags().cm)) flags.push_back("cm");
  j["flags"] = flags;
  j["session"] = print_session(s);
  return j;
}

QLevel resolve_level(const Session& s, const CommandOptions& o) {
  QLevel level = s.level;
  if (o.emax) level.e_max = *o.emax;
  if (o.q0) {
    const std::int64_t p = s.ring->characteristic();
    std::int64_t q = 1;
    int e = 0;
    while (q < *o.q0 && e <= 12) {
      q *= p;
      ++e;
    }
    if (q != *o.q0) throw Error("q0 = " + std::to_string(*o.q0) + " is not a power of " + std::to_string(p));
    level.e0 = e;
  }
  level.validate();
  return level;
}

const Ideal& pick_ideal(const Session& s, const CommandOptions& o) {
  if (!o.ideal.empty()) return s.ideal(o.ideal);
  if (s.ideals.size() == 1) return s.ideals.front().second;
  throw Error("command '" + o.command + "' needs an ideal (-i)");
}

Polynomial pick_elem(const Session& s, const CommandOptions& o) {
  if (o.elem.empty()) throw Error("command '" + o.command + "' needs --elem");
  return s.element(o.elem);
}

Json level_json(QLevel l) { return {{"e0", l.e0}, {"e_max", l.e_max}}; }

Json compute(const Session& s, const CommandOptions& o, Json& inputs, Json& witness) {
  const auto& cmd = o.command;
  const auto& R = s.ring;
  Json r;
  auto with_ideal = [&]() -> const Ideal& {
    const Ideal& I = pick_ideal(s, o);
    inputs["ideal"] = polys_json(I.generators());
    return I;
  };
  auto with_elem = [&] {
    Polynomial f = pick_elem(s, o);
    inputs["elem"] = f.to_string();
    return f;
  };
  auto with_level = [&] {
    QLevel l = resolve_level(s, o);
    inputs["level"] = level_json(l);
    return l;
  };

  if (cmd == "gb") {
    const Ideal& I = with_ideal();
    r["order"] = "degrevlex";
    r["basis"] = polys_json(I.basis().generators());
  } else if (cmd == "member") {
    const Ideal& I = with_ideal();
    Polynomial f = with_elem();
    r["member"] = I.contains(f);
    r["normal_form"] = I.reduce(f).to_string();
  } else if (cmd == "bracket") {
    const Ideal& I = with_ideal();
    const int e = o.e.value_or(1);
    if (e < 0 || e > 12) throw Error("bracket exponent must lie in [0, 12]");
    inputs["e"] = e;
    Ideal B = bracket_power(I, e);
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= R->characteristic();
    r["q"] = q;
    r["generators"] = polys_json(B.generators());
  } else if (cmd == "colon") {
    const Ideal& I = with_ideal();
    if (o.by.empty()) throw Error("colon needs --by");
    std::optional<Ideal> Q;
    if (const Ideal* K = s.find_ideal(o.by)) {
      inputs["by"] = {{"ideal", polys_json(K->generators())}};
      Q = colon(I, *K);
    } else {
      Polynomial f = s.element(o.by);
      inputs["by"] = {{"elem", f.to_string()}};
      Q = colon(I, f);
    }
    r["generators"] = polys_json(minimalize(*Q).generators());
  } else if (cmd == "intersect") {
    const Ideal& I = with_ideal();
    if (o.with.empty()) throw Error("intersect needs --with");
    const Ideal& K = s.ideal(o.with);
    inputs["with"] = polys_json(K.generators());
    r["generators"] = polys_json(minimalize(intersect(I, K)).generators());
  } else if (cmd == "order") {
    if (!o.elem.empty()) {
      Polynomial f = with_elem();
      r["order"] = opt_json(madic_order(f, *R));
    } else {
      const Ideal& I = with_ideal();
      r["order"] = opt_json(madic_order(I));
    }
  } else if (cmd == "star" || cmd == "special") {
    const Ideal& I = with_ideal();
    Polynomial f = with_elem();
    QLevel l = with_level();
    if (cmd == "star") {
      r = verdict_json(star_member(f, I, l), f, I);
    } else if (o.strategy == "via-tight") {
      inputs["strategy"] = o.strategy;
      Polynomial fq0 = frobenius_power(f, l.e0);
      Ideal target = maximal_ideal(R) * bracket_power(I, l.e0);
      r = verdict_json(special_star_member_via_tight(f, I, l), fq0, target);
    } else if (o.strategy == "direct") {
      inputs["strategy"] = o.strategy;
      r = verdict_json(special_star_member(f, I, l), f, I);
    } else {
      throw Error("unknown strategy '" + o.strategy + "'");
    }
    witness = r["witness"];
  } else if (cmd == "frobenius") {
    const Ideal& I = with_ideal();
    Polynomial f = with_elem();
    QLevel l = with_level();
    auto fr = frobenius_member(f, I, l);
    r["e"] = fr.e ? Json(*fr.e) : Json(nullptr);
    r["e_max"] = fr.e_max;
  } else if (cmd == "independent") {
    const Ideal& I = with_ideal();
    QLevel l = with_level();
    auto rep = star_independent(I, l);
    r["aggregate"] = to_string(rep.aggregate);
    r["minimal_generators"] = rep.minimal_generators;
    Json per = Json::array();
    const auto& gens = I.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      per.push_back({{"generator", gens[i].to_string()},
                     {"verdict", verdict_json(rep.per_generator[i], gens[i], Ideal(R, others))}});
    }
    r["per_generator"] = per;
    r["warnings"] = rep.warnings;
  } else if (cmd == "reduce") {
    const Ideal& I = with_ideal();
    QLevel l = with_level();
    r["generators"] = polys_json(star_reduce(I, l));
  } else if (cmd == "closure") {
    const Ideal& I = with_ideal();
    QLevel l = with_level();
    const std::int64_t cap = o.degree_cap.value_or(s.degree_cap);
    inputs["degree_cap"] = cap;
    r = closure_json(star_closure(I, cap, l), I);
  } else if (cmd == "sandwich") {
    const Ideal& I = with_ideal();
    auto sw = sandwich_check(I);
    r["status"] = sw.status == SandwichStatus::TightlyClosed ? "TIGHTLY_CLOSED" : "NOT_APPLICABLE";
    r["k"] = opt_json(sw.k);
    r["reason"] = sw.reason;
  } else if (cmd == "reduce-graded") {
    const Ideal& I = with_ideal();
    QLevel l = with_level();
    int n = 0;
    if (o.n) {
      n = *o.n;
    } else {
      auto k = madic_order(I);
      if (!k) throw Error("reduce-graded needs -n for the zero ideal");
      n = static_cast<int>(*k);
    }
    inputs["n"] = n;
    auto g = graded_reduction(I, n, l);
    r["status"] = to_string(g.status);
    r["reason"] = g.reason;
    r["lower_premise"] = g.lower_premise;
    r["upper_premise"] = g.upper_premise;
    r["initial_forms"] = polys_json(g.initial_forms);
    r["higher_generators"] = polys_json(g.higher_generators);
    r["I0"] = g.I0 ? polys_json(g.I0->generators()) : Json(nullptr);
    r["certificate"] = g.certificate;
    r["bound"] = g.bound;
    r["I0_closure"] = g.I0_closure && g.I0 ? closure_json(*g.I0_closure, *g.I0) : Json(nullptr);
  } else if (cmd == "multiplicity") {
    auto m = minimal_multiplicity(R);
    r["status"] = to_string(m.status);
    r["e"] = opt_json(m.e);
    r["edim"] = opt_json(m.edim);
    r["dim"] = m.dim ? Json(*m.dim) : Json(nullptr);
    r["reason"] = m.reason;
    r["caveat"] = m.caveat;
  } else if (cmd == "hms") {
    std::vector<Polynomial> params;
    if (o.params.empty()) {
      params = with_ideal().generators();
    } else {
      for (const auto& t : o.params) params.push_back(s.element(t));
    }
    inputs["params"] = polys_json(params);
    auto h = hms_expected(Ideal(R, params));
    r["label"] = h.label;
    r["D"] = h.D;
    r["expected"] = polys_json(h.expected.generators());
  } else {
    throw Error("unknown command '" + cmd + "'");
  }
  return r;
}

bool all_hold(const std::vector<LevelCheck>& v) {
  for (const auto& l : v)
    if (!l.holds) return false;
  return true;
}

std::optional<WitnessKind> witness_kind_from(const std::string& s) {
  for (auto k : {WitnessKind::Trivial, WitnessKind::Frobenius, WitnessKind::Colon})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

// Checks one witness against the verdict kind recorded next to it.
void replay_one(const Session& s, const Json& w, const std::string& recorded_kind, const std::string& where,
                ReplayOutcome& out) {
  ++out.witnesses;
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    out.failures.push_back(where + ": " + msg);
  };
  const auto& R = s.ring;
  Polynomial f = R->parse(w.at("subject").at("f").get<std::string>());
  std::vector<Polynomial> gens;
  for (const auto& g : w.at("subject").at("ideal")) gens.push_back(R->parse(g.get<std::string>()));
  Ideal I(R, gens);
  Witness wit;
  wit.c = R->parse(w.at("c").get<std::string>());
  auto kind = witness_kind_from(w.at("kind").get<std::string>());
  if (!kind) return fail("unknown witness kind");
  wit.kind = *kind;
  wit.family = w.at("family").get<std::string>() == "special" ? Family::Special : Family::Tight;
  wit.e_from = w.at("e_from").get<int>();
  wit.e_to = w.at("e_to").get<int>();
  wit.membership = checks_from(w.at("membership"));
  wit.decomposition = checks_from(w.at("decomposition"));
  if (!replay_witness(f, I, wit)) return fail("recorded level checks do not replay");
  if (!all_hold(wit.membership) || !all_hold(wit.decomposition))
    return fail("witness has a failing level but the verdict is positive");
  const char* kind_again =
      wit.kind == WitnessKind::Trivial ? to_string(VerdictKind::ProvenIn) : to_string(VerdictKind::InAtLevel);
  if (recorded_kind != kind_again)
    fail(std::string("witness gives ") + kind_again + ", report says " + recorded_kind);
}

void walk(const Session& s, const Json& j, const std::string& path, ReplayOutcome& out) {
  if (j.is_object()) {
    if (j.contains("witness") && j.at("witness").is_object() && j.contains("kind") &&
        j.at("kind").is_string())
      replay_one(s, j.at("witness"), j.at("kind").get<std::string>(), path, out);
    for (const auto& [k, v] : j.items()) walk(s, v, path + "/" + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) walk(s, j[i], path + "/" + std::to_string(i), out);
  }
}

}  // namespace

Json run_command(const Session& s, const CommandOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Json inputs;
  inputs["options"] = options_to_json(o);
  Json witness = nullptr;
  Json result = compute(s, o, inputs, witness);
  const auto t1 = std::chrono::steady_clock::now();

  Json rep;
  rep["schema"] = kReportSchema;
  rep["engine"] = kEngineVersion;
  rep["command"] = o.command;
  rep["ring"] = ring_json(s);
  rep["inputs"] = inputs;
  rep["result"] = result;
  rep["witness"] = witness;
  rep["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

Json without_timing(Json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto& [k, v] : j.items()) v = without_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = without_timing(v);
  }
  return j;
}

ReplayOutcome replay_report(const Json& report) {
  ReplayOutcome out;
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    out.failures.push_back(msg);
  };
  if (report.value("schema", "") != kReportSchema) {
    fail("unknown report schema");
    return out;
  }
  if (report.value("engine", "") != kEngineVersion) fail("report written by a different engine version");
  Session s = parse_session(report.at("ring").at("session").get<std::string>());
  CommandOptions o = options_from_json(report.at("inputs").at("options"));
  Json again = run_command(s, o);
  if (without_timing(again.at("result")) != without_timing(report.at("result")))
    fail("recomputed result differs from the report");
  walk(s, report.at("result"), "result", out);
  if (report.at("witness").is_object()) {
    const auto& rk = report.at("result");
    replay_one(s, report.at("witness"), rk.value("kind", ""), "witness", out);
  }
  return out;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render(const Json& j, const std::string& indent, std::ostringstream& os) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      os << indent << k << ":\n";
      render(v, indent + "  ", os);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      os << indent << k << ":\n";
      for (const auto& x : v) {
        bool flat = x.is_object();
        for (const auto& [k2, v2] : x.items()) flat = flat && !v2.is_structured();
        if (flat) {
          os << indent << "  -";
          const char* sep = " ";
          for (const auto& [k2, v2] : x.items()) {
            os << sep << k2 << ": " << scalar_text(v2);
            sep = ", ";
          }
          os << "\n";
        } else if (x.is_object()) {
          os << indent << "  -\n";
          render(x, indent + "    ", os);
        } else {
          os << indent << "  - " << x.dump() << "\n";
        }
      }
    } else if (v.is_array()) {
      os << indent << k << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
      os << "]\n";
    } else {
      os << indent << k << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << report.value("command", "") << " on ";
  const auto& ring = report.at("ring");
  os << "F_" << ring.at("char").get<std::int64_t>() << "[";
  const auto& vars = ring.at("vars");
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i].get<std::string>();
  os << "]";
  if (!ring.at("relations").empty()) {
    os << "/(";
    for (std::size_t i = 0; i < ring.at("relations").size(); ++i)
      os << (i ? ", " : "") << ring.at("relations")[i].get<std::string>();
    os << ")";
  }
  os << "\n";
  render(report.at("result"), "  ", os);
  os << "  time: " << report.at("timing_ms").get<double>() << " ms\n";
  return os.str();
}

}  // namespace tc
