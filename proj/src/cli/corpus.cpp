#include "tightcl/corpus.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include "tightcl/groebner.hpp"

namespace tc {

const std::vector<CorpusSession>& corpus_sessions() {
  static const std::vector<CorpusSession> sessions{
      {"regular-p5",
       "ring { char: 5 ; vars: x(1) y(1) }\n"
       "ideal M { gens: x, y }\n"
       "ideal Q { gens: x^2, y^2 }\n"
       "ideal N { gens: x^2, x*y^2, y^3 }\n"},
      {"regular-p2",
       "ring { char: 2 ; vars: x(1) y(1) }\n"
       "ideal M { gens: x, y }\n"
       "ideal Q { gens: x^2, x*y, y^3 }\n"},
      {"fermat-p5",
       "# cubic cone over an elliptic curve\n"
       "ring { char: 5 ; vars: x(1) y(1) z(1) ; relations: x^3 + y^3 + z^3 ;\n"
       "       flags: domain normal graded_reduced cm }\n"
       "ideal I { gens: x, y }\n"
       "ideal M2 { gens: x^2, x*y, x*z, y^2, y*z, z^2 }\n"
       "ideal T { gens: x, y, z^2 }\n"},
      {"fermat-p2",
       "ring { char: 2 ; vars: x(1) y(1) z(1) ; relations: x^3 + y^3 + z^3 ;\n"
       "       flags: domain normal graded_reduced cm }\n"
       "ideal I { gens: x, y }\n"
       "ideal M2 { gens: x^2, x*y, x*z, y^2, y*z, z^2 }\n"
       "ideal T { gens: x, y, z^2 }\n"},
      {"cone-p5",
       "ring { char: 5 ; vars: x(1) y(1) z(1) ; relations: x*y - z^2 ;\n"
       "       flags: domain normal graded_reduced cm }\n"
       "ideal I { gens: x, y }\n"
       "ideal X { gens: x }\n"
       "ideal M { gens: x, y, z }\n"},
      {"cone-p3",
       "ring { char: 3 ; vars: x(1) y(1) z(1) ; relations: x*y - z^2 ;\n"
       "       flags: domain normal graded_reduced cm }\n"
       "ideal I { gens: x, y }\n"
       "ideal X { gens: x }\n"
       "ideal M { gens: x, y, z }\n"},
      {"inhomogeneous-p5",
       "ring { char: 5 ; vars: x(1) y(1) ; flags: domain normal graded_reduced }\n"
       "ideal G { gens: x^2 + y^3, x*y, y^2 + x^3 }\n"},
  };
  return sessions;
}

namespace {

using Check = std::function<std::optional<std::string>(const Session&, const Json&)>;

struct Fixture {
  std::string name;
  std::string session;
  CommandOptions options;
  Check check;
};

Ideal ideal_of(const Session& s, const Json& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(s.ring->parse(g.get<std::string>()));
  return Ideal(s.ring, std::move(ps));
}

CommandOptions opts(std::string cmd, std::string ideal = "", std::string elem = "") {
  CommandOptions o;
  o.command = std::move(cmd);
  o.ideal = std::move(ideal);
  o.elem = std::move(elem);
  return o;
}

std::optional<std::string> expect_eq(const Json& got, const Json& want, const std::string& what) {
  if (got == want) return std::nullopt;
  return what + ": expected " + want.dump() + ", got " + got.dump();
}

Check kind_is(std::string kind, std::string reason = "") {
  return [kind, reason](const Session&, const Json& r) -> std::optional<std::string> {
    if (auto e = expect_eq(r.at("kind"), kind, "verdict")) return e;
    if (!reason.empty()) return expect_eq(r.at("reason"), reason, "reason");
    return std::nullopt;
  };
}

Check not_positive() {
  return [](const Session&, const Json& r) -> std::optional<std::string> {
    const auto k = r.at("kind").get<std::string>();
    if (k == "PROVEN_IN" || k == "IN_AT_LEVEL") return "unexpected positive verdict " + k;
    return std::nullopt;
  };
}

Check ideal_field_equals(std::string field, std::initializer_list<const char*> gens) {
  std::vector<std::string> want(gens.begin(), gens.end());
  return [field, want](const Session& s, const Json& r) -> std::optional<std::string> {
    std::vector<Polynomial> ps;
    for (const auto& g : want) ps.push_back(s.ring->parse(g));
    if (!equal(ideal_of(s, r.at(field)), Ideal(s.ring, ps)))
      return field + " is " + r.at(field).dump();
    return std::nullopt;
  };
}

Check closure_adds(std::initializer_list<const char*> elems, std::initializer_list<const char*> closure) {
  std::vector<std::string> want_adds(elems.begin(), elems.end());
  std::vector<std::string> want_closure(closure.begin(), closure.end());
  return [want_adds, want_closure](const Session& s, const Json& r) -> std::optional<std::string> {
    std::vector<std::string> got;
    for (const char* key : {"certified", "leveled"})
      for (const auto& a : r.at(key)) got.push_back(a.at("element").get<std::string>());
    std::vector<std::string> want;
    for (const auto& w : want_adds) want.push_back(s.ring->parse(w).to_string());
    if (got != want) return "additions " + Json(got).dump() + ", expected " + Json(want).dump();
    std::vector<Polynomial> ps;
    for (const auto& g : want_closure) ps.push_back(s.ring->parse(g));
    if (!equal(ideal_of(s, r.at("closure")), Ideal(s.ring, ps))) return "closure is " + r.at("closure").dump();
    return std::nullopt;
  };
}

Check fields(Json want) {
  return [want](const Session&, const Json& r) -> std::optional<std::string> {
    for (const auto& [k, v] : want.items())
      if (auto e = expect_eq(r.at(k), v, k)) return e;
    return std::nullopt;
  };
}

Check all_of(std::vector<Check> cs) {
  return [cs](const Session& s, const Json& r) -> std::optional<std::string> {
    for (const auto& c : cs)
      if (auto e = c(s, r)) return e;
    return std::nullopt;
  };
}

Check witness_degree_at_most(std::int64_t d) {
  return [d](const Session& s, const Json& r) -> std::optional<std::string> {
    if (!r.at("witness").is_object()) return std::string("no witness");
    auto c = s.ring->parse(r.at("witness").at("c").get<std::string>());
    if (c.degree() > d) return "witness degree " + std::to_string(c.degree());
    return std::nullopt;
  };
}

std::vector<Fixture> fixtures() {
  auto emax = [](CommandOptions o, int e) {
    o.emax = e;
    return o;
  };
  auto cap = [](CommandOptions o, std::int64_t c) {
    o.degree_cap = c;
    return o;
  };
  CommandOptions hms = opts("hms");
  hms.params = {"x", "y"};
  CommandOptions colon_xz = opts("colon", "X");
  colon_xz.by = "z";
  CommandOptions meet = opts("intersect", "M");
  meet.with = "Q";
  CommandOptions bracket2 = opts("bracket", "M");
  bracket2.e = 2;
  CommandOptions graded = opts("reduce-graded", "G");
  graded.n = 2;
  CommandOptions via_tight = opts("special", "I", "z^2");
  via_tight.strategy = "via-tight";
  via_tight.q0 = 5;

  return {
      {"fermat p=5: z^2 in (x,y)* at level", "fermat-p5", emax(opts("star", "I", "z^2"), 2),
       all_of({kind_is("IN_AT_LEVEL"), witness_degree_at_most(3)})},
      {"fermat p=5: z outside (x,y)* by degree", "fermat-p5", opts("star", "I", "z"),
       kind_is("PROVEN_OUT", "degree_bound")},
      {"fermat p=5: closure of (x,y) up to degree 3", "fermat-p5", cap(emax(opts("closure", "I"), 2), 3),
       closure_adds({"z^2"}, {"x", "y", "z^2"})},
      {"fermat p=5: expected closure of parameters", "fermat-p5", hms,
       all_of({fields({{"D", 2}}), ideal_field_equals("expected", {"x", "y", "z^2"})})},
      {"fermat p=5: m^2 sandwiched", "fermat-p5", opts("sandwich", "M2"),
       fields({{"status", "TIGHTLY_CLOSED"}, {"k", 1}})},
      {"fermat p=5: (x,y,z^2) sandwiched", "fermat-p5", opts("sandwich", "T"),
       fields({{"status", "TIGHTLY_CLOSED"}, {"k", 1}})},
      {"fermat p=5: multiplicity 3 fails the bound", "fermat-p5", opts("multiplicity"),
       fields({{"status", "FALSE"}, {"e", 3}, {"edim", 3}, {"dim", 2}})},
      {"fermat p=5: Frobenius power of z^2", "fermat-p5", opts("frobenius", "I", "z^2"), fields({{"e", 1}})},
      {"fermat p=5: (x,y,z^2) not independent", "fermat-p5", opts("independent", "T"),
       fields({{"aggregate", "NOT_INDEPENDENT"}})},
      {"fermat p=5: reduce (x,y,z^2)", "fermat-p5", opts("reduce", "T"), fields({{"generators", {"x", "y"}}})},
      {"fermat p=5: z^10 lies in m (x^5, y^5)", "fermat-p5", via_tight, kind_is("PROVEN_IN")},
      {"fermat p=2: z^2 in (x,y)* at level", "fermat-p2", opts("star", "I", "z^2"), kind_is("IN_AT_LEVEL")},
      {"fermat p=2: m^2 sandwiched", "fermat-p2", opts("sandwich", "M2"),
       fields({{"status", "TIGHTLY_CLOSED"}, {"k", 1}})},
      {"cone p=5: z outside (x,y)* by degree", "cone-p5", opts("star", "I", "z"),
       kind_is("PROVEN_OUT", "degree_bound")},
      {"cone p=5: (x,y) closure adds nothing", "cone-p5", cap(opts("closure", "I"), 3),
       closure_adds({}, {"x", "y"})},
      {"cone p=5: minimal multiplicity", "cone-p5", opts("multiplicity"),
       fields({{"status", "F_RATIONAL"}, {"e", 2}, {"edim", 3}, {"dim", 2}})},
      {"cone p=5: (x) : z", "cone-p5", colon_xz, ideal_field_equals("generators", {"x", "z"})},
      {"cone p=3: minimal multiplicity", "cone-p3", opts("multiplicity"),
       fields({{"status", "F_RATIONAL"}, {"e", 2}})},
      {"cone p=3: z outside (x,y)* by degree", "cone-p3", opts("star", "I", "z"),
       kind_is("PROVEN_OUT", "degree_bound")},
      {"regular p=5: xy outside (x^2,y^2)*", "regular-p5", opts("star", "Q", "x*y"),
       kind_is("PROVEN_OUT", "regular_flatness")},
      {"regular p=5: x not special for (x,y)", "regular-p5", opts("special", "M", "x"), not_positive()},
      {"regular p=5: (x,y) independent", "regular-p5", opts("independent", "M"),
       fields({{"aggregate", "INDEPENDENT"}})},
      {"regular p=5: second bracket power", "regular-p5", bracket2,
       fields({{"q", 25}, {"generators", {"x^25", "y^25"}}})},
      {"regular p=2: basis of (x^2,xy,y^3)", "regular-p2", opts("gb", "Q"),
       ideal_field_equals("basis", {"x^2", "x*y", "y^3"})},
      {"regular p=2: (x,y) meets (x^2,xy,y^3)", "regular-p2", meet,
       ideal_field_equals("generators", {"x^2", "x*y", "y^3"})},
      {"inhomogeneous p=5: graded reduction", "inhomogeneous-p5", graded,
       all_of({fields({{"status", "TIGHTLY_CLOSED"}, {"lower_premise", true}, {"upper_premise", true}}),
               ideal_field_equals("I0", {"x^2", "x*y", "y^2"})})},
  };
}

struct Sweep {
  explicit Sweep(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void fail(std::string msg) { failures.push_back(std::move(msg)); }
  Json json() const {
    return {{"name", name}, {"checked", checked}, {"passed", failures.empty()}, {"failures", failures}};
  }
};

std::string where(const CorpusSession& cs, const std::string& ideal) { return cs.name + "/" + ideal; }

// Monomials of total degree d.
std::vector<Polynomial> monomials_of_degree(const Ring& S, int d) {
  std::vector<Polynomial> out;
  std::vector<int> e(S->nvars(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == e.size()) {
      e[i] = left;
      out.push_back(Polynomial::monomial(S, S->monomial(e)));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

bool flagged(const PresentedRing& R) {
  return asserted(R.flags().normal) && asserted(R.flags().graded_reduced) && R.standard_graded();
}

// Elements of I outside m I: generators, sums of two generators, and
// generators plus degree-one multiples of the others.
std::vector<Polynomial> outside_mI(const Ideal& I) {
  const auto& R = I.ring();
  const auto& S = R->ambient();
  Ideal mI = maximal_ideal(R) * I;
  std::vector<Polynomial> cands;
  const auto& g = I.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    cands.push_back(g[i]);
    for (std::size_t j = i + 1; j < g.size(); ++j) cands.push_back(g[i] + g[j]);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j == i) continue;
      for (std::size_t v = 0; v < S->nvars(); ++v) cands.push_back(g[i] + Polynomial::variable(S, v) * g[j]);
    }
  }
  std::vector<Polynomial> out;
  for (auto& f : cands)
    if (!mI.contains(f)) out.push_back(std::move(f));
  return out;
}

}  // namespace

Json corpus_run() {
  const auto t0 = std::chrono::steady_clock::now();
  Json out;
  out["schema"] = "tightcl.corpus/1";
  out["engine"] = kEngineVersion;
  bool passed = true;

  std::vector<std::pair<const CorpusSession*, Session>> parsed;
  for (const auto& cs : corpus_sessions()) parsed.emplace_back(&cs, parse_session(cs.text));
  auto session_named = [&](const std::string& n) -> const Session& {
    for (const auto& [cs, s] : parsed)
      if (cs->name == n) return s;
    throw Error("no corpus session '" + n + "'");
  };

  std::size_t ideal_count = 0;
  for (const auto& [cs, s] : parsed) ideal_count += s.ideals.size();
  out["sessions"] = parsed.size();
  out["ideals"] = ideal_count;

  Json fx = Json::array();
  Sweep replays("every fixture witness replays");
  for (const auto& f : fixtures()) {
    Json entry;
    entry["name"] = f.name;
    entry["session"] = f.session;
    try {
      const Session& s = session_named(f.session);
      Json rep = run_command(s, f.options);
      auto err = f.check(s, rep.at("result"));
      entry["passed"] = !err;
      entry["detail"] = err ? *err : "";
      auto rp = replay_report(rep);
      replays.checked += rp.witnesses;
      for (const auto& m : rp.failures) replays.fail(f.name + ": " + m);
      entry["report"] = rep;
    } catch (const std::exception& e) {
      entry["passed"] = false;
      entry["detail"] = std::string("error: ") + e.what();
    }
    passed = passed && entry["passed"].get<bool>();
    fx.push_back(entry);
  }
  out["fixtures"] = fx;

  Sweep mI_in("generators of m I are special closure members");
  Sweep indep_guard("no element of I outside m I is special for independent ideals");
  Sweep degree_guard("nothing outside I + m^(k+1) enters the tight closure");
  Sweep chains("colon chains are Frobenius compatible");
  Sweep brackets("bracket powers compose");
  Sweep reduce_same("reduced generators give the same closure");

  for (const auto& [cs, s] : parsed) {
    const auto& R = s.ring;
    const auto& S = R->ambient();
    for (const auto& [name, I] : s.ideals) {
      const std::string at = where(*cs, name);
      Ideal mI = maximal_ideal(R) * I;
      for (const auto& g : mI.generators()) {
        ++mI_in.checked;
        auto v = special_star_member(g, I, {0, 1});
        if (v.kind != VerdictKind::ProvenIn) mI_in.fail(at + ": " + g.to_string() + " got " + to_string(v.kind));
      }

      if (star_independent(I).aggregate == Independence::Independent) {
        for (const auto& f : outside_mI(I)) {
          ++indep_guard.checked;
          auto v = special_star_member(f, I, {0, 1});
          if (v.positive()) indep_guard.fail(at + ": " + f.to_string() + " got " + to_string(v.kind));
        }
      }

      auto k = madic_order(I);
      if (flagged(*R) && k && *k >= 1) {
        Ideal wider = I + maximal_power(R, static_cast<int>(*k + 1));
        for (int d = 0; d <= *k + 1; ++d) {
          auto mons = monomials_of_degree(S, d);
          std::vector<Polynomial> cands = mons;
          for (std::size_t i = 0; i + 1 < mons.size(); ++i) cands.push_back(mons[i] + mons[i + 1]);
          for (const auto& f : cands) {
            if (wider.contains(f)) continue;
            ++degree_guard.checked;
            auto v = star_member(f, I, {0, 1});
            if (v.positive()) degree_guard.fail(at + ": " + f.to_string() + " got " + to_string(v.kind));
          }
        }
      }

      for (std::size_t v = 0; v < S->nvars(); ++v) {
        Polynomial f = Polynomial::variable(S, v);
        if (R->is_zero(f)) continue;
        ++chains.checked;
        if (!colon_chain(f, I, {0, 2}).frobenius_compatible()) chains.fail(at + ": chain of " + f.to_string());
      }

      ++brackets.checked;
      if (!equal(bracket_power(bracket_power(I, 1), 1), bracket_power(I, 2))) brackets.fail(at);

      if (I.is_homogeneous() && R->is_homogeneous() && k) {
        ++reduce_same.checked;
        const std::int64_t cap = std::max<std::int64_t>(*k + 1, 2);
        Ideal reduced(R, star_reduce(I));
        auto a = star_closure(I, cap);
        auto b = star_closure(reduced, cap);
        if (!a.closure || !b.closure || !equal(*a.closure, *b.closure))
          reduce_same.fail(at + ": closures differ after reduction");
      }
    }
  }

  Json inv = Json::array();
  Sweep bundle("corpus holds at least 3 rings and 10 ideals");
  bundle.checked = 1;
  if (parsed.size() < 3 || ideal_count < 10) bundle.fail("too few sessions or ideals");
  for (const Sweep* w : {&bundle, &mI_in, &indep_guard, &degree_guard, &chains, &brackets, &reduce_same, &replays}) {
    passed = passed && w->failures.empty();
    inv.push_back(w->json());
  }
  out["invariants"] = inv;
  out["passed"] = passed;
  out["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace tc
