#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tightcl/corpus.hpp"
#include "tightcl/report.hpp"

using namespace tc;
using namespace tc::testing;

namespace {

const char* kFermat = R"(# cubic cone
ring { char: 5 ; vars: x(1) y(1) z(1) ; relations: x^3 + y^3 + z^3 ;
       flags: domain normal graded_reduced }
ideal I { gens: x, y }
ideal M2 { gens: x^2, x*y, x*z, y^2, y*z, z^2 }
poly F { z^2 }
)";

const char* kQuadric = R"(
ring { char: 5 ; vars: x(1) y(1) z(1) ; relations: x*y - z^2 ; flags: domain normal graded_reduced cm }
ideal I { gens: x, y }
)";

CommandOptions cmd(std::string c, std::string ideal = "", std::string elem = "") {
  CommandOptions o;
  o.command = std::move(c);
  o.ideal = std::move(ideal);
  o.elem = std::move(elem);
  return o;
}

void check_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_session(text);
    FAIL("accepted: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

// Random session text over a random ring.
std::string random_session(std::mt19937& rng) {
  const std::uint32_t primes[] = {2, 3, 5, 7, 11};
  const std::uint32_t p = primes[rng() % 5];
  const std::size_t n = 1 + rng() % 3;
  std::vector<std::string> names{"x", "y", "z"};
  names.resize(n);
  std::vector<int> weights;
  for (std::size_t i = 0; i < n; ++i) weights.push_back(rng() % 3 == 0 ? 2 : 1);
  Ring S = PolyRing::make(p, names, weights);

  std::string t = "ring { char: " + std::to_string(p) + " ; vars:";
  for (std::size_t i = 0; i < n; ++i)
    t += " " + names[i] + (rng() % 2 ? "(" + std::to_string(weights[i]) + ")" : std::string(weights[i] == 1 ? "" : "(2)"));
  bool relations = false;
  if (rng() % 2) {
    Polynomial r = random_poly(rng, S, 3, 3);
    if (!r.is_zero() && r.min_degree() > 0) {
      t += " ; relations: " + r.to_string();
      relations = true;
    }
  }
  std::string flags;
  if (rng() % 2) flags += " domain";
  if (rng() % 2) flags += " normal";
  if (!relations && rng() % 2) flags += " graded_reduced";
  if (rng() % 2) flags += " cm";
  if (!flags.empty()) t += " ; flags:" + flags;
  t += " }\n";
  if (rng() % 3 == 0) t += "defaults { e0: 1 ; emax: 3 ; degree_cap: 5 }\n";
  const int nideals = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < nideals; ++k) {
    t += "ideal I" + std::to_string(k) + " { gens: ";
    const int ngens = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < ngens; ++g) {
      Polynomial f = random_poly(rng, S, 4, 4);
      t += (g ? ", " : "") + (f.is_zero() ? std::string("0") : f.to_string());
    }
    t += " }\n";
  }
  if (rng() % 2) {
    Polynomial f = random_poly(rng, S, 3, 3);
    t += "poly F { " + (f.is_zero() ? std::string("0") : f.to_string()) + " }\n";
  }
  return t;
}

}  // namespace

TEST_CASE("session parsing") {
  Session s = parse_session(kFermat);
  CHECK(s.ring->characteristic() == 5);
  CHECK(s.ring->nvars() == 3);
  CHECK(asserted(s.ring->flags().domain));
  CHECK(asserted(s.ring->flags().normal));
  CHECK(asserted(s.ring->flags().graded_reduced));
  CHECK_FALSE(asserted(s.ring->flags().cm));
  CHECK(s.ideals.size() == 2);
  CHECK(s.ideal("I").generators().size() == 2);
  CHECK(s.element("F") == s.ring->parse("z^2"));
  CHECK(s.element("x + 1") == s.ring->parse("x + 1"));
  CHECK_THROWS_AS(s.ideal("K"), Error);

  SUBCASE("regular ring without relations or flags") {
    Session r = parse_session("ring { char: 2 ; vars: a(1) b(3) }");
    CHECK(r.ring->is_regular());
    CHECK(r.ring->ambient()->weight(1) == 3);
    CHECK(r.ideals.empty());
  }
  SUBCASE("whitespace and comments do not matter") {
    Session a = parse_session("ring{char:5;vars:x(1)y(1)}ideal I{gens:x,y}");
    Session b = parse_session("  ring {   # the ring\n char : 5 ;\n vars : x ( 1 )\n y(1) ; }\n\n"
                              "ideal I { gens: x ,\n y # two generators\n }\n");
    CHECK(same_session(a, b));
  }
  SUBCASE("defaults and primes") {
    Session d = parse_session(
        "ring { char: 3 ; vars: x(1) y(1) ; relations: x*y }\n"
        "prime { gens: x }\nprime { gens: y }\n"
        "defaults { e0: 1 ; emax: 3 ; degree_cap: 6 }\n");
    CHECK(d.level == QLevel{1, 3});
    CHECK(d.degree_cap == 6);
    CHECK(d.ring->minimal_primes().size() == 2);
  }
}

TEST_CASE("session errors carry positions") {
  check_parse_error("ring { char: 6 ; vars: x(1) }", 1, 14);
  check_parse_error("ring { char: 5 ; vars: x(1) y(1) }\nideal I { gens: x,\n   y + w }", 3, 8);
  check_parse_error("ring { char: 5 ; vars: x(1) y(0) }", 1, 31);
  check_parse_error("ring { char: 5 ; vars: x(1) x(1) }", 1, 29);
  check_parse_error("ring { char: 5 ; vars: x(1) ; flags: smooth }", 1, 38);
  check_parse_error("ring { char: 5 ; vars: x(1) }\nideal I { gens: x }\nideal I { gens: x^2 }", 3, 7);
  check_parse_error("ring { char: 5 ; vars: x(1) }\nideal x { gens: x }", 2, 7);
  check_parse_error("ideal I { gens: x }", 1, 1);
  check_parse_error("ring { char: 5 ; vars: x(1) \nideal I { gens: x }", 2, 1);
  check_parse_error("ring { char: 5 ; vars: x(1) }\nideal I { gens: x +* 2 }", 2, 20);
  check_parse_error("ring { vars: x(1) }", 1, 1);
  // Non-homogeneous relations cannot carry the graded flag.
  check_parse_error("ring { char: 5 ; vars: x(1) y(1) ; relations: x^2 - y ; flags: graded_reduced }", 1, 1);
}

TEST_CASE("session print/parse round trip") {
  for (const auto& cs : corpus_sessions()) {
    Session s = parse_session(cs.text);
    Session again = parse_session(print_session(s));
    CHECK_MESSAGE(same_session(s, again), cs.name);
    CHECK(print_session(again) == print_session(s));
  }
  std::mt19937 rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text = random_session(rng);
    Session s = parse_session(text);
    Session again = parse_session(print_session(s));
    CHECK_MESSAGE(same_session(s, again), text);
    CHECK(print_session(again) == print_session(s));
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("run examples") {
  Session s = parse_session(kFermat);

  SUBCASE("star with a witness") {
    auto o = cmd("star", "I", "z^2");
    o.emax = 2;
    Json r = run_command(s, o);
    CHECK(r["schema"] == kReportSchema);
    CHECK(r["result"]["kind"] == "IN_AT_LEVEL");
    REQUIRE(r["witness"].is_object());
    CHECK(r["witness"]["subject"]["f"] == "z^2");
    for (const auto& l : r["witness"]["membership"]) CHECK(l["holds"] == true);
    CHECK(r["ring"]["flags"] == Json::array({"domain", "normal", "graded_reduced"}));
  }
  SUBCASE("poly names resolve") {
    Json r = run_command(s, cmd("star", "I", "F"));
    CHECK(r["inputs"]["elem"] == "z^2");
    CHECK(r["result"]["kind"] == "IN_AT_LEVEL");
  }
  SUBCASE("sandwich") {
    Json r = run_command(s, cmd("sandwich", "M2"));
    CHECK(r["result"]["status"] == "TIGHTLY_CLOSED");
    CHECK(r["result"]["k"] == 1);
    CHECK(r["witness"].is_null());
  }
  SUBCASE("multiplicity of the quadric") {
    Json r = run_command(parse_session(kQuadric), cmd("multiplicity"));
    CHECK(r["result"]["status"] == "F_RATIONAL");
    CHECK(r["result"]["e"] == 2);
  }
  SUBCASE("ideal operations") {
    auto b = cmd("bracket", "I");
    b.e = 1;
    CHECK(run_command(s, b)["result"]["generators"] == Json::array({"x^5", "y^5"}));
    auto c = cmd("colon", "I");
    c.by = "z";
    Json colon_r = run_command(s, c)["result"]["generators"];
    CHECK(colon_r.size() >= 2);
    CHECK(run_command(s, cmd("order", "M2"))["result"]["order"] == 2);
    CHECK(run_command(s, cmd("order", "", "x^2*y + z^5"))["result"]["order"] == 3);
    CHECK(run_command(s, cmd("member", "I", "z^3"))["result"]["member"] == true);
    CHECK(run_command(s, cmd("member", "I", "z^2"))["result"]["member"] == false);
  }
  SUBCASE("indeterminate verdicts are ordinary results") {
    Session r = parse_session("ring { char: 7 ; vars: x(1) y(1) z(1) ; relations: x^3 + y^3 + z^3 }\n"
                              "ideal I { gens: x, y }\n");
    Json rep = run_command(r, cmd("star", "I", "z^2"));
    CHECK(rep["result"]["kind"] == "UNDETERMINED");
  }
}

TEST_CASE("run errors") {
  Session s = parse_session(kFermat);
  CHECK_THROWS_AS(run_command(s, cmd("star", "K", "z")), Error);
  CHECK_THROWS_AS(run_command(s, cmd("star", "", "z")), Error);  // two ideals declared
  CHECK_THROWS_AS(run_command(s, cmd("star", "I")), Error);
  CHECK_THROWS_AS(run_command(s, cmd("frobnicate", "I")), Error);
  auto bad = cmd("star", "I", "z");
  bad.q0 = 125;
  bad.emax = 2;
  CHECK_THROWS_AS(run_command(s, bad), Error);  // e0 = 3 above e_max
  bad.q0 = 6;
  CHECK_THROWS_AS(run_command(s, bad), Error);
  auto neg = cmd("star", "I", "z");
  neg.emax = 13;
  CHECK_THROWS_AS(run_command(s, neg), Error);
  CHECK_THROWS_AS(run_command(s, cmd("star", "I", "q^2")), ParseError);
}

TEST_CASE("reports are deterministic, serializable and replayable") {
  Session s = parse_session(kFermat);
  std::vector<CommandOptions> all{cmd("star", "I", "z^2"), cmd("special", "M2", "x^3"),
                                  cmd("independent", "I"), cmd("closure", "I"), cmd("sandwich", "M2"),
                                  cmd("hms", "I"), cmd("gb", "M2"), cmd("frobenius", "I", "z^2")};
  all[3].degree_cap = 3;
  for (const auto& o : all) {
    CAPTURE(o.command);
    Json a = run_command(s, o);
    Json b = run_command(s, o);
    CHECK(without_timing(a) == without_timing(b));
    CHECK(Json::parse(a.dump()) == a);
    CHECK(options_from_json(options_to_json(o)).command == o.command);
    CHECK(options_to_json(options_from_json(options_to_json(o))) == options_to_json(o));
    auto rp = replay_report(Json::parse(a.dump(2)));
    CHECK(rp.ok);
    CHECK(rp.failures.empty());
  }
}

TEST_CASE("replay rejects tampered reports") {
  Session s = parse_session(kFermat);
  auto o = cmd("star", "I", "z^2");
  Json rep = run_command(s, o);
  REQUIRE(replay_report(rep).ok);
  CHECK(replay_report(rep).witnesses == 2);

  Json flipped = rep;
  flipped["witness"]["membership"][0]["holds"] = false;
  CHECK_FALSE(replay_report(flipped).ok);

  Json relabeled = rep;
  relabeled["result"]["kind"] = "PROVEN_IN";
  relabeled["witness"]["kind"] = "colon";
  CHECK_FALSE(replay_report(relabeled).ok);

  Json moved = rep;
  moved["witness"]["subject"]["f"] = "z";
  CHECK_FALSE(replay_report(moved).ok);

  Json schema = rep;
  schema["schema"] = "other/2";
  CHECK_FALSE(replay_report(schema).ok);
}

TEST_CASE("corpus bundle") {
  const auto& sessions = corpus_sessions();
  std::size_t ideals = 0;
  for (const auto& cs : sessions) ideals += parse_session(cs.text).ideals.size();
  CHECK(sessions.size() >= 3);
  CHECK(ideals >= 10);
  Json a = corpus_run();
  CHECK(a["passed"] == true);
  for (const auto& f : a["fixtures"]) CHECK_MESSAGE(f["passed"] == true, f["name"].get<std::string>());
  Json b = corpus_run();
  CHECK(without_timing(a).dump() == without_timing(b).dump());
}
