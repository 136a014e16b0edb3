// tightcl: command-line front end for session files.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "tightcl/corpus.hpp"
#include "tightcl/report.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tc::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int print_corpus(const tc::Json& run, bool json) {
  if (json) {
    std::cout << run.dump(2) << "\n";
  } else {
    for (const auto& f : run.at("fixtures")) {
      std::cout << (f.at("passed").get<bool>() ? "ok   " : "FAIL ") << f.at("name").get<std::string>();
      if (!f.at("passed").get<bool>()) std::cout << "  (" << f.at("detail").get<std::string>() << ")";
      std::cout << "\n";
    }
    for (const auto& w : run.at("invariants")) {
      std::cout << (w.at("passed").get<bool>() ? "ok   " : "FAIL ") << w.at("name").get<std::string>()
                << " [" << w.at("checked").get<std::size_t>() << " checked]\n";
      for (const auto& m : w.at("failures")) std::cout << "       " << m.get<std::string>() << "\n";
    }
    std::cout << (run.at("passed").get<bool>() ? "corpus passed" : "corpus FAILED") << "\n";
  }
  return run.at("passed").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight closure computations over F_p"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string session_file;
  tc::CommandOptions o;
  app.add_flag("--json", json, "Print the full JSON report");
  app.add_option("-f,--file", session_file, "Session file, '-' for stdin");
  app.add_option("-i,--ideal", o.ideal, "Ideal name from the session");

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sc = app.add_subcommand(name, help);
    sc->callback([&o, name] { o.command = name; });
    return sc;
  };
  add("gb", "Reduced Groebner basis of I + J");
  auto* member = add("member", "Ideal membership");
  member->add_option("--elem", o.elem, "Polynomial or poly name")->required();
  add("bracket", "Frobenius bracket power I^[p^e]")->add_option("-e", o.e, "Exponent e");
  add("colon", "Colon ideal (I : f) or (I : K)")->add_option("--by", o.by, "Ideal name, poly name or polynomial")->required();
  add("intersect", "Intersection with another ideal")->add_option("--with", o.with, "Ideal name")->required();
  add("order", "m-adic order of an element, or of I without --elem")->add_option("--elem", o.elem);
  for (const char* name : {"star", "special"}) {
    auto* sc = add(name, std::string(name) == "star" ? "Tight closure membership"
                                                     : "Special tight closure membership");
    sc->add_option("--elem", o.elem, "Polynomial or poly name")->required();
    sc->add_option("--q0", o.q0, "Base power q0 = p^e0");
    sc->add_option("--emax", o.emax, "Largest Frobenius exponent");
    if (std::string(name) == "special")
      sc->add_option("--strategy", o.strategy, "direct or via-tight")
          ->check(CLI::IsMember({"direct", "via-tight"}));
  }
  auto* frob = add("frobenius", "Smallest e with f^(p^e) in I^[p^e]");
  frob->add_option("--elem", o.elem)->required();
  frob->add_option("--emax", o.emax);
  add("independent", "Tight closure independence of the generators")->add_option("--emax", o.emax);
  add("reduce", "Drop generators lying in the tight closure of the others")->add_option("--emax", o.emax);
  auto* closure = add("closure", "Degree-by-degree tight closure search");
  closure->add_option("--degree-cap", o.degree_cap);
  closure->add_option("--emax", o.emax);
  add("sandwich", "m^(k+1) in I in m^k check");
  auto* graded = add("reduce-graded", "Reduction of an inhomogeneous ideal to its initial forms");
  graded->add_option("-n", o.n, "Order n of the initial forms");
  graded->add_option("--emax", o.emax);
  add("multiplicity", "Minimal multiplicity test");
  add("hms", "Expected closure of a parameter ideal")->add_option("--params", o.params, "Parameters");

  auto* corpus = app.add_subcommand("corpus", "Run the bundled fixtures and invariant sweeps");
  std::string report_file;
  auto* replay = app.add_subcommand("replay", "Recompute a JSON report and replay its witnesses");
  replay->add_option("report", report_file, "Report file, '-' for stdin")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus->parsed()) return print_corpus(tc::corpus_run(), json);
    if (replay->parsed()) {
      auto outcome = tc::replay_report(tc::Json::parse(read_all(report_file)));
      std::cout << (outcome.ok ? "replay ok" : "replay FAILED") << " (" << outcome.witnesses
                << " witnesses)\n";
      for (const auto& f : outcome.failures) std::cout << "  " << f << "\n";
      return outcome.ok ? 0 : 1;
    }
    if (session_file.empty()) throw tc::Error("a session file is required (-f)");
    const std::string text = read_all(session_file);
    tc::Session s;
    try {
      s = tc::parse_session(text);
    } catch (const tc::ParseError& e) {
      std::cerr << session_file << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
      return 2;
    }
    tc::Json rep = tc::run_command(s, o);
    std::cout << (json ? rep.dump(2) + "\n" : tc::render_text(rep));
    return 0;
  } catch (const tc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
