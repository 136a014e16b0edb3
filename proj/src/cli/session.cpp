#include "tightcl/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace tc {

const Ideal* Session::find_ideal(std::string_view name) const {
  for (const auto& [n, I] : ideals)
    if (n == name) return &I;
  return nullptr;
}

const Polynomial* Session::find_poly(std::string_view name) const {
  for (const auto& [n, f] : polys)
    if (n == name) return &f;
  return nullptr;
}

const Ideal& Session::ideal(std::string_view name) const {
  if (const Ideal* I = find_ideal(name)) return *I;
  throw Error("no ideal named '" + std::string(name) + "'");
}

Polynomial Session::element(std::string_view name_or_text) const {
  if (const Polynomial* f = find_poly(name_or_text)) return *f;
  return ring->parse(name_or_text);
}

namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    // Blank out comments so positions stay intact.
    bool comment = false;
    for (char& ch : text_) {
      if (ch == '\n') comment = false;
      else if (ch == '#') comment = true;
      if (comment) ch = ' ';
    }
  }

  Session run() {
    Session s;
    skip_ws();
    if (at_end()) fail("empty session: expected 'ring'");
    if (peek_word() != "ring") fail("session must start with 'ring'");
    parse_ring(s);
    for (skip_ws(); !at_end(); skip_ws()) {
      const Pos at = pos_of(i_);
      std::string kw = word();
      if (kw == "ideal") parse_ideal(s, at);
      else if (kw == "poly") parse_poly(s, at);
      else if (kw == "prime") fail_at(at, "'prime' blocks must directly follow the ring");
      else if (kw == "defaults") parse_defaults(s);
      else if (kw == "ring") fail_at(at, "a session holds exactly one ring");
      else fail_at(at, "unknown block '" + kw + "'");
    }
    return s;
  }

 private:
  std::string text_;
  std::size_t i_ = 0;
  Ring ambient_;
  std::vector<Polynomial> relations_;
  RingFlags flags_;

  bool at_end() const { return i_ >= text_.size(); }

  Pos pos_of(std::size_t at) const {
    Pos p;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  [[noreturn]] void fail_at(Pos p, const std::string& msg) const { throw ParseError(msg, p.line, p.column); }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_of(i_), msg); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  static bool reserved(const std::string& w) {
    return w == "ring" || w == "ideal" || w == "poly" || w == "prime" || w == "defaults";
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string peek_word() {
    std::size_t j = i_;
    while (j < text_.size() && ident_char(text_[j])) ++j;
    return text_.substr(i_, j - i_);
  }

  std::string word() {
    skip_ws();
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
      fail("expected a name");
    std::string w = peek_word();
    i_ += w.size();
    return w;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t j = i_;
    while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
    if (j == i_) fail("expected a number");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + i_, text_.data() + j, v);
    if (ec != std::errc() || ptr != text_.data() + j) fail("number out of range");
    i_ = j;
    return v;
  }

  // Raw text up to (not including) the next delimiter; start offset returned too.
  std::pair<std::string, std::size_t> chunk(std::string_view delims) {
    skip_ws();
    std::size_t start = i_;
    while (!at_end() && delims.find(text_[i_]) == std::string_view::npos) ++i_;
    std::string s = text_.substr(start, i_ - start);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) fail_at(pos_of(start), "expected a polynomial");
    return {s, start};
  }

  Polynomial poly_at(const std::string& s, std::size_t start) const {
    try {
      return parse_polynomial(s, ambient_);
    } catch (const ParseError& e) {
      // The polynomial parser counts columns within the chunk.
      Pos p = pos_of(start + (e.column() ? e.column() - 1 : 0));
      throw ParseError(e.message(), p.line, p.column);
    }
  }

  std::vector<Polynomial> poly_list(std::string_view end) {
    std::string delims = "," + std::string(end);
    std::vector<Polynomial> out;
    do {
      auto [s, start] = chunk(delims);
      out.push_back(poly_at(s, start));
    } while (accept(','));
    return out;
  }

  void parse_ring(Session& s) {
    const Pos ring_pos = pos_of(i_);
    word();
    expect('{');
    std::optional<std::int64_t> p;
    Pos char_pos;
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<std::pair<std::string, std::size_t>> rel_chunks;
    std::vector<std::string> seen;
    while (!accept('}')) {
      if (accept(';')) continue;
      const Pos at = pos_of(i_);
      std::string key = word();
      if (std::find(seen.begin(), seen.end(), key) != seen.end())
        fail_at(at, "field '" + key + "' given twice");
      seen.push_back(key);
      expect(':');
      if (key == "char") {
        skip_ws();
        char_pos = pos_of(i_);
        p = integer();
      } else if (key == "vars") {
        for (skip_ws(); !at_end() && text_[i_] != ';' && text_[i_] != '}'; skip_ws()) {
          const Pos vp = pos_of(i_);
          if (reserved(peek_word())) fail("expected ';' or '}' before '" + peek_word() + "'");
          std::string name = word();
          if (std::find(names.begin(), names.end(), name) != names.end())
            fail_at(vp, "duplicate variable '" + name + "'");
          std::int64_t w = 1;
          if (accept('(')) {
            skip_ws();
            const Pos wp = pos_of(i_);
            w = integer();
            if (w < 1 || w > 1000) fail_at(wp, "variable weight must be a positive integer");
            expect(')');
          }
          names.push_back(name);
          weights.push_back(static_cast<int>(w));
        }
        if (names.empty()) fail_at(at, "a ring needs at least one variable");
      } else if (key == "relations") {
        // Parsed once the variables are known.
        do {
          rel_chunks.push_back(chunk(",;}"));
        } while (accept(','));
      } else if (key == "flags") {
        for (skip_ws(); !at_end() && text_[i_] != ';' && text_[i_] != '}'; skip_ws()) {
          const Pos fp = pos_of(i_);
          if (reserved(peek_word())) fail("expected ';' or '}' before '" + peek_word() + "'");
          std::string f = word();
          if (f == "domain") flags_.domain = Tri::True;
          else if (f == "normal") flags_.normal = Tri::True;
          else if (f == "graded_reduced") flags_.graded_reduced = Tri::True;
          else if (f == "cm") flags_.cm = Tri::True;
          else fail_at(fp, "unknown flag '" + f + "'");
        }
      } else {
        fail_at(at, "unknown ring field '" + key + "'");
      }
      if (!accept(';')) {
        skip_ws();
        if (at_end() || text_[i_] != '}') fail("expected ';' or '}'");
      }
    }
    if (!p) fail_at(ring_pos, "ring needs 'char'");
    if (names.empty()) fail_at(ring_pos, "ring needs 'vars'");
    if (*p > 0xFFFFFFFFLL || !is_prime(static_cast<std::uint64_t>(*p)))
      fail_at(char_pos, "characteristic " + std::to_string(*p) + " is not a prime");
    try {
      ambient_ = PolyRing::make(static_cast<std::uint32_t>(*p), names, weights);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_at(ring_pos, e.what());
    }
    for (const auto& [text, start] : rel_chunks) {
      Polynomial r = poly_at(text, start);
      if (!r.is_zero()) relations_.push_back(std::move(r));
    }

    // Minimal primes, when given, sit right after the ring.
    std::vector<std::vector<Polynomial>> primes;
    for (skip_ws(); !at_end() && peek_word() == "prime"; skip_ws()) {
      word();
      expect('{');
      const Pos gp = pos_of(i_);
      if (word() != "gens") fail_at(gp, "expected 'gens'");
      expect(':');
      auto gens = poly_list("}");
      expect('}');
      primes.push_back(std::move(gens));
    }
    try {
      s.ring = PresentedRing::make(ambient_, relations_, flags_, std::move(primes));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_at(ring_pos, e.what());
    }
  }

  void check_name(const Session& s, const std::string& name, Pos at) const {
    if (s.find_ideal(name) || s.find_poly(name)) fail_at(at, "name '" + name + "' declared twice");
    if (ambient_->index_of(name)) fail_at(at, "name '" + name + "' clashes with a variable");
  }

  void parse_ideal(Session& s, Pos) {
    skip_ws();
    const Pos np = pos_of(i_);
    std::string name = word();
    check_name(s, name, np);
    expect('{');
    const Pos gp = pos_of(i_);
    if (word() != "gens") fail_at(gp, "expected 'gens'");
    expect(':');
    auto gens = poly_list("}");
    accept(';');
    expect('}');
    s.ideals.emplace_back(name, Ideal(s.ring, std::move(gens)));
  }

  void parse_poly(Session& s, Pos) {
    skip_ws();
    const Pos np = pos_of(i_);
    std::string name = word();
    check_name(s, name, np);
    expect('{');
    auto [text, start] = chunk("}");
    expect('}');
    s.polys.emplace_back(name, poly_at(text, start));
  }

  void parse_defaults(Session& s) {
    expect('{');
    while (!accept('}')) {
      if (accept(';')) continue;
      const Pos at = pos_of(i_);
      std::string key = word();
      expect(':');
      skip_ws();
      const Pos vp = pos_of(i_);
      std::int64_t v = integer();
      if (key == "e0" || key == "emax") {
        if (v > 12) fail_at(vp, "Frobenius exponent above 12");
        (key == "e0" ? s.level.e0 : s.level.e_max) = static_cast<int>(v);
      } else if (key == "degree_cap") {
        if (v < 1 || v > 64) fail_at(vp, "degree cap must lie in [1, 64]");
        s.degree_cap = v;
      } else {
        fail_at(at, "unknown default '" + key + "'");
      }
    }
    if (s.level.e0 > s.level.e_max) fail("defaults need e0 <= emax");
  }
};

std::string join_polys(const std::vector<Polynomial>& ps) {
  if (ps.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].to_string();
  }
  return out;
}

}  // namespace

Session parse_session(std::string_view text) { return Parser(text).run(); }

std::string print_session(const Session& s) {
  const auto& R = *s.ring;
  const auto& S = *R.ambient();
  std::string out = "ring { char: " + std::to_string(R.characteristic()) + " ; vars:";
  for (std::size_t i = 0; i < S.nvars(); ++i)
    out += " " + S.name(i) + "(" + std::to_string(S.weight(i)) + ")";
  if (!R.relations().empty()) out += " ; relations: " + join_polys(R.relations());
  const auto& f = R.flags();
  std::string flags;
  if (asserted(f.domain)) flags += " domain";
  if (asserted(f.normal)) flags += " normal";
  if (asserted(f.graded_reduced)) flags += " graded_reduced";
  if (asserted(f.cm)) flags += " cm";
  if (!flags.empty()) out += " ; flags:" + flags;
  out += " }\n";
  for (const auto& P : R.minimal_primes()) out += "prime { gens: " + join_polys(P) + " }\n";
  if (s.level != QLevel{} || s.degree_cap != Session{}.degree_cap)
    out += "defaults { e0: " + std::to_string(s.level.e0) + " ; emax: " +
           std::to_string(s.level.e_max) + " ; degree_cap: " + std::to_string(s.degree_cap) + " }\n";
  for (const auto& [name, I] : s.ideals)
    out += "ideal " + name + " { gens: " + join_polys(I.generators()) + " }\n";
  for (const auto& [name, p] : s.polys) out += "poly " + name + " { " + p.to_string() + " }\n";
  return out;
}

bool same_session(const Session& a, const Session& b) {
  const auto& A = *a.ring;
  const auto& B = *b.ring;
  if (!(*A.ambient() == *B.ambient())) return false;
  if (A.relations() != B.relations() || !(A.flags() == B.flags())) return false;
  if (A.minimal_primes() != B.minimal_primes()) return false;
  if (a.level != b.level || a.degree_cap != b.degree_cap) return false;
  if (a.ideals.size() != b.ideals.size() || a.polys.size() != b.polys.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i)
    if (a.ideals[i].first != b.ideals[i].first ||
        a.ideals[i].second.generators() != b.ideals[i].second.generators())
      return false;
  for (std::size_t i = 0; i < a.polys.size(); ++i)
    if (a.polys[i] != b.polys[i]) return false;
  return true;
}

}  // namespace tc
