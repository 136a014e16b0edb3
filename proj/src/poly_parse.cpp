#include <cctype>
#include <limits>

#include "tightcl/polyfield.hpp"

namespace tc {

namespace {

// Recursive-descent parser for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'] power)*
//   power  := atom ['^' integer]
//   atom   := integer | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, pos_ + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::uint64_t n = exponent();
      if (base.size() == 1) {
        const auto& t = base.terms().front();
        Monomial m = scale_exponents(t.mono, static_cast<std::int64_t>(n));
        return Polynomial::monomial(ring_, m, ring_->field().pow(t.coeff, n));
      }
      return base.pow(n);
    }
    return base;
  }

  std::uint64_t exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::uint64_t n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
        fail("exponent overflow");
      ++pos_;
    }
    return n;
  }

  Polynomial atom() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = ring_->characteristic();
      std::uint64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = (v * 10 + static_cast<std::uint64_t>(peek() - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (ident_char(peek())) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (at_end()) fail("unexpected end of polynomial");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  if (!ring) throw Error("parse_polynomial needs a ring");
  return PolyParser(text, ring).parse();
}

}  // namespace tc
