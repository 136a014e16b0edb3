#pragma once

// Sparse multivariate polynomials over a prime field F_p.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Maximum number of variables of any ring, including internal tag variables.
inline constexpr std::size_t kMaxVars = 16;

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t v) const;
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t n) const;
  Coeff inv(Coeff a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// An element of F_p carried with its modulus.
struct PrimeScalar {
  Coeff value = 0;
  std::uint32_t p = 2;

  PrimeScalar operator+(PrimeScalar o) const;
  PrimeScalar operator*(PrimeScalar o) const;
  PrimeScalar pow(std::uint64_t n) const;
  bool operator==(const PrimeScalar&) const = default;
};

enum class OrderKind { Lex, DegRevLex };

/// Global monomial order. Variable precedence is declaration order
/// (variable 0 is largest). A nonzero `lex_block` compares the first
/// `lex_block` variables lexicographically before applying `kind` to the
/// remaining ones, which yields an elimination order for that block.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t lex_block = 0;

  bool operator==(const MonomialOrder&) const = default;
};

/// Exponent vector plus its weighted degree. Unused slots stay zero.
struct Monomial {
  std::array<std::int32_t, kMaxVars> exp{};
  std::int64_t deg = 0;

  bool operator==(const Monomial& o) const { return exp == o.exp; }

  /// Sum of exponents, ignoring weights.
  std::int64_t total_degree() const;
  bool divides(const Monomial& other) const;
  bool is_one() const { return deg == 0 && total_degree() == 0; }
  std::uint32_t support_mask() const;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
/// Scales every exponent by `factor`; throws on int32 overflow.
Monomial scale_exponents(const Monomial& m, std::int64_t factor);

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> names,
           std::vector<int> weights = {}, MonomialOrder order = {});

  static Ring make(std::uint32_t p, std::vector<std::string> names,
                   std::vector<int> weights = {}, MonomialOrder order = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  bool standard_graded() const;

  std::optional<std::size_t> index_of(std::string_view name) const;

  Monomial monomial(std::span<const int> exps) const;
  Monomial one() const { return Monomial{}; }
  Monomial var(std::size_t i, int power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  /// Weighted degree of an exponent vector.
  std::int64_t weighted_degree(const Monomial& m) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Same characteristic, variables and weights; orders may differ.
  bool compatible(const PolyRing& other) const;
  bool operator==(const PolyRing& other) const;

  Ring with_order(MonomialOrder order) const;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  Coeff coeff = 0;
};

/// Canonical sparse polynomial: terms strictly decreasing in the ring's
/// order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial monomial(Ring ring, const Monomial& m, Coeff c = 1);
  /// Builds the canonical form from arbitrary (unsorted, repeated) terms.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  /// Trusted constructor: `terms` must already be canonical for `ring`.
  static Polynomial from_canonical_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Monomial& lead_monomial() const;
  Coeff lead_coeff() const;

  /// Largest weighted degree of a term; -1 for the zero polynomial.
  std::int64_t degree() const;
  /// Smallest weighted degree of a term; -1 for the zero polynomial.
  std::int64_t min_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(std::int64_t d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  /// this - c*m*g in one merge pass.
  Polynomial sub_mul_term(Coeff c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;
  Polynomial pow(std::uint64_t n) const;

  /// Re-sorts the terms under a compatible ring (e.g. a different order).
  Polynomial reordered(const Ring& target) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;

 private:
  void check_same_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op);

/// f^(p^e). Over F_p this scales exponents by p^e and keeps coefficients.
Polynomial frobenius_power(const Polynomial& f, int e);

/// p^e as a checked 64-bit integer.
std::int64_t prime_power(std::uint32_t p, int e);

std::strong_ordering compare(const Monomial& a, const Monomial& b, const PolyRing& ring);

/// Exact quotient a / b; throws if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Embeds f into `target`, sending variable i to variable `var_map[i]`.
Polynomial map_variables(const Polynomial& f, const Ring& target,
                         std::span<const std::size_t> var_map);

Polynomial parse_polynomial(std::string_view text, const Ring& ring);

std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

}  // namespace tc
