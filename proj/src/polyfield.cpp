#include "tightcl/polyfield.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace tc {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(what + " (line " + std::to_string(line) + ", column " +
            std::to_string(column) + ")"),
      message_(what),
      line_(line),
      column_(column) {}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw Error("characteristic too large");
}

Coeff PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t n) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = a % p_;
  while (n > 0) {
    if (n & 1) result = result * base % p_;
    base = base * base % p_;
    n >>= 1;
  }
  return static_cast<Coeff>(result);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

PrimeScalar PrimeScalar::operator+(PrimeScalar o) const {
  if (o.p != p) throw Error("characteristic mismatch");
  return {static_cast<Coeff>((value + o.value) % p), p};
}

PrimeScalar PrimeScalar::operator*(PrimeScalar o) const {
  if (o.p != p) throw Error("characteristic mismatch");
  return {static_cast<Coeff>(static_cast<std::uint64_t>(value) * o.value % p), p};
}

PrimeScalar PrimeScalar::pow(std::uint64_t n) const {
  return {PrimeField(p).pow(value, n), p};
}

// ---------------------------------------------------------------------------
// Monomial

std::int64_t Monomial::total_degree() const {
  std::int64_t s = 0;
  for (auto e : exp) s += e;
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > 0) mask |= 1u << i;
  return mask;
}

namespace {

std::int32_t checked_exponent(std::int64_t v) {
  if (v > std::numeric_limits<std::int32_t>::max() || v < 0)
    throw Error("exponent overflow");
  return static_cast<std::int32_t>(v);
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.exp[i] = checked_exponent(std::int64_t{a.exp[i]} + b.exp[i]);
  r.deg = a.deg + b.deg;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] - b.exp[i];
  r.deg = a.deg - b.deg;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  return true;
}

Monomial scale_exponents(const Monomial& m, std::int64_t factor) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] != 0 && factor > std::numeric_limits<std::int32_t>::max() / m.exp[i])
      throw Error("exponent overflow in Frobenius power");
    r.exp[i] = checked_exponent(std::int64_t{m.exp[i]} * factor);
  }
  r.deg = m.deg * factor;
  return r;
}

}  // namespace tc
