#include <algorithm>
#include <limits>

#include "tightcl/polyfield.hpp"

namespace tc {

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights,
                   MonomialOrder order)
    : field_(p), names_(std::move(names)), weights_(std::move(weights)), order_(order) {
  if (names_.empty()) throw Error("a ring needs at least one variable");
  if (names_.size() > kMaxVars)
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw Error("inconsistent weights");
  for (int w : weights_)
    if (w <= 0) throw Error("variable weights must be positive");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("duplicate variable '" + names_[i] + "'");
  if (order_.lex_block > names_.size()) throw Error("lex block larger than variable count");
}

Ring PolyRing::make(std::uint32_t p, std::vector<std::string> names, std::vector<int> weights,
                    MonomialOrder order) {
  return std::make_shared<const PolyRing>(p, std::move(names), std::move(weights), order);
}

bool PolyRing::standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::int64_t PolyRing::weighted_degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += std::int64_t{weights_[i]} * m.exp[i];
  return d;
}

Monomial PolyRing::monomial(std::span<const int> exps) const {
  if (exps.size() != nvars()) throw Error("exponent vector length does not match ring");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw Error("negative exponent");
    m.exp[i] = exps[i];
  }
  m.deg = weighted_degree(m);
  return m;
}

Monomial PolyRing::var(std::size_t i, int power) const {
  if (i >= nvars()) throw Error("variable index out of range");
  Monomial m;
  m.exp[i] = power;
  m.deg = std::int64_t{weights_[i]} * power;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  r.deg = weighted_degree(r);
  return r;
}

std::strong_ordering PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = names_.size();
  const std::size_t block = order_.lex_block;
  for (std::size_t i = 0; i < block; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
  if (order_.kind == OrderKind::Lex) {
    for (std::size_t i = block; i < n; ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
    return std::strong_ordering::equal;
  }
  std::int64_t da = a.deg;
  std::int64_t db = b.deg;
  if (block > 0) {
    for (std::size_t i = 0; i < block; ++i) {
      da -= std::int64_t{weights_[i]} * a.exp[i];
      db -= std::int64_t{weights_[i]} * b.exp[i];
    }
  }
  if (da != db) return da <=> db;
  for (std::size_t i = n; i-- > block;)
    if (a.exp[i] != b.exp[i]) return b.exp[i] <=> a.exp[i];
  return std::strong_ordering::equal;
}

bool PolyRing::compatible(const PolyRing& other) const {
  return field_ == other.field_ && names_ == other.names_ && weights_ == other.weights_;
}

bool PolyRing::operator==(const PolyRing& other) const {
  return compatible(other) && order_ == other.order_;
}

Ring PolyRing::with_order(MonomialOrder order) const {
  return make(characteristic(), names_, weights_, order);
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const PolyRing& ring) {
  return ring.compare(a, b);
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

const Ring& require_ring(const Ring& r) {
  if (!r) throw Error("polynomial has no ring");
  return r;
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  Polynomial p(std::move(ring));
  Coeff v = require_ring(p.ring_)->field().reduce(c);
  if (v != 0) p.terms_.push_back({Monomial{}, v});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  Polynomial p(std::move(ring));
  p.terms_.push_back({require_ring(p.ring_)->var(i), 1});
  return p;
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  c %= require_ring(p.ring_)->characteristic();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const PolyRing& R = *require_ring(p.ring_);
  std::sort(terms.begin(), terms.end(),
            [&R](const Term& a, const Term& b) { return R.greater(a.mono, b.mono); });
  for (auto& t : terms) {
    t.coeff %= R.characteristic();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = R.field().add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

Polynomial Polynomial::from_canonical_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_degree() == 0);
}

const Monomial& Polynomial::lead_monomial() const {
  if (terms_.empty()) throw Error("leading monomial of zero polynomial");
  return terms_.front().mono;
}

Coeff Polynomial::lead_coeff() const { return terms_.empty() ? 0 : terms_.front().coeff; }

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.deg);
  return d;
}

std::int64_t Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  std::int64_t d = terms_.front().mono.deg;
  for (const auto& t : terms_) d = std::min(d, t.mono.deg);
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || degree() == min_degree();
}

Polynomial Polynomial::homogeneous_component(std::int64_t d) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.deg == d) r.terms_.push_back(t);
  return r;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
    throw Error("polynomials belong to different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  const PrimeField& F = ring_->field();
  for (auto& t : r.terms_) t.coeff = F.neg(t.coeff);
  return r;
}

Polynomial Polynomial::sub_mul_term(Coeff c, const Monomial& m, const Polynomial& g) const {
  check_same_ring(g);
  const PolyRing& R = *ring_;
  const PrimeField& F = R.field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Monomial bm;
  if (b != g.terms_.end()) bm = b->mono * m;
  auto advance_b = [&] {
    ++b;
    if (b != g.terms_.end()) bm = b->mono * m;
  };
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      r.terms_.push_back(*a++);
      continue;
    }
    if (a == terms_.end()) {
      r.terms_.push_back({bm, F.neg(F.mul(c, b->coeff))});
      advance_b();
      continue;
    }
    auto cmp = R.compare(a->mono, bm);
    if (cmp == std::strong_ordering::greater) {
      r.terms_.push_back(*a++);
    } else if (cmp == std::strong_ordering::less) {
      r.terms_.push_back({bm, F.neg(F.mul(c, b->coeff))});
      advance_b();
    } else {
      Coeff v = F.sub(a->coeff, F.mul(c, b->coeff));
      if (v != 0) r.terms_.push_back({a->mono, v});
      ++a;
      advance_b();
    }
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  const PrimeField& F = ring_->field();
  *this = sub_mul_term(F.neg(1 % F.characteristic()), Monomial{}, o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!ring_) ring_ = o.ring_;
  *this = sub_mul_term(1, Monomial{}, o);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const PrimeField& F = a.ring_->field();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, F.mul(s.coeff, t.coeff)});
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::scaled(Coeff c) const {
  const PrimeField& F = ring_->field();
  c %= F.characteristic();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  Polynomial r = scaled(c);
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::reordered(const Ring& target) const {
  if (!ring_->compatible(*target)) throw Error("reorder into an incompatible ring");
  return from_terms(target, terms_);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty()) check_same_ring(o);
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    const bool unit_mono = t.mono.total_degree() == 0;
    if (unit_mono) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
      out += monomial_to_string(t.mono, *ring_);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free operations

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
  if (!f.ring() || !g.ring() || !f.ring()->compatible(*g.ring()))
    throw Error("characteristic or variable-set mismatch");
  Polynomial h = g.ring() == f.ring() ? g : g.reordered(f.ring());
  switch (op) {
    case ArithOp::Add:
      return f + h;
    case ArithOp::Sub:
      return f - h;
    case ArithOp::Mul:
      return f * h;
  }
  return f;
}

std::int64_t prime_power(std::uint32_t p, int e) {
  if (e < 0) throw Error("negative Frobenius exponent");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > std::numeric_limits<std::int32_t>::max() / static_cast<std::int64_t>(p))
      throw Error("exponent overflow: p^e too large");
    q *= p;
  }
  return q;
}

Polynomial frobenius_power(const Polynomial& f, int e) {
  const std::int64_t q = prime_power(f.ring()->characteristic(), e);
  if (q == 1) return f;
  std::vector<Term> terms;
  terms.reserve(f.size());
  // Scaling exponents preserves the order, and c^q = c in F_p.
  for (const auto& t : f.terms()) terms.push_back({scale_exponents(t.mono, q), t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  const PrimeField& F = a.ring()->field();
  const Coeff inv_lc = F.inv(b.lead_coeff());
  std::vector<Term> quotient;
  Polynomial rem = a;
  while (!rem.is_zero()) {
    const Monomial& lm = rem.lead_monomial();
    if (!b.lead_monomial().divides(lm)) throw Error("inexact polynomial division");
    Monomial m = lm / b.lead_monomial();
    Coeff c = F.mul(rem.lead_coeff(), inv_lc);
    quotient.push_back({m, c});
    rem = rem.sub_mul_term(c, m, b);
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient));
}

Polynomial map_variables(const Polynomial& f, const Ring& target,
                         std::span<const std::size_t> var_map) {
  const PolyRing& src = *f.ring();
  if (var_map.size() != src.nvars()) throw Error("variable map has wrong length");
  if (src.characteristic() != target->characteristic()) throw Error("characteristic mismatch");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (var_map[i] >= target->nvars()) throw Error("variable map out of range");
      m.exp[var_map[i]] += t.mono.exp[i];
    }
    m.deg = target->weighted_degree(m);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace tc
