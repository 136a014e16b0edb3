#include "tightcl/idealops.hpp"

#include <algorithm>
#include <limits>

namespace tc {

namespace {

GroebnerBasis relation_basis_of(const Ring& ambient, const std::vector<Polynomial>& rels) {
  for (const auto& r : rels)
    if (!r.ring() || !r.ring()->compatible(*ambient))
      throw Error("relation does not belong to the ambient ring");
  return buchberger(rels, ambient);
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw Error("ideals belong to different rings");
}

Ideal unit_ideal(const RingHandle& R) {
  return Ideal(R, {Polynomial::constant(R->ambient(), 1)});
}

}  // namespace

PresentedRing::PresentedRing(Ring ambient, std::vector<Polynomial> relations, RingFlags flags,
                             std::vector<std::vector<Polynomial>> minimal_primes)
    : ambient_(std::move(ambient)),
      relations_(std::move(relations)),
      relation_gb_(relation_basis_of(ambient_, relations_)),
      flags_(flags),
      minimal_primes_(std::move(minimal_primes)) {
  if (asserted(flags_.graded_reduced) && !is_homogeneous())
    throw Error("graded_reduced asserted but the relations are not homogeneous");
}

RingHandle PresentedRing::make(Ring ambient, std::vector<Polynomial> relations, RingFlags flags,
                               std::vector<std::vector<Polynomial>> minimal_primes) {
  return std::make_shared<const PresentedRing>(std::move(ambient), std::move(relations), flags,
                                               std::move(minimal_primes));
}

bool PresentedRing::is_homogeneous() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Polynomial& r) { return r.is_homogeneous(); });
}

bool PresentedRing::standard_graded() const {
  return ambient_->standard_graded() && is_homogeneous();
}

Ideal::Ideal(RingHandle ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw Error("ideal needs a ring");
  for (auto& g : gens) {
    if (!g.ring() || !g.ring()->compatible(*ring_->ambient()))
      throw Error("generator does not belong to the ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    std::vector<Polynomial> all = gens_;
    const auto& rels = ring_->relation_basis().generators();
    all.insert(all.end(), rels.begin(), rels.end());
    cache_->gb = buchberger(all, ring_->ambient());
  });
  return *cache_->gb;
}

bool Ideal::is_zero() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Polynomial& g) { return ring_->is_zero(g); });
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

Ideal bracket_power(const Ideal& I, int e) {
  if (e < 0) throw Error("negative Frobenius exponent");
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, e));
  return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  const auto& R = I.ring();
  if (R->is_zero(f)) throw Error("colon by an element that is zero in the ring");
  // (I : f) only depends on f modulo I + J.
  Polynomial h = I.reduce(f);
  if (h.is_zero()) return unit_ideal(R);
  h = h.monic();
  std::vector<Polynomial> principal{h};
  auto meet = intersect_generators(I.basis().generators(), principal);
  std::vector<Polynomial> quotients;
  quotients.reserve(meet.size());
  for (const auto& g : meet) quotients.push_back(divide_exact(g, h));
  return Ideal(R, std::move(quotients));
}

Ideal colon(const Ideal& I, const Ideal& K) {
  check_same_ring(I, K);
  std::optional<Ideal> acc;
  for (const auto& k : K.generators()) {
    if (I.ring()->is_zero(k)) continue;
    Ideal c = colon(I, k);
    acc = acc ? intersect(*acc, c) : c;
  }
  return acc ? *acc : unit_ideal(I.ring());
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const auto& ga = a.basis();
  const auto& gb = b.basis();
  if (ga.is_zero_ideal() || gb.is_zero_ideal()) return Ideal(a.ring(), {});
  if (ga.is_unit_ideal()) return b;
  if (gb.is_unit_ideal()) return a;
  return Ideal(a.ring(), intersect_generators(ga.generators(), gb.generators()));
}

Ideal combine(const Ideal& a, const Ideal& b, CombineOp op) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  if (op == CombineOp::Sum) {
    gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  } else {
    for (const auto& g : a.generators())
      for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator+(const Ideal& a, const Ideal& b) { return combine(a, b, CombineOp::Sum); }
Ideal operator*(const Ideal& a, const Ideal& b) { return combine(a, b, CombineOp::Product); }

std::optional<std::int64_t> madic_order(const Polynomial& f, const PresentedRing& R) {
  Polynomial r = R.reduce(f);
  if (r.is_zero()) return std::nullopt;
  return r.min_degree();
}

std::optional<std::int64_t> madic_order(const Ideal& I) {
  std::optional<std::int64_t> best;
  for (const auto& g : I.generators()) {
    auto o = madic_order(g, *I.ring());
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

bool is_subset(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& g) { return b.contains(g); });
}

bool equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  return a.basis() == b.basis();
}

Ideal maximal_ideal(const RingHandle& R) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < R->nvars(); ++i) gens.push_back(Polynomial::variable(R->ambient(), i));
  return Ideal(R, std::move(gens));
}

Ideal maximal_power(const RingHandle& R, int k) {
  if (k < 0) throw Error("negative power of the maximal ideal");
  if (k == 0) return unit_ideal(R);
  const auto& S = R->ambient();
  // Enumerate exponent vectors with total degree k.
  std::vector<Polynomial> gens;
  std::vector<int> e(S->nvars(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == e.size()) {
      e[i] = left;
      gens.push_back(Polynomial::monomial(S, S->monomial(e)));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (!e.empty()) rec(rec, 0, k);
  return Ideal(R, std::move(gens));
}

Ideal maximal_bracket(const RingHandle& R, std::int64_t q) {
  if (q < 1) throw Error("bracket power must be positive");
  if (q > std::numeric_limits<std::int32_t>::max()) throw Error("exponent overflow");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < R->nvars(); ++i)
    gens.push_back(Polynomial::monomial(R->ambient(), R->ambient()->var(i, static_cast<int>(q))));
  return Ideal(R, std::move(gens));
}

Ideal minimalize(const Ideal& I) {
  std::vector<Polynomial> kept;
  for (const auto& g : I.generators())
    if (!I.ring()->is_zero(g)) kept.push_back(g);
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (Ideal(I.ring(), others).contains(kept[i]))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return Ideal(I.ring(), std::move(kept));
}

}  // namespace tc
