#include "tightcl/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tc {

namespace {

struct Reducer {
  const Polynomial* poly;
  std::uint32_t mask;
};

// Subtracts c*m*g from the tail w[from..] and returns the merged result.
std::vector<Term> merge_sub(const PolyRing& R, const std::vector<Term>& w, std::size_t from,
                            Coeff c, const Monomial& m, const std::vector<Term>& g) {
  const PrimeField& F = R.field();
  std::vector<Term> out;
  out.reserve(w.size() - from + g.size());
  std::size_t a = from;
  std::size_t b = 0;
  Monomial bm;
  if (b < g.size()) bm = g[b].mono * m;
  while (a < w.size() || b < g.size()) {
    if (b == g.size()) {
      out.push_back(w[a++]);
      continue;
    }
    auto cmp = a < w.size() ? R.compare(w[a].mono, bm) : std::strong_ordering::less;
    if (cmp == std::strong_ordering::greater) {
      out.push_back(w[a++]);
      continue;
    }
    Coeff v = F.neg(F.mul(c, g[b].coeff));
    if (cmp == std::strong_ordering::equal) v = F.add(v, w[a++].coeff);
    if (v != 0) out.push_back({bm, v});
    if (++b < g.size()) bm = g[b].mono * m;
  }
  return out;
}

std::optional<std::size_t> find_reducer(const std::vector<Reducer>& reducers, const Monomial& m,
                                        std::uint32_t mmask) {
  for (std::size_t k = 0; k < reducers.size(); ++k) {
    if ((reducers[k].mask & ~mmask) != 0) continue;
    if (reducers[k].poly->lead_monomial().divides(m)) return k;
  }
  return std::nullopt;
}

// Full reduction of f by monic reducers.
Polynomial reduce_full(const Polynomial& f, const std::vector<Reducer>& reducers) {
  if (f.is_zero() || reducers.empty()) return f;
  const PolyRing& R = *f.ring();
  std::vector<Term> work = f.terms();
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term& lt = work[pos];
    auto k = find_reducer(reducers, lt.mono, lt.mono.support_mask());
    if (!k) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Polynomial& g = *reducers[*k].poly;
    Monomial m = lt.mono / g.lead_monomial();
    work = merge_sub(R, work, pos, lt.coeff, m, g.terms());
    pos = 0;
  }
  return Polynomial::from_canonical_terms(f.ring(), std::move(rem));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BasisBuilder {
 public:
  explicit BasisBuilder(Ring ring) : ring_(std::move(ring)) {}

  void add(const Polynomial& f) {
    Polynomial h = reduce_full(f, active_reducers());
    if (!h.is_zero()) update(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        auto cmp = ring_->compare(pairs_[k].lcm, pairs_[best].lcm);
        if (cmp == std::strong_ordering::less ||
            (cmp == std::strong_ordering::equal &&
             std::tie(pairs_[k].j, pairs_[k].i) < std::tie(pairs_[best].j, pairs_[best].i)))
          best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial s = s_polynomial(polys_[pr.i], polys_[pr.j]);
      Polynomial h = reduce_full(s, active_reducers());
      if (!h.is_zero()) update(h.monic());
    }
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(polys_[k]);
    // Inter-reduce tails.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k)
          others.push_back({&minimal[l], minimal[l].lead_monomial().support_mask()});
      const auto& terms = minimal[k].terms();
      std::vector<Term> tail(terms.begin() + 1, terms.end());
      Polynomial t = reduce_full(Polynomial::from_canonical_terms(ring_, std::move(tail)), others);
      std::vector<Term> full;
      full.reserve(t.size() + 1);
      full.push_back(terms.front());
      full.insert(full.end(), t.terms().begin(), t.terms().end());
      reduced.push_back(Polynomial::from_canonical_terms(ring_, std::move(full)));
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.lead_monomial(), b.lead_monomial()) == std::strong_ordering::less;
    });
    return GroebnerBasis(ring_, std::move(reduced));
  }

 private:
  std::vector<Reducer> active_reducers() const {
    std::vector<Reducer> r;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) r.push_back({&polys_[k], masks_[k]});
    return r;
  }

  // Gebauer-Moeller update: applies the coprime and chain criteria.
  void update(Polynomial h) {
    const PolyRing& R = *ring_;
    const std::size_t hi = polys_.size();
    const Monomial hlm = h.lead_monomial();
    polys_.push_back(std::move(h));
    masks_.push_back(hlm.support_mask());
    active_.push_back(true);

    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) c.push_back({g, hi, R.lcm(polys_[g].lead_monomial(), hlm)});

    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p1 = c[k];
      bool keep = coprime(polys_[p1.i].lead_monomial(), hlm);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(p1.lcm)) keep = false;
        for (const Pair& p2 : d)
          if (keep && p2.lcm.divides(p1.lcm)) keep = false;
      }
      if (keep) d.push_back(p1);
    }
    std::vector<Pair> e;
    for (const Pair& p : d)
      if (!coprime(polys_[p.i].lead_monomial(), hlm)) e.push_back(p);

    std::vector<Pair> kept;
    for (const Pair& p : pairs_) {
      bool drop = hlm.divides(p.lcm) &&
                  !(R.lcm(polys_[p.i].lead_monomial(), hlm) == p.lcm) &&
                  !(R.lcm(polys_[p.j].lead_monomial(), hlm) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    kept.insert(kept.end(), e.begin(), e.end());
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && hlm.divides(polys_[g].lead_monomial())) active_[g] = false;
  }

  Ring ring_;
  std::vector<Polynomial> polys_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> reduced_generators)
    : ring_(std::move(ring)), gens_(std::move(reduced_generators)) {
  masks_.reserve(gens_.size());
  for (const auto& g : gens_) masks_.push_back(g.lead_monomial().support_mask());
}

bool GroebnerBasis::is_unit_ideal() const {
  return gens_.size() == 1 && gens_.front().lead_monomial().total_degree() == 0;
}

std::optional<std::size_t> GroebnerBasis::find_divisor(const Monomial& m) const {
  const std::uint32_t mm = m.support_mask();
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if ((masks_[k] & ~mm) != 0) continue;
    if (gens_[k].lead_monomial().divides(m)) return k;
  }
  return std::nullopt;
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
  if (gens_.size() != other.gens_.size()) return false;
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (!(gens_[k] == other.gens_[k])) return false;
  return true;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const Ring& ring) {
  if (!ring) throw Error("buchberger needs a ring");
  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!(*g.ring() == *ring)) throw Error("generator belongs to a different ring");
    input.push_back(g.ring() == ring ? g : g.reordered(ring));
  }
  std::stable_sort(input.begin(), input.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.lead_monomial(), b.lead_monomial()) == std::strong_ordering::less;
  });
  BasisBuilder builder(ring);
  for (const auto& f : input) builder.add(f);
  builder.run();
  return builder.finish();
}

GroebnerBasis buchberger(std::span<const Polynomial> gens) {
  for (const auto& g : gens)
    if (g.ring()) return buchberger(gens, g.ring());
  throw Error("buchberger: cannot infer ring from an empty generator list");
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::vector<Reducer> reducers;
  reducers.reserve(gb.generators().size());
  for (const auto& g : gb.generators())
    reducers.push_back({&g, g.lead_monomial().support_mask()});
  if (f.ring() && !(*f.ring() == *gb.ring())) return reduce_full(f.reordered(gb.ring()), reducers);
  return reduce_full(f, reducers);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PolyRing& R = *f.ring();
  const PrimeField& F = R.field();
  Monomial l = R.lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial a = f.mul_term(l / f.lead_monomial(), F.inv(f.lead_coeff()));
  Coeff cg = F.inv(g.lead_coeff());
  return a.sub_mul_term(cg, l / g.lead_monomial(), g);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(g[i], g[j]), gb).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Elimination and intersection

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens,
                                  std::span<const std::size_t> drop_vars) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  const Ring& src = nonzero.front().ring();
  const std::size_t n = src->nvars();

  std::vector<bool> dropped(n, false);
  for (auto v : drop_vars) {
    if (v >= n) throw Error("eliminate: variable index out of range");
    dropped[v] = true;
  }
  std::vector<std::size_t> to_new(n);
  std::vector<std::size_t> to_old;
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) to_old.push_back(i);
  const std::size_t block = to_old.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) to_old.push_back(i);
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t k = 0; k < n; ++k) {
    to_new[to_old[k]] = k;
    names.push_back(src->name(to_old[k]));
    weights.push_back(src->weight(to_old[k]));
  }
  Ring elim = PolyRing::make(src->characteristic(), names, weights,
                             MonomialOrder{OrderKind::DegRevLex, block});
  std::vector<Polynomial> mapped;
  for (const auto& g : nonzero) mapped.push_back(map_variables(g, elim, to_new));
  GroebnerBasis gb = buchberger(mapped, elim);

  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool free_of_block = true;
    for (const auto& t : g.terms())
      for (std::size_t k = 0; k < block && free_of_block; ++k)
        if (t.mono.exp[k] != 0) free_of_block = false;
    if (free_of_block) out.push_back(map_variables(g, src, to_old));
  }
  return out;
}

std::vector<Polynomial> intersect_generators(std::span<const Polynomial> a,
                                             std::span<const Polynomial> b) {
  const Polynomial* any = nullptr;
  for (const auto& g : a)
    if (!g.is_zero()) any = &g;
  if (!any) return {};
  bool b_nonzero = std::any_of(b.begin(), b.end(), [](const Polynomial& g) { return !g.is_zero(); });
  if (!b_nonzero) return {};

  const Ring& src = any->ring();
  const std::size_t n = src->nvars();
  if (n + 1 > kMaxVars) throw Error("intersection needs one spare variable slot");
  std::vector<std::string> names{"__tag"};
  std::vector<int> weights{1};
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(src->name(i));
    weights.push_back(src->weight(i));
  }
  Ring tagged = PolyRing::make(src->characteristic(), names, weights,
                               MonomialOrder{src->order().kind, 1});
  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), std::size_t{1});
  Polynomial t = Polynomial::variable(tagged, 0);
  Polynomial one_minus_t = Polynomial::constant(tagged, 1) - t;

  std::vector<Polynomial> gens;
  for (const auto& g : a)
    if (!g.is_zero()) gens.push_back(t * map_variables(g, tagged, up));
  for (const auto& g : b)
    if (!g.is_zero()) gens.push_back(one_minus_t * map_variables(g, tagged, up));
  GroebnerBasis gb = buchberger(gens, tagged);

  std::vector<std::size_t> down(n + 1);
  down[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) down[i] = i - 1;
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool has_tag = std::any_of(g.terms().begin(), g.terms().end(),
                               [](const Term& term) { return term.mono.exp[0] != 0; });
    if (!has_tag) out.push_back(map_variables(g, src, down));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert data and standard monomials

namespace {

void enumerate_degree(const PolyRing& R, std::size_t var, std::int64_t remaining, Monomial& cur,
                      std::vector<Monomial>& out) {
  const std::size_t n = R.nvars();
  if (var + 1 == n) {
    const int w = R.weight(var);
    if (remaining % w != 0) return;
    cur.exp[var] = static_cast<std::int32_t>(remaining / w);
    cur.deg = R.weighted_degree(cur);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  const int w = R.weight(var);
  for (std::int64_t e = remaining / w; e >= 0; --e) {
    cur.exp[var] = static_cast<std::int32_t>(e);
    enumerate_degree(R, var + 1, remaining - e * w, cur, out);
  }
  cur.exp[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  enumerate_degree(ring, 0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [&ring](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
  return out;
}

std::vector<Monomial> degree_basis(const GroebnerBasis& gb, std::int64_t d) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(*gb.ring(), d))
    if (gb.is_standard(m)) out.push_back(m);
  return out;
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return -1;
  const std::size_t n = gb.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.generators()) supports.push_back(g.lead_monomial().support_mask());
  int best = 0;
  const std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1);
  for (std::uint32_t subset = 0; subset <= full; ++subset) {
    int size = std::popcount(subset);
    if (size <= best) {
      if (subset == full) break;
      continue;
    }
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [subset](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
    if (subset == full) break;
  }
  return best;
}

HilbertData hilbert(const GroebnerBasis& gb, int degree_cap) {
  if (degree_cap < 0) throw Error("hilbert: negative degree cap");
  for (const auto& g : gb.generators())
    if (!g.is_homogeneous()) throw Error("hilbert: non-homogeneous input");
  HilbertData data;
  for (int d = 0; d <= degree_cap; ++d)
    data.values.push_back(static_cast<std::int64_t>(degree_basis(gb, d).size()));
  data.dimension = krull_dimension(gb);
  if (data.dimension < 0) {
    data.multiplicity = 0;
    data.stable_from = 0;
    return data;
  }
  if (data.dimension == 0) {
    const auto& v = data.values;
    if (v.size() >= 2 && v[v.size() - 1] == 0 && v[v.size() - 2] == 0) {
      data.multiplicity = std::accumulate(v.begin(), v.end(), std::int64_t{0});
      int last_nonzero = 0;
      for (std::size_t d = 0; d < v.size(); ++d)
        if (v[d] != 0) last_nonzero = static_cast<int>(d);
      data.stable_from = last_nonzero + 1;
    }
    return data;
  }
  std::vector<std::int64_t> diff = data.values;
  for (int k = 0; k + 1 < data.dimension; ++k) {
    std::vector<std::int64_t> next;
    for (std::size_t d = 1; d < diff.size(); ++d) next.push_back(diff[d] - diff[d - 1]);
    diff = std::move(next);
  }
  // diff[i] is the (dim-1)-th difference at degree i + dim - 1.
  if (diff.size() < 3) return data;
  std::size_t start = diff.size() - 1;
  while (start > 0 && diff[start - 1] == diff.back()) --start;
  if (diff.size() - start >= 3 && diff.back() > 0) {
    data.multiplicity = diff.back();
    data.stable_from = static_cast<int>(start) + data.dimension - 1;
  }
  return data;
}

}  // namespace tc
