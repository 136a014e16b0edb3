#include <algorithm>
#include <map>

#include "closure_internal.hpp"
#include "tightcl/closure.hpp"

namespace tc {

using namespace detail;

const char* to_string(Independence a) {
  switch (a) {
    case Independence::Independent: return "INDEPENDENT";
    case Independence::NotIndependent: return "NOT_INDEPENDENT";
    case Independence::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

namespace {

Ideal without(const Ideal& I, std::size_t skip) {
  std::vector<Polynomial> others;
  for (std::size_t j = 0; j < I.generators().size(); ++j)
    if (j != skip) others.push_back(I.generators()[j]);
  return Ideal(I.ring(), std::move(others));
}

// Dense row-echelon basis of a subspace of F_p^n.
class Span {
 public:
  Span(const PrimeField& F, std::size_t n) : F_(F), n_(n) {}

  void add(std::vector<Coeff> v) {
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      Coeff c = v[col];
      for (std::size_t k = 0; k < n_; ++k) v[k] = F_.sub(v[k], F_.mul(c, row[k]));
    }
    auto lead = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
    if (lead == v.end()) return;
    const std::size_t col = static_cast<std::size_t>(lead - v.begin());
    const Coeff inv = F_.inv(v[col]);
    for (auto& x : v) x = F_.mul(x, inv);
    for (auto& [c2, row] : rows_) {
      if (row[col] == 0) continue;
      Coeff c = row[col];
      for (std::size_t k = 0; k < n_; ++k) row[k] = F_.sub(row[k], F_.mul(c, v[k]));
    }
    rows_.emplace(col, std::move(v));
  }

  std::vector<std::vector<Coeff>> basis() const {
    std::vector<std::vector<Coeff>> out;
    for (const auto& [col, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  const PrimeField& F_;
  std::size_t n_;
  std::map<std::size_t, std::vector<Coeff>> rows_;
};

// Kernel of the linear map whose columns are given as sparse polynomials.
std::vector<std::vector<Coeff>> kernel(const PrimeField& F, const std::vector<Polynomial>& columns) {
  const std::size_t n = columns.size();
  // Each row: one monomial; augmented with an identity block to track combinations.
  std::map<Monomial, std::size_t, bool (*)(const Monomial&, const Monomial&)> index(
      [](const Monomial& a, const Monomial& b) { return a.exp < b.exp; });
  for (const auto& col : columns)
    for (const auto& t : col.terms()) index.emplace(t.mono, index.size());
  const std::size_t m = index.size();
  // Work on the transpose: vectors v_j = (column j | e_j); eliminate the left block.
  std::vector<std::vector<Coeff>> vecs(n, std::vector<Coeff>(m + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& t : columns[j].terms()) vecs[j][index.at(t.mono)] = t.coeff;
    vecs[j][m + j] = 1;
  }
  std::vector<std::vector<Coeff>> pivots;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<Coeff>> out;
  for (auto& v : vecs) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      Coeff c = v[pivot_cols[i]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < m + n; ++k) v[k] = F.sub(v[k], F.mul(c, pivots[i][k]));
    }
    auto lead = std::find_if(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m),
                             [](Coeff c) { return c != 0; });
    if (lead == v.begin() + static_cast<std::ptrdiff_t>(m)) {
      out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
      continue;
    }
    const std::size_t col = static_cast<std::size_t>(lead - v.begin());
    const Coeff inv = F.inv(v[col]);
    for (auto& x : v) x = F.mul(x, inv);
    pivots.push_back(v);
    pivot_cols.push_back(col);
  }
  return out;
}

}  // namespace

IndependenceReport star_independent(const Ideal& I, QLevel level) {
  level.validate();
  IndependenceReport rep;
  const auto& gens = I.generators();
  Ideal mI = maximal_ideal(I.ring()) * I;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if ((without(I, i) + mI).contains(gens[i])) {
      rep.minimal_generators = false;
      rep.warnings.push_back("generator " + gens[i].to_string() +
                             " is redundant modulo m times the ideal");
    }
  }
  bool all_out = true, any_in = false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto v = star_member(gens[i], without(I, i), level);
    all_out = all_out && v.kind == VerdictKind::ProvenOut;
    any_in = any_in || v.positive();
    rep.per_generator.push_back(std::move(v));
  }
  rep.aggregate = any_in    ? Independence::NotIndependent
                  : all_out ? Independence::Independent
                            : Independence::Undetermined;
  return rep;
}

std::vector<Polynomial> star_reduce(const Ideal& I, QLevel level) {
  level.validate();
  std::vector<Polynomial> gens = I.generators();
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (star_member(gens[i], Ideal(I.ring(), others), level).positive())
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return gens;
}

ClosureReport star_closure(const Ideal& I, std::int64_t degree_cap, QLevel level) {
  level.validate();
  const auto& R = I.ring();
  const auto& S = R->ambient();
  if (!R->is_homogeneous() || !I.is_homogeneous())
    throw Error("closure search needs a homogeneous ideal of a graded presentation");

  ClosureReport rep;
  rep.degree_window_applied = degree_window_applies(*R);
  auto k = madic_order(I);
  if (rep.degree_window_applied && k) {
    rep.window_lo = *k + 1;
  } else {
    rep.window_lo = 1;
    rep.warnings.push_back("degree bound not applied; searching every degree from 1");
  }
  rep.window_hi = degree_cap;
  if (degree_cap < rep.window_lo)
    throw Error("empty degree window: cap " + std::to_string(degree_cap) + " below " +
                std::to_string(rep.window_lo));

  const auto& gb = I.basis();
  std::vector<std::pair<std::int64_t, std::vector<Monomial>>> bases;
  for (std::int64_t d = rep.window_lo; d <= degree_cap; ++d) {
    auto B = degree_basis(gb, d);
    rep.search_space.emplace_back(d, B.size());
    if (!B.empty()) bases.emplace_back(d, std::move(B));
  }

  if (I.is_unit() || R->is_regular()) {
    if (R->is_regular()) rep.warnings.push_back("regular ring: every ideal is tightly closed");
    rep.closure = I;
    return rep;
  }

  // Multiplier pool: 1, then minimal-degree elements of the chain
  // intersections of the basis monomials whose chains do not grow.
  rep.multipliers.push_back(Polynomial::constant(S, 1));
  for (const auto& [d, B] : bases) {
    for (const auto& m : B) {
      if (rep.multipliers.size() >= kCandidateCap) break;
      auto chain = colon_chain(Polynomial::monomial(S, m), I, level);
      if (chain.growing()) continue;
      for (auto& c : chain_candidates(chain, *R)) {
        if (rep.multipliers.size() >= kCandidateCap) break;
        auto r0 = in_R0(c, R);
        if (!r0 || !*r0) continue;
        if (std::find(rep.multipliers.begin(), rep.multipliers.end(), c) == rep.multipliers.end())
          rep.multipliers.push_back(c);
      }
    }
  }
  if (!asserted(R->flags().domain) && R->minimal_primes().empty())
    rep.warnings.push_back("ring not asserted to be a domain; only c = 1 is usable");

  std::vector<GroebnerBasis> level_bases;
  for (int e = level.e0; e <= level.e_max; ++e) level_bases.push_back(bracket_power(I, e).basis());

  std::vector<Polynomial> found;
  for (const auto& [d, B] : bases) {
    Span span(S->field(), B.size());
    for (const auto& c : rep.multipliers) {
      // f = sum a_j m_j has f^q = sum a_j m_j^q over F_p, so c f^q mod I^[q]
      // is linear in (a_j).
      // With c = 1 the top level implies every lower requirement for large q,
      // and the lowest levels would only reproduce membership in I.
      std::vector<Polynomial> columns(B.size(), Polynomial(S));
      const std::size_t first = c.is_constant() ? level_bases.size() - 1 : 0;
      for (std::size_t li = first; li < level_bases.size(); ++li) {
        const int e = level.e0 + static_cast<int>(li);
        for (std::size_t j = 0; j < B.size(); ++j) {
          Polynomial nf = normal_form(c * frobenius_power(Polynomial::monomial(S, B[j]), e),
                                      level_bases[li]);
          // Distinct levels land in distinct degrees, so summing the
          // columns stacks the level conditions.
          columns[j] += nf;
        }
      }
      for (auto& v : kernel(S->field(), columns)) span.add(std::move(v));
    }
    for (const auto& v : span.basis()) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < B.size(); ++j)
        if (v[j] != 0) terms.push_back({B[j], v[j]});
      Polynomial f = Polynomial::from_terms(S, std::move(terms));
      ClosureAddition add{f, d, star_member(f, I, level)};
      if (add.verdict.kind == VerdictKind::ProvenIn) {
        rep.certified.push_back(add);
        found.push_back(f);
      } else if (add.verdict.kind == VerdictKind::InAtLevel) {
        rep.leveled.push_back(add);
        found.push_back(f);
      } else {
        rep.unconfirmed.push_back(std::move(add));
      }
    }
  }
  rep.closure = I + Ideal(R, found);
  return rep;
}

}  // namespace tc
