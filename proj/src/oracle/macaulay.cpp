#include "tightcl/macaulay.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace tc {

namespace {

using Key = std::array<std::int32_t, kMaxVars>;

void all_monomials_upto(const PolyRing& R, std::size_t var, std::int64_t budget, Key& cur,
                        std::vector<Key>& out) {
  if (var == R.nvars()) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t e = 0; e * R.weight(var) <= budget; ++e) {
    cur[var] = static_cast<std::int32_t>(e);
    all_monomials_upto(R, var + 1, budget - e * R.weight(var), cur, out);
  }
  cur[var] = 0;
}

std::int64_t key_degree(const PolyRing& R, const Key& k) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < R.nvars(); ++i) d += std::int64_t{R.weight(i)} * k[i];
  return d;
}

}  // namespace

OracleAnswer macaulay_member_oracle(const Polynomial& f, std::span<const Polynomial> gens,
                                    int degree_cap) {
  const PolyRing& R = *f.ring();
  const std::uint32_t p = R.characteristic();
  if (f.is_zero()) return OracleAnswer::Member;

  bool homogeneous = f.is_homogeneous();
  for (const auto& g : gens) homogeneous = homogeneous && g.is_homogeneous();

  std::vector<Key> monos;
  Key cur{};
  all_monomials_upto(R, 0, degree_cap, cur, monos);
  std::sort(monos.begin(), monos.end());
  // Graded pieces do not interact, so homogeneous input only needs degree deg f.
  std::vector<Key> shifts = monos;
  if (homogeneous && f.degree() <= degree_cap)
    std::erase_if(monos, [&](const Key& k) { return key_degree(R, k) != f.degree(); });
  auto column = [&monos](const Key& k) -> std::ptrdiff_t {
    auto it = std::lower_bound(monos.begin(), monos.end(), k);
    if (it == monos.end() || *it != k) return -1;
    return it - monos.begin();
  };
  const std::size_t ncols = monos.size();

  auto to_row = [&](const Polynomial& g, const Key& shift) {
    std::vector<std::uint32_t> row(ncols, 0);
    for (const auto& t : g.terms()) {
      Key k{};
      for (std::size_t i = 0; i < R.nvars(); ++i) k[i] = t.mono.exp[i] + shift[i];
      auto c = column(k);
      if (c < 0) return std::vector<std::uint32_t>{};
      row[static_cast<std::size_t>(c)] = t.coeff % p;
    }
    return row;
  };

  if (f.degree() > degree_cap) return OracleAnswer::Inconclusive;
  std::vector<std::uint32_t> target = to_row(f, Key{});

  // Echelon form keyed by pivot column.
  std::map<std::size_t, std::vector<std::uint32_t>> pivots;
  auto inv = [p](std::uint32_t a) {
    std::uint64_t r = 1, b = a, n = p - 2;
    while (n) {
      if (n & 1) r = r * b % p;
      b = b * b % p;
      n >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  auto reduce = [&](std::vector<std::uint32_t>& row) -> std::ptrdiff_t {
    for (std::size_t c = 0; c < ncols; ++c) {
      if (row[c] == 0) continue;
      auto it = pivots.find(c);
      if (it == pivots.end()) return static_cast<std::ptrdiff_t>(c);
      const std::uint64_t factor = row[c];
      const auto& piv = it->second;
      for (std::size_t k = c; k < ncols; ++k)
        if (piv[k] != 0) row[k] = static_cast<std::uint32_t>((row[k] + p - factor * piv[k] % p) % p);
    }
    return -1;
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const std::int64_t gdeg = g.degree();
    for (const auto& shift : shifts) {
      if (key_degree(R, shift) + gdeg > degree_cap) continue;
      if (homogeneous && key_degree(R, shift) + gdeg != f.degree()) continue;
      auto row = to_row(g, shift);
      if (row.empty()) continue;
      auto lead = reduce(row);
      if (lead < 0) continue;
      const std::uint64_t s = inv(row[static_cast<std::size_t>(lead)]);
      for (auto& v : row) v = static_cast<std::uint32_t>(v * s % p);
      pivots.emplace(static_cast<std::size_t>(lead), std::move(row));
    }
  }

  if (reduce(target) < 0) return OracleAnswer::Member;
  return homogeneous ? OracleAnswer::NotMember : OracleAnswer::Inconclusive;
}

}  // namespace tc
