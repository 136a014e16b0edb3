#pragma once

#include <random>
#include <string>
#include <vector>

#include "tightcl/polyfield.hpp"

namespace tc::testing {

inline Ring ring_xyz(std::uint32_t p, std::size_t nvars = 3, OrderKind kind = OrderKind::DegRevLex) {
  std::vector<std::string> names{"x", "y", "z", "w"};
  names.resize(nvars);
  return PolyRing::make(p, names, {}, MonomialOrder{kind, 0});
}

inline Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

inline Monomial random_monomial(std::mt19937& rng, const PolyRing& r, int max_deg) {
  std::vector<int> e(r.nvars(), 0);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(r.nvars()) - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(pick(rng))];
  return r.monomial(e);
}

inline Polynomial random_poly(std::mt19937& rng, const Ring& r, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> coeff(0, r->characteristic() - 1);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) terms.push_back({random_monomial(rng, *r, max_deg), coeff(rng)});
  return Polynomial::from_terms(r, terms);
}

/// Random homogeneous polynomial of degree d (possibly zero).
inline Polynomial random_form(std::mt19937& rng, const Ring& r, int d, int max_terms) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, r->characteristic() - 1);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(r->nvars()) - 1);
  std::vector<Term> terms;
  for (int k = 0; k < max_terms; ++k) {
    std::vector<int> e(r->nvars(), 0);
    for (int j = 0; j < d; ++j) ++e[static_cast<std::size_t>(pick(rng))];
    terms.push_back({r->monomial(e), coeff(rng)});
  }
  return Polynomial::from_terms(r, terms);
}

}  // namespace tc::testing
