#include <algorithm>

#include "closure_internal.hpp"
#include "tightcl/closure.hpp"

namespace tc {

using namespace detail;

const char* to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::TightlyClosed: return "TIGHTLY_CLOSED";
    case ReductionStatus::Inconclusive: return "INCONCLUSIVE";
    case ReductionStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

const char* to_string(MultiplicityStatus s) {
  switch (s) {
    case MultiplicityStatus::FRational: return "F_RATIONAL";
    case MultiplicityStatus::False: return "FALSE";
    case MultiplicityStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

SandwichResult sandwich_check(const Ideal& I) {
  SandwichResult r;
  if (!degree_window_applies(*I.ring())) {
    r.reason = "flags: needs normal and graded_reduced on a standard graded presentation";
    return r;
  }
  auto k = madic_order(I);
  if (!k) {
    r.reason = "zero ideal";
    return r;
  }
  if (*k == 0) {
    r.reason = "ideal not contained in m";
    return r;
  }
  // I ⊆ m^j for every j <= k; report the smallest j that also has m^(j+1) ⊆ I.
  for (std::int64_t j = 1; j <= *k; ++j) {
    if (!is_subset(maximal_power(I.ring(), static_cast<int>(j + 1)), I)) continue;
    r.status = SandwichStatus::TightlyClosed;
    r.k = j;
    r.reason = "m^" + std::to_string(j + 1) + " ⊆ I ⊆ m^" + std::to_string(j);
    return r;
  }
  r.reason = "m^" + std::to_string(*k + 1) + " is not contained in the ideal";
  return r;
}

GradedReductionResult graded_reduction(const Ideal& I, int n, QLevel level) {
  level.validate();
  const auto& R = I.ring();
  if (!R->standard_graded()) throw Error("graded reduction needs a standard graded presentation");
  if (n < 1) throw Error("graded reduction needs n >= 1");

  GradedReductionResult r;
  if (!asserted(R->flags().normal) || !asserted(R->flags().domain)) {
    r.reason = "flags: needs normal and domain (the associated graded ring is R itself)";
    return r;
  }
  auto k = madic_order(I);
  r.upper_premise = !k || *k >= n;
  r.lower_premise = is_subset(maximal_power(R, n + 2), I);
  if (!r.upper_premise || !r.lower_premise) {
    r.reason = !r.upper_premise ? "I is not contained in m^" + std::to_string(n)
                                : "m^" + std::to_string(n + 2) + " is not contained in I";
    return r;
  }

  for (const auto& g : I.generators()) {
    Polynomial h = R->reduce(g);
    if (h.is_zero()) continue;
    if (h.min_degree() == n)
      r.initial_forms.push_back(h.homogeneous_component(n));
    else
      r.higher_generators.push_back(g);
  }
  Ideal I0(R, r.initial_forms);
  r.I0 = I0;
  r.bound = "I* ⊆ I + I0^{*sp} with I0 = " + I0.to_string();

  if (R->is_regular()) {
    r.status = ReductionStatus::TightlyClosed;
    r.certificate = "I0 lives in a regular ring, where every ideal is tightly closed";
    return r;
  }
  if (I0.is_zero()) {
    r.status = ReductionStatus::TightlyClosed;
    r.certificate = "I0 = 0 in a domain";
    return r;
  }
  auto sw = sandwich_check(I0);
  if (sw.status == SandwichStatus::TightlyClosed) {
    r.status = ReductionStatus::TightlyClosed;
    r.certificate = "I0 is tightly closed: " + sw.reason;
    return r;
  }
  // Only degree n+1 of I0* matters for the reduction.
  r.I0_closure = star_closure(I0, n + 1, level);
  r.status = ReductionStatus::Inconclusive;
  r.reason = "no structural certificate that I0 is tightly closed";
  return r;
}

MultiplicityResult minimal_multiplicity(const RingHandle& R, int degree_cap) {
  MultiplicityResult r;
  r.caveat = "the residue field F_" + std::to_string(R->characteristic()) +
             " is finite; the conclusion holds up to the infinite-residue-field hypothesis";
  const auto& fl = R->flags();
  if (!asserted(fl.normal) || !asserted(fl.cm) || !asserted(fl.graded_reduced) ||
      !R->standard_graded()) {
    r.reason = "flags: needs normal, cm and graded_reduced on a standard graded presentation";
    return r;
  }
  auto h = hilbert(R->relation_basis(), degree_cap);
  if (!h.multiplicity)
    throw Error("Hilbert polynomial did not stabilize below degree " + std::to_string(degree_cap));
  r.e = h.multiplicity;
  r.edim = h.values.size() > 1 ? h.values[1] : 0;
  r.dim = h.dimension;
  const bool minimal = *r.e == *r.edim - *r.dim + 1;
  r.status = minimal ? MultiplicityStatus::FRational : MultiplicityStatus::False;
  r.reason = "e = " + std::to_string(*r.e) + ", edim - dim + 1 = " +
             std::to_string(*r.edim - *r.dim + 1);
  return r;
}

HmsResult hms_expected(const Ideal& params) {
  const auto& R = params.ring();
  const auto& S = R->ambient();
  if (!R->is_homogeneous()) throw Error("expected-closure formula needs a graded presentation");
  std::int64_t D = 0;
  for (const auto& g : params.generators()) {
    if (!g.is_homogeneous()) throw Error("parameter " + g.to_string() + " is not homogeneous");
    D += g.degree();
  }
  const int wmax = *std::max_element(S->weights().begin(), S->weights().end());
  // R_{>=D} is generated by its elements of degree D .. D + wmax - 1.
  std::vector<Polynomial> kept = params.generators();
  for (std::int64_t d = D; d < D + wmax; ++d) {
    Ideal current(R, kept);
    for (const auto& m : degree_basis(current.basis(), d)) kept.push_back(Polynomial::monomial(S, m));
  }
  return HmsResult{Ideal(R, std::move(kept)), D, "ORACLE-EXPECTED"};
}

}  // namespace tc
