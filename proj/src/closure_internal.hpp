#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "tightcl/closure.hpp"

namespace tc::detail {

inline constexpr std::size_t kCandidateCap = 20;

std::int64_t q_of(const PresentedRing& R, int e);

/// I^[q] for the tight family, m^[p^(e-e0)] I^[q] for the special one.
Ideal family_target(const Ideal& I, int e, int e0, Family family);

/// Normal, gr reduced and standard graded: the degree bound is available.
bool degree_window_applies(const PresentedRing& R);

/// m^a, generated by standard monomials when the ring is standard graded.
Ideal ordinary_maximal_power(const RingHandle& R, std::int64_t a);

/// Whether c avoids every minimal prime; nullopt when that cannot be decided.
std::optional<bool> in_R0(const Polynomial& c, const RingHandle& R);

/// Nonzero elements of minimal degree in the intersection of the chain.
std::vector<Polynomial> chain_candidates(const ColonChain& chain, const PresentedRing& R);

Witness make_witness(const Polynomial& f, const Ideal& I, const Polynomial& c, WitnessKind kind,
                     Family family, int e_from, int e_to);
bool witness_holds(const Witness& w);
void record_chain(ClosureVerdict& v, const ColonChain& chain);

}  // namespace tc::detail
