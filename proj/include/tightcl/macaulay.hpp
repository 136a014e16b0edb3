#pragma once

// Brute-force ideal membership by dense linear algebra over F_p. Kept apart
// from the Groebner code so it can serve as an independent check of it.

#include <span>

#include "tightcl/polyfield.hpp"

namespace tc {

enum class OracleAnswer { Member, NotMember, Inconclusive };

/// Decides whether f = sum h_i g_i with deg(h_i) + deg(g_i) <= degree_cap.
/// A failed solve is only conclusive when f and every g_i are homogeneous
/// and degree_cap >= deg f; otherwise Inconclusive is reported.
OracleAnswer macaulay_member_oracle(const Polynomial& f, std::span<const Polynomial> gens,
                                    int degree_cap);

}  // namespace tc
