#pragma once

// Tight and special tight closure: colon chains, membership verdicts,
// *-independence, closure search, degree bounds and graded reduction.
//
// Membership in a tight closure is only semi-decidable, so verdicts form a
// small certificate lattice. ProvenIn / ProvenOut rest on a structural
// argument and do not depend on the Frobenius level; InAtLevel, OutEvidence
// and Undetermined only describe the levels that were actually computed.

#include <optional>
#include <string>
#include <vector>

#include "tightcl/idealops.hpp"

namespace tc {

/// Frobenius levels e0 <= e <= e_max, q = p^e, q0 = p^e0.
struct QLevel {
  int e0 = 0;
  int e_max = 2;

  void validate() const;
  bool operator==(const QLevel&) const = default;
};

/// Which target ideals a chain or witness refers to:
///   Tight:   I^[q]
///   Special: m^[q/q0] * I^[q]
enum class Family { Tight, Special };

struct ChainLevel {
  int e = 0;
  Ideal colon;
  /// m-adic order of the colon ideal; 0 for the unit ideal.
  std::optional<std::int64_t> order;
  /// colon ⊆ m^[p^(e-e0)]
  bool inside_bracket = false;
};

struct ColonChain {
  Family family = Family::Tight;
  Polynomial f;
  QLevel level;
  std::vector<ChainLevel> levels;

  /// J_e^[p] ⊆ J_(e+1) at every pair of consecutive levels.
  bool frobenius_compatible() const;
  /// The order went up between the last two levels (at least two levels needed).
  bool growing() const;
  bool all_inside_bracket() const;
};

/// J_e = (target_e : f^q) for e0 <= e <= e_max. Throws if f is zero in R.
ColonChain colon_chain(const Polynomial& f, const Ideal& I, QLevel level,
                       Family family = Family::Tight);

enum class VerdictKind { ProvenIn, ProvenOut, InAtLevel, OutEvidence, Undetermined };
enum class OutReason { None, Trivial, RegularFlatness, DegreeBound };
enum class WitnessKind { Trivial, Frobenius, Colon };

const char* to_string(VerdictKind k);
const char* to_string(OutReason r);
const char* to_string(WitnessKind k);
const char* to_string(Family f);
std::optional<VerdictKind> verdict_kind_from_string(std::string_view s);

struct LevelCheck {
  int e = 0;
  bool holds = false;
};

struct Witness {
  Polynomial c;
  WitnessKind kind = WitnessKind::Trivial;
  Family family = Family::Tight;
  /// Checked exponent range; q0 for the family target is p^e_from.
  int e_from = 0;
  int e_to = 0;
  /// c f^q in the family target, per level.
  std::vector<LevelCheck> membership;
  /// c f^q in c I^[q] + m^(q/q0) I^[q], per level (tight family only).
  std::vector<LevelCheck> decomposition;
};

struct ClosureVerdict {
  VerdictKind kind = VerdictKind::Undetermined;
  OutReason reason = OutReason::None;
  int e_max = 0;
  std::optional<Witness> witness;
  /// Orders of the computed colon ideals, in level order (nullopt = zero ideal).
  std::vector<std::optional<std::int64_t>> orders;
  /// Ratio of the last two finite orders, when the chain grows.
  std::optional<double> growth_rate;
  std::vector<std::string> notes;

  bool positive() const {
    return kind == VerdictKind::ProvenIn || kind == VerdictKind::InAtLevel;
  }
};

ClosureVerdict star_member(const Polynomial& f, const Ideal& I, QLevel level = {});
ClosureVerdict special_star_member(const Polynomial& f, const Ideal& I, QLevel level = {});
/// Special membership through x^q0 in (m I^[q0])*.
ClosureVerdict special_star_member_via_tight(const Polynomial& f, const Ideal& I, QLevel level = {});

struct FrobeniusResult {
  /// Smallest e <= e_max with f^(p^e) in I^[p^e].
  std::optional<int> e;
  int e_max = 0;
};

FrobeniusResult frobenius_member(const Polynomial& f, const Ideal& I, QLevel level = {});

/// c f^q in c I^[q] + m^(q/q0) I^[q] for e0 <= e <= e_max, q0 = p^e0.
std::vector<LevelCheck> decomposition_witness(const Polynomial& f, const Ideal& I, const Polynomial& c,
                                          QLevel level);

/// Re-runs every membership check recorded in the witness.
bool replay_witness(const Polynomial& f, const Ideal& I, const Witness& w);

enum class Independence { Independent, NotIndependent, Undetermined };
const char* to_string(Independence a);

struct IndependenceReport {
  std::vector<ClosureVerdict> per_generator;
  Independence aggregate = Independence::Undetermined;
  bool minimal_generators = true;
  std::vector<std::string> warnings;
};

IndependenceReport star_independent(const Ideal& I, QLevel level = {});

/// Greedily removes generators lying (provably or at level) in the tight
/// closure of the remaining ones, in input order.
std::vector<Polynomial> star_reduce(const Ideal& I, QLevel level = {});

struct ClosureAddition {
  Polynomial element;
  std::int64_t degree = 0;
  ClosureVerdict verdict;
};

struct ClosureReport {
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  bool degree_window_applied = false;
  /// Standard monomials examined, per degree of the window.
  std::vector<std::pair<std::int64_t, std::size_t>> search_space;
  std::vector<Polynomial> multipliers;
  std::vector<ClosureAddition> certified;
  std::vector<ClosureAddition> leveled;
  /// Solutions of the linear conditions that star_member did not confirm.
  std::vector<ClosureAddition> unconfirmed;
  std::vector<std::string> warnings;

  /// I plus every certified and leveled addition.
  std::optional<Ideal> closure;
};

/// Homogeneous degree-by-degree search for elements of I* \ I.
ClosureReport star_closure(const Ideal& I, std::int64_t degree_cap, QLevel level = {});

enum class SandwichStatus { TightlyClosed, NotApplicable };

struct SandwichResult {
  SandwichStatus status = SandwichStatus::NotApplicable;
  std::optional<std::int64_t> k;
  std::string reason;
};

/// m^(k+1) ⊆ I ⊆ m^k with k the order of I.
SandwichResult sandwich_check(const Ideal& I);

enum class ReductionStatus { TightlyClosed, Inconclusive, NotApplicable };
const char* to_string(ReductionStatus s);

struct GradedReductionResult {
  ReductionStatus status = ReductionStatus::NotApplicable;
  std::string reason;
  bool lower_premise = false;  // m^(n+2) ⊆ I
  bool upper_premise = false;  // I ⊆ m^n
  std::vector<Polynomial> initial_forms;
  std::vector<Polynomial> higher_generators;
  std::optional<Ideal> I0;
  std::string certificate;
  /// I* ⊆ I + I0^{*sp}, reported whenever I0 was formed.
  std::string bound;
  std::optional<ClosureReport> I0_closure;
};

GradedReductionResult graded_reduction(const Ideal& I, int n, QLevel level = {});

enum class MultiplicityStatus { FRational, False, NotApplicable };
const char* to_string(MultiplicityStatus s);

struct MultiplicityResult {
  MultiplicityStatus status = MultiplicityStatus::NotApplicable;
  std::optional<std::int64_t> e;
  std::optional<std::int64_t> edim;
  std::optional<int> dim;
  std::string reason;
  std::string caveat;
};

MultiplicityResult minimal_multiplicity(const RingHandle& R, int degree_cap = 40);

struct HmsResult {
  Ideal expected;
  std::int64_t D = 0;
  std::string label = "ORACLE-EXPECTED";
};

/// (params) + R_{>=D}, D the sum of the parameter degrees, with redundant
/// monomials dropped.
HmsResult hms_expected(const Ideal& params);

}  // namespace tc
