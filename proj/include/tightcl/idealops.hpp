#pragma once

// Ideals of a presented ring R = S / J. Every ideal is stored as a list of
// ambient lifts; membership, equality and containment go through the reduced
// Groebner basis of (lifts + J).

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tightcl/groebner.hpp"
#include "tightcl/polyfield.hpp"

namespace tc {

enum class Tri { Unknown, True, False };

/// User assertions about R. Nothing here is ever inferred.
struct RingFlags {
  Tri domain = Tri::Unknown;
  Tri normal = Tri::Unknown;
  Tri graded_reduced = Tri::Unknown;
  Tri cm = Tri::Unknown;

  bool operator==(const RingFlags&) const = default;
};

inline bool asserted(Tri t) { return t == Tri::True; }

class PresentedRing;
using RingHandle = std::shared_ptr<const PresentedRing>;

class PresentedRing {
 public:
  /// `minimal_primes` optionally lists generators of each minimal prime of R,
  /// used for R^0 checks when the ring is not asserted to be a domain.
  PresentedRing(Ring ambient, std::vector<Polynomial> relations, RingFlags flags = {},
                std::vector<std::vector<Polynomial>> minimal_primes = {});

  static RingHandle make(Ring ambient, std::vector<Polynomial> relations, RingFlags flags = {},
                         std::vector<std::vector<Polynomial>> minimal_primes = {});

  const Ring& ambient() const { return ambient_; }
  std::uint32_t characteristic() const { return ambient_->characteristic(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& relation_basis() const { return relation_gb_; }
  const RingFlags& flags() const { return flags_; }
  const std::vector<std::vector<Polynomial>>& minimal_primes() const { return minimal_primes_; }

  /// J = 0.
  bool is_regular() const { return relation_gb_.is_zero_ideal(); }
  bool is_homogeneous() const;
  /// Standard grading with homogeneous relations, so F_k = m^k is read off degrees.
  bool standard_graded() const;

  /// Normal form modulo J.
  Polynomial reduce(const Polynomial& f) const { return normal_form(f, relation_gb_); }
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }

  Polynomial parse(std::string_view text) const { return parse_polynomial(text, ambient_); }

 private:
  Ring ambient_;
  std::vector<Polynomial> relations_;
  GroebnerBasis relation_gb_;
  RingFlags flags_;
  std::vector<std::vector<Polynomial>> minimal_primes_;
};

class Ideal {
 public:
  Ideal(RingHandle ring, std::vector<Polynomial> gens);

  const RingHandle& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced basis of (generators + J), computed once.
  const GroebnerBasis& basis() const;

  bool contains(const Polynomial& f) const { return ideal_member(f, basis()); }
  Polynomial reduce(const Polynomial& f) const { return normal_form(f, basis()); }
  bool is_zero() const;
  bool is_unit() const { return basis().is_unit_ideal(); }
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };

  RingHandle ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal bracket_power(const Ideal& I, int e);

/// (I : f). Throws when f is zero in R.
Ideal colon(const Ideal& I, const Polynomial& f);
/// (I : K), the intersection of (I : k) over the generators of K nonzero in R.
Ideal colon(const Ideal& I, const Ideal& K);

Ideal intersect(const Ideal& a, const Ideal& b);

enum class CombineOp { Sum, Product };
Ideal combine(const Ideal& a, const Ideal& b, CombineOp op);
Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);

/// Largest k with f in m^k, read as the smallest degree in NF(f mod J);
/// nullopt stands for infinity (f = 0 in R).
std::optional<std::int64_t> madic_order(const Polynomial& f, const PresentedRing& R);
/// Smallest order among the generators; nullopt for the zero ideal.
std::optional<std::int64_t> madic_order(const Ideal& I);

bool is_subset(const Ideal& a, const Ideal& b);
bool equal(const Ideal& a, const Ideal& b);

/// m = (all variables).
Ideal maximal_ideal(const RingHandle& R);
/// m^k as the ordinary power: every product of k variables.
Ideal maximal_power(const RingHandle& R, int k);
/// m^[q] = (x_1^q, ..., x_n^q).
Ideal maximal_bracket(const RingHandle& R, std::int64_t q);

/// Drops generators that are zero in R or lie in the ideal of the others,
/// scanning in input order.
Ideal minimalize(const Ideal& I);

}  // namespace tc
