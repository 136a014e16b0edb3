#pragma once

// Buchberger's algorithm and the operations built directly on a reduced
// Groebner basis: normal forms, membership, elimination, Hilbert functions
// and standard-monomial bases.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tightcl/polyfield.hpp"

namespace tc {

/// Reduced Groebner basis. Generators are monic, inter-reduced and sorted by
/// increasing leading monomial, so the basis of an ideal is unique for the
/// ring's order.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(Ring ring) : ring_(std::move(ring)) {}
  GroebnerBasis(Ring ring, std::vector<Polynomial> reduced_generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool reduced() const { return true; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const;

  /// Index of a generator whose leading monomial divides m, if any.
  std::optional<std::size_t> find_divisor(const Monomial& m) const;
  bool is_standard(const Monomial& m) const { return !find_divisor(m); }

  bool operator==(const GroebnerBasis& other) const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::vector<std::uint32_t> masks_;
};

/// Reduced Groebner basis of the ideal generated by `gens`. Zero generators
/// are dropped; an empty list yields the zero ideal.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const Ring& ring);
GroebnerBasis buchberger(std::span<const Polynomial> gens);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Checks that every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Generators of (gens) ∩ k[variables not in drop_vars], expressed in the
/// ring of the inputs. Uses a block order with `drop_vars` lex-first.
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens,
                                  std::span<const std::size_t> drop_vars);

/// Intersection of two ideals of the same polynomial ring via a tag variable.
std::vector<Polynomial> intersect_generators(std::span<const Polynomial> a,
                                             std::span<const Polynomial> b);

struct HilbertData {
  /// values[d] = HF(d) for 0 <= d <= degree cap.
  std::vector<std::int64_t> values;
  int dimension = 0;
  /// Set once the Hilbert polynomial has visibly stabilized inside the cap.
  std::optional<std::int64_t> multiplicity;
  /// First degree from which the (dim-1)-th difference is constant.
  std::optional<int> stable_from;
};

/// Hilbert function of S / (gb) up to `degree_cap`. Requires homogeneous
/// generators for the ring's weights.
HilbertData hilbert(const GroebnerBasis& gb, int degree_cap);

/// Krull dimension of S / (gb) from the leading-term ideal.
int krull_dimension(const GroebnerBasis& gb);

/// Standard monomials of weighted degree exactly d.
std::vector<Monomial> degree_basis(const GroebnerBasis& gb, std::int64_t d);

/// All monomials of the ring with weighted degree exactly d.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, std::int64_t d);

}  // namespace tc
