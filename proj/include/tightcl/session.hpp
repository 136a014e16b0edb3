#pragma once

// Session files: one presented ring plus named ideals and polynomials.
//
//   ring { char: 5 ; vars: x(1) y(1) z(1) ; relations: x^3 + y^3 + z^3 ;
//          flags: domain normal graded_reduced }
//   ideal I { gens: x, y }
//
// Also accepted: `poly Name { expr }`, `prime { gens: ... }` (generators of a
// minimal prime, for multiplier checks without the domain flag) and
// `defaults { e0: 0 ; emax: 2 ; degree_cap: 4 }`. Vars without a weight get
// weight 1. `#` starts a comment running to the end of the line.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tightcl/closure.hpp"

namespace tc {

struct Session {
  RingHandle ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::vector<std::pair<std::string, Polynomial>> polys;
  QLevel level;
  std::int64_t degree_cap = 4;

  const Ideal& ideal(std::string_view name) const;
  const Polynomial* find_poly(std::string_view name) const;
  const Ideal* find_ideal(std::string_view name) const;
  /// A declared polynomial name, or else polynomial text in the ring.
  Polynomial element(std::string_view name_or_text) const;
};

/// Throws ParseError (with 1-based line and column) on malformed input and on
/// semantic errors tied to a position: unknown variables, composite
/// characteristic, bad weights, duplicate names.
Session parse_session(std::string_view text);

std::string print_session(const Session& s);

/// Same ring data (characteristic, variables, weights, relations, flags,
/// primes), same named objects with the same generator lists, same defaults.
bool same_session(const Session& a, const Session& b);

}  // namespace tc
