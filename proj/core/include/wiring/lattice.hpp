#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wiring/diagram.hpp"

namespace wiring {

/// The rank-2 layer of the incidence lattice: every intersection point as
/// the set of global line labels through it. Every unordered pair of lines
/// occurs in exactly one point set; the plane and the empty set are left
/// implicit since this layer determines the full lattice.
struct IncidenceLattice {
  int ell = 0;
  std::vector<std::vector<std::uint8_t>> points;  // each sorted ascending

  static IncidenceLattice of(const Diagram& d);

  /// "{1,2}{1,3}{2,4,5}" with sets ordered by (size, elements).
  std::string str() const;
};

/// Relabel-invariant encoding: the minimum over all ell! line relabelings
/// of the sorted point-set list. Equal forms iff isomorphic lattices.
struct LatticeCanonicalForm {
  int ell = 0;
  std::vector<std::uint32_t> keys;  // sorted (size << 16 | lex-rank) per point

  friend auto operator<=>(const LatticeCanonicalForm&, const LatticeCanonicalForm&) = default;

  std::string str() const;
};

LatticeCanonicalForm canonical_lattice(const IncidenceLattice& lat);

bool lattices_isomorphic(const IncidenceLattice& a, const IncidenceLattice& b);

}  // namespace wiring
