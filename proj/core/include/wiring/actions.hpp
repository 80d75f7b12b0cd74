#pragma once

#include <set>
#include <vector>

#include "wiring/diagram.hpp"
#include "wiring/trace.hpp"

namespace wiring {

/// Reflection: the pair list in reversed order. An involution on W_S.
Diagram tau(const Diagram& d);

/// The x-sweep split of a diagram into the points above the first line
/// (L+), on it (L0, in sweep order) and below it (L-). Positions are the
/// 1-based indices in the input; x_witness[k] is the value of x when the
/// k-th L0 point was consumed (always its a).
struct MuDecomposition {
  std::vector<LefschetzPair> l_plus, l_zero, l_minus;
  std::vector<int> pos_plus, pos_zero, pos_minus;
  std::vector<int> x_witness;
};

MuDecomposition mu_decompose(const Diagram& d);

/// First-line inversion: L+ shifted down, L0 reversed, L- shifted up.
/// Equals the paper-order list before canonicalization.
Diagram mu_raw(const Diagram& d);

/// mu on commutation classes; the decomposition is class-invariant.
CanonicalDiagram mu(const CanonicalDiagram& c);

/// Rotation through infinity: drop the first point, append its J-conjugate.
Diagram sigma(const Diagram& d);
Diagram sigma_inverse(const Diagram& d);

/// sigma^p in closed form: J-conjugate every pair, order unchanged.
/// Well defined on classes even though sigma itself is not.
Diagram sigma_power_p(const Diagram& d);

/// Canonical forms of sigma applied to every class member that has its
/// front piece at position 1: one image per minimal-front piece.
std::set<CanonicalDiagram> sigma_class_neighbors(const CanonicalDiagram& c);

/// The two point patterns of a line crossing the t lines of a multiple
/// point from above (tru) or below (trd); 0 <= i <= t positions the
/// crossing line, c >= 1 is the index offset. Both lists have t+1 entries:
/// t simple points and one point of multiplicity t.
std::vector<LefschetzPair> tru_pattern(int c, int i, int t);
std::vector<LefschetzPair> trd_pattern(int c, int i, int t);

/// Whether pattern occurrences are sought across the whole commutation
/// class (Equiv) or only as literally contiguous runs of the canonical
/// representative (Literal).
enum class DeltaPolicy { Equiv, Literal };

/// Whether the degenerate end positions i = 0 and i = t are admitted.
enum class DeltaEnds { All, InteriorOnly };

struct DeltaMove {
  int c = 0, i = 0, t = 0;
  bool from_up = true;          // true: tru occurrence, replaced by trd
  std::vector<int> positions;   // matched positions in pattern order
  friend auto operator<=>(const DeltaMove&, const DeltaMove&) = default;
};

std::vector<DeltaMove> delta_moves(const CanonicalDiagram& c,
                                   DeltaPolicy policy = DeltaPolicy::Equiv,
                                   DeltaEnds ends = DeltaEnds::All);

/// Replaces the matched occurrence by the opposite pattern and
/// canonicalizes. The move is re-validated against the diagram.
CanonicalDiagram apply_delta(const CanonicalDiagram& c, const DeltaMove& move);

}  // namespace wiring
