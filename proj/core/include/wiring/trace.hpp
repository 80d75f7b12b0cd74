#pragma once

#include <span>
#include <vector>

#include "wiring/diagram.hpp"

namespace wiring {

/// True iff the integer intervals [a,b] and [c,d] are disjoint. Adjacent
/// disjoint pairs commute without changing the diagram.
bool disjoint(LefschetzPair p, LefschetzPair q);

/// Positions 1..p with an edge between i < j whenever the pairs at those
/// positions are not disjoint. The transitive closure is the dependence
/// partial order of the trace.
struct DependenceGraph {
  int p = 0;
  std::vector<std::pair<int, int>> edges;  // (i, j) with i < j

  static DependenceGraph of(const Diagram& d);
};

/// The lexicographically least member of its commutation class, with pairs
/// ordered by (a, b). canonical_form is idempotent on these.
class CanonicalDiagram {
public:
  const Diagram& diagram() const { return d_; }

  friend bool operator==(const CanonicalDiagram& x, const CanonicalDiagram& y) {
    return x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const CanonicalDiagram& x, const CanonicalDiagram& y) {
    return x.d_ <=> y.d_;
  }

private:
  friend CanonicalDiagram canonical_form(const Diagram&);
  explicit CanonicalDiagram(Diagram d) : d_(std::move(d)) {}
  Diagram d_;
};

/// Greedy normal form: repeatedly emit the least pair among the positions
/// that are minimal in the residual dependence order.
CanonicalDiagram canonical_form(const Diagram& d);

/// True iff the canonical form of a word equals the word itself. Cheaper
/// than building the form when only the answer is needed.
bool is_canonical(const Diagram& d);

bool equivalent(const Diagram& a, const Diagram& b);

/// Positions whose pair is disjoint from every earlier pair, i.e. the
/// pieces that can be commuted to the front of the list.
std::vector<int> minimal_front_positions(const Diagram& d);

/// Whether some equivalent reordering makes the selected pieces adjacent,
/// in the listed order. Positions need not be increasing: the order given
/// is the order the pieces must take after extraction.
bool can_extract_in_order(const Diagram& d, std::span<const int> positions);

/// can_extract_in_order restricted to strictly increasing position lists.
bool can_extract_contiguous(const Diagram& d, std::span<const int> positions);

/// Reorders d so the selected pieces sit adjacent in the given order:
/// everything dependence-below the selection first, then the selection,
/// then the rest. Preconditions as can_extract_in_order.
/// Returns (prefix, suffix) as position lists in original order.
std::pair<std::vector<int>, std::vector<int>> extraction_split(const Diagram& d,
                                                               std::span<const int> positions);

}  // namespace wiring
