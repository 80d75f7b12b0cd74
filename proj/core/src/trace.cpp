#include "wiring/trace.hpp"

#include <algorithm>
#include <cstdint>

namespace wiring {

bool disjoint(LefschetzPair p, LefschetzPair q) {
  return p.b < q.a || q.b < p.a;
}

DependenceGraph DependenceGraph::of(const Diagram& d) {
  DependenceGraph g;
  g.p = d.points();
  for (int i = 1; i <= g.p; ++i)
    for (int j = i + 1; j <= g.p; ++j)
      if (!disjoint(d.pair(i), d.pair(j))) g.edges.emplace_back(i, j);
  return g;
}

namespace {

// Greedy lexicographically-least linear extension of the dependence order.
// A remaining position is ready iff every earlier remaining position holds
// a disjoint pair (the removed set is always downward closed, so the local
// check captures minimality).
std::vector<LefschetzPair> greedy_least(const Diagram& d) {
  const int p = d.points();
  std::vector<bool> used(std::size_t(p) + 1, false);
  std::vector<LefschetzPair> out;
  out.reserve(std::size_t(p));
  for (int step = 0; step < p; ++step) {
    int best = 0;
    for (int i = 1; i <= p; ++i) {
      if (used[std::size_t(i)]) continue;
      bool ready = true;
      for (int j = 1; j < i && ready; ++j)
        if (!used[std::size_t(j)] && !disjoint(d.pair(j), d.pair(i))) ready = false;
      if (!ready) continue;
      if (best == 0 || d.pair(i) < d.pair(best)) best = i;
    }
    used[std::size_t(best)] = true;
    out.push_back(d.pair(best));
  }
  return out;
}

}  // namespace

CanonicalDiagram canonical_form(const Diagram& d) {
  Diagram c(d.ell(), greedy_least(d));
  if (d.validated()) c = c.as_validated();
  return CanonicalDiagram(std::move(c));
}

bool is_canonical(const Diagram& d) {
  return greedy_least(d) == d.pairs();
}

bool equivalent(const Diagram& a, const Diagram& b) {
  if (a.ell() != b.ell() || a.points() != b.points()) return false;
  return canonical_form(a).diagram().pairs() == canonical_form(b).diagram().pairs();
}

std::vector<int> minimal_front_positions(const Diagram& d) {
  std::vector<int> out;
  for (int i = 1; i <= d.points(); ++i) {
    bool front = true;
    for (int j = 1; j < i && front; ++j)
      if (!disjoint(d.pair(j), d.pair(i))) front = false;
    if (front) out.push_back(i);
  }
  return out;
}

namespace {

// reach[i] = bitmask of positions j with i dependence-before j (transitive).
std::vector<std::uint64_t> reachability(const Diagram& d) {
  const int p = d.points();
  std::vector<std::uint64_t> reach(std::size_t(p) + 1, 0);
  for (int i = p; i >= 1; --i) {
    std::uint64_t r = 0;
    for (int j = i + 1; j <= p; ++j) {
      if (!disjoint(d.pair(i), d.pair(j))) r |= (std::uint64_t(1) << j) | reach[std::size_t(j)];
    }
    reach[std::size_t(i)] = r;
  }
  return reach;
}

}  // namespace

bool can_extract_in_order(const Diagram& d, std::span<const int> positions) {
  const int p = d.points();
  if (p > 63) throw std::invalid_argument("extraction check supports at most 63 points");
  std::uint64_t selected = 0;
  for (int pos : positions) {
    if (pos < 1 || pos > p) throw std::invalid_argument("position out of range");
    if (selected & (std::uint64_t(1) << pos)) throw std::invalid_argument("duplicate position");
    selected |= std::uint64_t(1) << pos;
  }
  const auto reach = reachability(d);
  // The given order must extend the induced dependence order.
  for (std::size_t s = 0; s < positions.size(); ++s)
    for (std::size_t t = s + 1; t < positions.size(); ++t)
      if (reach[std::size_t(positions[t])] & (std::uint64_t(1) << positions[s])) return false;
  // Convexity: no outside piece strictly between two selected ones.
  std::uint64_t above_some = 0;  // positions reachable from a selected one
  for (int pos : positions) above_some |= reach[std::size_t(pos)];
  for (int m = 1; m <= p; ++m) {
    if (selected & (std::uint64_t(1) << m)) continue;
    const bool after_sel = (above_some >> m) & 1;
    const bool before_sel = (reach[std::size_t(m)] & selected) != 0;
    if (after_sel && before_sel) return false;
  }
  return true;
}

bool can_extract_contiguous(const Diagram& d, std::span<const int> positions) {
  for (std::size_t s = 1; s < positions.size(); ++s)
    if (positions[s] <= positions[s - 1])
      throw std::invalid_argument("positions must be strictly increasing");
  return can_extract_in_order(d, positions);
}

std::pair<std::vector<int>, std::vector<int>> extraction_split(const Diagram& d,
                                                               std::span<const int> positions) {
  const int p = d.points();
  const auto reach = reachability(d);
  std::uint64_t selected = 0;
  for (int pos : positions) selected |= std::uint64_t(1) << pos;
  std::vector<int> prefix, suffix;
  for (int m = 1; m <= p; ++m) {
    if (selected & (std::uint64_t(1) << m)) continue;
    if (reach[std::size_t(m)] & selected)
      prefix.push_back(m);  // dependence-below some selected piece
    else
      suffix.push_back(m);
  }
  return {std::move(prefix), std::move(suffix)};
}

}  // namespace wiring
