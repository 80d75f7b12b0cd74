#include "wiring/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wiring {

IncidenceLattice IncidenceLattice::of(const Diagram& d) {
  IncidenceLattice lat;
  lat.ell = d.ell();
  lat.points = crossing_points(d);
  return lat;
}

namespace {

// Key with set-size in the high bits and a rank that orders equal-size
// sets like their ascending element sequences: putting line 1 at the top
// mask bit makes larger masks lexicographically smaller, so the rank is
// the complement.
std::uint32_t set_key(int ell, const std::vector<std::uint8_t>& lines) {
  std::uint32_t revmask = 0;
  for (std::uint8_t v : lines) revmask |= std::uint32_t(1) << (ell - v);
  return (std::uint32_t(lines.size()) << 16) | (0xFFFFu ^ revmask);
}

std::vector<std::uint8_t> key_to_set(int ell, std::uint32_t key) {
  const std::uint32_t revmask = 0xFFFFu ^ (key & 0xFFFFu);
  std::vector<std::uint8_t> lines;
  for (int v = 1; v <= ell; ++v)
    if (revmask & (std::uint32_t(1) << (ell - v))) lines.push_back(std::uint8_t(v));
  return lines;
}

std::string sets_to_string(int ell, const std::vector<std::uint32_t>& sorted_keys) {
  std::ostringstream os;
  for (std::uint32_t key : sorted_keys) {
    os << '{';
    const auto lines = key_to_set(ell, key);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i) os << ',';
      os << int(lines[i]);
    }
    os << '}';
  }
  return os.str();
}

}  // namespace

std::string IncidenceLattice::str() const {
  std::vector<std::uint32_t> keys;
  keys.reserve(points.size());
  for (const auto& s : points) keys.push_back(set_key(ell, s));
  std::sort(keys.begin(), keys.end());
  return sets_to_string(ell, keys);
}

LatticeCanonicalForm canonical_lattice(const IncidenceLattice& lat) {
  const int ell = lat.ell;
  if (ell > 15) throw std::invalid_argument("lattice canonicalization requires ell <= 15");

  // perm[old line] = new label; enumerate all assignments in lex order of
  // the old-line sequence mapped to labels 1..ell.
  std::vector<std::uint8_t> order(std::size_t(ell));
  std::iota(order.begin(), order.end(), std::uint8_t(1));

  std::vector<std::uint8_t> relabel(std::size_t(ell) + 1);
  std::vector<std::uint32_t> keys(lat.points.size());
  std::vector<std::uint32_t> best;
  std::vector<std::uint8_t> scratch;
  do {
    for (int new_label = 1; new_label <= ell; ++new_label)
      relabel[order[std::size_t(new_label - 1)]] = std::uint8_t(new_label);
    for (std::size_t pi = 0; pi < lat.points.size(); ++pi) {
      scratch.clear();
      for (std::uint8_t v : lat.points[pi]) scratch.push_back(relabel[v]);
      keys[pi] = set_key(ell, scratch);
    }
    std::sort(keys.begin(), keys.end());
    if (best.empty() || keys < best) best = keys;
  } while (std::next_permutation(order.begin(), order.end()));

  return LatticeCanonicalForm{ell, std::move(best)};
}

std::string LatticeCanonicalForm::str() const {
  return sets_to_string(ell, keys);
}

bool lattices_isomorphic(const IncidenceLattice& a, const IncidenceLattice& b) {
  if (a.ell != b.ell) return false;
  return canonical_lattice(a) == canonical_lattice(b);
}

}  // namespace wiring
