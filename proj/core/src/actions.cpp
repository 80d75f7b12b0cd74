#include "wiring/actions.hpp"

#include <algorithm>
#include <map>

namespace wiring {

Diagram tau(const Diagram& d) {
  std::vector<LefschetzPair> rev(d.pairs().rbegin(), d.pairs().rend());
  Diagram out(d.ell(), std::move(rev));
  return d.validated() ? out.as_validated() : out;
}

MuDecomposition mu_decompose(const Diagram& d) {
  MuDecomposition m;
  int x = 1;
  for (int i = 1; i <= d.points(); ++i) {
    const LefschetzPair pr = d.pair(i);
    if (pr.a <= x && x <= pr.b) {
      m.l_zero.push_back(pr);
      m.pos_zero.push_back(i);
      m.x_witness.push_back(x);
      x = pr.a + pr.b - x;
    } else if (x > pr.b) {
      m.l_minus.push_back(pr);
      m.pos_minus.push_back(i);
    } else {
      m.l_plus.push_back(pr);
      m.pos_plus.push_back(i);
    }
  }
  return m;
}

Diagram mu_raw(const Diagram& d) {
  const MuDecomposition m = mu_decompose(d);
  std::vector<LefschetzPair> out;
  out.reserve(d.pairs().size());
  for (const auto& pr : m.l_plus)
    out.push_back({std::uint8_t(pr.a - 1), std::uint8_t(pr.b - 1)});
  for (auto it = m.l_zero.rbegin(); it != m.l_zero.rend(); ++it) out.push_back(*it);
  for (const auto& pr : m.l_minus)
    out.push_back({std::uint8_t(pr.a + 1), std::uint8_t(pr.b + 1)});
  Diagram res(d.ell(), std::move(out));
  return d.validated() ? res.as_validated() : res;
}

CanonicalDiagram mu(const CanonicalDiagram& c) {
  return canonical_form(mu_raw(c.diagram()));
}

Diagram sigma(const Diagram& d) {
  if (d.points() == 0) throw std::invalid_argument("sigma requires at least one point");
  const int ell = d.ell();
  std::vector<LefschetzPair> out(d.pairs().begin() + 1, d.pairs().end());
  const LefschetzPair first = d.pair(1);
  out.push_back({std::uint8_t(ell + 1 - first.b), std::uint8_t(ell + 1 - first.a)});
  Diagram res(ell, std::move(out));
  return d.validated() ? res.as_validated() : res;
}

Diagram sigma_inverse(const Diagram& d) {
  if (d.points() == 0) throw std::invalid_argument("sigma requires at least one point");
  const int ell = d.ell();
  const LefschetzPair last = d.pairs().back();
  std::vector<LefschetzPair> out;
  out.reserve(d.pairs().size());
  out.push_back({std::uint8_t(ell + 1 - last.b), std::uint8_t(ell + 1 - last.a)});
  out.insert(out.end(), d.pairs().begin(), d.pairs().end() - 1);
  Diagram res(ell, std::move(out));
  return d.validated() ? res.as_validated() : res;
}

Diagram sigma_power_p(const Diagram& d) {
  const int ell = d.ell();
  std::vector<LefschetzPair> out;
  out.reserve(d.pairs().size());
  for (const auto& pr : d.pairs())
    out.push_back({std::uint8_t(ell + 1 - pr.b), std::uint8_t(ell + 1 - pr.a)});
  Diagram res(ell, std::move(out));
  return d.validated() ? res.as_validated() : res;
}

std::set<CanonicalDiagram> sigma_class_neighbors(const CanonicalDiagram& c) {
  const Diagram& d = c.diagram();
  std::set<CanonicalDiagram> out;
  for (int pos : minimal_front_positions(d)) {
    std::vector<LefschetzPair> fronted;
    fronted.reserve(d.pairs().size());
    fronted.push_back(d.pair(pos));
    for (int i = 1; i <= d.points(); ++i)
      if (i != pos) fronted.push_back(d.pair(i));
    Diagram member(d.ell(), std::move(fronted));
    if (d.validated()) member = member.as_validated();
    out.insert(canonical_form(sigma(member)));
  }
  return out;
}

namespace {

void check_pattern_params(int c, int i, int t) {
  if (t < 2) throw std::invalid_argument("pattern requires t >= 2");
  if (i < 0 || i > t) throw std::invalid_argument("pattern requires 0 <= i <= t");
  if (c < 1) throw std::invalid_argument("pattern requires c >= 1");
}

LefschetzPair offset(int c, int a, int b) {
  return {std::uint8_t(c + a), std::uint8_t(c + b)};
}

}  // namespace

std::vector<LefschetzPair> tru_pattern(int c, int i, int t) {
  check_pattern_params(c, i, t);
  std::vector<LefschetzPair> out;
  out.reserve(std::size_t(t) + 1);
  for (int k = i; k <= t - 1; ++k) out.push_back(offset(c, k, k + 1));
  out.push_back(offset(c, 0, t - 1));
  for (int k = t - 1; k >= t - i; --k) out.push_back(offset(c, k, k + 1));
  return out;
}

std::vector<LefschetzPair> trd_pattern(int c, int i, int t) {
  check_pattern_params(c, i, t);
  std::vector<LefschetzPair> out;
  out.reserve(std::size_t(t) + 1);
  for (int k = i - 1; k >= 0; --k) out.push_back(offset(c, k, k + 1));
  out.push_back(offset(c, 1, t));
  for (int k = 0; k <= t - 1 - i; ++k) out.push_back(offset(c, k, k + 1));
  return out;
}

namespace {

// All injections of the pattern into positions of d with matching pair
// values such that the pieces can be pulled together in pattern order.
void collect_matches(const Diagram& d, const std::vector<LefschetzPair>& pattern,
                     const std::map<LefschetzPair, std::vector<int>>& by_value,
                     std::vector<int>& chosen, std::vector<DeltaMove>& out, int c, int i, int t,
                     bool from_up) {
  const std::size_t slot = chosen.size();
  if (slot == pattern.size()) {
    if (can_extract_in_order(d, chosen)) out.push_back({c, i, t, from_up, chosen});
    return;
  }
  auto it = by_value.find(pattern[slot]);
  if (it == by_value.end()) return;
  for (int pos : it->second) {
    if (std::find(chosen.begin(), chosen.end(), pos) != chosen.end()) continue;
    chosen.push_back(pos);
    collect_matches(d, pattern, by_value, chosen, out, c, i, t, from_up);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<DeltaMove> delta_moves(const CanonicalDiagram& cd, DeltaPolicy policy,
                                   DeltaEnds ends) {
  const Diagram& d = cd.diagram();
  const int ell = d.ell();
  const int p = d.points();

  std::map<LefschetzPair, std::vector<int>> by_value;
  std::map<int, int> mult_counts;
  for (int pos = 1; pos <= p; ++pos) {
    by_value[d.pair(pos)].push_back(pos);
    mult_counts[d.pair(pos).multiplicity()] += 1;
  }

  std::vector<DeltaMove> out;
  const int doubles = mult_counts.count(2) ? mult_counts.at(2) : 0;
  for (const auto& [t, count] : mult_counts) {
    // A pattern consumes one point of multiplicity t and t simple points.
    if (t == 2 ? doubles < 3 : doubles < t) continue;
    for (int c = 1; c + t <= ell; ++c) {
      const int i_lo = ends == DeltaEnds::All ? 0 : 1;
      const int i_hi = ends == DeltaEnds::All ? t : t - 1;
      for (int i = i_lo; i <= i_hi; ++i) {
        for (bool from_up : {true, false}) {
          const auto pattern = from_up ? tru_pattern(c, i, t) : trd_pattern(c, i, t);
          if (policy == DeltaPolicy::Equiv) {
            std::vector<int> chosen;
            chosen.reserve(pattern.size());
            collect_matches(d, pattern, by_value, chosen, out, c, i, t, from_up);
          } else {
            for (int start = 1; start + int(pattern.size()) - 1 <= p; ++start) {
              bool match = true;
              for (std::size_t k = 0; k < pattern.size() && match; ++k)
                if (d.pair(start + int(k)) != pattern[k]) match = false;
              if (!match) continue;
              std::vector<int> positions(pattern.size());
              for (std::size_t k = 0; k < pattern.size(); ++k) positions[k] = start + int(k);
              out.push_back({c, i, t, from_up, std::move(positions)});
            }
          }
        }
      }
    }
  }
  // Distinct (c,i,t) parameters can select the same positions with the
  // same replacement; keep one move per observable rewrite.
  std::set<std::pair<std::vector<int>, std::vector<LefschetzPair>>> seen;
  std::vector<DeltaMove> unique_moves;
  for (auto& mv : out) {
    std::vector<int> sorted_pos = mv.positions;
    std::sort(sorted_pos.begin(), sorted_pos.end());
    auto replacement = mv.from_up ? trd_pattern(mv.c, mv.i, mv.t)
                                  : tru_pattern(mv.c, mv.i, mv.t);
    if (seen.emplace(std::move(sorted_pos), std::move(replacement)).second)
      unique_moves.push_back(std::move(mv));
  }
  return unique_moves;
}

CanonicalDiagram apply_delta(const CanonicalDiagram& cd, const DeltaMove& move) {
  const Diagram& d = cd.diagram();
  const auto pattern = move.from_up ? tru_pattern(move.c, move.i, move.t)
                                    : trd_pattern(move.c, move.i, move.t);
  const auto replacement = move.from_up ? trd_pattern(move.c, move.i, move.t)
                                        : tru_pattern(move.c, move.i, move.t);
  if (move.positions.size() != pattern.size())
    throw std::invalid_argument("delta move does not fit its pattern");
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const int pos = move.positions[k];
    if (pos < 1 || pos > d.points() || d.pair(pos) != pattern[k])
      throw std::invalid_argument("stale delta move");
  }
  if (!can_extract_in_order(d, move.positions))
    throw std::invalid_argument("stale delta move: pieces no longer extractable");

  const auto [prefix, suffix] = extraction_split(d, move.positions);
  std::vector<LefschetzPair> pairs;
  pairs.reserve(d.pairs().size());
  for (int pos : prefix) pairs.push_back(d.pair(pos));
  pairs.insert(pairs.end(), replacement.begin(), replacement.end());
  for (int pos : suffix) pairs.push_back(d.pair(pos));
  Diagram res(d.ell(), std::move(pairs));
  if (d.validated()) res = res.as_validated();
  return canonical_form(res);
}

}  // namespace wiring
