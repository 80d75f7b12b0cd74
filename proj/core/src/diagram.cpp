#include "wiring/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wiring {

Permutation Permutation::identity(int ell) {
  std::vector<std::uint8_t> img(std::size_t(ell) + 1);
  for (int i = 0; i <= ell; ++i) img[std::size_t(i)] = std::uint8_t(i);
  return Permutation(std::move(img));
}

Permutation Permutation::reversal(int ell) {
  std::vector<std::uint8_t> img(std::size_t(ell) + 1);
  img[0] = 0;
  for (int i = 1; i <= ell; ++i) img[std::size_t(i)] = std::uint8_t(ell + 1 - i);
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  const int n = int(img_.size()) - 1;
  if (n < 0) throw std::invalid_argument("permutation: empty image table");
  std::vector<bool> seen(std::size_t(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    const int v = img_[std::size_t(i)];
    if (v < 1 || v > n || seen[std::size_t(v)])
      throw std::invalid_argument("permutation: image table is not a bijection");
    seen[std::size_t(v)] = true;
  }
  img_[0] = 0;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (int i = 1; i <= ell(); ++i) inv[img_[std::size_t(i)]] = std::uint8_t(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& q) const {
  if (ell() != q.ell()) throw std::invalid_argument("permutation: size mismatch");
  std::vector<std::uint8_t> r(img_.size());
  for (int i = 1; i <= ell(); ++i) r[std::size_t(i)] = img_[q.img_[std::size_t(i)]];
  return Permutation(std::move(r));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= ell(); ++i)
    if (img_[std::size_t(i)] != i) return false;
  return true;
}

Signature::Signature(std::map<int, int> counts) : counts_(std::move(counts)) {
  for (const auto& [k, n] : counts_) {
    if (k < 2) throw std::invalid_argument("signature: multiplicity below 2");
    if (n < 1) throw std::invalid_argument("signature: count below 1");
  }
}

Signature Signature::parse(std::string_view text) {
  std::map<int, int> counts;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(std::uint8_t(text[i]))) ++i; };
  auto read_int = [&](const char* what) {
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(std::uint8_t(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError(std::string("signature: ") + what + " too large", start);
      ++i;
    }
    if (i == start) throw ParseError(std::string("signature: expected ") + what, i);
    return int(v);
  };
  skip_ws();
  int last_k = 0;
  while (i < text.size()) {
    const int k = read_int("multiplicity");
    if (i >= text.size() || text[i] != '^') throw ParseError("signature: expected '^'", i);
    ++i;
    const int n = read_int("count");
    if (k <= last_k) throw ParseError("signature: multiplicities must be ascending", i);
    last_k = k;
    counts[k] = n;
    skip_ws();
  }
  return Signature(std::move(counts));
}

int Signature::points() const {
  int p = 0;
  for (const auto& [k, n] : counts_) p += n;
  return p;
}

std::string Signature::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, n] : counts_) {
    if (!first) os << ' ';
    os << k << '^' << n;
    first = false;
  }
  return os.str();
}

Diagram::Diagram(int ell, std::vector<LefschetzPair> pairs)
    : ell_(ell), pairs_(std::move(pairs)) {
  if (ell_ < 1) throw std::invalid_argument("diagram: wire count must be >= 1");
  for (const auto& pr : pairs_) {
    if (pr.a < 1 || pr.a >= pr.b)
      throw std::invalid_argument("diagram: pair must satisfy 1 <= a < b");
    if (pr.b > ell_) throw std::invalid_argument("diagram: pair index exceeds wire count");
  }
}

Diagram Diagram::as_validated() const {
  Diagram d(*this);
  d.validated_ = true;
  return d;
}

Diagram parse_diagram(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(std::uint8_t(text[i]))) ++i; };
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c)
      throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  auto read_int = [&]() {
    skip_ws();
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(std::uint8_t(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 10000) throw ParseError("number too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a number", i);
    return int(v);
  };

  skip_ws();
  expect('l');
  skip_ws();
  expect('=');
  const int ell = read_int();
  if (ell < 1) throw ParseError("wire count must be >= 1", i);
  skip_ws();
  expect(':');

  std::vector<LefschetzPair> pairs;
  skip_ws();
  while (i < text.size()) {
    expect('(');
    const int a = read_int();
    skip_ws();
    expect(',');
    const int b = read_int();
    skip_ws();
    expect(')');
    if (a >= b) throw ParseError("pair must satisfy a < b", i);
    if (b > ell) throw ParseError("pair index exceeds declared wire count", i);
    pairs.push_back({std::uint8_t(a), std::uint8_t(b)});
    skip_ws();
  }
  return Diagram(ell, std::move(pairs));
}

std::string to_text(const Diagram& d) {
  std::ostringstream os;
  os << "l=" << d.ell() << ':';
  if (!d.pairs().empty()) os << ' ';
  for (const auto& pr : d.pairs()) os << '(' << int(pr.a) << ',' << int(pr.b) << ')';
  return os.str();
}

Permutation pair_permutation(LefschetzPair pair, int ell) {
  if (pair.b > ell) throw std::invalid_argument("pair exceeds wire count");
  std::vector<std::uint8_t> img(std::size_t(ell) + 1);
  for (int t = 0; t <= ell; ++t) img[std::size_t(t)] = std::uint8_t(t);
  for (int t = pair.a; t <= pair.b; ++t) img[std::size_t(t)] = std::uint8_t(pair.a + pair.b - t);
  return Permutation(std::move(img));
}

Signature signature_of(const Diagram& d) {
  std::map<int, int> counts;
  for (const auto& pr : d.pairs()) counts[pr.multiplicity()] += 1;
  return Signature(std::move(counts));
}

bool check_suip(const Signature& s, int ell) {
  long long total = 0;
  for (const auto& [k, n] : s.counts()) total += (long long)n * k * (k - 1) / 2;
  return total == (long long)ell * (ell - 1) / 2;
}

namespace {

// Sweep state: slot[t] = global line currently at local slot t.
struct Sweep {
  std::vector<std::uint8_t> slot;
  // crossed[u][v] for u < v, global labels.
  std::vector<std::vector<bool>> crossed;

  explicit Sweep(int ell)
      : slot(std::size_t(ell) + 1),
        crossed(std::size_t(ell) + 1, std::vector<bool>(std::size_t(ell) + 1, false)) {
    for (int t = 0; t <= ell; ++t) slot[std::size_t(t)] = std::uint8_t(t);
  }

  bool is_crossed(int u, int v) const {
    if (u > v) std::swap(u, v);
    return crossed[std::size_t(u)][std::size_t(v)];
  }
  void mark(int u, int v) {
    if (u > v) std::swap(u, v);
    crossed[std::size_t(u)][std::size_t(v)] = true;
  }
  void reverse_window(LefschetzPair pr) {
    std::reverse(slot.begin() + pr.a, slot.begin() + pr.b + 1);
  }
};

}  // namespace

ValidationResult validate_uip(const Diagram& d) {
  const int ell = d.ell();
  Sweep sw(ell);
  for (int i = 1; i <= d.points(); ++i) {
    const LefschetzPair pr = d.pair(i);
    for (int s = pr.a; s <= pr.b; ++s) {
      for (int t = s + 1; t <= pr.b; ++t) {
        const int u = sw.slot[std::size_t(s)], v = sw.slot[std::size_t(t)];
        if (sw.is_crossed(u, v)) {
          ValidationIssue issue{ValidationIssue::Kind::CrossedTwice, i, std::min(u, v),
                                std::max(u, v),
                                "lines " + std::to_string(std::min(u, v)) + " and " +
                                    std::to_string(std::max(u, v)) + " cross again at point " +
                                    std::to_string(i)};
          return {false, issue, std::nullopt};
        }
        sw.mark(u, v);
      }
    }
    sw.reverse_window(pr);
  }
  for (int u = 1; u <= ell; ++u) {
    for (int v = u + 1; v <= ell; ++v) {
      if (!sw.is_crossed(u, v)) {
        ValidationIssue issue{ValidationIssue::Kind::NeverCrossed, 0, u, v,
                              "lines " + std::to_string(u) + " and " + std::to_string(v) +
                                  " never cross"};
        return {false, issue, std::nullopt};
      }
    }
  }
  // Consistency check: the sweep criterion and the composed-permutation
  // criterion must agree (the composed pair permutation equals J).
  if (!(wire_order_after(d, d.points()) == Permutation::reversal(ell))) {
    ValidationIssue issue{ValidationIssue::Kind::ProductNotReversal, 0, 0, 0,
                          "composed pair permutation is not the reversal"};
    return {false, issue, std::nullopt};
  }
  return {true, std::nullopt, d.as_validated()};
}

Diagram validated_or_throw(const Diagram& d) {
  if (d.validated()) return d;
  auto res = validate_uip(d);
  if (!res.ok) throw std::invalid_argument("diagram fails unique intersection property: " +
                                           res.issue->message);
  return *res.diagram;
}

Permutation wire_order_after(const Diagram& d, int k) {
  if (k < 0 || k > d.points()) throw std::invalid_argument("prefix length out of range");
  const int ell = d.ell();
  std::vector<std::uint8_t> slot(std::size_t(ell) + 1);
  for (int t = 0; t <= ell; ++t) slot[std::size_t(t)] = std::uint8_t(t);
  for (int i = 1; i <= k; ++i) {
    const LefschetzPair pr = d.pair(i);
    std::reverse(slot.begin() + pr.a, slot.begin() + pr.b + 1);
  }
  // slot is the slot->line map; the line->slot map is its inverse.
  return Permutation(std::move(slot)).inverse();
}

std::vector<std::vector<std::uint8_t>> crossing_points(const Diagram& d) {
  if (!d.validated()) throw std::invalid_argument("crossing_points requires a validated diagram");
  const int ell = d.ell();
  std::vector<std::uint8_t> slot(std::size_t(ell) + 1);
  for (int t = 0; t <= ell; ++t) slot[std::size_t(t)] = std::uint8_t(t);
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(std::size_t(d.points()));
  for (int i = 1; i <= d.points(); ++i) {
    const LefschetzPair pr = d.pair(i);
    std::vector<std::uint8_t> lines(slot.begin() + pr.a, slot.begin() + pr.b + 1);
    std::sort(lines.begin(), lines.end());
    out.push_back(std::move(lines));
    std::reverse(slot.begin() + pr.a, slot.begin() + pr.b + 1);
  }
  return out;
}

std::string render_ascii(const Diagram& d) {
  if (!d.validated()) throw std::invalid_argument("render_ascii requires a validated diagram");
  const int ell = d.ell();
  auto digit = [](int v) -> char {
    return v < 10 ? char('0' + v) : char('a' + v - 10);
  };
  // occupant[j][s] = line at slot s after j points.
  std::vector<std::vector<std::uint8_t>> occ(std::size_t(d.points()) + 1,
                                             std::vector<std::uint8_t>(std::size_t(ell) + 1));
  for (int t = 0; t <= ell; ++t) occ[0][std::size_t(t)] = std::uint8_t(t);
  for (int j = 1; j <= d.points(); ++j) {
    occ[std::size_t(j)] = occ[std::size_t(j - 1)];
    const LefschetzPair pr = d.pair(j);
    std::reverse(occ[std::size_t(j)].begin() + pr.a, occ[std::size_t(j)].begin() + pr.b + 1);
  }
  std::string out;
  for (int s = ell; s >= 1; --s) {
    std::string row;
    row += digit(occ[0][std::size_t(s)]);
    for (int j = 1; j <= d.points(); ++j) {
      const LefschetzPair pr = d.pair(j);
      const bool in_window = pr.a <= s && s <= pr.b;
      row += in_window ? "--X--" : "-----";
      row += digit(occ[std::size_t(j)][std::size_t(s)]);
    }
    out += row;
    out += '\n';
  }
  return out;
}

std::vector<std::uint8_t> pack(const Diagram& d) {
  if (d.ell() > 15) throw std::invalid_argument("packed encoding requires ell <= 15");
  std::vector<std::uint8_t> bytes;
  bytes.reserve(std::size_t(d.points()));
  for (const auto& pr : d.pairs()) bytes.push_back(std::uint8_t((pr.a << 4) | pr.b));
  return bytes;
}

Diagram unpack(int ell, std::span<const std::uint8_t> bytes, bool validated) {
  std::vector<LefschetzPair> pairs;
  pairs.reserve(bytes.size());
  for (std::uint8_t byte : bytes)
    pairs.push_back({std::uint8_t(byte >> 4), std::uint8_t(byte & 0xF)});
  Diagram d(ell, std::move(pairs));
  return validated ? d.as_validated() : d;
}

}  // namespace wiring
