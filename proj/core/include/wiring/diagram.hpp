#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wiring {

/// One intersection point: the smallest and largest local wire indices
/// that meet there. Always 1 <= a < b <= ell for the ambient wire count.
struct LefschetzPair {
  std::uint8_t a{0};
  std::uint8_t b{0};

  int multiplicity() const { return int(b) - int(a) + 1; }
  friend auto operator<=>(const LefschetzPair&, const LefschetzPair&) = default;
};

/// Bijection on {1..ell}. Entry 0 of the image table is unused so that
/// indices match the 1-based convention used everywhere else.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int ell);
  /// J(i) = ell + 1 - i.
  static Permutation reversal(int ell);

  explicit Permutation(std::vector<std::uint8_t> images);

  int ell() const { return int(img_.size()) - 1; }
  int operator()(int i) const { return img_[std::size_t(i)]; }

  Permutation inverse() const;
  /// (p.compose(q))(i) = p(q(i)).
  Permutation compose(const Permutation& q) const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint8_t> img_;  // img_[0] == 0, unused
};

/// Multiset {multiplicity k -> number of points n_k}, n_k >= 1.
class Signature {
public:
  Signature() = default;
  explicit Signature(std::map<int, int> counts);

  /// Parses "2^13 3^3 4^1" (k ascending, n_k >= 1).
  static Signature parse(std::string_view text);

  const std::map<int, int>& counts() const { return counts_; }
  int points() const;
  std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;

private:
  std::map<int, int> counts_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), pos(position) {}
  std::size_t pos;
};

/// An ordered list of Lefschetz pairs with its wire count. Immutable after
/// construction; the validated flag is only set by validate_uip.
class Diagram {
public:
  Diagram(int ell, std::vector<LefschetzPair> pairs);

  int ell() const { return ell_; }
  int points() const { return int(pairs_.size()); }
  const std::vector<LefschetzPair>& pairs() const { return pairs_; }
  const LefschetzPair& pair(int i) const { return pairs_[std::size_t(i - 1)]; }
  bool validated() const { return validated_; }

  /// Same pairs, validated flag set. Used by validate_uip on acceptance.
  Diagram as_validated() const;

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.ell_ == y.ell_ && x.pairs_ == y.pairs_;
  }
  friend std::strong_ordering operator<=>(const Diagram& x, const Diagram& y) {
    if (auto c = x.ell_ <=> y.ell_; c != 0) return c;
    return x.pairs_ <=> y.pairs_;
  }

private:
  int ell_;
  std::vector<LefschetzPair> pairs_;
  bool validated_ = false;
};

/// Parses "l=<ell>: (a1,b1)(a2,b2)...". Whitespace between tokens is
/// ignored. Throws ParseError with the offending position.
Diagram parse_diagram(std::string_view text);
std::string to_text(const Diagram& d);

/// Involution reversing [a,b]: t -> a+b-t, identity elsewhere.
Permutation pair_permutation(LefschetzPair pair, int ell);

Signature signature_of(const Diagram& d);

/// Eq. counting check: sum of n_k * C(k,2) must equal C(ell,2).
bool check_suip(const Signature& s, int ell);

struct ValidationIssue {
  enum class Kind { CrossedTwice, NeverCrossed, ProductNotReversal };
  Kind kind;
  int point = 0;    // 1-based point index where detected (0 if global)
  int line_u = 0;   // global line labels involved
  int line_v = 0;
  std::string message;
};

struct ValidationResult {
  bool ok = false;
  std::optional<ValidationIssue> issue;
  std::optional<Diagram> diagram;  // validated copy on success

  explicit operator bool() const { return ok; }
};

/// Left-to-right sweep tracking the global line in every local slot: every
/// unordered pair of lines must cross exactly once. On acceptance the
/// composed pair permutation is additionally asserted to equal J; the two
/// criteria must agree.
ValidationResult validate_uip(const Diagram& d);

/// validate_uip that throws std::invalid_argument on failure.
Diagram validated_or_throw(const Diagram& d);

/// Permutation mapping initial line labels to local slots after the first
/// k points. k = 0 gives the identity; k = p gives J on valid diagrams.
Permutation wire_order_after(const Diagram& d, int k);

/// Point i with pair <a,b>: the global lines occupying slots a..b just
/// before the switch. Requires a validated diagram.
std::vector<std::vector<std::uint8_t>> crossing_points(const Diagram& d);

/// Deterministic ASCII picture of a validated diagram. Rows are local
/// slots (top row = slot ell); each point column marks its window with X
/// and prints the line occupying each slot after the switch.
std::string render_ascii(const Diagram& d);

/// Packed encoding, one byte per pair (a in the high nibble), ell <= 15.
std::vector<std::uint8_t> pack(const Diagram& d);
Diagram unpack(int ell, std::span<const std::uint8_t> bytes, bool validated = false);

}  // namespace wiring
