#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wiring/diagram.hpp"

namespace wiring {

/// Signed generator index: +g or -g for the generator's inverse, g >= 1.
using Letter = std::int16_t;

/// Freely reduced word over the generators. Adjacent cancelling letters
/// are removed eagerly on every mutation.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  static Word generator(int g) { return Word({Letter(g)}); }

  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }

  void push(Letter l);
  void append(const Word& w);
  void append_inverse(const Word& w);

  Word inverse() const;
  Word operator*(const Word& rhs) const;

  /// Strips matching conjugating ends: u r u^{-1} -> r.
  Word cyclically_reduced() const;

  /// Exponent sum of generator g.
  int exponent_sum(int g) const;

  /// Letters with |letter| == g removed, then freely reduced.
  Word without_generator(int g) const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> ls_;
};

/// Canonical relator representative: the lexicographically least rotation
/// of the cyclic reduction of r and of its inverse. Two words are equal as
/// cyclic relators iff their normalizations are equal.
Word normalize_relator(const Word& r);

/// Half-twist orientation. CounterClockwise is the convention pinned by
/// the relation test vectors; Clockwise is its mirror, kept selectable for
/// the sensitivity suite.
enum class Orientation { CounterClockwise, Clockwise };

/// Free-group automorphism given by generator images.
class BraidAuto {
public:
  BraidAuto() = default;
  static BraidAuto identity(int ngens);

  BraidAuto(int ngens, std::vector<Word> images);

  int ngens() const { return ngens_; }
  const Word& image(int g) const { return images_[std::size_t(g)]; }

  Word apply(const Word& w) const;

  /// (a * b).apply(w) == a.apply(b.apply(w)): b substitutes first.
  BraidAuto operator*(const BraidAuto& rhs) const;

  /// Every image must be a conjugate of a single generator; returns the
  /// induced permutation on generator conjugacy classes.
  Permutation induced_permutation() const;

  friend bool operator==(const BraidAuto&, const BraidAuto&) = default;

private:
  int ngens_ = 0;
  std::vector<Word> images_;  // index 0 unused
};

/// Artin generator as a free-group automorphism, 1 <= i < ell. The
/// positive twist maps G_i -> G_{i+1}, G_{i+1} -> G_{i+1} G_i G_{i+1}^-1
/// (counterclockwise); the negative twist is its inverse. Both fix the
/// boundary word G_ell ... G_1.
BraidAuto elementary_auto(int i, int sign, int ell,
                          Orientation orient = Orientation::CounterClockwise);

/// The region half-twist on [a,b]: the product
/// (s_a .. s_{b-1})(s_a .. s_{b-2}) ... (s_a), rightmost factor applied
/// first. Induces pair_permutation(pair) on generator classes.
BraidAuto halftwist_auto(LefschetzPair pair, int ell,
                         Orientation orient = Orientation::CounterClockwise);

}  // namespace wiring
