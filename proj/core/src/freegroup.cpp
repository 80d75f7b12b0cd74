#include "wiring/freegroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wiring {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) push(l);
}

void Word::push(Letter l) {
  if (l == 0) throw std::invalid_argument("word letter must be nonzero");
  if (!ls_.empty() && ls_.back() == -l)
    ls_.pop_back();
  else
    ls_.push_back(l);
}

void Word::append(const Word& w) {
  for (Letter l : w.ls_) push(l);
}

void Word::append_inverse(const Word& w) {
  for (auto it = w.ls_.rbegin(); it != w.ls_.rend(); ++it) push(Letter(-*it));
}

Word Word::inverse() const {
  Word r;
  r.append_inverse(*this);
  return r;
}

Word Word::operator*(const Word& rhs) const {
  Word r = *this;
  r.append(rhs);
  return r;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0, hi = ls_.size();
  while (hi - lo >= 2 && ls_[lo] == -ls_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word r;
  r.ls_.assign(ls_.begin() + long(lo), ls_.begin() + long(hi));
  return r;
}

int Word::exponent_sum(int g) const {
  int s = 0;
  for (Letter l : ls_) {
    if (l == g) ++s;
    if (l == -g) --s;
  }
  return s;
}

Word Word::without_generator(int g) const {
  Word r;
  for (Letter l : ls_)
    if (std::abs(int(l)) != g) r.push(l);
  return r;
}

std::string Word::str() const {
  std::ostringstream os;
  bool first = true;
  for (Letter l : ls_) {
    if (!first) os << ' ';
    os << int(l);
    first = false;
  }
  return os.str();
}

Word normalize_relator(const Word& r) {
  const Word c = r.cyclically_reduced();
  if (c.empty()) return c;
  const auto pick_least = [](const Word& w, Word& best, bool& have) {
    const auto& ls = w.letters();
    const std::size_t n = ls.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
      Word rot;
      for (std::size_t k = 0; k < n; ++k) rot.push(ls[(shift + k) % n]);
      if (rot.size() != n) continue;  // rotation of a non-cyclically-reduced word
      if (!have || rot < best) {
        best = std::move(rot);
        have = true;
      }
    }
  };
  Word best;
  bool have = false;
  pick_least(c, best, have);
  pick_least(c.inverse(), best, have);
  return best;
}

BraidAuto BraidAuto::identity(int ngens) {
  std::vector<Word> images(std::size_t(ngens) + 1);
  for (int g = 1; g <= ngens; ++g) images[std::size_t(g)] = Word::generator(g);
  return BraidAuto(ngens, std::move(images));
}

BraidAuto::BraidAuto(int ngens, std::vector<Word> images)
    : ngens_(ngens), images_(std::move(images)) {
  if (int(images_.size()) != ngens_ + 1)
    throw std::invalid_argument("braid automorphism: wrong image count");
}

Word BraidAuto::apply(const Word& w) const {
  Word out;
  for (Letter l : w.letters()) {
    const int g = std::abs(int(l));
    if (g > ngens_) throw std::invalid_argument("letter outside generator range");
    if (l > 0)
      out.append(images_[std::size_t(g)]);
    else
      out.append_inverse(images_[std::size_t(g)]);
  }
  return out;
}

BraidAuto BraidAuto::operator*(const BraidAuto& rhs) const {
  if (ngens_ != rhs.ngens_) throw std::invalid_argument("braid automorphism: size mismatch");
  std::vector<Word> images(std::size_t(ngens_) + 1);
  for (int g = 1; g <= ngens_; ++g) images[std::size_t(g)] = apply(rhs.images_[std::size_t(g)]);
  return BraidAuto(ngens_, std::move(images));
}

Permutation BraidAuto::induced_permutation() const {
  std::vector<std::uint8_t> img(std::size_t(ngens_) + 1, 0);
  for (int g = 1; g <= ngens_; ++g) {
    const Word& w = images_[std::size_t(g)].cyclically_reduced();
    if (w.size() != 1 || w.letters()[0] < 0)
      throw std::invalid_argument("image is not a conjugate of a generator");
    img[std::size_t(g)] = std::uint8_t(w.letters()[0]);
  }
  return Permutation(std::move(img));
}

BraidAuto elementary_auto(int i, int sign, int ell, Orientation orient) {
  if (i < 1 || i >= ell) throw std::invalid_argument("elementary twist index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
  if (orient == Orientation::Clockwise) sign = -sign;
  BraidAuto a = BraidAuto::identity(ell);
  std::vector<Word> images(std::size_t(ell) + 1);
  for (int g = 1; g <= ell; ++g) images[std::size_t(g)] = Word::generator(g);
  if (sign > 0) {
    images[std::size_t(i)] = Word::generator(i + 1);
    images[std::size_t(i + 1)] = Word{Letter(i + 1), Letter(i), Letter(-(i + 1))};
  } else {
    images[std::size_t(i)] = Word{Letter(-i), Letter(i + 1), Letter(i)};
    images[std::size_t(i + 1)] = Word::generator(i);
  }
  return BraidAuto(ell, std::move(images));
}

BraidAuto halftwist_auto(LefschetzPair pair, int ell, Orientation orient) {
  if (pair.b > ell) throw std::invalid_argument("pair exceeds wire count");
  BraidAuto acc = BraidAuto::identity(ell);
  // Product (s_a..s_{b-1})(s_a..s_{b-2})...(s_a); with our composition the
  // rightmost factor substitutes first, so accumulate left to right.
  for (int top = pair.b - 1; top >= pair.a; --top)
    for (int i = pair.a; i <= top; ++i) acc = acc * elementary_auto(i, +1, ell, orient);
  return acc;
}

}  // namespace wiring
