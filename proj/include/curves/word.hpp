#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace curves {

// Alphabet symbol: a 1-based generator index plus a direction. "a3" is
// Letter(3, +1) and its inverse "A3" is Letter(3, -1). Letters compare as
// a1 < A1 < a2 < A2 < ...; canonical rotations of cyclic words use this
// order.
struct Letter {
  int gen = 0;
  int sign = 0;

  Letter() = default;
  Letter(int g, int s);

  Letter inverse() const { return Letter{gen, -sign}; }
  bool positive() const { return sign > 0; }

  // Dense index compatible with operator<: a1 -> 0, A1 -> 1, a2 -> 2, ...
  int key() const { return 2 * (gen - 1) + (sign < 0 ? 1 : 0); }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    return a.key() <=> b.key();
  }
};

std::string to_string(const Letter& l);

// Freely reduced word. The constructor reduces its input; every operation
// below preserves the invariant.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  int max_generator() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word invert(const Word& w);
Word multiply(const Word& a, const Word& b);
Word multiply(const Word& a, const Word& b, const Word& c);
// g x g^-1
Word conjugate(const Word& g, const Word& x);
Word power(const Word& w, int n);

// Cyclically reduced cyclic word stored in its canonical rotation (the
// lexicographically least one). Equality is sequence equality, so two
// Words are conjugate iff their CyclicWords are equal.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& w);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Cyclic indexing; any non-negative index works.
  const Letter& at(std::size_t i) const { return letters_[i % letters_.size()]; }

  // The rotation starting at position `start`, read as a based word.
  Word based_word(std::size_t start) const;

  // Letters i, i+1, ..., j-1 (cyclically). Requires i != j; the result is a
  // nonempty freely reduced word of length (j - i) mod size().
  Word segment(std::size_t i, std::size_t j) const;

  // Smallest period p (p divides size(), rotating by p is the identity).
  std::size_t period() const;
  bool primitive() const { return !empty() && period() == size(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

std::string to_string(const Word& w);
std::string to_string(const CyclicWord& w);

// Word grammar: tokens a<k> / A<k> separated by '.' or whitespace, e.g.
// "a3.a1.A2" or "a3 a1 A2". "1" (alone) and "" denote the empty word.
Word parse_word(const std::string& text);

}  // namespace curves
