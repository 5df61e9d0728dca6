#pragma once

#include <optional>
#include <vector>

#include "curves/word.hpp"

namespace curves {

// w = conjugator * core.based_word(0) * conjugator^-1.
struct CyclicDecomposition {
  CyclicWord core;
  Word conjugator;
};

CyclicDecomposition cyclic_reduce(const Word& w);

// Exponent sums per generator, length `rank`. Errors if the word uses a
// generator beyond `rank`.
std::vector<int> abelianize(const Word& w, int rank);

// A conjugator d with d x d^-1 == y, or nullopt. The result is verified
// before it is returned.
std::optional<Word> are_conjugate(const Word& x, const Word& y);

struct RootPower {
  Word root;
  int exponent = 0;  // root^exponent == input, exponent maximal (>= 1)
};

// Errors on the trivial word.
RootPower primitive_root(const Word& x);

// Smallest |k| with r^k y r^-k == y2, scanning k = 0, 1, -1, 2, -2, ... up
// to |k| <= |y| + |y2| + 1. Beyond that bound conjugation by a cyclically
// reduced r only grows the word, so no further solutions exist.
std::optional<int> power_conjugation_search(const Word& r, const Word& y, const Word& y2);

// A single g with g x g^-1 == x2 and g y g^-1 == y2, or nullopt.
//
// After an exponent-sum filter, any candidate factors as d * m^k where
// d x d^-1 == x2 and m is the primitive root of x (the centralizer of x is
// <m>), so the search reduces to power_conjugation_search on the second
// equation. Identity-element inputs collapse to plain conjugacy checks.
// The returned conjugator is verified against both equations.
std::optional<Word> simultaneous_conjugacy(const Word& x, const Word& y, const Word& x2,
                                           const Word& y2);

}  // namespace curves
