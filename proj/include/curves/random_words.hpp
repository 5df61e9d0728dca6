#pragma once

#include <cstdint>

#include "curves/word.hpp"

namespace curves {

// splitmix64. Hand-rolled so streams are identical across platforms and
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, n). Pre: n > 0.
  std::uint32_t below(std::uint32_t n);

 private:
  std::uint64_t state_;
};

// Freely reduced word of exactly len letters over generators 1..rank.
Word random_reduced_word(Rng& rng, int rank, int len);

// Cyclically reduced word of exactly len letters. Pre: len >= 1, and the
// wrap constraint is satisfiable (always, for rank >= 1).
CyclicWord random_cyclically_reduced_word(Rng& rng, int rank, int len);

// Cyclically reduced and primitive (not a proper power). Resamples at the
// same length until primitive. Pre: a primitive word of this length exists
// (rank >= 2, or rank == 1 with len == 1).
CyclicWord random_primitive_word(Rng& rng, int rank, int len);

}  // namespace curves
