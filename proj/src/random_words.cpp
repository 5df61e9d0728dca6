#include "curves/random_words.hpp"

#include <vector>

#include "curves/errors.hpp"

namespace curves {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint32_t Rng::below(std::uint32_t n) {
  // Rejection keeps the draw unbiased; the high bits of splitmix64 are fine.
  std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= bound);
  return static_cast<std::uint32_t>(v % n);
}

namespace {

Letter letter_from_index(std::uint32_t idx) {
  return Letter(static_cast<int>(idx / 2) + 1, idx % 2 == 0 ? +1 : -1);
}

// Uniform letter distinct from each excluded key.
Letter draw_excluding(Rng& rng, int rank, const std::vector<int>& excluded) {
  std::vector<std::uint32_t> allowed;
  for (std::uint32_t idx = 0; idx < static_cast<std::uint32_t>(2 * rank); ++idx) {
    bool ok = true;
    for (int k : excluded) {
      if (static_cast<int>(idx) == k) ok = false;
    }
    if (ok) allowed.push_back(idx);
  }
  if (allowed.empty()) throw InternalError("no letter satisfies the reduction constraints");
  return letter_from_index(allowed[rng.below(static_cast<std::uint32_t>(allowed.size()))]);
}

}  // namespace

Word random_reduced_word(Rng& rng, int rank, int len) {
  if (rank < 1 || len < 0) throw DomainError("random_reduced_word: bad parameters");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    std::vector<int> excluded;
    if (!out.empty()) excluded.push_back(out.back().inverse().key());
    out.push_back(draw_excluding(rng, rank, excluded));
  }
  return Word(std::move(out));
}

CyclicWord random_cyclically_reduced_word(Rng& rng, int rank, int len) {
  if (rank < 1 || len < 1) throw DomainError("random_cyclically_reduced_word: bad parameters");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    std::vector<int> excluded;
    if (!out.empty()) excluded.push_back(out.back().inverse().key());
    if (i == len - 1 && len > 1) excluded.push_back(out.front().inverse().key());
    out.push_back(draw_excluding(rng, rank, excluded));
  }
  return CyclicWord(Word(std::move(out)));
}

CyclicWord random_primitive_word(Rng& rng, int rank, int len) {
  if (rank < 2 && len > 1) {
    throw DomainError("random_primitive_word: rank 1 has no primitive word longer than 1");
  }
  for (int attempt = 0; attempt < 10000; ++attempt) {
    CyclicWord w = random_cyclically_reduced_word(rng, rank, len);
    if (w.primitive()) return w;
  }
  throw InternalError("random_primitive_word: resampling cap reached");
}

}  // namespace curves
