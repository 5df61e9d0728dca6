#include "curves/freegroup.hpp"

#include <algorithm>
#include <cstdlib>

#include "curves/errors.hpp"

namespace curves {

CyclicDecomposition cyclic_reduce(const Word& w) {
  const std::vector<Letter>& v = w.letters();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == v[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> prefix(v.begin(), v.begin() + lo);
  std::vector<Letter> core_based(v.begin() + lo, v.begin() + hi);

  CyclicWord core{Word(core_based)};
  // core is a rotation of core_based; absorb the rotation into the
  // conjugator: u = p q  =>  u = p (q p) p^-1 with q p canonical.
  std::size_t rot = 0;
  if (!core.empty()) {
    const std::size_t n = core_based.size();
    for (; rot < n; ++rot) {
      bool match = true;
      for (std::size_t k = 0; k < n && match; ++k) {
        match = core_based[(rot + k) % n] == core.letters()[k];
      }
      if (match) break;
    }
    if (rot == n) throw InternalError("canonical rotation not found");
  }
  std::vector<Letter> conj = std::move(prefix);
  conj.insert(conj.end(), core_based.begin(), core_based.begin() + rot);
  CyclicDecomposition out{core, Word(std::move(conj))};

  if (conjugate(out.conjugator, out.core.based_word(0)) != w) {
    throw InternalError("cyclic_reduce postcondition failed");
  }
  return out;
}

std::vector<int> abelianize(const Word& w, int rank) {
  if (rank < 0) throw DomainError("rank must be non-negative");
  if (w.max_generator() > rank) throw DomainError("generator index out of range for rank");
  std::vector<int> out(static_cast<std::size_t>(rank), 0);
  for (const Letter& l : w.letters()) out[static_cast<std::size_t>(l.gen - 1)] += l.sign;
  return out;
}

std::optional<Word> are_conjugate(const Word& x, const Word& y) {
  CyclicDecomposition dx = cyclic_reduce(x);
  CyclicDecomposition dy = cyclic_reduce(y);
  if (!(dx.core == dy.core)) return std::nullopt;
  Word d = multiply(dy.conjugator, invert(dx.conjugator));
  if (conjugate(d, x) != y) throw InternalError("are_conjugate produced a bad conjugator");
  return d;
}

RootPower primitive_root(const Word& x) {
  if (x.empty()) throw DomainError("primitive root of the trivial word");
  CyclicDecomposition d = cyclic_reduce(x);
  std::size_t p = d.core.period();
  int n = static_cast<int>(d.core.size() / p);
  Word root_based(std::vector<Letter>(d.core.letters().begin(),
                                      d.core.letters().begin() + static_cast<long>(p)));
  Word root = conjugate(d.conjugator, root_based);
  if (power(root, n) != x) throw InternalError("primitive_root postcondition failed");
  return RootPower{root, n};
}

std::optional<int> power_conjugation_search(const Word& r, const Word& y, const Word& y2) {
  if (r.empty()) return y == y2 ? std::optional<int>(0) : std::nullopt;
  const int bound = static_cast<int>(y.size() + y2.size()) + 1;
  Word up = y, down = y;
  const Word ri = invert(r);
  if (y == y2) return 0;
  for (int k = 1; k <= bound; ++k) {
    up = conjugate(r, up);
    if (up == y2) return k;
    down = conjugate(ri, down);
    if (down == y2) return -k;
  }
  return std::nullopt;
}

std::optional<Word> simultaneous_conjugacy(const Word& x, const Word& y, const Word& x2,
                                           const Word& y2) {
  const auto verified = [&](Word g) -> std::optional<Word> {
    if (conjugate(g, x) != x2 || conjugate(g, y) != y2) {
      throw InternalError("simultaneous_conjugacy produced a bad conjugator");
    }
    return g;
  };

  if (x.empty() || y.empty()) {
    if (x.empty() && !x2.empty()) return std::nullopt;
    if (y.empty() && !y2.empty()) return std::nullopt;
    if (x.empty() && y.empty()) {
      if (x2.empty() && y2.empty()) return verified(Word());
      return std::nullopt;
    }
    std::optional<Word> d = x.empty() ? are_conjugate(y, y2) : are_conjugate(x, x2);
    if (!d) return std::nullopt;
    return verified(*d);
  }

  // Exponent sums are conjugation invariants; cheap reject first.
  int rank = std::max({x.max_generator(), y.max_generator(), x2.max_generator(),
                       y2.max_generator()});
  if (abelianize(x, rank) != abelianize(x2, rank)) return std::nullopt;
  if (abelianize(y, rank) != abelianize(y2, rank)) return std::nullopt;

  std::optional<Word> d = are_conjugate(x, x2);
  if (!d) return std::nullopt;

  Word m = primitive_root(x).root;
  // Need m^k y m^-k == d^-1 y2 d.
  Word target = conjugate(invert(*d), y2);
  std::optional<int> k = power_conjugation_search(m, y, target);
  if (!k) return std::nullopt;
  return verified(multiply(*d, power(m, *k)));
}

}  // namespace curves
