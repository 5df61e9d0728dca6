#include "curves/intersections.hpp"

#include <utility>
#include <vector>

#include "curves/errors.hpp"

namespace curves {

// Germ ordering model. Rays leave the vertex disk through the sector of
// their first letter; sectors follow the stored vertex order. Rays that
// share a first letter s run as a parallel bundle along petal s, re-enter
// the disk through sector inv(s), and fan out to the sectors of their
// next letters. Two reversals cancel between consecutive disks: crossing
// an untwisted band flips the transversal order once, and non-crossing
// divergence inside the next disk flips it again. The bundle's internal
// order therefore equals the order of the continuation letters read from
// the vertex order cut just after inv(s), recursively.
//
// kOrientationSign fixes the one remaining global choice (whether the
// stored vertex order is read counterclockwise). It is frozen by the
// genus-two anchor in tests/test_intersections.cpp: the curve
// a3.a1.A2.a3.a1.A2.a3.a1.A2.A2.A2 has exactly two double points, and
// flipping the constant negates every crossing sign, which that test
// pins along with the cobracket it induces.
namespace {

constexpr int kOrientationSign = +1;

int mod(long long x, int n) {
  long long r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

// -1 if x comes before y when germs are scanned from just after the
// sector of `cut`, +1 otherwise. Pre: neither stream starts with `cut`
// and the streams differ.
int lin_cmp(Ray x, Ray y, Letter cut, const SurfaceModel& m, int budget) {
  const int n2 = 2 * m.rank();
  while (budget-- > 0) {
    Letter fx = x.head(), fy = y.head();
    if (!(fx == fy)) {
      int rx = mod(m.germ_position(fx) - m.germ_position(cut), n2);
      int ry = mod(m.germ_position(fy) - m.germ_position(cut), n2);
      return rx < ry ? -1 : +1;
    }
    cut = fx.inverse();
    x = x.tail();
    y = y.tail();
  }
  throw InternalError("tangential rays: streams stayed parallel beyond the divergence cap");
}

// Pre: x.head() == y.head(). True if x comes before y inside their
// bundle's sector.
bool bundle_less(const Ray& x, const Ray& y, const SurfaceModel& m, int budget) {
  return lin_cmp(x.tail(), y.tail(), x.head().inverse(), m, budget) < 0;
}

}  // namespace

Letter Ray::letter(int depth) const {
  const int n = static_cast<int>(w_->size());
  long long d = static_cast<long long>(depth_) + depth;
  if (out_) return w_->at(static_cast<std::size_t>(mod(strand_ + d, n)));
  return w_->at(static_cast<std::size_t>(mod(strand_ - 1 - d, n))).inverse();
}

bool rays_identical(const Ray& a, const Ray& b) {
  const int n = a.word_length() + b.word_length();
  for (int d = 0; d < n; ++d) {
    if (!(a.letter(d) == b.letter(d))) return false;
  }
  return true;
}

int orient_triple(const Ray& a, const Ray& b, const Ray& c, const SurfaceModel& m) {
  const int budget = 2 * (a.word_length() + b.word_length() + c.word_length());
  const Letter la = a.head(), lb = b.head(), lc = c.head();
  const int n2 = 2 * m.rank();

  int result;
  if (!(la == lb) && !(lb == lc) && !(la == lc)) {
    int pa = m.germ_position(la), pb = m.germ_position(lb), pc = m.germ_position(lc);
    result = mod(pb - pa, n2) < mod(pc - pa, n2) ? +1 : -1;
  } else if (la == lb && lb == lc) {
    Letter cut = la.inverse();
    int ab = lin_cmp(a.tail(), b.tail(), cut, m, budget);
    int ac = lin_cmp(a.tail(), c.tail(), cut, m, budget);
    int bc = lin_cmp(b.tail(), c.tail(), cut, m, budget);
    int ra = (ab > 0) + (ac > 0);
    int rb = (ab < 0) + (bc > 0);
    int rc = (ac < 0) + (bc < 0);
    int inversions = (ra > rb) + (ra > rc) + (rb > rc);
    result = inversions % 2 == 0 ? +1 : -1;
  } else if (la == lb) {
    result = bundle_less(a, b, m, budget) ? +1 : -1;
  } else if (lb == lc) {
    // orient(a,b,c) == orient(b,c,a)
    result = bundle_less(b, c, m, budget) ? +1 : -1;
  } else {
    // la == lc: orient(a,b,c) == -orient(a,c,b)
    result = bundle_less(a, c, m, budget) ? -1 : +1;
  }
  return kOrientationSign * result;
}

bool strands_linked(const Strand& s, const Strand& t, const SurfaceModel& m) {
  return orient_triple(s.in, t.in, s.out, m) != orient_triple(s.in, t.out, s.out, m);
}

int strand_crossing_sign(const Strand& s, const Strand& t, const SurfaceModel& m) {
  // The four germs alternate. The frame (s tangent, t tangent) is positive
  // iff, sweeping counterclockwise from s.out, t.out appears before t.in.
  return orient_triple(s.out, t.out, s.in, m);
}

namespace {

void check_word(const CyclicWord& w, const SurfaceModel& m, const char* op) {
  if (w.empty()) throw DomainError(std::string(op) + ": trivial class");
  for (const Letter& l : w.letters()) {
    if (l.gen > m.rank()) {
      throw DomainError(std::string(op) + ": generator index out of range for this surface");
    }
  }
}

// Two witness roots describe the same double point exactly when one is the
// other slid one step along an edge both branches traverse: with the
// branches parallel there, (i, j) ~ (i+1, j+1) when u[i] == v[j], and with
// them antiparallel, (i, j) ~ (i+1, j-1) when u[i] == inv(v[j-1]). Sliding
// never changes the underlying pair of lifted lines, so every witness in a
// slide class is linked as soon as one is, and each double point must be
// reported for exactly one class representative.
std::vector<std::pair<int, int>> slide_neighbors(const CyclicWord& u, const CyclicWord& v, int i,
                                                 int j) {
  const int nu = static_cast<int>(u.size());
  const int nv = static_cast<int>(v.size());
  auto lu = [&](int p) { return u.at(static_cast<std::size_t>(mod(p, nu))); };
  auto lv = [&](int p) { return v.at(static_cast<std::size_t>(mod(p, nv))); };
  std::vector<std::pair<int, int>> nb;
  if (lu(i) == lv(j)) nb.emplace_back(mod(i + 1, nu), mod(j + 1, nv));
  if (lu(i - 1) == lv(j - 1)) nb.emplace_back(mod(i - 1, nu), mod(j - 1, nv));
  if (lu(i) == lv(j - 1).inverse()) nb.emplace_back(mod(i + 1, nu), mod(j - 1, nv));
  if (lv(j) == lu(i - 1).inverse()) nb.emplace_back(mod(i - 1, nu), mod(j + 1, nv));
  return nb;
}

}  // namespace

std::vector<LinkedPair> self_linked_pairs(const CyclicWord& w, const SurfaceModel& m) {
  check_word(w, m, "self_linked_pairs");
  if (!w.primitive()) throw DomainError("self_linked_pairs requires a primitive cyclic word");
  const int n = static_cast<int>(w.size());

  std::vector<Strand> strands;
  strands.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) strands.push_back(Strand::of(w, i));

  std::vector<char> linked(static_cast<std::size_t>(n) * n, 0);
  auto cell = [&linked, n](int a, int b) -> char& {
    if (a > b) std::swap(a, b);
    return linked[static_cast<std::size_t>(a) * n + b];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      cell(i, j) = strands_linked(strands[i], strands[j], m) ? 1 : 0;
    }
  }

  // Scanning witnesses in lexicographic order and flooding each slide class
  // on first contact makes the first-seen witness the class minimum, so the
  // output is deterministic and sorted.
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  auto visited = [&seen, n](int a, int b) -> char& {
    if (a > b) std::swap(a, b);
    return seen[static_cast<std::size_t>(a) * n + b];
  };
  std::vector<LinkedPair> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!cell(i, j) || visited(i, j)) continue;
      visited(i, j) = 1;
      std::vector<std::pair<int, int>> stack{{i, j}};
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (auto [c, d] : slide_neighbors(w, w, a, b)) {
          if (c == d || !cell(c, d)) {
            throw InternalError("a slid crossing witness is not itself a crossing witness");
          }
          if (!visited(c, d)) {
            visited(c, d) = 1;
            stack.emplace_back(c, d);
          }
        }
      }
      out.push_back(LinkedPair{i, j, strand_crossing_sign(strands[i], strands[j], m)});
    }
  }
  return out;
}

std::vector<CrossPair> cross_linked_pairs(const CyclicWord& w1, const CyclicWord& w2,
                                          const SurfaceModel& m) {
  check_word(w1, m, "cross_linked_pairs");
  check_word(w2, m, "cross_linked_pairs");
  const int n1 = static_cast<int>(w1.size());
  const int n2 = static_cast<int>(w2.size());

  std::vector<Strand> s1, s2;
  s1.reserve(static_cast<std::size_t>(n1));
  s2.reserve(static_cast<std::size_t>(n2));
  for (int i = 0; i < n1; ++i) s1.push_back(Strand::of(w1, i));
  for (int j = 0; j < n2; ++j) s2.push_back(Strand::of(w2, j));

  std::vector<char> linked(static_cast<std::size_t>(n1) * n2, 0);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      // Coincident strands (same or inverse primitive root, aligned here)
      // are parallel copies after pushing off; they never cross.
      if (rays_identical(s1[i].out, s2[j].out) || rays_identical(s1[i].out, s2[j].in)) continue;
      linked[static_cast<std::size_t>(i) * n2 + j] =
          strands_linked(s1[i], s2[j], m) ? 1 : 0;
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(n1) * n2, 0);
  std::vector<CrossPair> out;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (!linked[static_cast<std::size_t>(i) * n2 + j] ||
          seen[static_cast<std::size_t>(i) * n2 + j]) {
        continue;
      }
      seen[static_cast<std::size_t>(i) * n2 + j] = 1;
      std::vector<std::pair<int, int>> stack{{i, j}};
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (auto [c, d] : slide_neighbors(w1, w2, a, b)) {
          if (!linked[static_cast<std::size_t>(c) * n2 + d]) {
            throw InternalError("a slid crossing witness is not itself a crossing witness");
          }
          if (!seen[static_cast<std::size_t>(c) * n2 + d]) {
            seen[static_cast<std::size_t>(c) * n2 + d] = 1;
            stack.emplace_back(c, d);
          }
        }
      }
      out.push_back(CrossPair{i, j, strand_crossing_sign(s1[i], s2[j], m)});
    }
  }
  return out;
}

}  // namespace curves
