#pragma once

#include <vector>

#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

// Infinite letter stream read off a taut loop from one of its basepoint
// passes. Strand k of a cyclic word w is the pass between letters w[k-1]
// and w[k]; its outgoing ray reads w[k] w[k+1] ... and its incoming ray
// reads inv(w[k-1]) inv(w[k-2]) ... (indices cyclic). Rays are cheap
// cursors into the underlying cyclic word, which must outlive them.
class Ray {
 public:
  static Ray outgoing(const CyclicWord& w, int strand) { return Ray(&w, strand, true); }
  static Ray incoming(const CyclicWord& w, int strand) { return Ray(&w, strand, false); }

  Letter head() const { return letter(0); }
  Letter letter(int depth) const;
  Ray tail() const {
    Ray r = *this;
    ++r.depth_;
    return r;
  }
  int word_length() const { return static_cast<int>(w_->size()); }

 private:
  Ray(const CyclicWord* w, int strand, bool out) : w_(w), strand_(strand), out_(out) {}

  const CyclicWord* w_;
  int strand_;
  bool out_;
  int depth_ = 0;
};

// True if the two streams agree forever. Both are periodic, so agreement
// on the first |w1| + |w2| letters decides.
bool rays_identical(const Ray& a, const Ray& b);

// Circular orientation (+1 / -1) of three pairwise distinct ray germs
// around the base vertex. Distinct first letters are compared by their
// sectors in the vertex order; rays sharing a prefix are compared by
// where they fan out after traversing the shared petals (see
// intersections.cpp for the ordering rule). Throws InternalError if the
// streams stay parallel beyond 2 * (sum of word lengths) letters.
int orient_triple(const Ray& a, const Ray& b, const Ray& c, const SurfaceModel& m);

// One basepoint pass of a loop: the two boundary germs of its strand.
struct Strand {
  Ray in;
  Ray out;

  static Strand of(const CyclicWord& w, int k) {
    return Strand{Ray::incoming(w, k), Ray::outgoing(w, k)};
  }
};

// Two strands cross iff their germ pairs alternate around the vertex:
// {t.in, t.out} separates s.in from s.out.
bool strands_linked(const Strand& s, const Strand& t, const SurfaceModel& m);

// Sign of the ordered frame (s tangent, t tangent) at the crossing.
// Antisymmetric in the strand order. Pre: linked.
int strand_crossing_sign(const Strand& s, const Strand& t, const SurfaceModel& m);

// A self-crossing of a primitive loop: strands i < j, sign for the
// ordered pair (i, j).
struct LinkedPair {
  int i = 0;
  int j = 0;
  int sign = 0;
};

// All self-crossings of the taut representative of [w]. Pre: w nonempty,
// primitive, generators within the surface rank.
std::vector<LinkedPair> self_linked_pairs(const CyclicWord& w, const SurfaceModel& m);

// A crossing between taut representatives of two loops: strand i of w1
// against strand j of w2, sign for the ordered frame (w1 branch, w2
// branch). Strand pairs whose streams coincide (the loops share a
// primitive root, or one root is the inverse of the other) are parallel
// in the pushed-off picture and produce no crossing.
struct CrossPair {
  int i = 0;
  int j = 0;
  int sign = 0;
};

std::vector<CrossPair> cross_linked_pairs(const CyclicWord& w1, const CyclicWord& w2,
                                          const SurfaceModel& m);

}  // namespace curves
