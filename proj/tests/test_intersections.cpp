#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "curves/errors.hpp"
#include "curves/intersections.hpp"
#include "curves/random_words.hpp"
#include "curves/surface.hpp"
#include "curves/word.hpp"

using namespace curves;

namespace {

CyclicWord cyc(const std::string& text) { return CyclicWord(parse_word(text)); }

std::vector<std::pair<int, int>> pair_indices(const std::vector<LinkedPair>& pairs) {
  std::vector<std::pair<int, int>> out;
  for (const LinkedPair& p : pairs) out.emplace_back(p.i, p.j);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// Ordered-pair sign of the two crossings of the genus-two anchor class, in
// the canonical rotation of its cyclic word. The global chirality constant
// of the vertex order is frozen so that the unsmoothed double-point sum of
// this class comes out with the signs asserted in test_loopops.cpp; these
// pair signs are the same convention one level down.
constexpr int kAnchorPairSign = -1;

TEST_CASE("anchor class on the genus-two surface has exactly two crossings") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(2);
  const CyclicWord w = cyc("a3.a1.A2.a3.a1.A2.a3.a1.A2.A2.A2");
  // Canonical rotation fixed here so the strand indices below are stable.
  CHECK(to_string(w) == "a1.A2.A2.A2.a3.a1.A2.a3.a1.A2.a3");

  std::vector<LinkedPair> pairs = self_linked_pairs(w, m);
  REQUIRE(pairs.size() == 2);
  // Each double point is reported at the lexicographically first root of
  // its witness slide class; both classes here start at strand 2.
  CHECK(pair_indices(pairs) == std::vector<std::pair<int, int>>{{2, 6}, {2, 9}});
  for (const LinkedPair& p : pairs) CHECK(p.sign == kAnchorPairSign);
}

TEST_CASE("embedded classes produce no linked pairs") {
  const SurfaceModel torus = SurfaceModel::genus_one_boundary(1);
  // Generator loops on several models.
  for (const SurfaceModel& m :
       {torus, SurfaceModel::genus_one_boundary(2), SurfaceModel::punctured_sphere(3),
        SurfaceModel::punctured_sphere(4)}) {
    for (int g = 1; g <= m.rank(); ++g) {
      const CyclicWord w = CyclicWord(Word({Letter(g, 1)}));
      CHECK(self_linked_pairs(w, m).empty());
    }
  }
  // Standard-form primitive classes on the one-holed torus that are simple.
  for (const char* text : {"a1.a2", "a1.a1.a2", "a1.a1.a2.a1.a2", "a1.a1.A2"}) {
    CAPTURE(text);
    CHECK(self_linked_pairs(cyc(text), torus).empty());
  }
  // The boundary-parallel class of the one-holed torus is embedded.
  CHECK(self_linked_pairs(cyc("a1.a2.A1.A2"), torus).empty());
  // A loop around two punctures of the 3-holed sphere is embedded.
  CHECK(self_linked_pairs(cyc("a1.a2"), SurfaceModel::punctured_sphere(3)).empty());
}

TEST_CASE("non-simple sanity and pair well-formedness") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  const CyclicWord w = cyc("a1.a1.a2.a2");
  std::vector<LinkedPair> pairs = self_linked_pairs(w, m);
  CHECK(!pairs.empty());
  for (const LinkedPair& p : pairs) {
    CHECK(p.i < p.j);
    CHECK(p.i >= 0);
    CHECK(p.j < static_cast<int>(w.size()));
    CHECK((p.sign == 1 || p.sign == -1));
  }
  // No duplicate index pairs.
  auto idx = pair_indices(pairs);
  CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
}

TEST_CASE("linked-pair count is inversion invariant") {
  const SurfaceModel torus = SurfaceModel::genus_one_boundary(1);
  const SurfaceModel sphere = SurfaceModel::punctured_sphere(3);
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const SurfaceModel& m = (trial % 2 == 0) ? torus : sphere;
    const CyclicWord w = random_primitive_word(rng, m.rank(), 1 + static_cast<int>(rng.below(7)));
    const CyclicWord wi = CyclicWord(invert(w.based_word(0)));
    CAPTURE(to_string(w));
    CHECK(self_linked_pairs(w, m).size() == self_linked_pairs(wi, m).size());
  }
}

TEST_CASE("circular orientation of germ triples is alternating and cyclic") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(2);
  Rng rng(23);
  int checked = 0;
  while (checked < 60) {
    const CyclicWord w1 = random_cyclically_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(6)));
    const CyclicWord w2 = random_cyclically_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(6)));
    auto pick = [&](const CyclicWord& w) {
      const int k = static_cast<int>(rng.below(static_cast<std::uint32_t>(w.size())));
      return rng.below(2) == 0 ? Ray::outgoing(w, k) : Ray::incoming(w, k);
    };
    const Ray a = pick(w1), b = pick(w2), c = pick(rng.below(2) == 0 ? w1 : w2);
    if (rays_identical(a, b) || rays_identical(a, c) || rays_identical(b, c)) continue;
    ++checked;
    const int o = orient_triple(a, b, c, m);
    CHECK((o == 1 || o == -1));
    CHECK(orient_triple(b, a, c, m) == -o);
    CHECK(orient_triple(a, c, b, m) == -o);
    CHECK(orient_triple(b, c, a, m) == o);
    CHECK(orient_triple(c, a, b, m) == o);
  }
}

TEST_CASE("strand crossing predicate is symmetric and the sign antisymmetric") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const CyclicWord w = random_primitive_word(rng, m.rank(), 2 + static_cast<int>(rng.below(6)));
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Strand s = Strand::of(w, i);
        const Strand t = Strand::of(w, j);
        const bool linked = strands_linked(s, t, m);
        CHECK(strands_linked(t, s, m) == linked);
        if (linked) {
          const int sign = strand_crossing_sign(s, t, m);
          CHECK((sign == 1 || sign == -1));
          CHECK(strand_crossing_sign(t, s, m) == -sign);
        }
      }
    }
  }
}

TEST_CASE("crossings between two classes") {
  const SurfaceModel torus = SurfaceModel::genus_one_boundary(1);
  const CyclicWord a1 = cyc("a1");
  const CyclicWord a2 = cyc("a2");

  // The two core loops of the one-holed torus cross exactly once.
  CHECK(cross_linked_pairs(a1, a2, torus).size() == 1);
  // Disjoint puncture loops of the planar model never cross.
  CHECK(cross_linked_pairs(a1, a2, SurfaceModel::punctured_sphere(3)).empty());
  // A class against itself, its inverse, or its powers: the pushed-off
  // copies are parallel.
  CHECK(cross_linked_pairs(a1, a1, torus).empty());
  CHECK(cross_linked_pairs(a1, cyc("A1"), torus).empty());
  CHECK(cross_linked_pairs(a1, cyc("a1.a1"), torus).empty());
  CHECK(cross_linked_pairs(cyc("a1.a2"), cyc("a1.a2.a1.a2"), torus).empty());
}

TEST_CASE("cross pairs flip with the argument order") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const CyclicWord w1 = random_cyclically_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(6)));
    const CyclicWord w2 = random_cyclically_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(6)));
    std::vector<CrossPair> fwd = cross_linked_pairs(w1, w2, m);
    std::vector<CrossPair> bwd = cross_linked_pairs(w2, w1, m);
    REQUIRE(fwd.size() == bwd.size());
    auto key = [](const CrossPair& p) { return std::tuple(p.i, p.j, p.sign); };
    std::vector<std::tuple<int, int, int>> lhs, rhs;
    for (const CrossPair& p : fwd) lhs.emplace_back(key(p));
    for (const CrossPair& p : bwd) rhs.emplace_back(std::tuple(p.j, p.i, -p.sign));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);
  }
}
