#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "curves/errors.hpp"
#include "curves/freegroup.hpp"
#include "curves/loopops.hpp"
#include "curves/random_words.hpp"
#include "curves/surface.hpp"
#include "curves/word.hpp"
#include "oracles.hpp"

using namespace curves;
using curves::testing::has_swap_pair_structure;
using curves::testing::mu_square_direct;
using curves::testing::same_wedge_combination;

namespace {

Word w(const std::string& text) { return parse_word(text); }

}  // namespace

TEST_CASE("anchor class on the genus-two surface") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(2);
  const Word alpha = w("a3.a1.A2.a3.a1.A2.a3.a1.A2.A2.A2");

  MuResult r = mu(alpha, m);
  CHECK(r.exponent == 1);
  CHECK(r.primitive_root == alpha);
  CHECK(r.t() == 4);

  const Word x1 = w("a3.a1.A2.a3.a1.A2.A2");
  const Word y1 = w("A2.a3.a1.A2");
  const Word x2 = w("a3.a1.A2.A2");
  const Word y2 = w("A2.a3.a1.A2.a3.a1.A2");
  const std::vector<WedgeTerm> expected = {
      {x1, y1, 1}, {y1, x1, -1}, {x2, y2, 1}, {y2, x2, -1}};
  CHECK(same_wedge_combination(r.terms, expected));

  CHECK(turaev_cobracket(alpha, m).empty());
  CHECK(minimal_self_intersection(alpha, m) == 2);
  CHECK_FALSE(is_power_of_simple(alpha, m));
}

TEST_CASE("powers of generator loops") {
  for (const SurfaceModel& m :
       {SurfaceModel::genus_one_boundary(1), SurfaceModel::punctured_sphere(3)}) {
    for (int g = 1; g <= m.rank(); ++g) {
      const Word gen = Word({Letter(g, 1)});
      for (int n = 1; n <= 5; ++n) {
        CAPTURE(g);
        CAPTURE(n);
        MuResult r = mu(power(gen, n), m);
        CHECK(r.terms.empty());
        CHECK(r.t() == 0);
        CHECK(r.exponent == n);
        CHECK(r.primitive_root == gen);
        CHECK(minimal_self_intersection(power(gen, n), m) == n - 1);
        CHECK(is_power_of_simple(power(gen, n), m));
        CHECK(turaev_cobracket(power(gen, n), m).empty());
      }
    }
  }
}

TEST_CASE("closing crossings of a power are generated and cancel") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  const Word a1 = w("a1");

  MuResult plain = mu(power(a1, 3), m);
  CHECK_FALSE(plain.type2_raw.has_value());

  MuResult kept = mu(power(a1, 3), m, true);
  REQUIRE(kept.type2_raw.has_value());
  const std::vector<WedgeTerm>& raw = *kept.type2_raw;
  REQUIRE(raw.size() == 4);
  CHECK(raw[0].x == w("a1"));
  CHECK(raw[0].y == w("a1.a1"));
  CHECK(raw[0].coefficient == 1);
  CHECK(raw[1].x == w("a1.a1"));
  CHECK(raw[1].y == w("a1"));
  CHECK(raw[1].coefficient == -1);
  CHECK(raw[2].x == w("a1.a1"));
  CHECK(raw[2].y == w("a1"));
  CHECK(raw[2].coefficient == 1);
  CHECK(raw[3].x == w("a1"));
  CHECK(raw[3].y == w("a1.a1"));
  CHECK(raw[3].coefficient == -1);
  CHECK(kept.terms.empty());

  // A primitive input has no closing crossings.
  MuResult prim = mu(w("a1.a1.a2.a2"), m, true);
  REQUIRE(prim.type2_raw.has_value());
  CHECK(prim.type2_raw->empty());
}

TEST_CASE("power scaling of the crossing count") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  for (const char* text : {"a1.a1.a2.a2", "a1.a2.A1.a2", "a1.a1.a1.a2.A1.a2"}) {
    CAPTURE(text);
    const Word beta = w(text);
    const int t1 = mu(beta, m).t();
    const int m1 = minimal_self_intersection(beta, m);
    CHECK(m1 == t1 / 2);
    for (int n = 2; n <= 3; ++n) {
      CAPTURE(n);
      MuResult rn = mu(power(beta, n), m);
      CHECK(rn.exponent == n);
      CHECK(rn.t() == n * n * t1);
      CHECK(minimal_self_intersection(power(beta, n), m) == n * n * m1 + n - 1);
    }
  }
}

TEST_CASE("squared classes agree with the independent doubling computation") {
  const SurfaceModel torus = SurfaceModel::genus_one_boundary(1);
  const SurfaceModel sphere = SurfaceModel::punctured_sphere(3);
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const SurfaceModel& m = (trial % 2 == 0) ? torus : sphere;
    const CyclicWord beta = random_primitive_word(rng, m.rank(), 1 + static_cast<int>(rng.below(5)));
    CAPTURE(to_string(beta));
    MuResult r = mu(power(beta.based_word(0), 2), m);
    CHECK(same_wedge_combination(r.terms, mu_square_direct(beta, m)));
  }
  MuResult r = mu(power(w("a1.a1.a2.a2"), 2), torus);
  CHECK(same_wedge_combination(r.terms, mu_square_direct(CyclicWord(w("a1.a1.a2.a2")), torus)));
}

TEST_CASE("both cobracket paths agree") {
  const SurfaceModel torus = SurfaceModel::genus_one_boundary(1);
  const SurfaceModel sphere = SurfaceModel::punctured_sphere(3);
  Rng rng(211);
  for (int trial = 0; trial < 40; ++trial) {
    const SurfaceModel& m = (trial % 2 == 0) ? torus : sphere;
    const Word alpha = random_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(8)));
    CAPTURE(to_string(alpha));
    CHECK(turaev_cobracket(alpha, m) == turaev_cobracket_direct(alpha, m));
  }
  // Powers funnel through the closing-crossing bookkeeping on both paths.
  for (const char* text : {"a1.a1", "a1.a2.a1.a2", "a1.a1.a2.a2"}) {
    CHECK(turaev_cobracket(power(w(text), 2), torus) ==
          turaev_cobracket_direct(power(w(text), 2), torus));
  }
}

TEST_CASE("pairing of two classes") {
  const SurfaceModel torus = SurfaceModel::genus_one_boundary(1);

  std::vector<ClassTerm> ab = goldman_bracket(w("a1"), w("a2"), torus);
  REQUIRE(ab.size() == 1);
  CHECK(ab[0].value == CyclicWord(w("a1.a2")));
  CHECK((ab[0].coefficient == 1 || ab[0].coefficient == -1));

  CHECK(goldman_bracket(w("a1"), w("a2"), SurfaceModel::punctured_sphere(3)).empty());
  CHECK(goldman_bracket(w("a1"), w("a1"), torus).empty());
  CHECK(goldman_bracket(w("a1"), w("A1"), torus).empty());
  CHECK(goldman_bracket(w("a1.a2"), power(w("a1.a2"), 2), torus).empty());
}

TEST_CASE("pairing is antisymmetric and vanishes on equal arguments") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  Rng rng(307);
  for (int trial = 0; trial < 25; ++trial) {
    const Word w1 = random_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(6)));
    const Word w2 = random_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(6)));
    CAPTURE(to_string(w1));
    CAPTURE(to_string(w2));

    std::vector<ClassTerm> fwd = goldman_bracket(w1, w2, m);
    std::vector<ClassTerm> bwd = goldman_bracket(w2, w1, m);
    REQUIRE(fwd.size() == bwd.size());
    std::vector<ClassTerm> negated;
    for (const ClassTerm& t : bwd) negated.push_back(ClassTerm{t.value, -t.coefficient});
    auto key = [](const ClassTerm& t) { return std::pair(to_string(t.value), t.coefficient); };
    std::sort(negated.begin(), negated.end(),
              [&](const ClassTerm& a, const ClassTerm& b) { return key(a) < key(b); });
    std::vector<ClassTerm> sorted_fwd = fwd;
    std::sort(sorted_fwd.begin(), sorted_fwd.end(),
              [&](const ClassTerm& a, const ClassTerm& b) { return key(a) < key(b); });
    CHECK(sorted_fwd == negated);

    CHECK(goldman_bracket(w1, w1, m).empty());
  }
}

TEST_CASE("rejects unusable inputs") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  CHECK_THROWS_AS(mu(Word(), m), DomainError);
  CHECK_THROWS_AS(mu(w("a3"), m), DomainError);
  CHECK_THROWS_AS(mu(w("a1.A1"), m), DomainError);
  CHECK_THROWS_AS(minimal_self_intersection(Word(), m), DomainError);
  CHECK_THROWS_AS(turaev_cobracket(w("a3"), m), DomainError);
  CHECK_THROWS_AS(goldman_bracket(w("a1"), Word(), m), DomainError);
  CHECK_THROWS_AS(goldman_bracket(Word(), w("a1"), m), DomainError);
  CHECK_THROWS_AS(goldman_bracket(w("a1"), w("a3"), m), DomainError);
}

TEST_CASE("reduced double-point sums pair up under branch swap") {
  const SurfaceModel torus = SurfaceModel::genus_one_boundary(1);
  const SurfaceModel sphere = SurfaceModel::punctured_sphere(3);
  Rng rng(401);
  for (int trial = 0; trial < 30; ++trial) {
    const SurfaceModel& m = (trial % 2 == 0) ? torus : sphere;
    const Word alpha = random_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(8)));
    CAPTURE(to_string(alpha));
    MuResult r = mu(alpha, m);
    CHECK(r.t() % 2 == 0);
    CHECK(has_swap_pair_structure(r.terms));
  }
}

TEST_CASE("class invariants do not depend on the representative") {
  const SurfaceModel torus = SurfaceModel::genus_one_boundary(1);
  const SurfaceModel sphere = SurfaceModel::punctured_sphere(3);
  Rng rng(503);
  for (int trial = 0; trial < 15; ++trial) {
    const SurfaceModel& m = (trial % 2 == 0) ? torus : sphere;
    const Word alpha = random_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(7)));
    CAPTURE(to_string(alpha));
    const int t0 = mu(alpha, m).t();
    const int m0 = minimal_self_intersection(alpha, m);
    const bool p0 = is_power_of_simple(alpha, m);

    const CyclicWord core = CyclicWord(alpha);
    for (std::size_t k = 0; k < core.size(); ++k) {
      const Word rot = core.based_word(k);
      CHECK(mu(rot, m).t() == t0);
      CHECK(minimal_self_intersection(rot, m) == m0);
      CHECK(is_power_of_simple(rot, m) == p0);
    }

    const Word delta = random_reduced_word(rng, m.rank(), 1 + static_cast<int>(rng.below(4)));
    const Word conj = conjugate(delta, alpha);
    CHECK(mu(conj, m).t() == t0);
    CHECK(minimal_self_intersection(conj, m) == m0);
    CHECK(is_power_of_simple(conj, m) == p0);

    const Word inv = invert(alpha);
    CHECK(mu(inv, m).t() == t0);
    CHECK(minimal_self_intersection(inv, m) == m0);
    CHECK(is_power_of_simple(inv, m) == p0);
  }
}

TEST_CASE("wedge class equality and reduction") {
  const Word x = w("a1.a2");
  const Word y = w("a2.A1");
  const Word g = w("a1.a1.A2");

  CHECK(wedge_classes_equal(WedgeTerm{x, y, 1}, WedgeTerm{conjugate(g, x), conjugate(g, y), 1}));
  CHECK_FALSE(wedge_classes_equal(WedgeTerm{x, y, 1}, WedgeTerm{y, x, 1}));

  std::vector<WedgeTerm> terms = {
      WedgeTerm{x, y, 1},
      WedgeTerm{conjugate(g, x), conjugate(g, y), 2},
      WedgeTerm{y, x, 5},
  };
  std::vector<WedgeTerm> reduced = reduce_wedge_combination(terms);
  REQUIRE(reduced.size() == 2);
  int mass = 0;
  for (const WedgeTerm& t : reduced) mass += std::abs(t.coefficient);
  CHECK(mass == 8);

  std::vector<WedgeTerm> cancel = {
      WedgeTerm{x, y, 1},
      WedgeTerm{conjugate(g, x), conjugate(g, y), -1},
  };
  CHECK(reduce_wedge_combination(cancel).empty());

  const TensorTerm smoothed = q_smooth(WedgeTerm{x, y, -3});
  CHECK(smoothed.left == CyclicWord(x));
  CHECK(smoothed.right == CyclicWord(y));
  CHECK(smoothed.coefficient == -3);
}

TEST_CASE("conjugated powers decompose correctly") {
  const SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  const Word beta = w("a1.a1.a2");
  const Word g = w("a2.a2");
  const Word alpha = conjugate(g, power(beta, 2));
  MuResult r = mu(alpha, m);
  CHECK(r.exponent == 2);
  CHECK(CyclicWord(r.primitive_root) == CyclicWord(beta));
  CHECK(power(r.primitive_root, 2) == alpha);
}
