#include <doctest.h>

#include "curves/errors.hpp"
#include "curves/freegroup.hpp"
#include "curves/random_words.hpp"
#include "curves/verify.hpp"
#include "curves/word.hpp"

using namespace curves;

TEST_CASE("cyclic reduction recovers core and conjugator") {
  Word g = parse_word("a1.A3");
  Word core = parse_word("a2.a1");
  CyclicDecomposition d = cyclic_reduce(conjugate(g, core));
  CHECK(d.core == CyclicWord(core));
  CHECK(conjugate(d.conjugator, d.core.based_word(0)) == conjugate(g, core));

  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Word w = random_reduced_word(rng, 3, 1 + static_cast<int>(rng.below(12)));
    CyclicDecomposition dec = cyclic_reduce(w);
    CHECK(conjugate(dec.conjugator, dec.core.based_word(0)) == w);
    CHECK(dec.core == CyclicWord(w));
  }
  CHECK(cyclic_reduce(Word()).core.empty());
}

TEST_CASE("exponent sums") {
  Word w = parse_word("A2.a3.a1.A2.a3.a1.A2");
  CHECK(abelianize(w, 4) == std::vector<int>{2, -3, 2, 0});
  CHECK(abelianize(Word(), 2) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(abelianize(w, 2), DomainError);
}

TEST_CASE("conjugacy of single words") {
  Word x = parse_word("a1.a2.A1.a2");
  Word y = conjugate(parse_word("A2.A2.a1"), x);
  auto d = are_conjugate(x, y);
  REQUIRE(d.has_value());
  CHECK(conjugate(*d, x) == y);
  CHECK_FALSE(are_conjugate(x, parse_word("a1.a2.A1.A2")).has_value());
  CHECK_FALSE(are_conjugate(x, Word()).has_value());
  CHECK(are_conjugate(Word(), Word()).has_value());
}

TEST_CASE("primitive root") {
  RootPower r = primitive_root(power(parse_word("a1.a2"), 3));
  CHECK(r.root == parse_word("a1.a2"));
  CHECK(r.exponent == 3);

  // Roots of based powers keep the conjugating tail.
  Word g = parse_word("a2.a2");
  Word x = conjugate(g, power(parse_word("a1.A2"), 2));
  RootPower s = primitive_root(x);
  CHECK(s.exponent == 2);
  CHECK(power(s.root, 2) == x);
  CHECK(s.root == conjugate(g, parse_word("a1.A2")));

  CHECK(primitive_root(parse_word("a1.a2.a1")).exponent == 1);
  CHECK_THROWS_AS(primitive_root(Word()), DomainError);
}

TEST_CASE("conjugating power search") {
  Word r = parse_word("a1");
  Word y = parse_word("a2");
  Word y2 = conjugate(power(r, 3), y);
  auto k = power_conjugation_search(r, y, y2);
  REQUIRE(k.has_value());
  CHECK(*k == 3);
  CHECK(power_conjugation_search(r, y, conjugate(power(r, -2), y)) == -2);
  CHECK(power_conjugation_search(r, y, y) == 0);
  CHECK_FALSE(power_conjugation_search(r, y, parse_word("a2.a2")).has_value());
  // Empty base: only identical words are related.
  CHECK(power_conjugation_search(Word(), y, y) == 0);
  CHECK_FALSE(power_conjugation_search(Word(), y, parse_word("a1")).has_value());
}

TEST_CASE("simultaneous conjugacy, planted and degenerate instances") {
  Word x = parse_word("a1.a2");
  Word y = parse_word("A2.a1");
  Word d0 = parse_word("a2.A1.A1");
  auto d = simultaneous_conjugacy(x, y, conjugate(d0, x), conjugate(d0, y));
  REQUIRE(d.has_value());
  CHECK(conjugate(*d, x) == conjugate(d0, x));
  CHECK(conjugate(*d, y) == conjugate(d0, y));

  // x fixed by a centralizer power, y needing exactly that power.
  auto e = simultaneous_conjugacy(parse_word("a1"), parse_word("a2"), parse_word("a1"),
                                  parse_word("A1.a2.a1"));
  REQUIRE(e.has_value());
  CHECK(conjugate(*e, parse_word("a2")) == parse_word("A1.a2.a1"));

  // Componentwise conjugate but not simultaneously: fixing a1 forces the
  // conjugator into its centralizer, and no a1-power moves a2 to the target.
  CHECK_FALSE(simultaneous_conjugacy(parse_word("a1"), parse_word("a2"), parse_word("a1"),
                                     conjugate(parse_word("a2.a1"), parse_word("a2")))
                  .has_value());

  // Trivial components.
  CHECK(simultaneous_conjugacy(Word(), parse_word("a2"), Word(), parse_word("a2")).has_value());
  CHECK_FALSE(
      simultaneous_conjugacy(Word(), parse_word("a2"), parse_word("a1"), parse_word("a2"))
          .has_value());
  auto f = simultaneous_conjugacy(parse_word("a1"), Word(), parse_word("a1"), Word());
  REQUIRE(f.has_value());
  CHECK(conjugate(*f, parse_word("a1")) == parse_word("a1"));
}

TEST_CASE("the four anchor terms do not merge") {
  // The two positive wedges and the two negative wedges of the genus-two
  // eleven-letter class pair off by cyclic classes, but are not
  // simultaneously conjugate, so the reduced mu keeps all four.
  Word x1 = parse_word("a3.a1.A2.a3.a1.A2.A2");
  Word y1 = parse_word("A2.a3.a1.A2");
  Word x2 = parse_word("a3.a1.A2.A2");
  Word y2 = parse_word("A2.a3.a1.A2.a3.a1.A2");
  CHECK(CyclicWord(x1) == CyclicWord(y2));
  CHECK(CyclicWord(y1) == CyclicWord(x2));
  CHECK_FALSE(simultaneous_conjugacy(x1, y1, y2, x2).has_value());
  CHECK_FALSE(simultaneous_conjugacy(y1, x1, x2, y2).has_value());
  CHECK_FALSE(simultaneous_conjugacy(x1, y1, x2, y2).has_value());
}

TEST_CASE("simultaneous conjugacy matches bounded brute force") {
  Rng rng(2024);
  for (int t = 0; t < 60; ++t) {
    Word x = random_reduced_word(rng, 2, 1 + static_cast<int>(rng.below(4)));
    Word y = random_reduced_word(rng, 2, 1 + static_cast<int>(rng.below(4)));
    Word x2, y2;
    if (t % 2 == 0) {
      Word d0 = random_reduced_word(rng, 2, static_cast<int>(rng.below(3)));
      x2 = conjugate(d0, x);
      y2 = conjugate(d0, y);
    } else {
      x2 = random_reduced_word(rng, 2, 1 + static_cast<int>(rng.below(4)));
      y2 = random_reduced_word(rng, 2, 1 + static_cast<int>(rng.below(4)));
    }
    auto fast = simultaneous_conjugacy(x, y, x2, y2);
    auto slow = brute_force_simultaneous_conjugacy(x, y, x2, y2, 2, 6);
    if (fast) {
      CHECK(conjugate(*fast, x) == x2);
      CHECK(conjugate(*fast, y) == y2);
    } else {
      CHECK_FALSE(slow.has_value());
    }
  }
}
