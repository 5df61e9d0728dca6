#include <doctest.h>

#include <vector>

#include "curves/errors.hpp"
#include "curves/surface.hpp"
#include "curves/word.hpp"

using namespace curves;

namespace {
// Parse a dot-separated germ list letter by letter.  Unlike parse_word this
// never merges adjacent inverse letters, so orders like a1.A1.a2.A2 survive.
std::vector<Letter> germs(const std::string& text) {
  std::vector<Letter> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string::npos) dot = text.size();
    const Word one = parse_word(text.substr(start, dot - start));
    REQUIRE(one.size() == 1);
    out.push_back(one[0]);
    start = dot + 1;
  }
  return out;
}
}  // namespace

TEST_CASE("one-holed torus vertex order") {
  SurfaceModel m = SurfaceModel::genus_one_boundary(1);
  CHECK(m.rank() == 2);
  CHECK(m.vertex_order() == germs("a1.A2.A1.a2"));
  CHECK(SurfaceModel::from_surface_word(parse_word("a1.a2.A1.A2")).vertex_order() ==
        m.vertex_order());
}

TEST_CASE("genus two vertex order from the octagon word") {
  SurfaceModel m = SurfaceModel::genus_one_boundary(2);
  CHECK(m.rank() == 4);
  CHECK(m.vertex_order() == germs("a1.A2.A1.a2.a3.A4.A3.a4"));
  for (int i = 0; i < 8; ++i) {
    CHECK(m.germ_position(m.vertex_order()[static_cast<std::size_t>(i)]) == i);
  }
}

TEST_CASE("planar surfaces") {
  SurfaceModel m = SurfaceModel::punctured_sphere(3);
  CHECK(m.rank() == 2);
  CHECK(m.vertex_order() == germs("a1.A1.a2.A2"));
  CHECK_THROWS_AS(SurfaceModel::punctured_sphere(1), ParseError);
}

TEST_CASE("surface word validation") {
  CHECK_THROWS_WITH_AS(SurfaceModel::from_surface_word(parse_word("a1.a2.A1")),
                       "surface word must have length 2n", ParseError);
  // a1 appears twice in the same direction.
  CHECK_THROWS_AS(SurfaceModel::from_surface_word(Word({Letter(1, 1), Letter(2, 1), Letter(1, 1),
                                                        Letter(2, -1)})),
                  ParseError);
  // Valid germ set, but the successor relation splits into two cycles.
  CHECK_THROWS_WITH_AS(SurfaceModel::from_surface_word(parse_word("a1.a2.A1.a3.A2.A3")),
                       "surface word does not describe a one-vertex surface", ParseError);
}

TEST_CASE("vertex order validation") {
  CHECK_THROWS_AS(SurfaceModel::from_vertex_order(germs("a1.A1.a2")), ParseError);
  CHECK_THROWS_AS(SurfaceModel::from_vertex_order(germs("a1.A1.a2.a2")), ParseError);
  CHECK(SurfaceModel::from_vertex_order(germs("a2.A1.A2.a1")).rank() == 2);
}

TEST_CASE("surface spec parsing") {
  CHECK(parse_surface_spec("genus:2,boundary:1").vertex_order() ==
        SurfaceModel::genus_one_boundary(2).vertex_order());
  CHECK(parse_surface_spec("spheres:4").rank() == 3);
  CHECK(parse_surface_spec("word:a1.a2.A1.A2").rank() == 2);
  CHECK(parse_surface_spec("order:a1,A2,A1,a2").vertex_order() == germs("a1.A2.A1.a2"));
  CHECK_THROWS_AS(parse_surface_spec("genus:0,boundary:1"), ParseError);
  CHECK_THROWS_AS(parse_surface_spec("genus:2,boundary:2"), ParseError);
  CHECK_THROWS_AS(parse_surface_spec("torus"), ParseError);
  CHECK_THROWS_AS(parse_surface_spec(""), ParseError);
}
