#pragma once

#include <string>
#include <vector>

#include "curves/word.hpp"

namespace curves {

// A compact oriented surface with nonempty boundary, presented as a
// one-vertex ribbon graph: free fundamental group of rank n plus the
// cyclic order in which the 2n loop direction germs (a_k out, A_k back in)
// sit around the base vertex. The stored order is read counterclockwise
// with respect to the surface orientation.
class SurfaceModel {
 public:
  // `order` must list every germ of generators 1..n exactly once.
  static SurfaceModel from_vertex_order(std::vector<Letter> order);

  // Derive the vertex order from a boundary polygon word in which every
  // generator appears exactly twice, once per direction. Walking the
  // polygon corners gives the successor relation succ(inv(c_t)) = c_{t+1};
  // the order is its unique cycle (an error if the relation splits into
  // more than one cycle).
  static SurfaceModel from_surface_word(const Word& w);

  // Genus g surface with one boundary component (rank 2g), derived from
  // the polygon word a1 a2 A1 A2 a3 a4 A3 A4 ...
  static SurfaceModel genus_one_boundary(int genus);

  // Sphere with b >= 2 boundary components (rank b-1): disjoint planar
  // loops, germ order (a1, A1, a2, A2, ...).
  static SurfaceModel punctured_sphere(int boundary);

  int rank() const { return rank_; }
  const std::vector<Letter>& vertex_order() const { return order_; }

  // Position of a germ in the cyclic order, in [0, 2 rank).
  int germ_position(const Letter& l) const;

 private:
  SurfaceModel(int rank, std::vector<Letter> order, std::vector<int> pos)
      : rank_(rank), order_(std::move(order)), position_(std::move(pos)) {}

  int rank_ = 0;
  std::vector<Letter> order_;
  std::vector<int> position_;  // indexed by Letter::key()
};

// Accepted forms:
//   genus:<g>,boundary:1      genus_one_boundary(g)
//   spheres:<b>               punctured_sphere(b)
//   word:<letters>            from_surface_word (word grammar)
//   order:<l1,l2,...>         from_vertex_order (comma-separated germs)
SurfaceModel parse_surface_spec(const std::string& spec);

}  // namespace curves
