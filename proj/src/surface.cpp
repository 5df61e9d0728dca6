#include "curves/surface.hpp"

#include <algorithm>

#include "curves/errors.hpp"

namespace curves {

namespace {

std::vector<int> build_positions(const std::vector<Letter>& order) {
  std::vector<int> pos(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int k = order[i].key();
    if (k < 0 || static_cast<std::size_t>(k) >= order.size() || pos[k] != -1) {
      throw ParseError("vertex order must list each germ exactly once");
    }
    pos[k] = static_cast<int>(i);
  }
  return pos;
}

}  // namespace

SurfaceModel SurfaceModel::from_vertex_order(std::vector<Letter> order) {
  if (order.empty() || order.size() % 2 != 0) {
    throw ParseError("vertex order must list 2n germs");
  }
  int rank = 0;
  for (const Letter& l : order) rank = std::max(rank, l.gen);
  if (static_cast<std::size_t>(2 * rank) != order.size()) {
    throw ParseError("vertex order must cover generators 1..n with both directions");
  }
  std::vector<int> pos = build_positions(order);
  return SurfaceModel(rank, std::move(order), std::move(pos));
}

SurfaceModel SurfaceModel::from_surface_word(const Word& w) {
  const std::vector<Letter>& c = w.letters();
  if (c.empty() || c.size() % 2 != 0) throw ParseError("surface word must have length 2n");
  int rank = w.max_generator();
  if (c.size() != static_cast<std::size_t>(2 * rank)) {
    throw ParseError("surface word must use each generator exactly twice");
  }
  const std::size_t m = c.size();
  // succ over germ keys; -1 = unset.
  std::vector<int> succ(m, -1);
  for (std::size_t t = 0; t < m; ++t) {
    int from = c[t].inverse().key();
    if (static_cast<std::size_t>(from) >= m) {
      throw ParseError("surface word generators must be 1..n");
    }
    if (succ[from] != -1) {
      throw ParseError("surface word must use each generator once per direction");
    }
    succ[from] = c[(t + 1) % m].key();
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (succ[k] == -1) {
      throw ParseError("surface word must use each generator once per direction");
    }
  }
  std::vector<Letter> order;
  order.reserve(m);
  std::vector<bool> seen(m, false);
  int cur = c[0].key();
  for (std::size_t step = 0; step < m; ++step) {
    if (seen[static_cast<std::size_t>(cur)]) {
      throw ParseError("surface word does not describe a one-vertex surface");
    }
    seen[static_cast<std::size_t>(cur)] = true;
    order.push_back(Letter(cur / 2 + 1, cur % 2 == 0 ? 1 : -1));
    cur = succ[static_cast<std::size_t>(cur)];
  }
  if (cur != c[0].key()) throw InternalError("successor walk did not close up");
  return from_vertex_order(std::move(order));
}

SurfaceModel SurfaceModel::genus_one_boundary(int genus) {
  if (genus < 1) throw ParseError("genus must be >= 1");
  std::vector<Letter> w;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    w.emplace_back(a, 1);
    w.emplace_back(b, 1);
    w.emplace_back(a, -1);
    w.emplace_back(b, -1);
  }
  return from_surface_word(Word(std::move(w)));
}

SurfaceModel SurfaceModel::punctured_sphere(int boundary) {
  if (boundary < 2) throw ParseError("sphere needs at least 2 boundary components");
  std::vector<Letter> order;
  for (int k = 1; k < boundary; ++k) {
    order.emplace_back(k, 1);
    order.emplace_back(k, -1);
  }
  return from_vertex_order(std::move(order));
}

int SurfaceModel::germ_position(const Letter& l) const {
  int k = l.key();
  if (k < 0 || static_cast<std::size_t>(k) >= position_.size()) {
    throw DomainError("generator index out of range for this surface");
  }
  return position_[static_cast<std::size_t>(k)];
}

SurfaceModel parse_surface_spec(const std::string& spec) {
  const auto starts_with = [&](const char* p) { return spec.rfind(p, 0) == 0; };
  if (starts_with("genus:")) {
    std::string rest = spec.substr(6);
    std::size_t comma = rest.find(',');
    if (comma == std::string::npos || rest.substr(comma) != ",boundary:1") {
      throw ParseError("genus form is genus:<g>,boundary:1");
    }
    int g = 0;
    try {
      std::size_t used = 0;
      g = std::stoi(rest.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad genus value in \"" + spec + "\"");
    }
    return SurfaceModel::genus_one_boundary(g);
  }
  if (starts_with("spheres:")) {
    int b = 0;
    try {
      std::string rest = spec.substr(8);
      std::size_t used = 0;
      b = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad boundary count in \"" + spec + "\"");
    }
    return SurfaceModel::punctured_sphere(b);
  }
  if (starts_with("word:")) {
    return SurfaceModel::from_surface_word(parse_word(spec.substr(5)));
  }
  if (starts_with("order:")) {
    std::string rest = spec.substr(6);
    std::vector<Letter> order;
    std::size_t i = 0;
    while (i <= rest.size()) {
      std::size_t j = rest.find(',', i);
      if (j == std::string::npos) j = rest.size();
      Word tok = parse_word(rest.substr(i, j - i));
      if (tok.size() != 1) throw ParseError("order entries must be single germs");
      order.push_back(tok[0]);
      i = j + 1;
      if (j == rest.size()) break;
    }
    return SurfaceModel::from_vertex_order(std::move(order));
  }
  throw ParseError("unknown surface spec \"" + spec +
                   "\" (expected genus:<g>,boundary:1 | spheres:<b> | word:<letters> | "
                   "order:<germs>)");
}

}  // namespace curves
