#include "curves/loopops.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "curves/errors.hpp"
#include "curves/freegroup.hpp"
#include "curves/intersections.hpp"

namespace curves {

bool wedge_classes_equal(const WedgeTerm& a, const WedgeTerm& b) {
  return simultaneous_conjugacy(a.x, a.y, b.x, b.y).has_value();
}

int MuResult::t() const {
  int sum = 0;
  for (const WedgeTerm& w : terms) sum += w.coefficient < 0 ? -w.coefficient : w.coefficient;
  return sum;
}

namespace {

struct SlotPairSets {
  std::vector<std::pair<std::size_t, std::size_t>> type1;
  std::vector<std::pair<std::size_t, std::size_t>> type2;
};

// Crossings of the taut representative of core = rho^k. Each self-crossing
// of rho recurs k*k times across the copies; the copies also cross each
// other k-1 times where the traversal closes up (the type-2 points, pinned
// at strand 0 of the canonical rotation).
SlotPairSets enumerate_slot_pairs(const CyclicWord& core, const SurfaceModel& m) {
  SlotPairSets out;
  const std::size_t p = core.period();
  const int k = static_cast<int>(core.size() / p);
  Word rho_based(std::vector<Letter>(core.letters().begin(),
                                     core.letters().begin() + static_cast<long>(p)));
  CyclicWord rho(rho_based);
  if (!(Word(std::vector<Letter>(rho.letters())) == rho_based)) {
    throw InternalError("canonical rotation of a power is not periodic-aligned");
  }
  for (const LinkedPair& pr : self_linked_pairs(rho, m)) {
    // Orientation-order the pair: first loop on the positive branch.
    std::size_t g1 = static_cast<std::size_t>(pr.i), g2 = static_cast<std::size_t>(pr.j);
    if (pr.sign < 0) std::swap(g1, g2);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        out.type1.emplace_back(g1 + static_cast<std::size_t>(a) * p,
                               g2 + static_cast<std::size_t>(b) * p);
      }
    }
  }
  for (int c = 1; c < k; ++c) {
    out.type2.emplace_back(0, static_cast<std::size_t>(c) * p);
  }
  return out;
}

struct PointSets {
  std::vector<std::pair<Word, Word>> type1;
  std::vector<std::pair<Word, Word>> type2;
};

PointSets enumerate_points(const CyclicWord& core, const SurfaceModel& m) {
  SlotPairSets slots = enumerate_slot_pairs(core, m);
  PointSets out;
  for (const auto& [i, j] : slots.type1) out.type1.emplace_back(core.segment(i, j), core.segment(j, i));
  for (const auto& [i, j] : slots.type2) out.type2.emplace_back(core.segment(i, j), core.segment(j, i));
  return out;
}

CyclicDecomposition decompose(const Word& alpha, const SurfaceModel& m, const char* op) {
  if (alpha.empty()) throw DomainError(std::string(op) + ": trivial class");
  if (alpha.max_generator() > m.rank()) {
    throw DomainError(std::string(op) + ": generator index out of range for this surface");
  }
  CyclicDecomposition dec = cyclic_reduce(alpha);
  if (dec.core.empty()) throw DomainError(std::string(op) + ": trivial class");
  return dec;
}

std::string wedge_key(const WedgeTerm& t) { return to_string(t.x) + "|" + to_string(t.y); }

std::vector<TensorTerm> reduce_tensor_combination(std::vector<TensorTerm> terms) {
  std::map<std::string, std::size_t> index;
  std::vector<TensorTerm> out;
  for (TensorTerm& t : terms) {
    if (t.coefficient == 0) continue;
    std::string key = to_string(t.left) + "|" + to_string(t.right);
    auto [it, fresh] = index.try_emplace(key, out.size());
    if (fresh) {
      out.push_back(std::move(t));
    } else {
      out[it->second].coefficient += t.coefficient;
    }
  }
  std::erase_if(out, [](const TensorTerm& t) { return t.coefficient == 0; });
  std::sort(out.begin(), out.end(), [](const TensorTerm& a, const TensorTerm& b) {
    return std::tuple(a.left.size(), a.right.size(), to_string(a.left), to_string(a.right)) <
           std::tuple(b.left.size(), b.right.size(), to_string(b.left), to_string(b.right));
  });
  return out;
}

}  // namespace

std::vector<WedgeTerm> reduce_wedge_combination(std::vector<WedgeTerm> terms) {
  // Exact merges first: repeated based pairs are common (power copies).
  std::map<std::string, std::size_t> index;
  std::vector<WedgeTerm> exact;
  for (WedgeTerm& t : terms) {
    if (t.coefficient == 0) continue;
    auto [it, fresh] = index.try_emplace(wedge_key(t), exact.size());
    if (fresh) {
      exact.push_back(std::move(t));
    } else {
      exact[it->second].coefficient += t.coefficient;
    }
  }
  // Class merges only make sense inside buckets with equal componentwise
  // conjugacy classes; simultaneous conjugacy refines that.
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    if (exact[i].coefficient == 0) continue;
    buckets[to_string(CyclicWord(exact[i].x)) + "|" + to_string(CyclicWord(exact[i].y))]
        .push_back(i);
  }
  std::vector<WedgeTerm> out;
  for (const auto& [key, idxs] : buckets) {
    std::vector<WedgeTerm> reps;
    for (std::size_t i : idxs) {
      bool merged = false;
      for (WedgeTerm& r : reps) {
        if (wedge_classes_equal(exact[i], r)) {
          r.coefficient += exact[i].coefficient;
          merged = true;
          break;
        }
      }
      if (!merged) reps.push_back(exact[i]);
    }
    for (WedgeTerm& r : reps) {
      if (r.coefficient != 0) out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const WedgeTerm& a, const WedgeTerm& b) {
    return std::tuple(a.x.size(), a.y.size(), to_string(a.x), to_string(a.y)) <
           std::tuple(b.x.size(), b.y.size(), to_string(b.x), to_string(b.y));
  });
  return out;
}

std::vector<std::pair<Word, Word>> mu_points(const CyclicWord& core, const SurfaceModel& m) {
  if (core.empty()) throw DomainError("mu_points: trivial class");
  PointSets p = enumerate_points(core, m);
  std::vector<std::pair<Word, Word>> out = std::move(p.type1);
  out.insert(out.end(), p.type2.begin(), p.type2.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> crossing_slot_pairs(const CyclicWord& core,
                                                                     const SurfaceModel& m) {
  if (core.empty()) throw DomainError("crossing_slot_pairs: trivial class");
  SlotPairSets p = enumerate_slot_pairs(core, m);
  std::vector<std::pair<std::size_t, std::size_t>> out = std::move(p.type1);
  out.insert(out.end(), p.type2.begin(), p.type2.end());
  return out;
}

MuResult mu(const Word& alpha, const SurfaceModel& m, bool keep_type2) {
  CyclicDecomposition dec = decompose(alpha, m, "mu");
  const std::size_t p = dec.core.period();
  PointSets pts = enumerate_points(dec.core, m);

  std::vector<WedgeTerm> all;
  all.reserve(2 * (pts.type1.size() + pts.type2.size()));
  for (const auto& [x, y] : pts.type1) {
    all.push_back(WedgeTerm{x, y, +1});
    all.push_back(WedgeTerm{y, x, -1});
  }
  std::vector<WedgeTerm> t2;
  for (const auto& [x, y] : pts.type2) {
    t2.push_back(WedgeTerm{x, y, +1});
    t2.push_back(WedgeTerm{y, x, -1});
  }
  all.insert(all.end(), t2.begin(), t2.end());

  MuResult r;
  r.terms = reduce_wedge_combination(std::move(all));
  Word root_based(std::vector<Letter>(dec.core.letters().begin(),
                                      dec.core.letters().begin() + static_cast<long>(p)));
  r.primitive_root = conjugate(dec.conjugator, root_based);
  r.exponent = static_cast<int>(dec.core.size() / p);
  if (keep_type2) r.type2_raw = std::move(t2);
  return r;
}

TensorTerm q_smooth(const WedgeTerm& t) {
  return TensorTerm{CyclicWord(t.x), CyclicWord(t.y), t.coefficient};
}

std::vector<TensorTerm> turaev_cobracket(const Word& alpha, const SurfaceModel& m) {
  MuResult r = mu(alpha, m);
  std::vector<TensorTerm> terms;
  terms.reserve(r.terms.size());
  for (const WedgeTerm& w : r.terms) terms.push_back(q_smooth(w));
  return reduce_tensor_combination(std::move(terms));
}

std::vector<TensorTerm> turaev_cobracket_direct(const Word& alpha, const SurfaceModel& m) {
  CyclicDecomposition dec = decompose(alpha, m, "turaev_cobracket");
  std::vector<TensorTerm> terms;
  for (const auto& [x, y] : mu_points(dec.core, m)) {
    CyclicWord cx(x), cy(y);
    terms.push_back(TensorTerm{cx, cy, +1});
    terms.push_back(TensorTerm{cy, cx, -1});
  }
  return reduce_tensor_combination(std::move(terms));
}

std::vector<ClassTerm> goldman_bracket(const Word& alpha, const Word& beta,
                                       const SurfaceModel& m) {
  CyclicDecomposition da = decompose(alpha, m, "goldman_bracket");
  CyclicDecomposition db = decompose(beta, m, "goldman_bracket");
  std::map<std::string, std::size_t> index;
  std::vector<ClassTerm> out;
  for (const CrossPair& p : cross_linked_pairs(da.core, db.core, m)) {
    CyclicWord cls(multiply(da.core.based_word(static_cast<std::size_t>(p.i)),
                            db.core.based_word(static_cast<std::size_t>(p.j))));
    std::string key = to_string(cls);
    auto [it, fresh] = index.try_emplace(key, out.size());
    if (fresh) {
      out.push_back(ClassTerm{cls, p.sign});
    } else {
      out[it->second].coefficient += p.sign;
    }
  }
  std::erase_if(out, [](const ClassTerm& t) { return t.coefficient == 0; });
  std::sort(out.begin(), out.end(), [](const ClassTerm& a, const ClassTerm& b) {
    return std::tuple(a.value.size(), to_string(a.value)) <
           std::tuple(b.value.size(), to_string(b.value));
  });
  return out;
}

int minimal_self_intersection(const Word& alpha, const SurfaceModel& m) {
  MuResult r = mu(alpha, m);
  int t = r.t();
  if (t % 2 != 0) throw InternalError("reduced mu has odd total coefficient mass");
  return t / 2 + r.exponent - 1;
}

bool is_power_of_simple(const Word& alpha, const SurfaceModel& m) {
  return mu(alpha, m).t() == 0;
}

}  // namespace curves
