#pragma once

#include <optional>
#include <vector>

#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

// One summand c * [x . y]: a wedge of two based loops joined at a crossing,
// the first loop x leaving along the positive branch of the frame. Equality
// of the underlying classes is simultaneous conjugacy of (x, y).
struct WedgeTerm {
  Word x;
  Word y;
  int coefficient = 0;
};

// c * [left] (x) [right], both factors free homotopy classes.
struct TensorTerm {
  CyclicWord left;
  CyclicWord right;
  int coefficient = 0;

  bool operator==(const TensorTerm&) const = default;
};

// c * [value], a free homotopy class summand.
struct ClassTerm {
  CyclicWord value;
  int coefficient = 0;

  bool operator==(const ClassTerm&) const = default;
};

bool wedge_classes_equal(const WedgeTerm& a, const WedgeTerm& b);

struct MuResult {
  std::vector<WedgeTerm> terms;  // reduced combination, deterministic order
  Word primitive_root;           // root of the input class
  int exponent = 1;              // input = root^exponent
  // The always-cancelling terms contributed by the n-1 closing crossings
  // of a proper power, before reduction. Present only when requested.
  std::optional<std::vector<WedgeTerm>> type2_raw;

  // Sum of |coefficient| over the reduced combination.
  int t() const;
};

// The unsmoothed self-intersection sum: one +/- wedge pair per crossing of
// the taut representative, reduced by simultaneous conjugacy. Zero exactly
// on powers of simple classes. Pre: alpha nontrivial.
MuResult mu(const Word& alpha, const SurfaceModel& m, bool keep_type2 = false);

// Smoothing a wedge at its crossing: c * [x . y] -> c * [x] (x) [y].
TensorTerm q_smooth(const WedgeTerm& t);

// Cobracket delta(alpha): smooth-and-tensor applied to mu (the factored
// path).
std::vector<TensorTerm> turaev_cobracket(const Word& alpha, const SurfaceModel& m);

// Same value computed without building wedge classes: each crossing is
// tensored directly and the combination reduced componentwise. Must agree
// with turaev_cobracket; kept separate to cross-check the reduction
// machinery.
std::vector<TensorTerm> turaev_cobracket_direct(const Word& alpha, const SurfaceModel& m);

// Goldman bracket [alpha, beta]: one signed class per crossing between the
// taut representatives, value [loop of alpha at p . loop of beta at p].
std::vector<ClassTerm> goldman_bracket(const Word& alpha, const Word& beta,
                                       const SurfaceModel& m);

// t(mu)/2 + n - 1 where alpha is an n-th power of its primitive root.
int minimal_self_intersection(const Word& alpha, const SurfaceModel& m);

// True iff mu(alpha) reduces to zero.
bool is_power_of_simple(const Word& alpha, const SurfaceModel& m);

// The crossing list behind mu/cobracket: one orientation-ordered based
// pair (first loop on the positive branch) per crossing of the taut
// representative of core, including the n-1 closing crossings of a proper
// power (listed last). Exposed for the dual-path cobracket and the
// diagram calculus.
std::vector<std::pair<Word, Word>> mu_points(const CyclicWord& core, const SurfaceModel& m);

// The same crossings as slot pairs (g1, g2) on core: the loop on the
// positive branch reads core[g1..g2). Closing crossings of a power last.
std::vector<std::pair<std::size_t, std::size_t>> crossing_slot_pairs(const CyclicWord& core,
                                                                     const SurfaceModel& m);

// Reduce a wedge combination by simultaneous conjugacy (exact merges
// first, then pairwise class tests within buckets). Deterministic order.
std::vector<WedgeTerm> reduce_wedge_combination(std::vector<WedgeTerm> terms);

}  // namespace curves
