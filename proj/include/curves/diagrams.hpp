#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curves/loopops.hpp"
#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

// One chord endpoint: a marked point on circle `circle` (0-based label
// position) sitting in the gap just before letter `slot`. Slot 0 of a
// freshly split circle is its base, the crossing the split happened at.
// Endpoints sharing a gap are unordered; the slide moves make any finer
// order irrelevant for the equality used here.
struct ChordEnd {
  int circle = 0;
  std::size_t slot = 0;
  auto operator<=>(const ChordEnd&) const = default;
};

// Unordered pair of endpoints on distinct circles, stored with a <= b.
struct Chord {
  ChordEnd a;
  ChordEnd b;
  auto operator<=>(const Chord&) const = default;
};

enum class SplitVariant { plus, minus };

// A tuple of labeled circles joined by external chords. Stored canonically:
// every circle word is cyclically reduced (spurs retract, carrying their
// endpoints to the junction gap) and canonically rotated with its endpoints
// transported, and the chord list is sorted. Two diagrams related by
// re-basing circles or by conjugating the whole picture by one element
// therefore compare equal; the comparison stays sufficient, never claims
// completeness for the full diagram relation.
class LabeledDiagram {
 public:
  // Normalizing constructor. Circle words may be unreduced; chord slots
  // refer to the raw letters as given (slot s = gap before letter s,
  // cyclically, so slot 0 is the gap between last and first letter).
  LabeledDiagram(std::vector<std::vector<Letter>> raw_circles, std::vector<Chord> chords);

  // Single chordless circle.
  explicit LabeledDiagram(const CyclicWord& w);

  int circle_count() const { return static_cast<int>(circles_.size()); }
  // Canonical letters of circle at label position `index` (0-based).
  const std::vector<Letter>& circle(int index) const { return circles_.at(static_cast<std::size_t>(index)); }
  const std::vector<Chord>& chords() const { return chords_; }

  // Canonical text form; equal diagrams serialize identically.
  std::string serialize() const;

  bool operator==(const LabeledDiagram&) const = default;

 private:
  std::vector<std::vector<Letter>> circles_;
  std::vector<Chord> chords_;
};

// Crossings of the closed curve carried by circle `index`, as
// orientation-ordered slot pairs (g1, g2): the loop leaving along the
// positive branch of the crossing frame reads from slot g1. Proper powers
// contribute their copy-by-copy crossings and the closing crossings, as in
// mu.
std::vector<std::pair<std::size_t, std::size_t>> circle_crossings(const LabeledDiagram& d,
                                                                  int index,
                                                                  const SurfaceModel& m);

// Split circle `index` at the crossing (g1, g2): the circle is replaced by
// the two halves, the half read from g1 first for `plus` and second for
// `minus`; labels above `index` shift up; a new chord joins the two cut
// points; endpoints in a half stay with it. Exact re-indexing: an endpoint
// of circle `index` at slot s lands on the half [g1..g2) at slot
// (s - g1) mod L when (s - g1) mod L < (g2 - g1) mod L, else on the half
// [g2..g1) at slot (s - g2) mod L. Rejects cuts that are not a crossing of
// the circle.
LabeledDiagram split_circle(const LabeledDiagram& d, int index,
                            std::pair<std::size_t, std::size_t> cuts, SplitVariant v,
                            const SurfaceModel& m);

struct DiagramTerm {
  LabeledDiagram diagram;
  int coefficient = 0;

  bool operator==(const DiagramTerm&) const = default;
};

// Reduced integer combination of diagrams, keyed by canonical form.
class DiagramSum {
 public:
  DiagramSum() = default;

  void add(LabeledDiagram d, int coefficient);
  DiagramSum& operator+=(const DiagramSum& other);

  bool zero() const { return terms_.empty(); }
  // Terms in serialization order.
  std::vector<DiagramTerm> terms() const;

 private:
  std::map<std::string, DiagramTerm> terms_;
};

// mu on the circle labeled `label` (1-based, matching the subscript in the
// identities): sum over its crossings of plus-split minus minus-split.
DiagramSum mu_label(const LabeledDiagram& d, int label, const SurfaceModel& m);
DiagramSum mu_label(const DiagramSum& s, int label, const SurfaceModel& m);

// Swap labels `label`, `label+1` (1-based).
DiagramSum tau_label(const DiagramSum& s, int label);
// Cyclically permute labels label, label+1, label+2: each circle moves one
// label down, the circle at `label` wraps to `label+2`.
DiagramSum omega_label(const DiagramSum& s, int label);

// An ordered tensor of free homotopy classes with a coefficient.
struct MultiTensorTerm {
  std::vector<CyclicWord> factors;
  int coefficient = 0;

  bool operator==(const MultiTensorTerm&) const = default;
};

class TensorSum {
 public:
  TensorSum() = default;

  void add(std::vector<CyclicWord> factors, int coefficient);
  TensorSum& operator+=(const TensorSum& other);

  bool zero() const { return terms_.empty(); }
  std::vector<MultiTensorTerm> terms() const;

  bool operator==(const TensorSum&) const = default;

 private:
  std::map<std::string, MultiTensorTerm> terms_;
};

// Forget the chords: the i-th tensor slot is the class of circle i.
TensorSum erase_chords(const DiagramSum& s);

// Apply the cobracket to tensor slot `label` (1-based), splicing the two
// new factors in place of it.
TensorSum cobracket_factor(const TensorSum& s, int label, const SurfaceModel& m);

}  // namespace curves
