#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curves/surface.hpp"

namespace curves {

struct CensusOptions {
  std::string surface_spec = "genus:1,boundary:1";
  // Exactly one source: enumerate all classes with core length <= max_len,
  // or take explicit words from input_words.
  int max_len = 0;
  std::optional<std::vector<std::string>> input_words;
  std::string out_path;
  // Keep one representative per {class, inverse class} pair.
  bool identify_inverses = false;
};

struct CensusSummary {
  long long classes = 0;
  long long power_of_simple = 0;
  long long mu_zero = 0;
  long long delta_zero = 0;
  long long delta_zero_mu_nonzero = 0;
};

// Writes one JSON line per class to out_path, sorted by (core length,
// core text); returns the summary. Items are evaluated concurrently but
// the output order and bytes are invocation-independent.
CensusSummary run_census(const CensusOptions& options);

std::string census_summary_text(const CensusSummary& s);

// All cyclically reduced canonical words of length 1..max_len over the
// model's generators, one per rotation class (optionally per
// rotation-or-inversion class), sorted by (length, text).
std::vector<std::string> enumerate_canonical_cores(const SurfaceModel& m, int max_len,
                                                   bool identify_inverses);

}  // namespace curves
