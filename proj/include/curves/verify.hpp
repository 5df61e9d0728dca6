#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

// Three-way outcome for the diagram identities. The combination is reduced
// under the sufficient syntactic equality; a nonzero residue whose erased
// tensor image vanishes is evidence the equality was merely too coarse,
// not that the identity failed.
enum class IdentityOutcome { holds, not_syntactically_zero, identity_violated };

struct IdentityReport {
  IdentityOutcome outcome = IdentityOutcome::holds;
  std::string detail;  // residual terms when not clean, empty otherwise
};

// tau_1 . mu_1 + mu_1 on the single circle w.
IdentityReport verify_coskew(const CyclicWord& w, const SurfaceModel& m);
// (1 + omega_1 + omega_1^2) . mu_2 . mu_1 on the single circle w.
IdentityReport verify_cojacobi(const CyclicWord& w, const SurfaceModel& m);
// erase . mu_1 against cobracket-on-slot-1 . erase on the single circle w.
// Both sides are already chord-free, so the outcome is two-way.
IdentityReport verify_factorization(const CyclicWord& w, const SurfaceModel& m);

// Reference decision procedure: search all conjugators delta with
// |delta| <= max_len for delta x delta^-1 = x2 and delta y delta^-1 = y2.
std::optional<Word> brute_force_simultaneous_conjugacy(const Word& x, const Word& y,
                                                       const Word& x2, const Word& y2,
                                                       int rank, int max_len);

struct SuiteResult {
  int trials = 0;
  int passed = 0;
  // Reproducer inputs for every non-pass, in trial order.
  std::vector<std::string> failures;
  // Diagram suites only: inputs whose residue was nonzero but erased to
  // zero; counted as passes for the identity, recorded as evidence.
  std::vector<std::string> coarse_equality_residues;
};

// suite: coskew | cojacobi | factorization | conjugacy-oracle. Trials run
// concurrently; results and ordering depend only on (suite, m, trials,
// seed).
SuiteResult run_suite(const std::string& suite, const SurfaceModel& m, int trials,
                      std::uint64_t seed);

std::string suite_result_text(const std::string& suite, const SuiteResult& r);

}  // namespace curves
