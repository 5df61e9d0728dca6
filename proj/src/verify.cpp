#include "curves/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "curves/diagrams.hpp"
#include "curves/errors.hpp"
#include "curves/freegroup.hpp"
#include "curves/random_words.hpp"

namespace curves {

namespace {

std::string residue_text(const DiagramSum& s) {
  std::ostringstream os;
  for (const DiagramTerm& t : s.terms()) {
    os << (t.coefficient >= 0 ? "+" : "") << t.coefficient << " {" << t.diagram.serialize()
       << "} ";
  }
  return os.str();
}

IdentityReport judge(const DiagramSum& residual) {
  if (residual.zero()) return {IdentityOutcome::holds, ""};
  if (erase_chords(residual).zero()) {
    return {IdentityOutcome::not_syntactically_zero, residue_text(residual)};
  }
  return {IdentityOutcome::identity_violated, residue_text(residual)};
}

}  // namespace

IdentityReport verify_coskew(const CyclicWord& w, const SurfaceModel& m) {
  LabeledDiagram d(w);
  DiagramSum mu1 = mu_label(d, 1, m);
  DiagramSum residual = tau_label(mu1, 1);
  residual += mu1;
  return judge(residual);
}

IdentityReport verify_cojacobi(const CyclicWord& w, const SurfaceModel& m) {
  LabeledDiagram d(w);
  DiagramSum mu21 = mu_label(mu_label(d, 1, m), 2, m);
  DiagramSum residual = mu21;
  DiagramSum rotated = omega_label(mu21, 1);
  residual += rotated;
  residual += omega_label(rotated, 1);
  return judge(residual);
}

IdentityReport verify_factorization(const CyclicWord& w, const SurfaceModel& m) {
  LabeledDiagram d(w);
  TensorSum lhs = erase_chords(mu_label(d, 1, m));

  TensorSum start;
  start.add({w}, 1);
  TensorSum rhs = cobracket_factor(start, 1, m);

  if (lhs == rhs) return {IdentityOutcome::holds, ""};
  std::ostringstream os;
  os << "erase(mu):";
  for (const MultiTensorTerm& t : lhs.terms()) {
    os << ' ' << (t.coefficient >= 0 ? "+" : "") << t.coefficient << " [";
    for (const CyclicWord& f : t.factors) os << to_string(f) << ' ';
    os << ']';
  }
  os << " vs cobracket(erase):";
  for (const MultiTensorTerm& t : rhs.terms()) {
    os << ' ' << (t.coefficient >= 0 ? "+" : "") << t.coefficient << " [";
    for (const CyclicWord& f : t.factors) os << to_string(f) << ' ';
    os << ']';
  }
  return {IdentityOutcome::identity_violated, os.str()};
}

std::optional<Word> brute_force_simultaneous_conjugacy(const Word& x, const Word& y,
                                                       const Word& x2, const Word& y2,
                                                       int rank, int max_len) {
  std::optional<Word> found;
  std::vector<Letter> acc;
  // Depth-first by prefix; the shortest witness in generator order wins
  // because candidates are checked before being extended.
  std::function<void()> walk = [&] {
    if (found) return;
    Word delta{std::vector<Letter>(acc)};
    if (conjugate(delta, x) == x2 && conjugate(delta, y) == y2) {
      found = delta;
      return;
    }
    if (static_cast<int>(acc.size()) >= max_len) return;
    for (int key = 0; key < 2 * rank; ++key) {
      Letter l(key / 2 + 1, key % 2 == 0 ? +1 : -1);
      if (!acc.empty() && l == acc.back().inverse()) continue;
      acc.push_back(l);
      walk();
      acc.pop_back();
      if (found) return;
    }
  };
  walk();
  return found;
}

namespace {

std::string outcome_name(IdentityOutcome o) {
  switch (o) {
    case IdentityOutcome::holds:
      return "holds";
    case IdentityOutcome::not_syntactically_zero:
      return "not syntactically zero";
    case IdentityOutcome::identity_violated:
      return "identity violated";
  }
  return "?";
}

SuiteResult run_identity_suite(const std::string& suite, const SurfaceModel& m, int trials,
                               std::uint64_t seed) {
  SuiteResult out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + 1000003ULL * static_cast<std::uint64_t>(t));
    int len = 1 + static_cast<int>(rng.below(8));
    CyclicWord w = random_cyclically_reduced_word(rng, m.rank(), len);
    IdentityReport rep;
    if (suite == "coskew") {
      rep = verify_coskew(w, m);
    } else if (suite == "cojacobi") {
      rep = verify_cojacobi(w, m);
    } else {
      rep = verify_factorization(w, m);
    }
    if (rep.outcome == IdentityOutcome::holds) {
      ++out.passed;
    } else {
      if (rep.outcome == IdentityOutcome::not_syntactically_zero) {
        out.coarse_equality_residues.push_back(to_string(w));
      }
      out.failures.push_back(to_string(w) + " [" + outcome_name(rep.outcome) +
                             "] " + rep.detail);
    }
  }
  return out;
}

// Agreement protocol: a positive answer must come with a valid conjugator
// (checked directly, so a witness longer than the brute-force cap cannot
// cause a spurious mismatch); a negative answer must not be contradicted
// by the bounded search, and planted instances must come back positive.
SuiteResult run_conjugacy_suite(const SurfaceModel& m, int trials, std::uint64_t seed) {
  SuiteResult out;
  out.trials = trials;
  const int rank = m.rank();
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + 1000003ULL * static_cast<std::uint64_t>(t));
    Word x = random_reduced_word(rng, rank, 1 + static_cast<int>(rng.below(5)));
    Word y = random_reduced_word(rng, rank, 1 + static_cast<int>(rng.below(5)));
    bool planted = t % 2 == 0;
    Word x2, y2;
    if (planted) {
      Word delta0 = random_reduced_word(rng, rank, static_cast<int>(rng.below(4)));
      x2 = conjugate(delta0, x);
      y2 = conjugate(delta0, y);
    } else {
      x2 = random_reduced_word(rng, rank, 1 + static_cast<int>(rng.below(5)));
      y2 = random_reduced_word(rng, rank, 1 + static_cast<int>(rng.below(5)));
    }

    std::optional<Word> fast = simultaneous_conjugacy(x, y, x2, y2);
    std::optional<Word> slow = brute_force_simultaneous_conjugacy(x, y, x2, y2, rank, 6);

    std::string instance = to_string(x) + " , " + to_string(y) + " -> " + to_string(x2) +
                           " , " + to_string(y2);
    bool ok;
    if (fast) {
      ok = conjugate(*fast, x) == x2 && conjugate(*fast, y) == y2;
      if (!ok) instance += " : invalid witness " + to_string(*fast);
    } else {
      ok = !slow && !planted;
      if (slow) instance += " : missed witness " + to_string(*slow);
      if (planted) instance += " : missed planted instance";
    }
    if (ok) {
      ++out.passed;
    } else {
      out.failures.push_back(instance);
    }
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const SurfaceModel& m, int trials,
                      std::uint64_t seed) {
  if (trials < 0) throw DomainError("trial count must be nonnegative");
  if (suite == "coskew" || suite == "cojacobi" || suite == "factorization") {
    return run_identity_suite(suite, m, trials, seed);
  }
  if (suite == "conjugacy-oracle") {
    return run_conjugacy_suite(m, trials, seed);
  }
  throw DomainError("unknown suite: " + suite);
}

std::string suite_result_text(const std::string& suite, const SuiteResult& r) {
  std::ostringstream os;
  os << "suite " << suite << ": " << r.passed << "/" << r.trials << " pass\n";
  for (const std::string& f : r.failures) os << "fail: " << f << "\n";
  if (!r.coarse_equality_residues.empty()) {
    os << "inputs with nonzero syntactic residue erasing to zero: "
       << r.coarse_equality_residues.size() << "\n";
  }
  return os.str();
}

}  // namespace curves
