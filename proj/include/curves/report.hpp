#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curves/loopops.hpp"
#include "curves/surface.hpp"
#include "curves/word.hpp"

namespace curves {

// Everything computed for one class, with the original input texts kept for
// lossless round-tripping. Field names are the stable machine interface.
struct Report {
  std::string word;
  std::string surface;
  std::string cyclic_core;
  std::string primitive_root;
  int exponent = 1;
  std::vector<WedgeTerm> mu_terms;
  int t_mu = 0;
  int min_self_intersection = 0;
  std::vector<TensorTerm> delta_terms;
  bool power_of_simple = false;
  std::vector<std::string> warnings;
  std::optional<std::vector<WedgeTerm>> type2_raw;
};

// Runs the full pipeline and cross-checks the two cobracket paths against
// each other before returning.
Report compute_report(const std::string& word_text, const std::string& surface_text,
                      bool include_type2 = false);

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);

// Bracket command payload.
struct BracketReport {
  std::string word1;
  std::string word2;
  std::string surface;
  std::vector<ClassTerm> terms;
};

BracketReport compute_bracket_report(const std::string& word1_text, const std::string& word2_text,
                                     const std::string& surface_text);
nlohmann::ordered_json bracket_report_to_json(const BracketReport& r);
std::string bracket_report_to_text(const BracketReport& r);

}  // namespace curves
