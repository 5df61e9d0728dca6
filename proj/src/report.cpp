#include "curves/report.hpp"

#include <sstream>

#include "curves/errors.hpp"
#include "curves/freegroup.hpp"

namespace curves {

namespace {

nlohmann::ordered_json wedge_terms_json(const std::vector<WedgeTerm>& terms) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const WedgeTerm& t : terms) {
    nlohmann::ordered_json item;
    item["coefficient"] = t.coefficient;
    item["x"] = to_string(t.x);
    item["y"] = to_string(t.y);
    arr.push_back(std::move(item));
  }
  return arr;
}

std::vector<WedgeTerm> wedge_terms_from_json(const nlohmann::json& arr) {
  std::vector<WedgeTerm> out;
  for (const auto& item : arr) {
    out.push_back(WedgeTerm{parse_word(item.at("x").get<std::string>()),
                            parse_word(item.at("y").get<std::string>()),
                            item.at("coefficient").get<int>()});
  }
  return out;
}

std::string signed_coeff(int c) {
  std::ostringstream os;
  if (c >= 0) os << '+';
  os << c;
  return os.str();
}

}  // namespace

Report compute_report(const std::string& word_text, const std::string& surface_text,
                      bool include_type2) {
  SurfaceModel m = parse_surface_spec(surface_text);
  Word alpha = parse_word(word_text);

  MuResult r = mu(alpha, m, include_type2);
  std::vector<TensorTerm> delta = turaev_cobracket(alpha, m);
  if (delta != turaev_cobracket_direct(alpha, m)) {
    throw InternalError("the two cobracket computations disagree");
  }

  Report out;
  out.word = word_text;
  out.surface = surface_text;
  out.cyclic_core = to_string(cyclic_reduce(alpha).core);
  out.primitive_root = to_string(r.primitive_root);
  out.exponent = r.exponent;
  out.mu_terms = std::move(r.terms);
  out.t_mu = 0;
  for (const WedgeTerm& t : out.mu_terms) {
    out.t_mu += t.coefficient < 0 ? -t.coefficient : t.coefficient;
  }
  if (out.t_mu % 2 != 0) throw InternalError("reduced mu has odd total coefficient mass");
  out.min_self_intersection = out.t_mu / 2 + out.exponent - 1;
  out.delta_terms = std::move(delta);
  out.power_of_simple = out.t_mu == 0;
  out.type2_raw = std::move(r.type2_raw);
  return out;
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["word"] = r.word;
  j["surface"] = r.surface;
  j["cyclic_core"] = r.cyclic_core;
  j["primitive_root"] = r.primitive_root;
  j["exponent"] = r.exponent;
  j["mu_terms"] = wedge_terms_json(r.mu_terms);
  j["t_mu"] = r.t_mu;
  j["min_self_intersection"] = r.min_self_intersection;
  nlohmann::ordered_json delta = nlohmann::ordered_json::array();
  for (const TensorTerm& t : r.delta_terms) {
    nlohmann::ordered_json item;
    item["coefficient"] = t.coefficient;
    item["left"] = to_string(t.left);
    item["right"] = to_string(t.right);
    delta.push_back(std::move(item));
  }
  j["delta_terms"] = std::move(delta);
  j["power_of_simple"] = r.power_of_simple;
  j["warnings"] = r.warnings;
  if (r.type2_raw) j["type2_raw"] = wedge_terms_json(*r.type2_raw);
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.word = j.at("word").get<std::string>();
  r.surface = j.at("surface").get<std::string>();
  r.cyclic_core = j.at("cyclic_core").get<std::string>();
  r.primitive_root = j.at("primitive_root").get<std::string>();
  r.exponent = j.at("exponent").get<int>();
  r.mu_terms = wedge_terms_from_json(j.at("mu_terms"));
  r.t_mu = j.at("t_mu").get<int>();
  r.min_self_intersection = j.at("min_self_intersection").get<int>();
  for (const auto& item : j.at("delta_terms")) {
    r.delta_terms.push_back(
        TensorTerm{CyclicWord(parse_word(item.at("left").get<std::string>())),
                   CyclicWord(parse_word(item.at("right").get<std::string>())),
                   item.at("coefficient").get<int>()});
  }
  r.power_of_simple = j.at("power_of_simple").get<bool>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.contains("type2_raw")) r.type2_raw = wedge_terms_from_json(j.at("type2_raw"));
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "word: " << r.word << "\n";
  os << "surface: " << r.surface << "\n";
  os << "core: " << r.cyclic_core << " = (" << r.primitive_root << ")^" << r.exponent << "\n";
  if (r.mu_terms.empty()) {
    os << "mu: 0\n";
  } else {
    os << "mu:\n";
    for (const WedgeTerm& t : r.mu_terms) {
      os << "  " << signed_coeff(t.coefficient) << " [" << to_string(t.x) << " . "
         << to_string(t.y) << "]\n";
    }
  }
  os << "t(mu): " << r.t_mu << "\n";
  os << "min self-intersections: " << r.min_self_intersection << "\n";
  if (r.delta_terms.empty()) {
    os << "delta: 0\n";
  } else {
    os << "delta:\n";
    for (const TensorTerm& t : r.delta_terms) {
      os << "  " << signed_coeff(t.coefficient) << " [" << to_string(t.left) << "] (x) ["
         << to_string(t.right) << "]\n";
    }
  }
  os << "power of simple: " << (r.power_of_simple ? "yes" : "no") << "\n";
  for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
  if (r.type2_raw) {
    os << "closing-crossing terms before cancellation:\n";
    for (const WedgeTerm& t : *r.type2_raw) {
      os << "  " << signed_coeff(t.coefficient) << " [" << to_string(t.x) << " . "
         << to_string(t.y) << "]\n";
    }
  }
  return os.str();
}

BracketReport compute_bracket_report(const std::string& word1_text, const std::string& word2_text,
                                     const std::string& surface_text) {
  SurfaceModel m = parse_surface_spec(surface_text);
  BracketReport out;
  out.word1 = word1_text;
  out.word2 = word2_text;
  out.surface = surface_text;
  out.terms = goldman_bracket(parse_word(word1_text), parse_word(word2_text), m);
  return out;
}

nlohmann::ordered_json bracket_report_to_json(const BracketReport& r) {
  nlohmann::ordered_json j;
  j["word1"] = r.word1;
  j["word2"] = r.word2;
  j["surface"] = r.surface;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ClassTerm& t : r.terms) {
    nlohmann::ordered_json item;
    item["coefficient"] = t.coefficient;
    item["value"] = to_string(t.value);
    arr.push_back(std::move(item));
  }
  j["terms"] = std::move(arr);
  return j;
}

std::string bracket_report_to_text(const BracketReport& r) {
  std::ostringstream os;
  os << "bracket [" << r.word1 << ", " << r.word2 << "] on " << r.surface << ":\n";
  if (r.terms.empty()) {
    os << "  0\n";
  } else {
    for (const ClassTerm& t : r.terms) {
      os << "  " << signed_coeff(t.coefficient) << " [" << to_string(t.value) << "]\n";
    }
  }
  return os.str();
}

}  // namespace curves
