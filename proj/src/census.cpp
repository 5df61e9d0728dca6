#include "curves/census.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "curves/errors.hpp"
#include "curves/freegroup.hpp"
#include "curves/loopops.hpp"
#include "curves/word.hpp"

namespace curves {

namespace {

void extend(std::vector<Letter>& acc, int rank, int max_len,
            const std::function<void(const std::vector<Letter>&)>& emit) {
  if (!acc.empty()) emit(acc);
  if (static_cast<int>(acc.size()) >= max_len) return;
  for (int key = 0; key < 2 * rank; ++key) {
    Letter l(key / 2 + 1, key % 2 == 0 ? +1 : -1);
    if (!acc.empty() && l == acc.back().inverse()) continue;
    acc.push_back(l);
    extend(acc, rank, max_len, emit);
    acc.pop_back();
  }
}

bool is_canonical_core(const std::vector<Letter>& letters) {
  if (letters.front() == letters.back().inverse()) return false;
  CyclicWord c{Word(std::vector<Letter>(letters))};
  return c.letters() == letters;
}

struct CensusRow {
  std::string line;
  bool power_of_simple = false;
  bool mu_zero = false;
  bool delta_zero = false;
};

CensusRow evaluate(const std::string& word_text, const std::string& core_text,
                   const SurfaceModel& m) {
  Word alpha = parse_word(word_text);
  MuResult r = mu(alpha, m);
  std::vector<TensorTerm> delta = turaev_cobracket(alpha, m);

  CensusRow row;
  row.mu_zero = r.terms.empty();
  row.delta_zero = delta.empty();
  row.power_of_simple = r.t() == 0;

  nlohmann::ordered_json j;
  j["word"] = word_text;
  j["core"] = core_text;
  j["root"] = to_string(r.primitive_root);
  j["exponent"] = r.exponent;
  j["t_mu"] = r.t();
  j["m"] = r.t() / 2 + r.exponent - 1;
  j["power_of_simple"] = row.power_of_simple;
  j["mu_zero"] = row.mu_zero;
  j["delta_zero"] = row.delta_zero;
  j["delta_zero_mu_nonzero"] = row.delta_zero && !row.mu_zero;
  row.line = j.dump();
  return row;
}

}  // namespace

std::vector<std::string> enumerate_canonical_cores(const SurfaceModel& m, int max_len,
                                                   bool identify_inverses) {
  std::vector<std::string> out;
  std::vector<Letter> acc;
  extend(acc, m.rank(), max_len, [&](const std::vector<Letter>& letters) {
    if (!is_canonical_core(letters)) return;
    Word w{std::vector<Letter>(letters)};
    if (identify_inverses) {
      std::string mine = to_string(w);
      std::string other = to_string(CyclicWord(invert(w)));
      if (other < mine) return;
    }
    out.push_back(to_string(w));
  });
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

CensusSummary run_census(const CensusOptions& options) {
  SurfaceModel m = parse_surface_spec(options.surface_spec);
  if (options.out_path.empty()) throw DomainError("census requires an output path");
  if ((options.max_len > 0) == options.input_words.has_value()) {
    throw DomainError("census takes exactly one of a length bound or an input word list");
  }

  // (word text shown in output, canonical core text) per class, one
  // representative per core, sorted by (core length, core text).
  std::vector<std::pair<std::string, std::string>> items;
  if (options.input_words) {
    std::map<std::string, std::string> by_core;
    for (const std::string& text : *options.input_words) {
      Word w = parse_word(text);
      if (w.empty()) throw DomainError("census word is trivial: " + text);
      std::string core = to_string(cyclic_reduce(w).core);
      if (options.identify_inverses) {
        std::string other = to_string(CyclicWord(invert(w)));
        if (other < core) core = other;
      }
      by_core.try_emplace(core, text);
    }
    for (auto& [core, text] : by_core) items.emplace_back(text, core);
  } else {
    for (std::string& core : enumerate_canonical_cores(m, options.max_len,
                                                       options.identify_inverses)) {
      items.emplace_back(core, core);
    }
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });

  // Evaluate concurrently in fixed chunks; emission order is the sorted
  // item order regardless of scheduling.
  std::vector<CensusRow> rows(items.size());
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t chunk = (items.size() + workers - 1) / std::max<std::size_t>(1, workers);
  std::vector<std::future<void>> futures;
  for (std::size_t begin = 0; begin < items.size(); begin += chunk) {
    std::size_t end = std::min(items.size(), begin + chunk);
    futures.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        rows[i] = evaluate(items[i].first, items[i].second, m);
      }
    }));
  }
  for (std::future<void>& f : futures) f.get();

  std::ofstream out(options.out_path);
  if (!out) throw DomainError("cannot open census output file: " + options.out_path);
  CensusSummary summary;
  for (const CensusRow& row : rows) {
    out << row.line << "\n";
    ++summary.classes;
    summary.power_of_simple += row.power_of_simple;
    summary.mu_zero += row.mu_zero;
    summary.delta_zero += row.delta_zero;
    summary.delta_zero_mu_nonzero += row.delta_zero && !row.mu_zero;
  }
  out.flush();
  if (!out) throw DomainError("failed writing census output file: " + options.out_path);
  return summary;
}

std::string census_summary_text(const CensusSummary& s) {
  std::ostringstream os;
  os << "classes: " << s.classes << "\n";
  os << "power_of_simple: " << s.power_of_simple << "\n";
  os << "mu_zero: " << s.mu_zero << "\n";
  os << "delta_zero: " << s.delta_zero << "\n";
  os << "delta_zero_mu_nonzero: " << s.delta_zero_mu_nonzero << "\n";
  return os.str();
}

}  // namespace curves

