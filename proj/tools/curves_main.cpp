#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curves/census.hpp"
#include "curves/errors.hpp"
#include "curves/report.hpp"
#include "curves/surface.hpp"
#include "curves/verify.hpp"

namespace {

constexpr const char* kDefaultSurface = "genus:1,boundary:1";

int run(int argc, char** argv) {
  CLI::App app{
      "operations on free homotopy classes of loops on a surface with boundary:\n"
      "self-intersection counts, the bracket and cobracket, and identity checks"};
  app.require_subcommand(1);

  std::string surface = kDefaultSurface;
  std::string word;
  std::string format = "json";
  bool include_type2 = false;
  CLI::App* compute = app.add_subcommand("compute", "full report for one class");
  compute->add_option("--surface", surface, "surface spec")->capture_default_str();
  compute->add_option("--word", word, "class as a word in the generators")->required();
  compute->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  compute->add_flag("--include-type2", include_type2,
                    "also list the closing-crossing terms of a power before cancellation");

  std::string b_surface = kDefaultSurface;
  std::vector<std::string> b_words;
  std::string b_format = "json";
  CLI::App* bracket = app.add_subcommand("bracket", "bracket of two classes");
  bracket->add_option("--surface", b_surface, "surface spec")->capture_default_str();
  bracket->add_option("--words", b_words, "the two words")->expected(2)->required();
  bracket->add_option("--format", b_format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string c_surface = kDefaultSurface;
  int max_len = 0;
  std::string input_path;
  std::string out_path;
  bool identify_inverses = false;
  CLI::App* census = app.add_subcommand("census", "batch report over many classes, JSONL");
  census->add_option("--surface", c_surface, "surface spec")->capture_default_str();
  CLI::Option* opt_len =
      census->add_option("--max-len", max_len, "enumerate all cores up to this length");
  CLI::Option* opt_in =
      census->add_option("--input", input_path, "file with one word per line instead");
  opt_len->excludes(opt_in);
  census->add_option("--out", out_path, "output JSONL path")->required();
  census->add_flag("--identify-inverses", identify_inverses,
                   "keep one representative per inverse pair");

  std::string suite;
  int trials = 200;
  std::uint64_t seed = 1;
  std::string v_surface = kDefaultSurface;
  CLI::App* verify = app.add_subcommand("verify", "randomized identity and oracle suites");
  verify->add_option("--suite", suite, "which suite")
      ->check(CLI::IsMember({"coskew", "cojacobi", "factorization", "conjugacy-oracle"}))
      ->required();
  verify->add_option("--trials", trials, "trial count")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--surface", v_surface, "surface spec")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) {
    curves::Report r = curves::compute_report(word, surface, include_type2);
    if (format == "json") {
      std::cout << curves::report_to_json(r).dump(2) << "\n";
    } else {
      std::cout << curves::report_to_text(r);
    }
    return 0;
  }
  if (bracket->parsed()) {
    curves::BracketReport r = curves::compute_bracket_report(b_words[0], b_words[1], b_surface);
    if (b_format == "json") {
      std::cout << curves::bracket_report_to_json(r).dump(2) << "\n";
    } else {
      std::cout << curves::bracket_report_to_text(r);
    }
    return 0;
  }
  if (census->parsed()) {
    curves::CensusOptions options;
    options.surface_spec = c_surface;
    options.out_path = out_path;
    options.identify_inverses = identify_inverses;
    if (!input_path.empty()) {
      std::ifstream in(input_path);
      if (!in) throw curves::DomainError("cannot open input file: " + input_path);
      std::vector<std::string> words;
      for (std::string line; std::getline(in, line);) {
        if (!line.empty()) words.push_back(line);
      }
      options.input_words = std::move(words);
    } else {
      if (max_len <= 0) throw curves::DomainError("census needs --max-len or --input");
      options.max_len = max_len;
      if (max_len > 8) {
        std::cerr << "warning: class count grows exponentially; length " << max_len
                  << " may take very long\n";
      }
    }
    curves::CensusSummary s = curves::run_census(options);
    std::cout << curves::census_summary_text(s);
    return 0;
  }
  if (verify->parsed()) {
    curves::SurfaceModel m = curves::parse_surface_spec(v_surface);
    curves::SuiteResult r = curves::run_suite(suite, m, trials, seed);
    std::cout << curves::suite_result_text(suite, r);
    return r.passed == r.trials ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const curves::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const curves::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const curves::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
