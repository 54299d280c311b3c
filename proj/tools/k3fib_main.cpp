// Command line front end: `k3fib check <input.json>` runs every structural
// verification the library provides on one five-tuple and prints a report.
//
// Exit codes:
//   0  all checks completed and passed, verdict admissible
//   1  all checks completed, but at least one admissibility condition failed
//   2  the input is invalid (unparsable text, wrong shape, degenerate data)
//   3  an internal structural guarantee was violated (a bug, not bad input)
//   4  I/O failure: unreadable input file or unwritable --out path

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k3fib/config.hpp"
#include "k3fib/errors.hpp"
#include "k3fib/five_tuple.hpp"
#include "k3fib/pipeline.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIo = 4;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

bool parse_degree_list(const std::string& text, std::vector<int>& out) {
  out.clear();
  for (const std::string& part : split_csv(text)) {
    if (part.empty()) return false;
    try {
      std::size_t used = 0;
      const int value = std::stoi(part, &used);
      if (used != part.size() || value < 2 || value > 7) return false;
      out.push_back(value);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

bool parse_sample_list(const std::string& text,
                       std::vector<k3fib::Rational>& out) {
  out.clear();
  if (text.empty()) return true;  // --samples "" disables sampled fibres
  for (const std::string& part : split_csv(text)) {
    const auto value = k3fib::Rational::parse(part);
    if (!value) return false;
    out.push_back(*value);
  }
  return true;
}

int run_check(const std::string& input_path, const std::string& out_path,
              const k3fib::PipelineConfig& config) {
  std::ifstream in(input_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open input file: " << input_path << "\n";
    return kExitIo;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    std::cerr << "error: failed reading input file: " << input_path << "\n";
    return kExitIo;
  }

  k3fib::PipelineResult result;
  try {
    const k3fib::FiveTuple tuple = k3fib::parse_five_tuple(buffer.str());
    const k3fib::ValidationReport validation = k3fib::validate(tuple);
    if (!validation.ok) {
      for (const k3fib::ValidationIssue& issue : validation.issues)
        std::cerr << "validation: " << issue.field << ": " << issue.message
                  << "\n";
      return kExitValidation;
    }
    result = k3fib::run_pipeline(tuple, config);
  } catch (const k3fib::Error& e) {
    std::cerr << "error [" << k3fib::errc_name(e.code()) << "]: " << e.what()
              << "\n";
    return e.code() == k3fib::Errc::internal ? kExitInternal : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error [unexpected]: " << e.what() << "\n";
    return kExitInternal;
  }

  const std::string report = k3fib::emit_report(result, config.format);
  std::cout << report;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << out_path << "\n";
      return kExitIo;
    }
    out << report;
    out.flush();
    if (!out) {
      std::cerr << "error: failed writing output file: " << out_path << "\n";
      return kExitIo;
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural verification for threefolds fibred by degree-two "
               "K3 surfaces"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand(
      "check", "build the relative algebra from a five-tuple and verify it");
  std::string input_path;
  std::string torsion_csv = "2,3,4,5";
  std::string samples_csv = "-1,1/2,2";
  std::string format = "text";
  std::string out_path;
  int max_degree = 6;
  bool inject_torsion_error = false;

  check->add_option("input", input_path, "five-tuple JSON file")->required();
  check->add_option("--max-degree", max_degree,
                    "largest graded degree verified (default 6)")
      ->check(CLI::Range(1, 32));
  check->add_option("--torsion-degrees", torsion_csv,
                    "comma separated degrees for the torsion decomposition "
                    "(each in 2..7, default 2,3,4,5)");
  check->add_option("--samples", samples_csv,
                    "comma separated rational base points for fibre checks "
                    "(default -1,1/2,2)");
  check->add_option("--format", format, "report format (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", out_path, "also write the report to this file");
  check->add_flag("--inject-torsion-error", inject_torsion_error)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    // --help and --version exit 0; every other command-line problem is a
    // configuration error.
    return rc == 0 ? 0 : kExitValidation;
  }

  k3fib::PipelineConfig config;
  config.max_degree = max_degree;
  config.format = format == "json" ? k3fib::PipelineConfig::Format::json
                                   : k3fib::PipelineConfig::Format::text;
  config.out_path = out_path;
  config.inject_torsion_error = inject_torsion_error;
  if (!parse_degree_list(torsion_csv, config.torsion_degrees)) {
    std::cerr << "error: --torsion-degrees expects integers in 2..7, got '"
              << torsion_csv << "'\n";
    return kExitValidation;
  }
  if (!parse_sample_list(samples_csv, config.samples)) {
    std::cerr << "error: --samples expects rationals like -1,1/2,2, got '"
              << samples_csv << "'\n";
    return kExitValidation;
  }
  if (const char* env = std::getenv("K3FIB_TRUNCATION")) {
    try {
      std::size_t used = 0;
      const int cap = std::stoi(env, &used);
      if (used != std::string(env).size() || cap < 2 || cap > 64)
        throw std::invalid_argument("range");
      config.truncation_cap = cap;
    } catch (const std::exception&) {
      std::cerr << "error: K3FIB_TRUNCATION expects an integer in 2..64, got '"
                << env << "'\n";
      return kExitValidation;
    }
  }

  const int code = run_check(input_path, out_path, config);
  (void)kExitChecksFailed;  // returned through PipelineResult::exit_code
  return code;
}
