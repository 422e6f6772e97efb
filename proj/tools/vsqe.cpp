// vsqe: decide closed real-arithmetic problems by virtual substitution.
//
//   vsqe [--algorithm leg] [--format smtlib|native] [--timeout 30] FILE
//   vsqe --bench DIR [--check-negation] [--json out.json]
//
// Exit status: 0 decided, 1 unknown, 2 error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vsqe/frontend.hpp"

namespace {

using namespace vsqe;

Answer answer_of(const QeReport& r) {
  if (!r.decided) return Answer::Unknown;
  return *r.decided ? Answer::Sat : Answer::Unsat;
}

double default_timeout() {
  if (const char* env = std::getenv("VSQE_TIMEOUT")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed VSQE_TIMEOUT='" << env << "'\n";
    }
  }
  return 30;
}

int run_single(const std::string& file, std::optional<SourceFormat> format, const RunOptions& opts,
               bool print_residual, bool check_negation) {
  const Problem problem = load_problem(file, format);
  QeReport report;
  run_problem(problem, opts, &report);
  const Answer answer = answer_of(report);
  std::cout << answer_name(answer) << '\n';
  if (print_residual && answer == Answer::Unknown)
    std::cout << print_native(report.result) << '\n';
  if (report.timed_out) std::cerr << "timeout after " << report.duration_ms << " ms\n";

  if (check_negation) {
    QeReport neg_report;
    run_problem(negated(problem), opts, &neg_report);
    const Answer neg = answer_of(neg_report);
    std::cout << "negation: " << answer_name(neg) << '\n'
              << "consistency: " << consistency_name(classify(answer, neg)) << '\n';
    if (classify(answer, neg) == Consistency::Contradict) return 2;
  }
  return answer == Answer::Unknown ? 1 : 0;
}

int run_batch(const std::string& dir, const RunOptions& opts, bool check_negation,
              const std::string& json_path) {
  const auto problems = load_corpus(dir);
  const auto entries = run_bench(problems, opts, check_negation);
  const auto summary = summarize(entries);
  std::cout << bench_csv(entries);
  std::cerr << "solved " << summary.solved << "/" << summary.total;
  if (check_negation) std::cerr << ", contradictions " << summary.contradictions;
  if (summary.mismatched_expected) std::cerr << ", WRONG " << summary.mismatched_expected;
  std::cerr << '\n';
  for (std::size_t i = 0; i < summary.cumulative_ms.size(); ++i)
    std::cerr << "  fastest " << (i + 1) << ": " << summary.cumulative_ms[i] << " ms\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << bench_json(entries, summary) << '\n';
  }
  return summary.contradictions == 0 && summary.mismatched_expected == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantifier elimination over the reals by virtual substitution"};
  std::string algorithm = "leg";
  std::string format_name;
  double timeout = default_timeout();
  bool print_residual = false;
  bool check_negation = false;
  std::string bench_dir;
  std::string json_path;
  unsigned rounds = 0;
  std::string file;

  app.add_option("--algorithm", algorithm, "lucky|equality|equality3|general|general3|leg")
      ->check(CLI::IsMember({"lucky", "equality", "equality3", "general", "general3", "leg"}))
      ->capture_default_str();
  app.add_option("--format", format_name, "smtlib|native (default: by extension)")
      ->check(CLI::IsMember({"smtlib", "native"}));
  app.add_option("--timeout", timeout, "per-problem timeout in seconds (env VSQE_TIMEOUT)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--rounds", rounds, "pass count of the x3 variants");
  app.add_flag("--print-residual", print_residual, "print the residual formula when unknown");
  app.add_flag("--check-negation", check_negation, "also run the negated problem");
  app.add_option("--bench", bench_dir, "run every .smt2/.vsq problem in a directory, CSV to stdout")
      ->check(CLI::ExistingDirectory);
  app.add_option("--json", json_path, "bench mode: also write a JSON report");
  app.add_option("file", file, "problem file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
    if (bench_dir.empty() == file.empty())
      throw CLI::ValidationError("exactly one of FILE or --bench is required");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  RunOptions opts;
  opts.algorithm = *parse_algorithm(algorithm);
  opts.timeout = std::chrono::milliseconds(static_cast<long long>(timeout * 1000));
  opts.rounds = rounds;
  std::optional<SourceFormat> format;
  if (format_name == "smtlib") format = SourceFormat::SmtLib;
  if (format_name == "native") format = SourceFormat::Native;

  try {
    if (!bench_dir.empty()) return run_batch(bench_dir, opts, check_negation, json_path);
    return run_single(file, format, opts, print_residual, check_negation);
  } catch (const ParseError& e) {
    std::cerr << (file.empty() ? bench_dir : file) << ":" << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
