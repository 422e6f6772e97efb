#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsqe/engine.hpp"
#include "vsqe/formula.hpp"
#include "vsqe/sexpr.hpp"

namespace vsqe {

enum class SourceFormat { SmtLib, Native };

/// A closed decision problem: satisfiable iff `formula` is true.
struct Problem {
  std::string name;
  Formula formula;
  std::optional<bool> expected;  // from (set-info :status ...)
  SourceFormat format = SourceFormat::SmtLib;
};

/// SMT-LIB 2 subset: declare-const / nullary declare-fun of sort Real,
/// assert over and/or/not/=>/=/</<=/>/>=/+/-/*, numerals and decimals,
/// exists/forall over Real, check-sat. Declared constants are closed
/// existentially in declaration order (first declared is outermost).
/// Throws ParseError.
Problem parse_smtlib(std::string_view text, std::string name = {});

/// Native s-expression mirror of Formula with explicit De Bruijn indices:
///   f    ::= (TrueF) | (FalseF) | (Atom (Rel p)) | (And f f) | (Or f f)
///          | (Neg f) | (ExQ f) | (AllQ f)
///   Rel  ::= Less | Eq | Leq | Neq
///   p    ::= (Var n) | (Const q) | (+ p...) | (- p) | (- p p...) | (* p...) | (^ p n)
/// An optional leading `(set-info :status sat|unsat)` records the expected
/// answer. Throws ParseError.
Problem parse_native(std::string_view text, std::string name = {});
Formula parse_native_formula(std::string_view text);

/// Canonical native rendering; parse_native_formula inverts it exactly.
std::string print_native(const Formula& f);
std::string print_native(const Polynomial& p);

/// Formats by extension: .smt2 is SMT-LIB, everything else native.
SourceFormat format_for_path(const std::filesystem::path& path);
Problem load_problem(const std::filesystem::path& path, std::optional<SourceFormat> format = {});

// ------------------------------------------------------------------ bench

enum class Answer { Sat, Unsat, Unknown };
const char* answer_name(Answer a);

struct RunRecord {
  std::string name;
  std::string algorithm;
  Answer answer = Answer::Unknown;
  double ms = 0;
  std::size_t residual_nodes = 0;  // node count of the residual when unknown
  bool timed_out = false;
};

struct RunOptions {
  Algorithm algorithm = Algorithm::Leg;
  std::chrono::milliseconds timeout{30000};
  unsigned rounds = 0;  // 0: default pass count
};

RunRecord run_problem(const Problem& problem, const RunOptions& options, QeReport* report = nullptr);

/// The same problem with its formula negated.
Problem negated(const Problem& problem);

enum class Consistency { Agree, OnlyOriginal, OnlyNegated, Contradict, BothUnknown };
const char* consistency_name(Consistency c);
Consistency classify(Answer original, Answer negation);

struct BenchEntry {
  RunRecord original;
  std::optional<RunRecord> negation;
  std::optional<Consistency> consistency;
  std::optional<bool> expected;
};

struct BenchSummary {
  std::size_t total = 0;
  std::size_t solved = 0;
  std::size_t mismatched_expected = 0;
  std::size_t contradictions = 0;
  // Cumulative time to solve the fastest n problems, n = 1..solved.
  std::vector<double> cumulative_ms;
};

/// Problems found in dir (*.smt2 and *.vsq), sorted by file name.
std::vector<Problem> load_corpus(const std::filesystem::path& dir);

std::vector<BenchEntry> run_bench(const std::vector<Problem>& problems, const RunOptions& options,
                                  bool check_negation);
BenchSummary summarize(const std::vector<BenchEntry>& entries);

/// CSV with columns name,algorithm,answer,ms,residual_nodes (negation runs
/// appear as extra rows named "<name>.neg").
std::string bench_csv(const std::vector<BenchEntry>& entries);
std::string bench_json(const std::vector<BenchEntry>& entries, const BenchSummary& summary);

}  // namespace vsqe
