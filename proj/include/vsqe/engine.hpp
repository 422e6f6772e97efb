#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vsqe/formula.hpp"

namespace vsqe {

enum class Algorithm { Lucky, Equality, Equality3, General, General3, Leg };

std::optional<Algorithm> parse_algorithm(std::string_view name);
const char* algorithm_name(Algorithm alg);

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("deadline exceeded") {}
};

/// Cooperative wall-clock limit, checked between elimination steps.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static Deadline never() { return Deadline(Clock::time_point::max()); }
  static Deadline after(std::chrono::milliseconds budget) { return Deadline(Clock::now() + budget); }

  bool expired() const { return Clock::now() >= at_; }
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  explicit Deadline(Clock::time_point at) : at_(at) {}
  Clock::time_point at_;
};

/// How often each elimination route fired during a run.
struct StepStats {
  unsigned lucky = 0;
  unsigned equality = 0;
  unsigned general = 0;
  unsigned failed = 0;          // no route applied, quantifier kept
  unsigned general_gated = 0;   // general route refused: non-QF context
};

struct QeReport {
  Formula result;
  std::optional<bool> decided;  // set iff result is TrueF / FalseF
  unsigned rounds = 0;
  double duration_ms = 0;
  std::string algorithm;
  bool timed_out = false;
  StepStats stats;
};

/// Single-quantifier elimination: given the target variable, the atom
/// conjuncts and the opaque conjuncts of one disjunct, returns an
/// equivalent formula not mentioning var (indices not lowered), or nullopt
/// if it cannot eliminate var.
using StepFn = std::function<std::optional<Formula>(Var var, std::span<const Atom> atoms,
                                                    std::span<const Formula> ctx)>;
using OptFn = std::function<Formula(const Formula&)>;

/// Lifts a single-quantifier step to every quantifier, innermost first.
/// AllQ is handled as Neg ExQ Neg. The result never has more quantifiers
/// than f: a partial elimination that would duplicate binders is dropped.
Formula qe_dnf(const OptFn& opt, const StepFn& step, const Formula& f,
               const Deadline& deadline = Deadline::never());

/// Drops quantifiers whose variable does not occur in their body.
Formula clear_quantifiers(const Formula& f);

StepFn lucky_step(StepStats* stats = nullptr);
StepFn equality_step(StepStats* stats = nullptr);
StepFn general_step(StepStats* stats = nullptr);

/// The optimization hook used by the exported algorithms.
Formula default_opt(const Formula& f);

QeReport vs_lucky(const Formula& f, const Deadline& deadline = Deadline::never());
QeReport vs_equality(const Formula& f, const Deadline& deadline = Deadline::never());
QeReport vs_equality_3(const Formula& f, const Deadline& deadline = Deadline::never());
QeReport vs_general(const Formula& f, const Deadline& deadline = Deadline::never());
QeReport vs_general_3(const Formula& f, const Deadline& deadline = Deadline::never());
QeReport vs_leg(const Formula& f, const Deadline& deadline = Deadline::never());

/// Runs an algorithm. `rounds` overrides the pass count of the x3 variants
/// (0 keeps the default of 3). A deadline expiry yields an undecided report
/// carrying the input formula.
QeReport run(Algorithm alg, const Formula& f, const Deadline& deadline = Deadline::never(),
             unsigned rounds = 0);
QeReport run(std::string_view alg, const Formula& f, const Deadline& deadline = Deadline::never(),
             unsigned rounds = 0);

}  // namespace vsqe
