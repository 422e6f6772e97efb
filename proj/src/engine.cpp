#include "vsqe/engine.hpp"

#include <algorithm>
#include <array>

#include "vsqe/transform.hpp"
#include "vsqe/vsub.hpp"

namespace vsqe {

namespace {

using K = Formula::Kind;

constexpr std::array<std::pair<Algorithm, const char*>, 6> kNames{{
    {Algorithm::Lucky, "lucky"},
    {Algorithm::Equality, "equality"},
    {Algorithm::Equality3, "equality3"},
    {Algorithm::General, "general"},
    {Algorithm::General3, "general3"},
    {Algorithm::Leg, "leg"},
}};

void bump(StepStats* stats, unsigned StepStats::*field) {
  if (stats) ++(stats->*field);
}

std::optional<Formula> try_lucky(Var var, std::span<const Atom> atoms,
                                 std::span<const Formula> ctx, StepStats* stats) {
  if (auto idx = find_lucky(var, atoms)) {
    bump(stats, &StepStats::lucky);
    return elim_var_lucky(var, atoms, ctx, *idx);
  }
  return std::nullopt;
}

class Eliminator {
 public:
  Eliminator(const OptFn& opt, const StepFn& step, const Deadline& deadline)
      : opt_(opt), step_(step), deadline_(deadline) {}

  Formula walk(const Formula& f) {
    switch (f.kind()) {
      case K::And: return Formula::conj(walk(f.lhs()), walk(f.rhs()));
      case K::Or: return Formula::disj(walk(f.lhs()), walk(f.rhs()));
      case K::Neg: return walk(nnf(f));
      case K::ExQ: return eliminate(walk(f.body()));
      case K::AllQ:
        // forall x. F  <->  not exists x. not F
        return nnf(Formula::neg(eliminate(nnf(Formula::neg(walk(f.body()))))));
      default: return f;
    }
  }

 private:
  // Equivalent of ExQ(body).
  Formula eliminate(const Formula& raw_body) {
    deadline_.check();
    Formula body = simpfm(opt_(simpfm(unpower_all(0, nnf(raw_body)))));
    if (body.is_true() || body.is_false()) return body;
    if (!mentions_var(body, 0)) return lower_formula(body, 0, 1);

    const auto tick = [this] {
      if (++ticks_ % 256 == 0) deadline_.check();
    };
    std::vector<Formula> parts;
    for (const auto& clause : to_modified_dnf(body, tick)) {
      deadline_.check();
      const Disjunct d = reach_under(clause);
      const Var var = d.target();
      Formula out;
      if (auto stepped = step_(var, d.atoms, d.ctx)) {
        out = simpfm(lower_formula(*stepped, var, 1));
        for (std::size_t i = 0; i < d.n_pulled; ++i) out = Formula::exists(out);
      } else {
        out = d.closure();
      }
      out = clear_quantifiers(simpfm(out));
      if (out.is_true()) return out;
      parts.push_back(std::move(out));
    }
    Formula out = simpfm(Formula::disj_all(parts));
    // Splitting into disjuncts copies the binders that survive; never let a
    // partial elimination grow the quantifier count.
    if (quantifier_count(out) > quantifier_count(raw_body) + 1) return Formula::exists(raw_body);
    return out;
  }

  const OptFn& opt_;
  const StepFn& step_;
  const Deadline& deadline_;
  unsigned long ticks_ = 0;
};

bool all_quantifier_free(std::span<const Formula> ctx) {
  return std::all_of(ctx.begin(), ctx.end(), [](const Formula& g) { return is_quantifier_free(g); });
}

QeReport make_report(const char* name, Formula result, unsigned rounds, StepStats stats,
                     Deadline::Clock::time_point start) {
  QeReport report;
  report.algorithm = name;
  report.rounds = rounds;
  report.stats = stats;
  if (result.is_true()) report.decided = true;
  if (result.is_false()) report.decided = false;
  report.result = std::move(result);
  report.duration_ms =
      std::chrono::duration<double, std::milli>(Deadline::Clock::now() - start).count();
  return report;
}

// Runs the given step passes in sequence and packages the result.
QeReport run_passes(Algorithm alg, const Formula& f, const Deadline& deadline, unsigned rounds) {
  const auto start = Deadline::Clock::now();
  StepStats stats;
  std::vector<StepFn> passes;
  switch (alg) {
    case Algorithm::Lucky: passes = {lucky_step(&stats)}; break;
    case Algorithm::Equality: passes = {equality_step(&stats)}; break;
    case Algorithm::General: passes = {general_step(&stats)}; break;
    case Algorithm::Equality3: passes.assign(rounds, equality_step(&stats)); break;
    case Algorithm::General3: passes.assign(rounds, general_step(&stats)); break;
    case Algorithm::Leg:
      passes = {lucky_step(&stats), equality_step(&stats), general_step(&stats)};
      break;
  }
  Formula current = f;
  try {
    for (const auto& step : passes) current = qe_dnf(default_opt, step, current, deadline);
  } catch (const Timeout&) {
    auto report = make_report(algorithm_name(alg), f, static_cast<unsigned>(passes.size()), stats, start);
    report.timed_out = true;
    report.decided.reset();
    if (f.is_true()) report.decided = true;
    if (f.is_false()) report.decided = false;
    return report;
  }
  return make_report(algorithm_name(alg), std::move(current), static_cast<unsigned>(passes.size()),
                     stats, start);
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [alg, n] : kNames)
    if (name == n) return alg;
  return std::nullopt;
}

const char* algorithm_name(Algorithm alg) {
  for (const auto& [a, n] : kNames)
    if (a == alg) return n;
  return "?";
}

Formula clear_quantifiers(const Formula& f) {
  switch (f.kind()) {
    case K::And: return Formula::conj(clear_quantifiers(f.lhs()), clear_quantifiers(f.rhs()));
    case K::Or: return Formula::disj(clear_quantifiers(f.lhs()), clear_quantifiers(f.rhs()));
    case K::Neg: return Formula::neg(clear_quantifiers(f.body()));
    case K::ExQ:
    case K::AllQ: {
      Formula body = clear_quantifiers(f.body());
      if (!mentions_var(body, 0)) return lower_formula(body, 0, 1);
      return f.kind() == K::ExQ ? Formula::exists(std::move(body)) : Formula::forall(std::move(body));
    }
    default: return f;
  }
}

Formula default_opt(const Formula& f) { return push_forall(f); }

Formula qe_dnf(const OptFn& opt, const StepFn& step, const Formula& f, const Deadline& deadline) {
  Eliminator eliminator(opt, step, deadline);
  const Formula walked = simpfm(eliminator.walk(nnf(f)));
  Formula out = clear_quantifiers(simpfm(opt(walked)));
  // opt may distribute binders over conjunctions.
  if (quantifier_count(out) > quantifier_count(f)) out = clear_quantifiers(walked);
  return out;
}

StepFn lucky_step(StepStats* stats) {
  return [stats](Var var, std::span<const Atom> atoms,
                 std::span<const Formula> ctx) -> std::optional<Formula> {
    if (auto out = try_lucky(var, atoms, ctx, stats)) return out;
    bump(stats, &StepStats::failed);
    return std::nullopt;
  };
}

StepFn equality_step(StepStats* stats) {
  return [stats](Var var, std::span<const Atom> atoms,
                 std::span<const Formula> ctx) -> std::optional<Formula> {
    if (auto out = try_lucky(var, atoms, ctx, stats)) return out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const auto deg = degree_in(atoms[i].poly, var);
      if (atoms[i].rel == Rel::Eq && deg >= 1 && deg <= 2) {
        bump(stats, &StepStats::equality);
        return elim_var_equality(var, atoms, ctx, i);
      }
    }
    bump(stats, &StepStats::failed);
    return std::nullopt;
  };
}

StepFn general_step(StepStats* stats) {
  return [stats](Var var, std::span<const Atom> atoms,
                 std::span<const Formula> ctx) -> std::optional<Formula> {
    if (auto out = try_lucky(var, atoms, ctx, stats)) return out;
    const bool low_degree = std::all_of(atoms.begin(), atoms.end(), [var](const Atom& at) {
      return degree_in(at.poly, var) <= 2;
    });
    if (!low_degree) {
      bump(stats, &StepStats::failed);
      return std::nullopt;
    }
    if (!all_quantifier_free(ctx)) {
      bump(stats, &StepStats::general_gated);
      bump(stats, &StepStats::failed);
      return std::nullopt;
    }
    bool ctx_low_degree = true;
    for (const auto& g : ctx)
      for_each_atom(g, [&](const Atom& at, Var) { ctx_low_degree &= degree_in(at.poly, var) <= 2; });
    if (!ctx_low_degree) {
      bump(stats, &StepStats::failed);
      return std::nullopt;
    }
    bump(stats, &StepStats::general);
    return elim_var(var, atoms, ctx);
  };
}

QeReport vs_lucky(const Formula& f, const Deadline& d) { return run(Algorithm::Lucky, f, d); }
QeReport vs_equality(const Formula& f, const Deadline& d) { return run(Algorithm::Equality, f, d); }
QeReport vs_equality_3(const Formula& f, const Deadline& d) { return run(Algorithm::Equality3, f, d); }
QeReport vs_general(const Formula& f, const Deadline& d) { return run(Algorithm::General, f, d); }
QeReport vs_general_3(const Formula& f, const Deadline& d) { return run(Algorithm::General3, f, d); }
QeReport vs_leg(const Formula& f, const Deadline& d) { return run(Algorithm::Leg, f, d); }

QeReport run(Algorithm alg, const Formula& f, const Deadline& deadline, unsigned rounds) {
  return run_passes(alg, f, deadline, rounds == 0 ? 3 : rounds);
}

QeReport run(std::string_view alg, const Formula& f, const Deadline& deadline, unsigned rounds) {
  auto parsed = parse_algorithm(alg);
  if (!parsed) throw std::invalid_argument("unknown algorithm: " + std::string(alg));
  return run(*parsed, f, deadline, rounds);
}

}  // namespace vsqe
