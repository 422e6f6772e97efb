#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "vsqe/frontend.hpp"

namespace vsqe {

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Sat: return "sat";
    case Answer::Unsat: return "unsat";
    case Answer::Unknown: break;
  }
  return "unknown";
}

const char* consistency_name(Consistency c) {
  switch (c) {
    case Consistency::Agree: return "agree";
    case Consistency::OnlyOriginal: return "only_original";
    case Consistency::OnlyNegated: return "only_negated";
    case Consistency::Contradict: return "contradict";
    case Consistency::BothUnknown: break;
  }
  return "both_unknown";
}

RunRecord run_problem(const Problem& problem, const RunOptions& options, QeReport* report) {
  QeReport r = run(options.algorithm, problem.formula, Deadline::after(options.timeout), options.rounds);
  RunRecord rec;
  rec.name = problem.name;
  rec.algorithm = algorithm_name(options.algorithm);
  rec.ms = r.duration_ms;
  rec.timed_out = r.timed_out;
  if (r.decided)
    rec.answer = *r.decided ? Answer::Sat : Answer::Unsat;
  else
    rec.residual_nodes = node_count(r.result);
  if (report) *report = std::move(r);
  return rec;
}

Problem negated(const Problem& problem) {
  Problem out = problem;
  out.name = problem.name + ".neg";
  out.formula = Formula::neg(problem.formula);
  if (problem.expected) out.expected = !*problem.expected;
  return out;
}

// F and not F are complementary: exactly one is sat. Deciding both the same
// way is a contradiction.
Consistency classify(Answer original, Answer negation) {
  const bool o = original != Answer::Unknown;
  const bool n = negation != Answer::Unknown;
  if (o && n) return original == negation ? Consistency::Contradict : Consistency::Agree;
  if (o) return Consistency::OnlyOriginal;
  if (n) return Consistency::OnlyNegated;
  return Consistency::BothUnknown;
}

std::vector<Problem> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".smt2" || ext == ".vsq") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Problem> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_problem(f));
  return out;
}

std::vector<BenchEntry> run_bench(const std::vector<Problem>& problems, const RunOptions& options,
                                  bool check_negation) {
  std::vector<BenchEntry> out;
  out.reserve(problems.size());
  for (const auto& p : problems) {
    BenchEntry entry;
    entry.expected = p.expected;
    entry.original = run_problem(p, options);
    if (check_negation) {
      entry.negation = run_problem(negated(p), options);
      entry.consistency = classify(entry.original.answer, entry.negation->answer);
    }
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(),
            [](const BenchEntry& a, const BenchEntry& b) { return a.original.name < b.original.name; });
  return out;
}

BenchSummary summarize(const std::vector<BenchEntry>& entries) {
  BenchSummary s;
  s.total = entries.size();
  std::vector<double> times;
  for (const auto& e : entries) {
    const Answer a = e.original.answer;
    if (a != Answer::Unknown) {
      ++s.solved;
      times.push_back(e.original.ms);
      if (e.expected && *e.expected != (a == Answer::Sat)) ++s.mismatched_expected;
    }
    if (e.negation && e.expected && e.negation->answer != Answer::Unknown &&
        *e.expected == (e.negation->answer == Answer::Sat))
      ++s.mismatched_expected;
    if (e.consistency == Consistency::Contradict) ++s.contradictions;
  }
  std::sort(times.begin(), times.end());
  double acc = 0;
  for (double t : times) s.cumulative_ms.push_back(acc += t);
  return s;
}

std::string bench_csv(const std::vector<BenchEntry>& entries) {
  std::ostringstream out;
  out << "name,algorithm,answer,ms,residual_nodes\n";
  const auto row = [&out](const RunRecord& r) {
    out << r.name << ',' << r.algorithm << ',' << answer_name(r.answer) << ',' << r.ms << ','
        << r.residual_nodes << '\n';
  };
  for (const auto& e : entries) {
    row(e.original);
    if (e.negation) row(*e.negation);
  }
  return out.str();
}

namespace {

nlohmann::json record_json(const RunRecord& r) {
  return {{"name", r.name},   {"algorithm", r.algorithm},         {"answer", answer_name(r.answer)},
          {"ms", r.ms},       {"residual_nodes", r.residual_nodes}, {"timed_out", r.timed_out}};
}

}  // namespace

std::string bench_json(const std::vector<BenchEntry>& entries, const BenchSummary& summary) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j = record_json(e.original);
    if (e.expected) j["expected"] = *e.expected ? "sat" : "unsat";
    if (e.negation) j["negation"] = record_json(*e.negation);
    if (e.consistency) j["consistency"] = consistency_name(*e.consistency);
    records.push_back(std::move(j));
  }
  nlohmann::json doc = {
      {"records", std::move(records)},
      {"summary",
       {{"total", summary.total},
        {"solved", summary.solved},
        {"mismatched_expected", summary.mismatched_expected},
        {"contradictions", summary.contradictions},
        {"cumulative_ms", summary.cumulative_ms}}},
  };
  return doc.dump(2);
}

}  // namespace vsqe
