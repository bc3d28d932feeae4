#include "bench/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <stdexcept>
#include <variant>

#include "dynsgd/evaluator.hpp"
#include "dynsgd/instance_io.hpp"

namespace bench {

using namespace dynsgd;

std::unique_ptr<StochasticProblem> build_problem(const ExperimentConfig& cfg) {
  if (!cfg.instance_file.empty()) {
    InstanceSpec spec = load_instance(cfg.instance_file);
    if (std::holds_alternative<NewsvendorSpec>(spec)) {
      if (cfg.problem != ProblemKind::Newsvendor)
        throw std::invalid_argument("config: instance_file holds a newsvendor instance but "
                                    "problem is 'options'");
      return std::make_unique<NewsvendorProblem>(std::get<NewsvendorSpec>(std::move(spec)));
    }
    if (cfg.problem != ProblemKind::OptionsPortfolio)
      throw std::invalid_argument("config: instance_file holds an options instance but problem "
                                  "is 'newsvendor'");
    return std::make_unique<OptionsPortfolioProblem>(
        std::get<OptionsPortfolioSpec>(std::move(spec)));
  }

  RngStream rng(cfg.seed, 0);
  if (cfg.problem == ProblemKind::Newsvendor)
    return std::make_unique<NewsvendorProblem>(
        generate_newsvendor_instance(cfg.dimension, rng, cfg.newsvendor));
  return std::make_unique<OptionsPortfolioProblem>(
      generate_options_instance(cfg.dimension, rng, cfg.options));
}

namespace {

RunSettings settings_for(const ExperimentConfig& cfg, const StochasticProblem& problem) {
  RunSettings settings;
  settings.method = cfg.method;
  settings.sgd.eta0 = cfg.eta0;
  settings.adam = cfg.adam;
  settings.region = problem.region();
  settings.start = cfg.start_fill ? Vector(problem.dimension(), *cfg.start_fill)
                                  : problem.default_start();
  if (cfg.max_iterations)
    settings.budget.max_iterations = *cfg.max_iterations;
  else
    settings.budget.seconds = cfg.effective_budget_seconds();
  settings.cadence.growth = cfg.trace_growth;
  return settings;
}

SamplingController controller_for(const ExperimentConfig& cfg, const RuleSpec& rule) {
  if (rule.kind == SamplingRuleKind::Fixed) {
    const int n = rule.fixed_size;
    return SamplingController(SamplingRuleKind::Fixed, cfg.alpha, n, std::min(cfg.n_min, n),
                              std::max(cfg.n_max, n), cfg.epsilon_grad);
  }
  return SamplingController(rule.kind, cfg.alpha, cfg.n0, cfg.n_min, cfg.n_max, cfg.epsilon_grad);
}

LabeledTrace run_rule(const ExperimentConfig& cfg, const StochasticProblem& problem,
                      const McObjectiveEvaluator& eval, const RuleSpec& rule,
                      std::uint64_t stream_id) {
  try {
    SamplingController ctl = controller_for(cfg, rule);
    RngStream rng(cfg.seed, stream_id);
    LabeledTrace run;
    run.label = rule.label;
    run.trace =
        run_optimization(problem, settings_for(cfg, problem), ctl, rng, eval, &run.final_iterate);
    run.final_std_error = eval.estimate(run.final_iterate).std_error;
    return run;
  } catch (const std::exception& e) {
    throw std::runtime_error("rule " + rule.label + ": " + e.what());
  }
}

}  // namespace

SuiteResult run_suite(const ExperimentConfig& cfg) {
  const auto problem = build_problem(cfg);
  const McObjectiveEvaluator eval(*problem, cfg.eval_samples, RngStream(cfg.seed, 1));

  SuiteResult result;
  result.runs.resize(cfg.rules.size());

  if (cfg.parallel) {
    std::vector<std::future<LabeledTrace>> futures;
    futures.reserve(cfg.rules.size());
    for (std::size_t i = 0; i < cfg.rules.size(); ++i)
      futures.push_back(std::async(std::launch::async, [&, i] {
        return run_rule(cfg, *problem, eval, cfg.rules[i], 2 + i);
      }));
    for (std::size_t i = 0; i < cfg.rules.size(); ++i) result.runs[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < cfg.rules.size(); ++i)
      result.runs[i] = run_rule(cfg, *problem, eval, cfg.rules[i], 2 + i);
  }
  return result;
}

namespace {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Objective of the most recent record at or before time t.
double locf_at(const std::vector<TraceRecord>& trace, double t) {
  double value = trace.front().objective;
  for (const auto& r : trace) {
    if (r.wall_seconds > t) break;
    value = r.objective;
  }
  return value;
}

}  // namespace

EmittedFiles emit_traces(const SuiteResult& suite, const ExperimentConfig& cfg,
                         const std::string& output_dir) {
  if (suite.runs.empty()) throw std::invalid_argument("emit_traces: suite holds no runs");
  for (const auto& run : suite.runs)
    if (run.trace.empty())
      throw std::invalid_argument("emit_traces: rule " + run.label + " has an empty trace");

  std::filesystem::create_directories(output_dir);
  const std::filesystem::path dir(output_dir);
  EmittedFiles files;

  // Wide file on a uniform 200-point time grid.
  double horizon = cfg.max_iterations ? 0.0 : cfg.effective_budget_seconds();
  if (horizon == 0.0)
    for (const auto& run : suite.runs)
      horizon = std::max(horizon, run.trace.back().wall_seconds);
  constexpr int kGridPoints = 200;

  const auto wide_path = dir / (cfg.stem() + ".dat");
  {
    std::ofstream out(wide_path);
    if (!out) throw std::runtime_error("emit_traces: cannot write '" + wide_path.string() + "'");
    out << "T";
    for (const auto& run : suite.runs) out << ' ' << run.label;
    out << '\n';
    for (int k = 0; k < kGridPoints; ++k) {
      const double t = horizon * static_cast<double>(k) / (kGridPoints - 1);
      out << format_value(t);
      for (const auto& run : suite.runs) out << ' ' << format_value(locf_at(run.trace, t));
      out << '\n';
    }
  }
  files.wide = wide_path.string();

  for (const auto& run : suite.runs) {
    const auto long_path = dir / (cfg.stem() + "_" + run.label + ".csv");
    std::ofstream out(long_path);
    if (!out) throw std::runtime_error("emit_traces: cannot write '" + long_path.string() + "'");
    out << "iteration,cum_samples,wall_seconds,batch_size,objective\n";
    char buf[160];
    for (const auto& r : run.trace) {
      std::snprintf(buf, sizeof(buf), "%lld,%lld,%.9f,%d,%.17g\n",
                    static_cast<long long>(r.iteration), static_cast<long long>(r.cum_samples),
                    r.wall_seconds, r.batch_size, r.objective);
      out << buf;
    }
    files.long_format.push_back(long_path.string());
  }
  return files;
}

}  // namespace bench
