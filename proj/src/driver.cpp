#include "dynsgd/driver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dynsgd/batch_stats.hpp"

namespace dynsgd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::vector<TraceRecord> run_optimization(const StochasticProblem& problem,
                                          const RunSettings& settings, SamplingController& ctl,
                                          RngStream& rng, const McObjectiveEvaluator& eval,
                                          Vector* final_iterate) {
  if (!settings.budget.seconds && !settings.budget.max_iterations)
    throw std::invalid_argument("run_optimization: budget needs seconds or max_iterations");
  if (settings.budget.seconds && !(*settings.budget.seconds >= 0.0))
    throw std::invalid_argument("run_optimization: budget seconds must be nonnegative");
  if (settings.budget.max_iterations && *settings.budget.max_iterations < 0)
    throw std::invalid_argument("run_optimization: max_iterations must be nonnegative");
  if (!(settings.cadence.growth >= 1.0))
    throw std::invalid_argument("run_optimization: cadence growth must be >= 1");
  if (settings.start.size() != problem.dimension())
    throw std::invalid_argument("run_optimization: start dimension mismatch");
  if (project(settings.region, settings.start) != settings.start)
    throw std::invalid_argument("run_optimization: starting point is infeasible");

  OptimizerState state;
  state.iterate = settings.start;
  state.iteration = 1;
  if (settings.method == Method::Adam) state.adam.emplace();

  std::vector<TraceRecord> trace;
  trace.push_back({0, 0, 0.0, ctl.current_size(), eval(state.iterate)});

  double elapsed = 0.0;
  std::int64_t cum_samples = 0;
  std::int64_t next_recorded = 1;
  std::int64_t last_iter = 0;
  int last_batch = ctl.current_size();

  ScenarioBatch batch;
  Matrix grads;
  while (true) {
    const std::int64_t iter = state.iteration;
    if (settings.budget.max_iterations && iter > *settings.budget.max_iterations) break;
    if (settings.budget.seconds && elapsed >= *settings.budget.seconds) break;

    const int n = ctl.current_size();
    const auto t0 = Clock::now();
    try {
      batch = problem.sample(static_cast<std::size_t>(n), rng);
      problem.gradients(state.iterate, batch, grads);
      const GradientBatchStats stats = accumulate_stats(grads);
      if (settings.method == Method::BasicSgd)
        sgd_step(state, stats.mean, settings.sgd, settings.region);
      else
        adam_step(state, stats.mean, settings.adam, settings.region);
      next_size(stats, ctl);
    } catch (const std::exception& e) {
      throw std::runtime_error("run_optimization: iteration " + std::to_string(iter) + ": " +
                               e.what());
    }
    elapsed += seconds_since(t0);
    cum_samples += n;
    last_iter = iter;
    last_batch = n;

    if (iter >= next_recorded) {
      trace.push_back({iter, cum_samples, elapsed, n, eval(state.iterate)});
      next_recorded = std::max(iter + 1, static_cast<std::int64_t>(std::ceil(
                                             static_cast<double>(iter) * settings.cadence.growth)));
    }
  }

  if (last_iter > 0 && trace.back().iteration != last_iter)
    trace.push_back({last_iter, cum_samples, elapsed, last_batch, eval(state.iterate)});
  if (final_iterate) *final_iterate = state.iterate;
  return trace;
}

}  // namespace dynsgd
