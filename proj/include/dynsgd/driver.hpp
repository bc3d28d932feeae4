#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynsgd/evaluator.hpp"
#include "dynsgd/optimizers.hpp"
#include "dynsgd/problem.hpp"
#include "dynsgd/sampling_rules.hpp"

namespace dynsgd {

enum class Method { BasicSgd, Adam };

// One convergence-trace row. wall_seconds counts optimizer time only; the
// objective is evaluated with the run timer paused.
struct TraceRecord {
  std::int64_t iteration = 0;
  std::int64_t cum_samples = 0;
  double wall_seconds = 0.0;
  int batch_size = 0;
  double objective = 0.0;
};

// At least one bound must be set. seconds counts optimizer wall-clock.
struct RunBudget {
  std::optional<double> seconds;
  std::optional<std::int64_t> max_iterations;
};

// Iterations are recorded on a geometric grid (every iteration early, then
// spacing growing by `growth`) plus always the final one, keeping evaluation
// cost bounded on runs with millions of cheap iterations. The grid depends
// only on iteration numbers, so traces stay reproducible.
struct TraceCadence {
  double growth = 1.02;
};

struct RunSettings {
  Method method = Method::BasicSgd;
  SgdConfig sgd{};
  AdamConfig adam{};
  FeasibleRegion region = FeasibleRegion::nonnegative_orthant();
  Vector start;
  RunBudget budget{};
  TraceCadence cadence{};
};

// Projected mini-batch loop: sample a batch, average per-sample gradients,
// take one step, feed the batch statistics to the controller for the next
// batch size. Emits the initial point as record zero. Oracle failures are
// rethrown with iteration context. When final_iterate is non-null it receives
// the last iterate.
std::vector<TraceRecord> run_optimization(const StochasticProblem& problem,
                                          const RunSettings& settings, SamplingController& ctl,
                                          RngStream& rng, const McObjectiveEvaluator& eval,
                                          Vector* final_iterate = nullptr);

}  // namespace dynsgd
