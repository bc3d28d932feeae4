#pragma once

#include <cstddef>

#include "dynsgd/problem.hpp"

namespace dynsgd {

// Common-random-number objective evaluator: one scenario batch is frozen at
// construction and every iterate from every method is scored on it, so
// convergence curves are directly comparable. Immutable after construction
// and safe to share across threads.
class McObjectiveEvaluator {
 public:
  struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
  };

  McObjectiveEvaluator(const StochasticProblem& problem, std::size_t sample_count, RngStream rng);

  double operator()(const Vector& x) const { return estimate(x).mean; }
  Estimate estimate(const Vector& x) const;

  std::size_t sample_count() const { return batch_.size(); }
  const ScenarioBatch& batch() const { return batch_; }

 private:
  const StochasticProblem* problem_;
  ScenarioBatch batch_;
};

}  // namespace dynsgd
