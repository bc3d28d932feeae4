#include "dynsgd/evaluator.hpp"

#include <cmath>
#include <stdexcept>

namespace dynsgd {

McObjectiveEvaluator::McObjectiveEvaluator(const StochasticProblem& problem,
                                           std::size_t sample_count, RngStream rng)
    : problem_(&problem) {
  if (sample_count < 2)
    throw std::invalid_argument("McObjectiveEvaluator: need at least two evaluation samples");
  batch_ = problem.sample(sample_count, rng);
}

McObjectiveEvaluator::Estimate McObjectiveEvaluator::estimate(const Vector& x) const {
  std::vector<double> values;
  problem_->objective_samples(x, batch_, values);
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / (n * (n - 1.0)))};
}

}  // namespace dynsgd
