#include "dynsgd/problem.hpp"

namespace dynsgd {

double StochasticProblem::objective(const Vector& x, const ScenarioBatch& batch) const {
  std::vector<double> values;
  objective_samples(x, batch, values);
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace dynsgd
