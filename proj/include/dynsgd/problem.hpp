#pragma once

#include <cstddef>

#include "dynsgd/matrix.hpp"
#include "dynsgd/projection.hpp"
#include "dynsgd/rng.hpp"

namespace dynsgd {

enum class ProblemKind { Newsvendor, OptionsPortfolio };

// One batch of exogenous outcomes, one row per sample: demands for the
// newsvendor, terminal prices plus the derived option payoffs for the
// portfolio problem.
struct ScenarioBatch {
  ProblemKind kind = ProblemKind::Newsvendor;
  Matrix outcomes;
  Matrix call_payoff;
  Matrix put_payoff;

  std::size_t size() const { return outcomes.rows(); }
};

// Gradient-oracle contract shared by both applications. Gradients are of the
// negated objective (minimize form); objective values keep the paper's
// maximize orientation. Implementations are immutable after construction and
// safe to share across threads; sampling needs an exclusive RngStream.
class StochasticProblem {
 public:
  virtual ~StochasticProblem() = default;

  virtual ProblemKind kind() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual FeasibleRegion region() const = 0;
  virtual Vector default_start() const = 0;

  virtual ScenarioBatch sample(std::size_t count, RngStream& rng) const = 0;
  virtual void gradients(const Vector& x, const ScenarioBatch& batch, Matrix& out) const = 0;
  virtual void objective_samples(const Vector& x, const ScenarioBatch& batch,
                                 std::vector<double>& out) const = 0;

  double objective(const Vector& x, const ScenarioBatch& batch) const;
};

}  // namespace dynsgd
