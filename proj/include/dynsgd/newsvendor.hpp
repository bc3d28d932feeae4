#pragma once

#include <cstddef>

#include "dynsgd/problem.hpp"

namespace dynsgd {

// Generation defaults for a random instance; every field can be overridden.
struct NewsvendorGenConfig {
  double price_min = 15.0;
  double price_max = 30.0;
  double unit_cost = 10.0;
  double risk_aversion = 0.02;
  double demand_mu = 3.0;
  double sigma_min = 0.4724;
  double sigma_max = 1.2684;
  double correlation = 0.25;
};

// Multi-product newsvendor with exponential utility and correlated lognormal
// demand. All sampled parameters are frozen at generation time.
struct NewsvendorSpec {
  std::size_t n_products = 0;
  Vector prices;
  Vector costs;
  double risk_aversion = 0.0;
  Vector demand_mu;
  Vector demand_sigma;
  Matrix demand_corr;
  Matrix demand_chol;  // cached Cholesky factor of demand_corr
};

// Validates fields (prices > costs, correlation factorizable) and caches the
// Cholesky factor.
NewsvendorSpec make_newsvendor_spec(std::size_t n, Vector prices, Vector costs,
                                    double risk_aversion, Vector demand_mu, Vector demand_sigma,
                                    Matrix demand_corr);

NewsvendorSpec generate_newsvendor_instance(std::size_t n, RngStream& rng,
                                            const NewsvendorGenConfig& cfg = {});

// Demands exp(mu + sigma .* (L u)), one row per sample.
ScenarioBatch newsvendor_sample(const NewsvendorSpec& spec, std::size_t count, RngStream& rng);

// Per-sample gradients of the negated utility, one row per sample.
void newsvendor_gradient(const NewsvendorSpec& spec, const Vector& order, const ScenarioBatch& batch,
                         Matrix& out);
Matrix newsvendor_gradient(const NewsvendorSpec& spec, const Vector& order,
                           const ScenarioBatch& batch);

// Sample mean of -exp(-lambda * profit), maximize orientation.
double newsvendor_objective(const NewsvendorSpec& spec, const Vector& order,
                            const ScenarioBatch& batch);
void newsvendor_objective_samples(const NewsvendorSpec& spec, const Vector& order,
                                  const ScenarioBatch& batch, std::vector<double>& out);

class NewsvendorProblem : public StochasticProblem {
 public:
  explicit NewsvendorProblem(NewsvendorSpec spec) : spec_(std::move(spec)) {}

  const NewsvendorSpec& spec() const { return spec_; }

  ProblemKind kind() const override { return ProblemKind::Newsvendor; }
  std::size_t dimension() const override { return spec_.n_products; }
  FeasibleRegion region() const override { return FeasibleRegion::nonnegative_orthant(); }
  Vector default_start() const override { return Vector(spec_.n_products, 1.0); }

  ScenarioBatch sample(std::size_t count, RngStream& rng) const override {
    return newsvendor_sample(spec_, count, rng);
  }
  void gradients(const Vector& x, const ScenarioBatch& batch, Matrix& out) const override {
    newsvendor_gradient(spec_, x, batch, out);
  }
  void objective_samples(const Vector& x, const ScenarioBatch& batch,
                         std::vector<double>& out) const override {
    newsvendor_objective_samples(spec_, x, batch, out);
  }

 private:
  NewsvendorSpec spec_;
};

}  // namespace dynsgd
