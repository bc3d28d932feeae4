#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "dynsgd/problem.hpp"

namespace dynsgd {

// Raised when a sample's wealth argument is not positive; carries the index of
// the offending sample. Signals infeasible leverage in the input point.
class nonpositive_wealth_error : public std::runtime_error {
 public:
  nonpositive_wealth_error(std::size_t sample, const std::string& what)
      : std::runtime_error(what), sample_(sample) {}
  std::size_t sample_index() const { return sample_; }

 private:
  std::size_t sample_;
};

struct OptionsGenConfig {
  std::size_t num_factors = 5;
  double vol_min = 0.1;
  double vol_max = 0.6;
  double mu_scale = 2.0;       // |mu_j| ~ U[0, mu_scale] * own volatility
  double positive_prob = 0.75;
  double rate = 0.01;
};

// Growth portfolio of at-the-money calls and puts on correlated GBM stocks.
// The investor's (mu, own_cov) measure drives scenarios; market_cov prices the
// options under Black-Scholes. Decision vector is (x_call || x_put), 2m wide.
struct OptionsPortfolioSpec {
  std::size_t n_stocks = 0;
  Vector mu;
  Matrix own_cov;
  Matrix market_cov;
  double rate = 0.0;
  Vector s0;
  Vector call_prices;
  Vector put_prices;
  // Derived from own_cov at construction:
  Vector own_vols;
  Matrix own_corr_chol;
};

// At-the-money Black-Scholes prices with T = 1, K = S0 = 1:
// d1 = (r + sigma^2/2)/sigma, d2 = d1 - sigma,
// call = Phi(d1) - e^{-r} Phi(d2), put = call - (1 - e^{-r}).
std::pair<double, double> bs_atm_prices(double sigma, double rate);

// Validates put-call parity and covariance shapes, derives vols and the
// correlation Cholesky factor.
OptionsPortfolioSpec make_options_spec(std::size_t m, Vector mu, Matrix own_cov, Matrix market_cov,
                                       double rate, Vector s0, Vector call_prices,
                                       Vector put_prices);

OptionsPortfolioSpec generate_options_instance(std::size_t m, RngStream& rng,
                                               const OptionsGenConfig& cfg = {});

// Terminal prices under the investor's dynamics plus derived payoffs.
ScenarioBatch options_sample(const OptionsPortfolioSpec& spec, std::size_t count, RngStream& rng);

// Per-sample gradients of the negated log-wealth. Throws
// nonpositive_wealth_error when any sample's wealth argument is <= 0.
void options_gradient(const OptionsPortfolioSpec& spec, const Vector& weights,
                      const ScenarioBatch& batch, Matrix& out);
Matrix options_gradient(const OptionsPortfolioSpec& spec, const Vector& weights,
                        const ScenarioBatch& batch);

// Sample mean of log-wealth, maximize orientation. Errors as options_gradient.
double options_objective(const OptionsPortfolioSpec& spec, const Vector& weights,
                         const ScenarioBatch& batch);
void options_objective_samples(const OptionsPortfolioSpec& spec, const Vector& weights,
                               const ScenarioBatch& batch, std::vector<double>& out);

class OptionsPortfolioProblem : public StochasticProblem {
 public:
  explicit OptionsPortfolioProblem(OptionsPortfolioSpec spec) : spec_(std::move(spec)) {}

  const OptionsPortfolioSpec& spec() const { return spec_; }

  ProblemKind kind() const override { return ProblemKind::OptionsPortfolio; }
  std::size_t dimension() const override { return 2 * spec_.n_stocks; }
  FeasibleRegion region() const override { return FeasibleRegion::capped_simplex(1.0); }
  Vector default_start() const override { return Vector(2 * spec_.n_stocks, 0.0); }

  ScenarioBatch sample(std::size_t count, RngStream& rng) const override {
    return options_sample(spec_, count, rng);
  }
  void gradients(const Vector& x, const ScenarioBatch& batch, Matrix& out) const override {
    options_gradient(spec_, x, batch, out);
  }
  void objective_samples(const Vector& x, const ScenarioBatch& batch,
                         std::vector<double>& out) const override {
    options_objective_samples(spec_, x, batch, out);
  }

 private:
  OptionsPortfolioSpec spec_;
};

}  // namespace dynsgd
