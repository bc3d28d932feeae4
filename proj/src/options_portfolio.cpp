#include "dynsgd/options_portfolio.hpp"

#include <cmath>
#include <string>

#include "dynsgd/linalg.hpp"
#include "dynsgd/normal.hpp"

namespace dynsgd {

std::pair<double, double> bs_atm_prices(double sigma, double rate) {
  if (!(sigma > 0.0)) throw std::domain_error("bs_atm_prices: sigma must be positive");
  if (rate < 0.0) throw std::domain_error("bs_atm_prices: rate must be nonnegative");
  const double d1 = (rate + 0.5 * sigma * sigma) / sigma;
  const double d2 = d1 - sigma;
  const double discount = std::exp(-rate);
  const double call = normal_cdf(d1) - discount * normal_cdf(d2);
  const double put = call - (1.0 - discount);
  return {call, put};
}

OptionsPortfolioSpec make_options_spec(std::size_t m, Vector mu, Matrix own_cov, Matrix market_cov,
                                       double rate, Vector s0, Vector call_prices,
                                       Vector put_prices) {
  if (m == 0) throw std::invalid_argument("options: need at least one stock");
  if (mu.size() != m || s0.size() != m || call_prices.size() != m || put_prices.size() != m ||
      own_cov.rows() != m || own_cov.cols() != m || market_cov.rows() != m ||
      market_cov.cols() != m)
    throw std::invalid_argument("options: field dimensions disagree with n_stocks");
  if (rate < 0.0) throw std::invalid_argument("options: rate must be nonnegative");

  OptionsPortfolioSpec spec;
  spec.n_stocks = m;
  spec.own_vols.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!(s0[j] > 0.0)) throw std::invalid_argument("options: initial prices must be positive");
    if (!(call_prices[j] > 0.0) || !(put_prices[j] > 0.0))
      throw std::invalid_argument("options: option prices must be positive");
    const double parity = call_prices[j] - put_prices[j] - s0[j] * (1.0 - std::exp(-rate));
    if (std::abs(parity) > 1e-12 * s0[j])
      throw std::invalid_argument("options: put-call parity violated at stock " +
                                  std::to_string(j));
    const double var = own_cov(j, j);
    if (!(var > 0.0)) throw std::invalid_argument("options: own covariance diagonal must be positive");
    spec.own_vols[j] = std::sqrt(var);
  }

  Matrix own_corr(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      own_corr(i, j) = own_cov(i, j) / (std::sqrt(own_cov(i, i)) * std::sqrt(own_cov(j, j)));
  spec.own_corr_chol = cholesky_factor(own_corr);

  spec.mu = std::move(mu);
  spec.own_cov = std::move(own_cov);
  spec.market_cov = std::move(market_cov);
  spec.rate = rate;
  spec.s0 = std::move(s0);
  spec.call_prices = std::move(call_prices);
  spec.put_prices = std::move(put_prices);
  return spec;
}

OptionsPortfolioSpec generate_options_instance(std::size_t m, RngStream& rng,
                                               const OptionsGenConfig& cfg) {
  if (m == 0) throw std::invalid_argument("options: need at least one stock");
  const std::size_t factors = std::min(cfg.num_factors, m);

  const auto covariance_from_factors = [&](Vector& vols_out) {
    Matrix corr = random_correlation_matrix(m, factors, rng);
    vols_out.resize(m);
    for (std::size_t j = 0; j < m; ++j)
      vols_out[j] = cfg.vol_min + (cfg.vol_max - cfg.vol_min) * rng.next_uniform();
    Matrix cov(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) cov(i, j) = vols_out[i] * vols_out[j] * corr(i, j);
    return cov;
  };

  Vector own_vols, market_vols;
  Matrix own_cov = covariance_from_factors(own_vols);
  Matrix market_cov = covariance_from_factors(market_vols);

  Vector mu(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double magnitude = cfg.mu_scale * rng.next_uniform() * own_vols[j];
    const bool positive = rng.next_uniform() < cfg.positive_prob;
    mu[j] = positive ? magnitude : -magnitude;
  }

  Vector s0(m, 1.0), calls(m), puts(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto [call, put] = bs_atm_prices(market_vols[j], cfg.rate);
    calls[j] = call;
    puts[j] = put;
  }
  return make_options_spec(m, std::move(mu), std::move(own_cov), std::move(market_cov), cfg.rate,
                           std::move(s0), std::move(calls), std::move(puts));
}

ScenarioBatch options_sample(const OptionsPortfolioSpec& spec, std::size_t count, RngStream& rng) {
  if (count == 0) throw std::invalid_argument("options_sample: count must be positive");
  const std::size_t m = spec.n_stocks;
  ScenarioBatch batch;
  batch.kind = ProblemKind::OptionsPortfolio;
  batch.outcomes = sample_correlated_normals(spec.own_corr_chol, count, rng);
  batch.call_payoff = Matrix(count, m);
  batch.put_payoff = Matrix(count, m);
  for (std::size_t s = 0; s < count; ++s) {
    auto row = batch.outcomes.row(s);
    for (std::size_t j = 0; j < m; ++j) {
      const double vol = spec.own_vols[j];
      const double terminal =
          spec.s0[j] * std::exp(spec.mu[j] - 0.5 * vol * vol + vol * row[j]);
      row[j] = terminal;
      batch.call_payoff(s, j) = std::max(terminal - spec.s0[j], 0.0);
      batch.put_payoff(s, j) = std::max(spec.s0[j] - terminal, 0.0);
    }
  }
  return batch;
}

namespace {

// Wealth argument 1 + r + sum_i x_i (payoff_i/price_i - (1+r)) for one sample.
inline double sample_wealth(const OptionsPortfolioSpec& spec, const Vector& weights,
                            const ScenarioBatch& batch, std::size_t s) {
  const std::size_t m = spec.n_stocks;
  const double gross = 1.0 + spec.rate;
  double wealth = gross;
  for (std::size_t j = 0; j < m; ++j) {
    wealth += weights[j] * (batch.call_payoff(s, j) / spec.call_prices[j] - gross);
    wealth += weights[m + j] * (batch.put_payoff(s, j) / spec.put_prices[j] - gross);
  }
  return wealth;
}

void check_inputs(const OptionsPortfolioSpec& spec, const Vector& weights,
                  const ScenarioBatch& batch, const char* who) {
  if (batch.kind != ProblemKind::OptionsPortfolio)
    throw std::invalid_argument(std::string(who) + ": batch kind mismatch");
  if (weights.size() != 2 * spec.n_stocks)
    throw std::invalid_argument(std::string(who) + ": weight vector must have 2m entries");
}

[[noreturn]] void throw_wealth(std::size_t s, double wealth) {
  throw nonpositive_wealth_error(
      s, "options: nonpositive wealth argument " + std::to_string(wealth) + " at sample " +
             std::to_string(s) + " (infeasible leverage)");
}

}  // namespace

void options_gradient(const OptionsPortfolioSpec& spec, const Vector& weights,
                      const ScenarioBatch& batch, Matrix& out) {
  check_inputs(spec, weights, batch, "options_gradient");
  const std::size_t m = spec.n_stocks;
  const double gross = 1.0 + spec.rate;
  out = Matrix(batch.size(), 2 * m);
  for (std::size_t s = 0; s < batch.size(); ++s) {
    const double wealth = sample_wealth(spec, weights, batch, s);
    if (!(wealth > 0.0)) throw_wealth(s, wealth);
    auto grad = out.row(s);
    for (std::size_t j = 0; j < m; ++j) {
      grad[j] = -(batch.call_payoff(s, j) / spec.call_prices[j] - gross) / wealth;
      grad[m + j] = -(batch.put_payoff(s, j) / spec.put_prices[j] - gross) / wealth;
    }
  }
}

Matrix options_gradient(const OptionsPortfolioSpec& spec, const Vector& weights,
                        const ScenarioBatch& batch) {
  Matrix out;
  options_gradient(spec, weights, batch, out);
  return out;
}

void options_objective_samples(const OptionsPortfolioSpec& spec, const Vector& weights,
                               const ScenarioBatch& batch, std::vector<double>& out) {
  check_inputs(spec, weights, batch, "options_objective");
  out.resize(batch.size());
  for (std::size_t s = 0; s < batch.size(); ++s) {
    const double wealth = sample_wealth(spec, weights, batch, s);
    if (!(wealth > 0.0)) throw_wealth(s, wealth);
    out[s] = std::log(wealth);
  }
}

double options_objective(const OptionsPortfolioSpec& spec, const Vector& weights,
                         const ScenarioBatch& batch) {
  std::vector<double> values;
  options_objective_samples(spec, weights, batch, values);
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace dynsgd
