#include "dynsgd/newsvendor.hpp"

#include <cmath>
#include <stdexcept>

#include "dynsgd/linalg.hpp"

namespace dynsgd {

NewsvendorSpec make_newsvendor_spec(std::size_t n, Vector prices, Vector costs,
                                    double risk_aversion, Vector demand_mu, Vector demand_sigma,
                                    Matrix demand_corr) {
  if (n == 0) throw std::invalid_argument("newsvendor: need at least one product");
  if (prices.size() != n || costs.size() != n || demand_mu.size() != n ||
      demand_sigma.size() != n || demand_corr.rows() != n || demand_corr.cols() != n)
    throw std::invalid_argument("newsvendor: field dimensions disagree with n_products");
  if (!(risk_aversion > 0.0))
    throw std::invalid_argument("newsvendor: risk aversion must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(prices[i] > costs[i]))
      throw std::invalid_argument("newsvendor: price must exceed cost for every product");
    if (!(costs[i] > 0.0)) throw std::invalid_argument("newsvendor: costs must be positive");
    if (demand_sigma[i] < 0.0)
      throw std::invalid_argument("newsvendor: demand sigma must be nonnegative");
  }

  NewsvendorSpec spec;
  spec.n_products = n;
  spec.prices = std::move(prices);
  spec.costs = std::move(costs);
  spec.risk_aversion = risk_aversion;
  spec.demand_mu = std::move(demand_mu);
  spec.demand_sigma = std::move(demand_sigma);
  spec.demand_chol = cholesky_factor(demand_corr);
  spec.demand_corr = std::move(demand_corr);
  return spec;
}

NewsvendorSpec generate_newsvendor_instance(std::size_t n, RngStream& rng,
                                            const NewsvendorGenConfig& cfg) {
  if (n == 0) throw std::invalid_argument("newsvendor: need at least one product");
  Vector prices(n), sigmas(n);
  for (std::size_t i = 0; i < n; ++i)
    prices[i] = cfg.price_min + (cfg.price_max - cfg.price_min) * rng.next_uniform();
  for (std::size_t i = 0; i < n; ++i)
    sigmas[i] = cfg.sigma_min + (cfg.sigma_max - cfg.sigma_min) * rng.next_uniform();

  Matrix corr(n, n, cfg.correlation);
  for (std::size_t i = 0; i < n; ++i) corr(i, i) = 1.0;

  return make_newsvendor_spec(n, std::move(prices), Vector(n, cfg.unit_cost), cfg.risk_aversion,
                              Vector(n, cfg.demand_mu), std::move(sigmas), std::move(corr));
}

ScenarioBatch newsvendor_sample(const NewsvendorSpec& spec, std::size_t count, RngStream& rng) {
  if (count == 0) throw std::invalid_argument("newsvendor_sample: count must be positive");
  ScenarioBatch batch;
  batch.kind = ProblemKind::Newsvendor;
  batch.outcomes = sample_correlated_normals(spec.demand_chol, count, rng);
  for (std::size_t s = 0; s < count; ++s) {
    auto row = batch.outcomes.row(s);
    for (std::size_t i = 0; i < spec.n_products; ++i)
      row[i] = std::exp(spec.demand_mu[i] + spec.demand_sigma[i] * row[i]);
  }
  return batch;
}

namespace {

inline double sample_profit(const NewsvendorSpec& spec, const Vector& order,
                            std::span<const double> demand) {
  double profit = 0.0;
  for (std::size_t i = 0; i < spec.n_products; ++i)
    profit += spec.prices[i] * std::min(order[i], demand[i]) - spec.costs[i] * order[i];
  return profit;
}

}  // namespace

void newsvendor_gradient(const NewsvendorSpec& spec, const Vector& order, const ScenarioBatch& batch,
                         Matrix& out) {
  if (batch.kind != ProblemKind::Newsvendor)
    throw std::invalid_argument("newsvendor_gradient: batch kind mismatch");
  if (order.size() != spec.n_products)
    throw std::invalid_argument("newsvendor_gradient: order dimension mismatch");
  const std::size_t count = batch.size();
  out = Matrix(count, spec.n_products);
  const double lambda = spec.risk_aversion;
  for (std::size_t s = 0; s < count; ++s) {
    auto demand = batch.outcomes.row(s);
    const double weight = std::exp(-lambda * sample_profit(spec, order, demand));
    auto grad = out.row(s);
    for (std::size_t i = 0; i < spec.n_products; ++i) {
      const double sell = order[i] < demand[i] ? spec.prices[i] : 0.0;
      grad[i] = -lambda * (sell - spec.costs[i]) * weight;
    }
  }
}

Matrix newsvendor_gradient(const NewsvendorSpec& spec, const Vector& order,
                           const ScenarioBatch& batch) {
  Matrix out;
  newsvendor_gradient(spec, order, batch, out);
  return out;
}

void newsvendor_objective_samples(const NewsvendorSpec& spec, const Vector& order,
                                  const ScenarioBatch& batch, std::vector<double>& out) {
  if (batch.kind != ProblemKind::Newsvendor)
    throw std::invalid_argument("newsvendor_objective: batch kind mismatch");
  if (order.size() != spec.n_products)
    throw std::invalid_argument("newsvendor_objective: order dimension mismatch");
  out.resize(batch.size());
  for (std::size_t s = 0; s < batch.size(); ++s)
    out[s] = -std::exp(-spec.risk_aversion * sample_profit(spec, order, batch.outcomes.row(s)));
}

double newsvendor_objective(const NewsvendorSpec& spec, const Vector& order,
                            const ScenarioBatch& batch) {
  std::vector<double> values;
  newsvendor_objective_samples(spec, order, batch, values);
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace dynsgd
