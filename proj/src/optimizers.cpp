#include "dynsgd/optimizers.hpp"

#include <cmath>
#include <stdexcept>

namespace dynsgd {

namespace {

void check_gradient(const OptimizerState& state, const Vector& ghat) {
  if (ghat.size() != state.iterate.size())
    throw std::invalid_argument("optimizer step: gradient dimension mismatch");
  for (double g : ghat)
    if (!std::isfinite(g))
      throw std::domain_error("optimizer step: non-finite gradient estimate");
}

}  // namespace

void sgd_step(OptimizerState& state, const Vector& ghat, const SgdConfig& cfg,
              const FeasibleRegion& region) {
  if (!(cfg.eta0 > 0.0)) throw std::invalid_argument("sgd_step: eta0 must be positive");
  if (state.iteration < 1) throw std::logic_error("sgd_step: iteration counter must start at 1");
  check_gradient(state, ghat);

  const double eta = cfg.eta0 / static_cast<double>(state.iteration);
  Vector moved(state.iterate);
  for (std::size_t i = 0; i < moved.size(); ++i) moved[i] -= eta * ghat[i];
  state.iterate = project(region, moved);
  ++state.iteration;
}

void adam_step(OptimizerState& state, const Vector& ghat, const AdamConfig& cfg,
               const FeasibleRegion& region) {
  if (!(cfg.eta > 0.0) || !(cfg.epsilon > 0.0) || !(cfg.beta1 >= 0.0 && cfg.beta1 < 1.0) ||
      !(cfg.beta2 >= 0.0 && cfg.beta2 < 1.0))
    throw std::invalid_argument("adam_step: hyperparameters out of range");
  if (!state.adam) throw std::logic_error("adam_step: Adam state not initialized");
  check_gradient(state, ghat);

  AdamState& adam = *state.adam;
  if (adam.first_moment.empty()) {
    adam.first_moment.assign(state.iterate.size(), 0.0);
    adam.second_moment.assign(state.iterate.size(), 0.0);
  }
  if (adam.first_moment.size() != state.iterate.size())
    throw std::invalid_argument("adam_step: moment dimension mismatch");

  const std::int64_t t = adam.step_count + 1;
  const double bias1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
  const double bias2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));

  Vector moved(state.iterate);
  for (std::size_t i = 0; i < moved.size(); ++i) {
    double& m = adam.first_moment[i];
    double& v = adam.second_moment[i];
    m = cfg.beta1 * m + (1.0 - cfg.beta1) * ghat[i];
    v = cfg.beta2 * v + (1.0 - cfg.beta2) * ghat[i] * ghat[i];
    const double m_hat = m / bias1;
    const double v_hat = v / bias2;
    moved[i] -= cfg.eta * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
  }
  state.iterate = project(region, moved);
  adam.step_count = t;
  ++state.iteration;
}

}  // namespace dynsgd
