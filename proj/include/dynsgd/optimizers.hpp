#pragma once

#include <cstdint>
#include <optional>

#include "dynsgd/matrix.hpp"
#include "dynsgd/projection.hpp"

namespace dynsgd {

// Step schedule eta0 / iteration.
struct SgdConfig {
  double eta0 = 1.0;
};

struct AdamConfig {
  double eta = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  Vector first_moment;
  Vector second_moment;
  std::int64_t step_count = 0;
};

struct OptimizerState {
  Vector iterate;
  std::int64_t iteration = 1;
  std::optional<AdamState> adam;
};

// One projected SGD update with the batch-mean gradient:
// iterate <- project(iterate - (eta0 / iteration) * ghat). Increments the
// iteration counter. Throws on non-finite ghat.
void sgd_step(OptimizerState& state, const Vector& ghat, const SgdConfig& cfg,
              const FeasibleRegion& region);

// One projected Adam update with bias correction; requires state.adam.
void adam_step(OptimizerState& state, const Vector& ghat, const AdamConfig& cfg,
               const FeasibleRegion& region);

}  // namespace dynsgd
