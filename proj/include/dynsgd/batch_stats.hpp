#pragma once

#include <cstdint>

#include "dynsgd/matrix.hpp"

namespace dynsgd {

// Mini-batch gradient statistics: the batch mean and the per-coordinate
// variance of that mean (the 1/(N(N-1)) estimator), diagonal only.
struct GradientBatchStats {
  Vector mean;
  Vector var_of_mean;
  std::int64_t batch_size = 0;
};

// Two-pass mean/variance over the rows of `gradient_samples`.
// Requires at least two rows.
GradientBatchStats accumulate_stats(const Matrix& gradient_samples);

// Convenience overload; all vectors must share one dimension.
GradientBatchStats accumulate_stats(const std::vector<Vector>& gradient_samples);

}  // namespace dynsgd
