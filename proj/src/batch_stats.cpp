#include "dynsgd/batch_stats.hpp"

#include <stdexcept>

namespace dynsgd {

GradientBatchStats accumulate_stats(const Matrix& gradient_samples) {
  const std::size_t n = gradient_samples.rows();
  const std::size_t dim = gradient_samples.cols();
  if (n < 2)
    throw std::invalid_argument("accumulate_stats: sample variance needs at least two samples");

  GradientBatchStats stats;
  stats.batch_size = static_cast<std::int64_t>(n);
  stats.mean.assign(dim, 0.0);
  stats.var_of_mean.assign(dim, 0.0);

  for (std::size_t s = 0; s < n; ++s) {
    auto row = gradient_samples.row(s);
    for (std::size_t k = 0; k < dim; ++k) stats.mean[k] += row[k];
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < dim; ++k) stats.mean[k] *= inv_n;

  for (std::size_t s = 0; s < n; ++s) {
    auto row = gradient_samples.row(s);
    for (std::size_t k = 0; k < dim; ++k) {
      const double d = row[k] - stats.mean[k];
      stats.var_of_mean[k] += d * d;
    }
  }
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n - 1));
  for (std::size_t k = 0; k < dim; ++k) stats.var_of_mean[k] *= scale;
  return stats;
}

GradientBatchStats accumulate_stats(const std::vector<Vector>& gradient_samples) {
  if (gradient_samples.size() < 2)
    throw std::invalid_argument("accumulate_stats: sample variance needs at least two samples");
  const std::size_t dim = gradient_samples.front().size();
  Matrix packed(gradient_samples.size(), dim);
  for (std::size_t s = 0; s < gradient_samples.size(); ++s) {
    if (gradient_samples[s].size() != dim)
      throw std::invalid_argument("accumulate_stats: gradient samples differ in dimension");
    auto row = packed.row(s);
    for (std::size_t k = 0; k < dim; ++k) row[k] = gradient_samples[s][k];
  }
  return accumulate_stats(packed);
}

}  // namespace dynsgd
