#include "dynsgd/sampling_rules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dynsgd/normal.hpp"

namespace dynsgd {

namespace {

int clamp_size(double candidate, const SamplingController& ctl) {
  const double lo = static_cast<double>(ctl.min_size());
  const double hi = static_cast<double>(ctl.max_size());
  return static_cast<int>(std::clamp(candidate, lo, hi));
}

}  // namespace

SamplingController::SamplingController(SamplingRuleKind rule, double alpha, int initial_size,
                                       int min_size, int max_size, double epsilon_grad)
    : rule_(rule),
      alpha_(alpha),
      z_alpha_(0.0),
      n_current_(initial_size),
      n_min_(min_size),
      n_max_(max_size),
      epsilon_grad_(epsilon_grad) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("SamplingController: alpha must lie in (0, 0.5), got " +
                                std::to_string(alpha));
  if (min_size < 2)
    throw std::invalid_argument("SamplingController: min_size must be at least 2");
  if (max_size < min_size)
    throw std::invalid_argument("SamplingController: max_size must be >= min_size");
  if (initial_size < min_size || initial_size > max_size)
    throw std::invalid_argument("SamplingController: initial size " +
                                std::to_string(initial_size) + " outside [" +
                                std::to_string(min_size) + ", " + std::to_string(max_size) + "]");
  if (!(epsilon_grad > 0.0))
    throw std::invalid_argument("SamplingController: epsilon_grad must be positive");
  z_alpha_ = normal_quantile(1.0 - alpha);
}

void SamplingController::set_current_size(int n) {
  if (n < n_min_ || n > n_max_)
    throw std::invalid_argument("SamplingController: size outside configured bounds");
  n_current_ = n;
}

Vector descent_probability_per_dim(const GradientBatchStats& stats) {
  Vector prob(stats.mean.size());
  for (std::size_t k = 0; k < stats.mean.size(); ++k) {
    const double v = stats.var_of_mean[k];
    if (v == 0.0) {
      prob[k] = stats.mean[k] != 0.0 ? 1.0 : 0.5;
    } else {
      prob[k] = normal_cdf(std::abs(stats.mean[k]) / std::sqrt(v));
    }
  }
  return prob;
}

int per_dimension_next_size(const GradientBatchStats& stats, const SamplingController& ctl) {
  if (ctl.rule() != SamplingRuleKind::PerDimensionMedian)
    throw std::logic_error("per_dimension_next_size: controller uses a different rule");
  const double z2 = ctl.z_alpha() * ctl.z_alpha();
  const double n = static_cast<double>(stats.batch_size);
  const double eps = ctl.epsilon_grad();

  Vector candidates(stats.mean.size());
  for (std::size_t k = 0; k < stats.mean.size(); ++k) {
    const double g = stats.mean[k];
    if (std::abs(g) <= eps) {
      // No directional evidence in this coordinate; saturate.
      candidates[k] = static_cast<double>(ctl.max_size());
    } else {
      candidates[k] = std::ceil(n * stats.var_of_mean[k] * z2 / (g * g));
    }
  }
  // Lower-middle median keeps the aggregate equal to one of the candidates.
  const std::size_t mid = (candidates.size() - 1) / 2;
  std::nth_element(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(mid),
                   candidates.end());
  return clamp_size(candidates[mid], ctl);
}

int single_update_next_size(const GradientBatchStats& stats, const SamplingController& ctl) {
  if (ctl.rule() != SamplingRuleKind::SingleUpdate)
    throw std::logic_error("single_update_next_size: controller uses a different rule");
  const double eps = ctl.epsilon_grad();

  double norm2 = 0.0;
  double weighted_var = 0.0;
  for (std::size_t k = 0; k < stats.mean.size(); ++k) {
    norm2 += stats.mean[k] * stats.mean[k];
    weighted_var += stats.mean[k] * stats.mean[k] * stats.var_of_mean[k];
  }
  if (norm2 <= eps * eps) return ctl.max_size();

  const double z2 = ctl.z_alpha() * ctl.z_alpha();
  const double n = static_cast<double>(stats.batch_size);
  const double candidate = std::ceil(n * weighted_var * z2 / (norm2 * norm2));
  return clamp_size(candidate, ctl);
}

int next_size(const GradientBatchStats& stats, SamplingController& ctl) {
  int n = ctl.current_size();
  switch (ctl.rule()) {
    case SamplingRuleKind::PerDimensionMedian:
      n = per_dimension_next_size(stats, ctl);
      break;
    case SamplingRuleKind::SingleUpdate:
      n = single_update_next_size(stats, ctl);
      break;
    case SamplingRuleKind::Fixed:
      break;
  }
  ctl.set_current_size(n);
  return n;
}

}  // namespace dynsgd
