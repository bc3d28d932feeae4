#pragma once

#include "dynsgd/batch_stats.hpp"
#include "dynsgd/matrix.hpp"

namespace dynsgd {

enum class SamplingRuleKind { PerDimensionMedian, SingleUpdate, Fixed };

// Batch-size state for one optimization run. Holds the target confidence
// alpha, its cached quantile, the current size and the clamping bounds.
class SamplingController {
 public:
  static constexpr int kDefaultMinSize = 4;
  static constexpr int kDefaultMaxSize = 8192;
  static constexpr double kDefaultEpsilonGrad = 1e-12;

  SamplingController(SamplingRuleKind rule, double alpha, int initial_size,
                     int min_size = kDefaultMinSize, int max_size = kDefaultMaxSize,
                     double epsilon_grad = kDefaultEpsilonGrad);

  SamplingRuleKind rule() const { return rule_; }
  double alpha() const { return alpha_; }
  double z_alpha() const { return z_alpha_; }
  int current_size() const { return n_current_; }
  int min_size() const { return n_min_; }
  int max_size() const { return n_max_; }
  double epsilon_grad() const { return epsilon_grad_; }

  void set_current_size(int n);

 private:
  SamplingRuleKind rule_;
  double alpha_;
  double z_alpha_;
  int n_current_;
  int n_min_;
  int n_max_;
  double epsilon_grad_;
};

// Phi(|mean_k| / sqrt(var_of_mean_k)) per coordinate; 1 when the variance is
// zero and the mean is not, 0.5 when both are zero.
Vector descent_probability_per_dim(const GradientBatchStats& stats);

// Per-coordinate candidate ceil(N * var_k * z^2 / mean_k^2), aggregated by the
// lower-middle median and clamped to [min_size, max_size]. A coordinate whose
// |mean| is at or below epsilon_grad saturates its candidate at max_size.
int per_dimension_next_size(const GradientBatchStats& stats, const SamplingController& ctl);

// Aggregate rule with diagonal covariance:
// ceil(N * sum(mean_k^2 var_k) * z^2 / (sum mean_k^2)^2), clamped. A gradient
// with sum(mean_k^2) at or below epsilon_grad^2 saturates at max_size.
int single_update_next_size(const GradientBatchStats& stats, const SamplingController& ctl);

// Dispatches on the controller's rule and stores the result as the current
// size. Fixed returns the current size unchanged.
int next_size(const GradientBatchStats& stats, SamplingController& ctl);

}  // namespace dynsgd
