#pragma once

namespace dynsgd {

// Standard normal CDF. Throws std::domain_error on non-finite input.
double normal_cdf(double z);

// Standard normal quantile for p in (0,1); rational initial approximation
// refined with one Halley step, absolute error well under 1e-9.
// Throws std::domain_error when p <= 0 or p >= 1.
double normal_quantile(double p);

}  // namespace dynsgd
