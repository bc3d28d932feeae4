#include "dynsgd/projection.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dynsgd {

FeasibleRegion FeasibleRegion::capped_simplex(double cap) {
  if (!(cap > 0.0)) throw std::invalid_argument("FeasibleRegion: cap must be positive");
  return FeasibleRegion(RegionKind::CappedSimplex, cap);
}

Vector project(const FeasibleRegion& region, const Vector& v) {
  Vector clipped(v.size());
  double positive_sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    clipped[i] = std::max(v[i], 0.0);
    positive_sum += clipped[i];
  }
  if (region.kind() == RegionKind::NonnegativeOrthant || positive_sum <= region.cap())
    return clipped;

  // Budget active: subtract the unique threshold from the entries that stay
  // positive so the result sums to cap (Duchi et al. simplex projection).
  Vector sorted(v);
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumulative += sorted[j];
    const double t = (cumulative - region.cap()) / static_cast<double>(j + 1);
    if (sorted[j] - t > 0.0) threshold = t;
  }
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - threshold, 0.0);
  return out;
}

}  // namespace dynsgd
