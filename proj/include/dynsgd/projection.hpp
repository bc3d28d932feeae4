#pragma once

#include "dynsgd/matrix.hpp"

namespace dynsgd {

enum class RegionKind { NonnegativeOrthant, CappedSimplex };

// Feasible set: either {x >= 0} or {x >= 0, sum(x) <= cap}.
class FeasibleRegion {
 public:
  static FeasibleRegion nonnegative_orthant() { return FeasibleRegion(RegionKind::NonnegativeOrthant, 0.0); }
  static FeasibleRegion capped_simplex(double cap);

  RegionKind kind() const { return kind_; }
  double cap() const { return cap_; }

 private:
  FeasibleRegion(RegionKind kind, double cap) : kind_(kind), cap_(cap) {}
  RegionKind kind_;
  double cap_;
};

// Euclidean projection onto the region. The capped simplex uses the sort-based
// threshold: entries equal to the threshold map to zero.
Vector project(const FeasibleRegion& region, const Vector& v);

}  // namespace dynsgd
