#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "dynsgd/matrix.hpp"
#include "dynsgd/rng.hpp"

namespace dynsgd {

// Raised when a matrix is indefinite beyond the PSD tolerance.
class factorization_error : public std::runtime_error {
 public:
  factorization_error(std::size_t pivot, const std::string& what)
      : std::runtime_error(what), pivot_(pivot) {}
  std::size_t pivot_index() const { return pivot_; }

 private:
  std::size_t pivot_;
};

// Lower-triangular L with L*L^T = m. Pivots within -1e-10*trace(m) of zero
// are clamped up to 1e-12*trace(m); anything lower raises factorization_error
// naming the failing pivot.
Matrix cholesky_factor(const Matrix& m);

// `count` rows, each L*u with u i.i.d. standard normal. L must be the
// lower-triangular output of cholesky_factor.
Matrix sample_correlated_normals(const Matrix& chol_lower, std::size_t count, RngStream& rng);

// Unit-diagonal positive-definite correlation matrix from a Gaussian factor
// model: normalize(B*B^T + D) with B dim-by-num_factors and D diagonal positive.
Matrix random_correlation_matrix(std::size_t dim, std::size_t num_factors, RngStream& rng);

}  // namespace dynsgd
