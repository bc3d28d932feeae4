#include "dynsgd/linalg.hpp"

#include <cmath>
#include <string>

namespace dynsgd {

Matrix cholesky_factor(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n)
    throw std::invalid_argument("cholesky_factor: matrix must be square and non-empty");

  double trace = 0.0;
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    trace += m(i, i);
    for (std::size_t j = 0; j < n; ++j) max_abs = std::max(max_abs, std::abs(m(i, j)));
  }
  const double sym_tol = 1e-12 * (1.0 + max_abs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > sym_tol)
        throw std::invalid_argument("cholesky_factor: matrix is not symmetric");

  const double pivot_floor = -1e-10 * trace;
  const double pivot_clamp = 1e-12 * trace;

  Matrix lower(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
    if (d < pivot_floor)
      throw factorization_error(
          j, "cholesky_factor: matrix is indefinite at pivot " + std::to_string(j) +
                 " (residual " + std::to_string(d) + ")");
    d = std::max(d, pivot_clamp);
    const double ljj = std::sqrt(d);
    lower(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
      lower(i, j) = ljj > 0.0 ? s / ljj : 0.0;
    }
  }
  return lower;
}

Matrix sample_correlated_normals(const Matrix& chol_lower, std::size_t count, RngStream& rng) {
  const std::size_t n = chol_lower.rows();
  if (n == 0 || chol_lower.cols() != n)
    throw std::invalid_argument("sample_correlated_normals: factor must be square");
  if (count == 0)
    throw std::invalid_argument("sample_correlated_normals: count must be positive");

  Matrix out(count, n);
  Vector u(n);
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t j = 0; j < n; ++j) u[j] = rng.next_normal();
    auto row = out.row(s);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k <= i; ++k) acc += chol_lower(i, k) * u[k];
      row[i] = acc;
    }
  }
  return out;
}

Matrix random_correlation_matrix(std::size_t dim, std::size_t num_factors, RngStream& rng) {
  if (dim == 0) throw std::invalid_argument("random_correlation_matrix: dim must be positive");
  if (num_factors == 0 || num_factors > dim)
    throw std::invalid_argument("random_correlation_matrix: need 1 <= num_factors <= dim");

  Matrix loadings(dim, num_factors);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < num_factors; ++k) loadings(i, k) = rng.next_normal();
  Vector idiosyncratic(dim);
  for (std::size_t i = 0; i < dim; ++i) idiosyncratic[i] = 0.1 + 0.9 * rng.next_uniform();

  Matrix corr(dim, dim);
  Vector diag(dim);
  for (std::size_t i = 0; i < dim; ++i)
    diag[i] = dot(loadings.row(i), loadings.row(i)) + idiosyncratic[i];
  for (std::size_t i = 0; i < dim; ++i) {
    corr(i, i) = 1.0;
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double cov = dot(loadings.row(i), loadings.row(j));
      const double value = cov / std::sqrt(diag[i] * diag[j]);
      corr(i, j) = value;
      corr(j, i) = value;
    }
  }
  return corr;
}

}  // namespace dynsgd
