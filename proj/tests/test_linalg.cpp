#include <doctest.h>

#include <cmath>

#include "dynsgd/linalg.hpp"

using namespace dynsgd;

namespace {

Matrix reconstruct(const Matrix& lower) {
  const std::size_t n = lower.rows();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += lower(i, k) * lower(j, k);
      m(i, j) = s;
    }
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

double max_abs(const Matrix& a) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j)));
  return d;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("cholesky of the identity") {
    const Matrix id = Matrix::identity(3);
    CHECK(cholesky_factor(id) == id);
  }

  TEST_CASE("cholesky of a hand-checkable matrix") {
    Matrix m(2, 2);
    m(0, 0) = 4; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 3;
    const Matrix lower = cholesky_factor(m);
    CHECK(lower(0, 0) == doctest::Approx(2.0));
    CHECK(lower(0, 1) == 0.0);
    CHECK(lower(1, 0) == doctest::Approx(1.0));
    CHECK(lower(1, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(max_abs_diff(reconstruct(lower), m) <= 1e-10 * (1.0 + max_abs(m)));
  }

  TEST_CASE("indefinite matrix is rejected with the pivot index") {
    Matrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 1;  // eigenvalues 3, -1
    CHECK_THROWS_WITH_AS(cholesky_factor(m), doctest::Contains("pivot 1"), factorization_error);
    try {
      cholesky_factor(m);
    } catch (const factorization_error& e) {
      CHECK(e.pivot_index() == 1);
    }
  }

  TEST_CASE("asymmetric input is rejected") {
    Matrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 0.5; m(1, 0) = 0.4; m(1, 1) = 1;
    CHECK_THROWS_AS(cholesky_factor(m), std::invalid_argument);
  }

  TEST_CASE("round trip on random SPD matrices") {
    RngStream rng(2024, 0);
    for (std::size_t dim : {2u, 10u, 37u, 100u}) {
      const Matrix corr = random_correlation_matrix(dim, std::max<std::size_t>(1, dim / 4), rng);
      const Matrix lower = cholesky_factor(corr);
      CHECK(max_abs_diff(reconstruct(lower), corr) <= 1e-10 * (1.0 + max_abs(corr)));
    }
  }

  TEST_CASE("correlated sampling is deterministic") {
    const Matrix lower = cholesky_factor(Matrix::identity(4));
    RngStream a(7, 1), b(7, 1);
    CHECK(sample_correlated_normals(lower, 50, a) == sample_correlated_normals(lower, 50, b));
  }

  TEST_CASE("sample means vanish under the identity factor") {
    const std::size_t n = 100000;
    const Matrix lower = cholesky_factor(Matrix::identity(3));
    RngStream rng(11, 2);
    const Matrix draws = sample_correlated_normals(lower, n, rng);
    for (std::size_t j = 0; j < 3; ++j) {
      double mean = 0.0;
      for (std::size_t s = 0; s < n; ++s) mean += draws(s, j);
      mean /= static_cast<double>(n);
      CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
    }
  }

  TEST_CASE("scalar factor scales the variance") {
    Matrix lower(1, 1);
    lower(0, 0) = 2.0;
    RngStream rng(3, 5);
    const std::size_t n = 100000;
    const Matrix draws = sample_correlated_normals(lower, n, rng);
    double sum_sq = 0.0;
    for (std::size_t s = 0; s < n; ++s) sum_sq += draws(s, 0) * draws(s, 0);
    CHECK(sum_sq / static_cast<double>(n) == doctest::Approx(4.0).epsilon(0.05));
  }

  TEST_CASE("empirical covariance converges to L L^T") {
    RngStream gen(99, 0);
    const Matrix corr = random_correlation_matrix(4, 2, gen);
    const Matrix lower = cholesky_factor(corr);
    const std::size_t n = 100000;
    RngStream rng(99, 1);
    const Matrix draws = sample_correlated_normals(lower, n, rng);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        double acc = 0.0;
        for (std::size_t s = 0; s < n; ++s) acc += draws(s, i) * draws(s, j);
        const double sample_cov = acc / static_cast<double>(n);
        // Var of a product of unit gaussians is bounded by 1 + cov^2 <= 2.
        const double five_se = 5.0 * std::sqrt(2.0 / static_cast<double>(n));
        CHECK(std::abs(sample_cov - corr(i, j)) < five_se);
      }
  }

  TEST_CASE("random correlation matrices are valid") {
    RngStream rng(31, 4);
    const Matrix one = random_correlation_matrix(1, 1, rng);
    CHECK(one.rows() == 1);
    CHECK(one(0, 0) == 1.0);

    const Matrix c = random_correlation_matrix(50, 5, rng);
    for (std::size_t i = 0; i < 50; ++i) {
      CHECK(c(i, i) == 1.0);
      for (std::size_t j = 0; j < 50; ++j) {
        CHECK(c(i, j) == c(j, i));
        if (i != j) {
          CHECK(c(i, j) > -1.0);
          CHECK(c(i, j) < 1.0);
        }
      }
    }
    CHECK_NOTHROW(cholesky_factor(c));
  }

  TEST_CASE("random correlation matrices are reproducible") {
    RngStream a(5, 5), b(5, 5);
    CHECK(random_correlation_matrix(12, 3, a) == random_correlation_matrix(12, 3, b));
  }
}
