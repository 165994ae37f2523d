#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dilatekit/eigen.hpp"
#include "dilatekit/generator.hpp"
#include "test_support.hpp"

using namespace dilatekit;

namespace {

void check_eigen_invariants(const ComplexMatrix& m, const HermitianEigen& eig) {
  const auto n = static_cast<double>(m.rows());
  REQUIRE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
  const ComplexMatrix& v = eig.eigenvectors;
  const double orthonormality = testing::distance(
      testing::naive_multiply(testing::naive_adjoint(v), v), ComplexMatrix::identity(m.rows()));
  REQUIRE(orthonormality <= n * 1e-12);
  ComplexMatrix lv = v;
  for (std::size_t i = 0; i < lv.rows(); ++i)
    for (std::size_t k = 0; k < lv.cols(); ++k) lv(i, k) *= eig.eigenvalues[k];
  const double reconstruction =
      testing::distance(testing::naive_multiply(lv, testing::naive_adjoint(v)), m);
  REQUIRE(reconstruction <= n * 1e-10 * (1.0 + testing::naive_frobenius(m)));
}

}  // namespace

TEST_CASE("hermitian_eigen of a diagonal matrix") {
  const std::vector<double> d{2.0, 5.0};
  const HermitianEigen eig = hermitian_eigen(ComplexMatrix::diagonal(d));
  CHECK(eig.eigenvalues == d);
  CHECK(eig.eigenvectors == ComplexMatrix::identity(2));
}

TEST_CASE("hermitian_eigen of Pauli X") {
  const HermitianEigen eig = hermitian_eigen(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
  // Up to phase: |<v, expected>| = 1.
  const double r = 1.0 / std::sqrt(2.0);
  const Complex lower = std::conj(eig.eigenvectors(0, 0)) * r - std::conj(eig.eigenvectors(1, 0)) * r;
  const Complex upper = std::conj(eig.eigenvectors(0, 1)) * r + std::conj(eig.eigenvectors(1, 1)) * r;
  CHECK(std::abs(lower) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(upper) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigen reconstructs random Hermitian matrices") {
  Xoshiro256 rng(17);
  const ComplexMatrix m8 = testing::random_hermitian(8, rng);
  const HermitianEigen eig8 = hermitian_eigen(m8);
  CHECK(testing::distance(reconstruct(eig8), m8) <= 8e-10);
  check_eigen_invariants(m8, eig8);

  for (int trial = 0; trial < 150; ++trial) {
    const ComplexMatrix m = testing::random_hermitian(rng.between(1, 24), rng);
    check_eigen_invariants(m, hermitian_eigen(m));
  }
}

TEST_CASE("hermitian_eigen handles degenerate and zero spectra") {
  check_eigen_invariants(ComplexMatrix(4, 4), hermitian_eigen(ComplexMatrix(4, 4)));
  Xoshiro256 rng(4);
  const ComplexMatrix u = haar_unitary(6, rng);
  std::vector<double> spectrum{1.0, 1.0, 1.0, -2.0, -2.0, 0.0};
  const ComplexMatrix m = testing::naive_multiply(
      testing::naive_multiply(u, ComplexMatrix::diagonal(spectrum)), testing::naive_adjoint(u));
  const HermitianEigen eig = hermitian_eigen(m);
  check_eigen_invariants(m, eig);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[5] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input with the measured asymmetry") {
  const auto m = ComplexMatrix::from_rows({{1.0, 2.0}, {0.0, 1.0}});
  try {
    (void)hermitian_eigen(m);
    FAIL("expected NotHermitianError");
  } catch (const NotHermitianError& e) {
    CHECK(e.asymmetry() == doctest::Approx(std::sqrt(8.0)));
  }
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 3)), DimensionError);
  // Rounding-level asymmetry is accepted.
  auto nearly = ComplexMatrix::from_rows({{1.0, 2.0}, {2.0 + 1e-14, 1.0}});
  CHECK_NOTHROW(hermitian_eigen(nearly));
}

TEST_CASE("psd_sqrt examples") {
  const std::vector<double> squares{4.0, 9.0};
  const std::vector<double> roots{2.0, 3.0};
  CHECK(testing::distance(psd_sqrt(ComplexMatrix::diagonal(squares)),
                          ComplexMatrix::diagonal(roots)) <= 1e-15);
  CHECK(testing::distance(psd_sqrt(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <=
        1e-15);

  // Eigenvalues 1 and 3 with eigenvectors (1, ∓1)/√2 give the closed form below.
  const auto p = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});
  const double s3 = std::sqrt(3.0);
  const auto expected =
      ComplexMatrix::from_rows({{(s3 + 1) / 2, (s3 - 1) / 2}, {(s3 - 1) / 2, (s3 + 1) / 2}});
  CHECK(testing::distance(testing::naive_multiply(expected, expected), p) <= 1e-15);
  const ComplexMatrix root = psd_sqrt(p);
  CHECK(testing::distance(root, expected) <= 1e-14);
}

TEST_CASE("psd_sqrt properties over random Gram matrices") {
  Xoshiro256 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng.between(1, 20);
    const ComplexMatrix p = testing::gram(testing::random_matrix(rng.between(1, 20), n, rng));
    const ComplexMatrix r = psd_sqrt(p);
    const double tol = static_cast<double>(n) * 1e-10 * (1.0 + testing::naive_frobenius(p));
    REQUIRE(testing::distance(testing::naive_multiply(r, r), p) <= tol);
    REQUIRE(testing::distance(r, testing::naive_adjoint(r)) <= 1e-12);
    REQUIRE(testing::distance(testing::naive_multiply(r, p), testing::naive_multiply(p, r)) <= tol);
    REQUIRE(hermitian_eigen(r).eigenvalues.front() >= -1e-12);
  }
}

TEST_CASE("psd_sqrt clamps rounding-level negatives and rejects genuine ones") {
  const std::vector<double> slightly{-1e-13, 1.0};
  const ComplexMatrix r = psd_sqrt(ComplexMatrix::diagonal(slightly));
  CHECK(r(0, 0) == Complex(0.0));
  CHECK(r(1, 1) == Complex(1.0));

  const std::vector<double> negative{-0.25, 1.0};
  try {
    (void)psd_sqrt(ComplexMatrix::diagonal(negative));
    FAIL("expected NotPositiveSemidefiniteError");
  } catch (const NotPositiveSemidefiniteError& e) {
    CHECK(e.eigenvalue() == doctest::Approx(-0.25));
    CHECK(std::string(e.what()).find("not positive semidefinite") != std::string::npos);
  }
}

TEST_CASE("operator_norm examples") {
  CHECK(operator_norm(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const std::vector<double> d{0.3, 0.7};
  CHECK(operator_norm(ComplexMatrix::diagonal(d)) == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(operator_norm(ComplexMatrix(3, 2)) == 0.0);

  Xoshiro256 rng(31);
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(std::abs(operator_norm(haar_unitary(n, rng)) - 1.0) <= 1e-10);
  }
}

TEST_CASE("operator_norm is adjoint-invariant and bracketed by column and Frobenius norms") {
  Xoshiro256 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_matrix(rng.between(1, 12), rng.between(1, 12), rng);
    const double norm = operator_norm(m);
    REQUIRE(std::abs(operator_norm(adjoint(m)) - norm) <= 1e-12 * norm);
    double max_column = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) col += std::norm(m(i, j));
      max_column = std::max(max_column, std::sqrt(col));
    }
    REQUIRE(norm >= max_column * (1.0 - 1e-12));
    REQUIRE(norm <= testing::naive_frobenius(m) * (1.0 + 1e-12));
  }
}
