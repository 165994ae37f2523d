#include "dilatekit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace dilatekit {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kPsdTolerance = 1e-10;
constexpr double kOffDiagonalTarget = 1e-14;
// Eigenvalues within this many ulps (times dim and scale) of zero are rounding noise.
constexpr double kNoiseUlps = 16.0;
constexpr int kMaxSweeps = 100;

std::string describe(const char* what, double value, double tolerance) {
  std::ostringstream os;
  os.precision(17);
  os << what << value << " (tolerance " << tolerance << ")";
  return os.str();
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Applies a ← G* a G and v ← v G for the unitary G that is the identity
// outside rows/cols p, q and [[c, s], [−s·ē, c·ē]] inside, which zeroes a(p, q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;
  const Complex phase = apq / magnitude;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * magnitude);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  if (!std::isfinite(theta)) t = 0.5 / theta;  // |theta| huge: t ≈ 1/(2θ)
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, p) = app - t * magnitude;
  a(q, q) = aqq + t * magnitude;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

NotHermitianError::NotHermitianError(double asymmetry, double tolerance)
    : std::invalid_argument(describe("matrix is not Hermitian: ‖M − M*‖_F = ", asymmetry,
                                     tolerance)),
      asymmetry_(asymmetry) {}

NotPositiveSemidefiniteError::NotPositiveSemidefiniteError(double eigenvalue, double tolerance)
    : std::invalid_argument(describe("matrix is not positive semidefinite: eigenvalue ",
                                     eigenvalue, -tolerance)),
      eigenvalue_(eigenvalue) {}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermitian_eigen: non-square " + m.shape());
  const double norm = frobenius_norm(m);
  const double asymmetry = hermitian_defect(m);
  const double tolerance = kHermitianTolerance * (1.0 + norm);
  if (asymmetry > tolerance) throw NotHermitianError(asymmetry, tolerance);

  const std::size_t n = m.rows();
  ComplexMatrix a = 0.5 * (m + adjoint(m));
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = kOffDiagonalTarget * frobenius_norm(a);
  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps == kMaxSweeps) {
      throw std::runtime_error("hermitian_eigen: Jacobi iteration did not converge in " +
                               std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n), sweeps};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix reconstruct(const HermitianEigen& eig) {
  ComplexMatrix scaled = eig.eigenvectors;
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t k = 0; k < scaled.cols(); ++k) scaled(i, k) *= eig.eigenvalues[k];
  return multiply(scaled, adjoint(eig.eigenvectors));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p) {
  HermitianEigen eig = hermitian_eigen(p);
  const double tolerance = kPsdTolerance * (1.0 + frobenius_norm(p));
  if (eig.eigenvalues.front() < -tolerance) {
    throw NotPositiveSemidefiniteError(eig.eigenvalues.front(), tolerance);
  }
  // The square root turns noise of size ε into √ε, so noise-level eigenvalues
  // (e.g. of I − U*U for unitary U) are treated as exact zeros.
  const double noise = static_cast<double>(p.rows()) * kNoiseUlps *
                       std::numeric_limits<double>::epsilon() * (1.0 + frobenius_norm(p));
  for (auto& lambda : eig.eigenvalues) lambda = lambda <= noise ? 0.0 : std::sqrt(lambda);
  ComplexMatrix root = reconstruct(eig);
  // Exact Hermitian symmetry; the product above is Hermitian only to rounding.
  for (std::size_t i = 0; i < root.rows(); ++i) {
    root(i, i) = root(i, i).real();
    for (std::size_t j = i + 1; j < root.cols(); ++j) {
      const Complex avg = 0.5 * (root(i, j) + std::conj(root(j, i)));
      root(i, j) = avg;
      root(j, i) = std::conj(avg);
    }
  }
  return root;
}

double operator_norm(const ComplexMatrix& m) {
  const ComplexMatrix gram =
      m.rows() >= m.cols() ? multiply(adjoint(m), m) : multiply(m, adjoint(m));
  const HermitianEigen eig = hermitian_eigen(gram);
  return std::sqrt(std::max(eig.eigenvalues.back(), 0.0));
}

}  // namespace dilatekit
