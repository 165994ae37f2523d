#pragma once

#include <stdexcept>
#include <vector>

#include "dilatekit/matrix.hpp"

namespace dilatekit {

/// Input to hermitian_eigen was not Hermitian within tolerance.
class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(double asymmetry, double tolerance);
  double asymmetry() const noexcept { return asymmetry_; }

 private:
  double asymmetry_;
};

/// Input to psd_sqrt had an eigenvalue below the admissible negative slack.
class NotPositiveSemidefiniteError : public std::invalid_argument {
 public:
  NotPositiveSemidefiniteError(double eigenvalue, double tolerance);
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;        // column k pairs with eigenvalues[k]
  int sweeps = 0;
};

/// Cyclic complex Jacobi on the symmetrized input (M + M*)/2.
///
/// Requires ‖M − M*‖_F ≤ 1e−10·(1 + ‖M‖_F). Sweeps until the
/// off-diagonal Frobenius mass falls to 1e−14·‖M‖_F (at most 100 sweeps).
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// V·diag(λ)·V*.
ComplexMatrix reconstruct(const HermitianEigen& eig);

/// Positive square root V·diag(√λ)·V*. Eigenvalues down to −1e−10·(1 + ‖P‖_F)
/// are clamped to zero and anything lower throws; eigenvalues at rounding
/// level (dim·16ε·(1 + ‖P‖_F)) also count as zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& p);

/// Largest singular value, via the eigenvalues of the smaller Gram matrix.
double operator_norm(const ComplexMatrix& m);

}  // namespace dilatekit
