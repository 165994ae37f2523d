#pragma once

#include <cstddef>
#include <vector>

#include "dilatekit/matrix.hpp"

namespace dilatekit {

/// Real polynomial with coefficients in ascending degree.
class RealPolynomial {
 public:
  RealPolynomial() : coefficients_{0.0} {}
  explicit RealPolynomial(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  /// Index of the last nonzero coefficient (0 for the zero polynomial).
  std::size_t degree() const noexcept;
  /// Σ|c_j|, the scale on which evaluation rounding is judged.
  double coefficient_mass() const noexcept;

  double operator()(double t) const noexcept;
  /// Horner's scheme on a square matrix.
  ComplexMatrix operator()(const ComplexMatrix& x) const;

 private:
  std::vector<double> coefficients_;
};

inline constexpr int kMaxSqrtOrder = 12;

/// Monomial coefficients of p_k from p_0 = 0, p_{j+1} = p_j + (t − p_j²)/2.
/// Requires 1 ≤ k ≤ kMaxSqrtOrder.
RealPolynomial sqrt_poly_sequence(int k);

/// p_k(t) through the recursion itself, stable for every k.
double sqrt_sequence_value(double t, int k);

/// p_k(X) through the recursion itself. The monomial form loses all
/// precision beyond k ≈ 8 because its coefficients grow like 1e130 at k = 12.
ComplexMatrix sqrt_sequence_matrix(const ComplexMatrix& x, int k);

}  // namespace dilatekit
