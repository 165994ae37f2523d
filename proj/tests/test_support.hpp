#pragma once

// Test-only generators and oracles. Nothing here calls the library's
// kernels beyond ComplexMatrix storage, so oracles stay independent.

#include <cmath>
#include <complex>
#include <cstdint>

#include "dilatekit/matrix.hpp"
#include "dilatekit/random.hpp"

namespace dilatekit::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Xoshiro256& rng,
                                   double scale = 1.0) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = Complex(rng.gaussian(), rng.gaussian()) * scale;
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Xoshiro256& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.gaussian();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(rng.gaussian(), rng.gaussian());
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Entry-by-entry triple loop in (i, j, k) order with explicit real arithmetic.
inline ComplexMatrix naive_multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      long double re = 0.0L;
      long double im = 0.0L;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const long double ar = a(i, k).real(), ai = a(i, k).imag();
        const long double br = b(k, j).real(), bi = b(k, j).imag();
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
      }
      out(i, j) = Complex(static_cast<double>(re), static_cast<double>(im));
    }
  }
  return out;
}

inline ComplexMatrix naive_adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline double naive_frobenius(const ComplexMatrix& a) {
  long double sum = 0.0L;
  for (const auto& z : a.entries()) sum += std::norm(std::complex<long double>(z));
  return static_cast<double>(std::sqrt(sum));
}

inline ComplexMatrix naive_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.entries()[k] = a.entries()[k] - b.entries()[k];
  return out;
}

inline double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return naive_frobenius(naive_difference(a, b));
}

/// M*M, the PSD test matrices of the kernel oracles.
inline ComplexMatrix gram(const ComplexMatrix& m) { return naive_multiply(naive_adjoint(m), m); }

}  // namespace dilatekit::testing
