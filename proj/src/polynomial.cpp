#include "dilatekit/polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dilatekit {

namespace {

void require_order(int k) {
  if (k < 1 || k > kMaxSqrtOrder) {
    throw std::invalid_argument("square-root sequence order must be in [1, " +
                                std::to_string(kMaxSqrtOrder) + "], got " + std::to_string(k));
  }
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) coefficients_.push_back(0.0);
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite polynomial coefficient");
  }
}

std::size_t RealPolynomial::degree() const noexcept {
  std::size_t d = coefficients_.size() - 1;
  while (d > 0 && coefficients_[d] == 0.0) --d;
  return d;
}

double RealPolynomial::coefficient_mass() const noexcept {
  double mass = 0.0;
  for (double c : coefficients_) mass += std::abs(c);
  return mass;
}

double RealPolynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

ComplexMatrix RealPolynomial::operator()(const ComplexMatrix& x) const {
  if (!x.is_square()) throw DimensionError("polynomial evaluation on non-square " + x.shape());
  const std::size_t n = x.rows();
  const std::size_t d = degree();
  ComplexMatrix acc(n, n);
  for (std::size_t i = 0; i < n; ++i) acc(i, i) = coefficients_[d];
  for (std::size_t j = d; j-- > 0;) {
    acc = multiply(acc, x);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += coefficients_[j];
  }
  return acc;
}

RealPolynomial sqrt_poly_sequence(int k) {
  require_order(k);
  std::vector<double> p{0.0};
  for (int step = 0; step < k; ++step) {
    std::vector<double> next(std::max<std::size_t>(2 * p.size() - 1, 2), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) next[i] += p[i];
    next[1] += 0.5;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0.0) continue;
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] -= 0.5 * p[i] * p[j];
    }
    while (next.size() > 1 && next.back() == 0.0) next.pop_back();
    p = std::move(next);
  }
  return RealPolynomial(std::move(p));
}

double sqrt_sequence_value(double t, int k) {
  require_order(k);
  double p = 0.0;
  for (int step = 0; step < k; ++step) p += 0.5 * (t - p * p);
  return p;
}

ComplexMatrix sqrt_sequence_matrix(const ComplexMatrix& x, int k) {
  require_order(k);
  if (!x.is_square()) throw DimensionError("sqrt_sequence_matrix on non-square " + x.shape());
  ComplexMatrix p(x.rows(), x.cols());
  for (int step = 0; step < k; ++step) p += 0.5 * (x - multiply(p, p));
  return p;
}

}  // namespace dilatekit
