#include "dilatekit/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dilatekit {

namespace {

Complex complex_gaussian(Xoshiro256& rng) {
  const double re = rng.gaussian();
  const double im = rng.gaussian();
  return Complex(re, im) * std::sqrt(0.5);
}

ComplexMatrix leading_columns(const ComplexMatrix& m, std::size_t count) {
  return submatrix(m, 0, 0, m.rows(), count);
}

// U_r · diag(sigma) · V_r* with r = sigma.size().
ComplexMatrix from_singular_values(const std::vector<double>& sigma, std::size_t dim_h,
                                   std::size_t dim_k, Xoshiro256& rng) {
  const std::size_t r = sigma.size();
  ComplexMatrix left = leading_columns(haar_unitary(dim_h, rng), r);
  const ComplexMatrix right = leading_columns(haar_unitary(dim_k, rng), r);
  for (std::size_t i = 0; i < dim_h; ++i)
    for (std::size_t j = 0; j < r; ++j) left(i, j) *= sigma[j];
  return multiply(left, adjoint(right));
}

}  // namespace

const std::vector<ContractionKind>& all_kinds() {
  static const std::vector<ContractionKind> kinds{
      ContractionKind::generic,  ContractionKind::strict,     ContractionKind::unitary,
      ContractionKind::isometry, ContractionKind::coisometry, ContractionKind::rank_deficient};
  return kinds;
}

std::string_view kind_name(ContractionKind kind) noexcept {
  switch (kind) {
    case ContractionKind::generic: return "generic";
    case ContractionKind::strict: return "strict";
    case ContractionKind::unitary: return "unitary";
    case ContractionKind::isometry: return "isometry";
    case ContractionKind::coisometry: return "coisometry";
    case ContractionKind::rank_deficient: return "rank_deficient";
  }
  return "unknown";
}

ContractionKind parse_kind(std::string_view name) {
  for (ContractionKind kind : all_kinds())
    if (kind_name(kind) == name) return kind;
  throw std::invalid_argument(
      "unknown contraction kind '" + std::string(name) +
      "' (expected generic, strict, unitary, isometry, coisometry or rank_deficient)");
}

bool kind_accepts(ContractionKind kind, std::size_t dim_h, std::size_t dim_k) noexcept {
  if (dim_h == 0 || dim_k == 0) return false;
  switch (kind) {
    case ContractionKind::unitary: return dim_h == dim_k;
    case ContractionKind::isometry: return dim_h >= dim_k;
    case ContractionKind::coisometry: return dim_h <= dim_k;
    case ContractionKind::rank_deficient: return std::min(dim_h, dim_k) >= 2;
    default: return true;
  }
}

void GeneratorSpec::validate() const {
  if (!kind_accepts(kind, dim_h, dim_k)) {
    throw std::invalid_argument("kind " + std::string(kind_name(kind)) + " cannot produce a " +
                                std::to_string(dim_h) + "x" + std::to_string(dim_k) +
                                " contraction");
  }
}

ComplexMatrix haar_unitary(std::size_t n, Xoshiro256& rng) {
  ComplexMatrix q(n, n);
  for (auto& z : q.entries()) z = complex_gaussian(rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex dot{};
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, i)) * q(r, j);
        for (std::size_t r = 0; r < n; ++r) q(r, j) -= dot * q(r, i);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, j));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) q(r, j) /= norm;
  }
  return q;
}

Contraction gen_contraction(const GeneratorSpec& spec) {
  spec.validate();
  Xoshiro256 rng(spec.seed);
  const std::size_t h = spec.dim_h;
  const std::size_t k = spec.dim_k;
  const std::size_t r = std::min(h, k);

  switch (spec.kind) {
    case ContractionKind::unitary:
      return Contraction::admit(haar_unitary(h, rng));
    case ContractionKind::isometry:
      return Contraction::admit(leading_columns(haar_unitary(h, rng), k));
    case ContractionKind::coisometry:
      return Contraction::admit(adjoint(leading_columns(haar_unitary(k, rng), h)));
    case ContractionKind::generic: {
      std::vector<double> sigma(r);
      for (auto& s : sigma) s = rng.uniform();
      if (rng.uniform() < 0.5) *std::max_element(sigma.begin(), sigma.end()) = 1.0;
      return Contraction::admit(from_singular_values(sigma, h, k, rng));
    }
    case ContractionKind::strict: {
      std::vector<double> sigma(r);
      for (auto& s : sigma) s = rng.uniform(0.0, 0.9);
      return Contraction::admit(from_singular_values(sigma, h, k, rng));
    }
    case ContractionKind::rank_deficient: {
      std::vector<double> sigma(r);
      for (auto& s : sigma) s = rng.uniform();
      sigma[0] = 0.0;
      sigma[1] = 1.0;
      return Contraction::admit(from_singular_values(sigma, h, k, rng));
    }
  }
  throw std::logic_error("unhandled contraction kind");
}

}  // namespace dilatekit
