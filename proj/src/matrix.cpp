#include "dilatekit/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace dilatekit {

namespace {

void require_positive(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + a.shape() + " vs " + b.shape());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_() {
  require_positive(rows, cols);
  entries_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive(rows, cols);
  if (entries_.size() != rows * cols) {
    throw DimensionError("expected " + std::to_string(rows * cols) + " entries for a " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                         std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k].real()) || !std::isfinite(entries_[k].imag())) {
      throw std::invalid_argument("non-finite matrix entry at index " + std::to_string(k));
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged row list");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {r, c, std::move(entries)};
}

std::string ComplexMatrix::shape() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) noexcept {
  for (auto& z : entries_) z *= factor;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex factor, ComplexMatrix a) { return a *= factor; }

ComplexMatrix operator-(ComplexMatrix a) {
  for (auto& z : a.entries()) z = -z;
  return a;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("multiply: cannot multiply " + lhs.shape() + " by " + rhs.shape());
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  const std::size_t n = rhs.cols();
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    Complex* out_row = &out(i, 0);
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      const Complex* rhs_row = &rhs(k, 0);
      for (std::size_t j = 0; j < n; ++j) out_row[j] += a * rhs_row[j];
    }
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& m) noexcept {
  // Scaled accumulation so tiny residuals do not underflow.
  double scale = max_abs_entry(m);
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& z : m.entries()) {
    const double re = z.real() / scale;
    const double im = z.imag() / scale;
    sum += re * re + im * im;
  }
  return scale * std::sqrt(sum);
}

double max_abs_entry(const ComplexMatrix& m) noexcept {
  double out = 0.0;
  for (const auto& z : m.entries()) out = std::max({out, std::abs(z.real()), std::abs(z.imag())});
  return out;
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermitian_defect: non-square " + m.shape());
  return frobenius_norm(m - adjoint(m));
}

double isometry_defect(const ComplexMatrix& m) {
  return frobenius_norm(multiply(adjoint(m), m) - ComplexMatrix::identity(m.cols()));
}

double coisometry_defect(const ComplexMatrix& m) {
  return frobenius_norm(multiply(m, adjoint(m)) - ComplexMatrix::identity(m.rows()));
}

ComplexMatrix assemble_blocks(const ComplexMatrix& tl, const ComplexMatrix& tr,
                              const ComplexMatrix& bl, const ComplexMatrix& br) {
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
      tr.cols() != br.cols()) {
    throw DimensionError("assemble_blocks: incompatible blocks tl=" + tl.shape() +
                         " tr=" + tr.shape() + " bl=" + bl.shape() + " br=" + br.shape());
  }
  ComplexMatrix out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  place(out, tl, 0, 0);
  place(out, tr, 0, tl.cols());
  place(out, bl, tl.rows(), 0);
  place(out, br, tl.rows(), tl.cols());
  return out;
}

Blocks extract_blocks(const ComplexMatrix& m, std::size_t split_row, std::size_t split_col) {
  if (split_row == 0 || split_row >= m.rows() || split_col == 0 || split_col >= m.cols()) {
    throw DimensionError("extract_blocks: split (" + std::to_string(split_row) + ", " +
                         std::to_string(split_col) + ") outside the interior of " + m.shape());
  }
  const std::size_t lower = m.rows() - split_row;
  const std::size_t right = m.cols() - split_col;
  return {submatrix(m, 0, 0, split_row, split_col), submatrix(m, 0, split_col, split_row, right),
          submatrix(m, split_row, 0, lower, split_col),
          submatrix(m, split_row, split_col, lower, right)};
}

ComplexMatrix submatrix(const ComplexMatrix& m, std::size_t row, std::size_t col,
                        std::size_t rows, std::size_t cols) {
  if (row + rows > m.rows() || col + cols > m.cols()) {
    throw DimensionError("submatrix: window exceeds " + m.shape());
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(row + i, col + j);
  return out;
}

void place(ComplexMatrix& target, const ComplexMatrix& block, std::size_t row, std::size_t col) {
  if (row + block.rows() > target.rows() || col + block.cols() > target.cols()) {
    throw DimensionError("place: block " + block.shape() + " does not fit in " + target.shape());
  }
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) target(row + i, col + j) = block(i, j);
}

}  // namespace dilatekit
