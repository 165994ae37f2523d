#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dilatekit {

using Complex = std::complex<double>;

/// Thrown when operand shapes are incompatible for the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix with strictly positive dimensions.
///
/// Every entry is finite when constructed from external data; element
/// access through operator() is unchecked for speed in the kernels.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// Nested initializer, one inner list per row.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  std::string shape() const;

  /// Exact elementwise equality (IEEE ==, so +0 and -0 compare equal).
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex factor) noexcept;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(Complex factor, ComplexMatrix a);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Matrix product; throws DimensionError naming both shapes on mismatch.
ComplexMatrix multiply(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

inline ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return multiply(lhs, rhs);
}

double frobenius_norm(const ComplexMatrix& m) noexcept;
double max_abs_entry(const ComplexMatrix& m) noexcept;

/// ‖m − m*‖_F; requires a square matrix.
double hermitian_defect(const ComplexMatrix& m);

/// ‖m* m − I‖_F.
double isometry_defect(const ComplexMatrix& m);

/// ‖m m* − I‖_F.
double coisometry_defect(const ComplexMatrix& m);

/// Four blocks of a 2x2 partition. Shapes are validated by assemble_blocks.
struct Blocks {
  ComplexMatrix tl;
  ComplexMatrix tr;
  ComplexMatrix bl;
  ComplexMatrix br;
};

/// [[tl, tr], [bl, br]]; throws DimensionError on incompatible shapes.
ComplexMatrix assemble_blocks(const ComplexMatrix& tl, const ComplexMatrix& tr,
                              const ComplexMatrix& bl, const ComplexMatrix& br);

/// Inverse of assemble_blocks. Requires 0 < split_row < rows and 0 < split_col < cols.
Blocks extract_blocks(const ComplexMatrix& m, std::size_t split_row, std::size_t split_col);

/// Copy of the rectangular window starting at (row, col).
ComplexMatrix submatrix(const ComplexMatrix& m, std::size_t row, std::size_t col,
                        std::size_t rows, std::size_t cols);

/// Writes `block` into `target` with its top-left corner at (row, col).
void place(ComplexMatrix& target, const ComplexMatrix& block, std::size_t row, std::size_t col);

}  // namespace dilatekit
