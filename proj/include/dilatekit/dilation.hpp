#pragma once

#include <cstddef>
#include <stdexcept>

#include "dilatekit/matrix.hpp"
#include "dilatekit/polynomial.hpp"
#include "dilatekit/report.hpp"
#include "dilatekit/tolerance.hpp"

namespace dilatekit {

/// Operator-norm slack allowed when admitting a contraction.
inline constexpr double kContractionSlack = 1e-8;

class NotContractionError : public std::invalid_argument {
 public:
  explicit NotContractionError(double norm);
  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

/// A : K → H with ‖A‖ ≤ 1 + kContractionSlack, stored as a dim_h × dim_k matrix.
class Contraction {
 public:
  /// Throws NotContractionError carrying the measured operator norm.
  static Contraction admit(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim_h() const noexcept { return matrix_.rows(); }
  std::size_t dim_k() const noexcept { return matrix_.cols(); }
  double norm() const noexcept { return norm_; }

 private:
  Contraction(ComplexMatrix m, double norm) : matrix_(std::move(m)), norm_(norm) {}

  ComplexMatrix matrix_;
  double norm_;
};

/// S = (I − AA*)^{1/2} on H and T = (I − A*A)^{1/2} on K.
struct DefectPair {
  ComplexMatrix s;
  ComplexMatrix t;
};

DefectPair defect_pair(const Contraction& a);

/// 2x2 block operator. The codomain splits as row_split() ⊕ (rows − row_split())
/// and the domain as col_split() ⊕ (cols − col_split()).
class Block2x2 {
 public:
  /// Throws DimensionError unless the four shapes tile a rectangle.
  Block2x2(ComplexMatrix tl, ComplexMatrix tr, ComplexMatrix bl, ComplexMatrix br);
  static Block2x2 split(const ComplexMatrix& m, std::size_t row_split, std::size_t col_split);

  const ComplexMatrix& tl() const noexcept { return tl_; }
  const ComplexMatrix& tr() const noexcept { return tr_; }
  const ComplexMatrix& bl() const noexcept { return bl_; }
  const ComplexMatrix& br() const noexcept { return br_; }

  std::size_t row_split() const noexcept { return tl_.rows(); }
  std::size_t col_split() const noexcept { return tl_.cols(); }
  std::size_t rows() const noexcept { return tl_.rows() + bl_.rows(); }
  std::size_t cols() const noexcept { return tl_.cols() + tr_.cols(); }

  ComplexMatrix assembled() const { return assemble_blocks(tl_, tr_, bl_, br_); }

 private:
  ComplexMatrix tl_;
  ComplexMatrix tr_;
  ComplexMatrix bl_;
  ComplexMatrix br_;
};

/// J_A = [[S, A], [−A*, T]] on H ⊕ K.
Block2x2 julia(const Contraction& a);
Block2x2 julia(const Contraction& a, const DefectPair& defects);

/// J_A = D + C with D = diag(S, T) positive and C = [[0, A], [−A*, 0]] skew-adjoint.
struct DCSplit {
  ComplexMatrix d;
  ComplexMatrix c;
};

DCSplit dc_split(const Contraction& a);
DCSplit dc_split(const Contraction& a, const DefectPair& defects);

/// Residuals of J*J = I, JJ* = I, DC = CD and D² − C² = I, each judged
/// against (dim_h + dim_k)·base·(1 + ‖A‖_F).
ResidualReport verify_julia(const Contraction& a, double base = kDefaultBaseTolerance);
ResidualReport verify_julia(const Contraction& a, const DefectPair& defects,
                            double base = kDefaultBaseTolerance);

/// ‖S·A − A·T‖_F.
double intertwining_residual(const Contraction& a);
double intertwining_residual(const Contraction& a, const DefectPair& defects);

/// Frobenius norm of the top-right block of DC − CD, which is S·A − A·T
/// reached through the full block products.
double commutator_intertwining_residual(const Contraction& a, const DefectPair& defects);

/// [[0, I_top], [I_bottom, 0]] : bottom ⊕ top → top ⊕ bottom.
Block2x2 flip(std::size_t dim_top, std::size_t dim_bottom);

/// [[A, S], [T, −A*]] for square A; throws DimensionError otherwise.
Block2x2 halmos(const Contraction& a);
Block2x2 halmos(const Contraction& a, const DefectPair& defects);

/// [[A, S], [T, −A*]] : K ⊕ H → H ⊕ K, i.e. J_A composed with flip(dim_h, dim_k).
Block2x2 julia_column_switched(const Contraction& a);
Block2x2 julia_column_switched(const Contraction& a, const DefectPair& defects);

/// ‖p(I − AA*)·A − A·p(I − A*A)‖_F by Horner, with no square roots taken.
double poly_intertwine_residual(const Contraction& a, const RealPolynomial& p);

/// dim·1e−11·Σ|c_j| with dim = dim_h + dim_k: the rounding scale of the Horner identity.
double poly_identity_tolerance(const Contraction& a, const RealPolynomial& p);

/// Monomial Horner evaluation is reported only up to this order.
inline constexpr int kMaxHornerSqrtOrder = 8;

/// For the square-root sequence p_k:
///   sqrt_approximation   ‖p_k(S²) − S‖_F against dim_h·2/(k+1)
///   sequence_intertwine  ‖p_k(S²)A − A p_k(T²)‖_F at rounding level
///   horner_intertwine    the same through monomial coefficients (k ≤ 8 only)
ResidualReport weierstrass_convergence_check(const Contraction& a, int k,
                                             double base = kDefaultBaseTolerance);
ResidualReport weierstrass_convergence_check(const Contraction& a, const DefectPair& defects,
                                             int k, double base = kDefaultBaseTolerance);

/// Checks that a stored block operator is a Julia operator: unitary, with
/// bottom-left = −(top-right)* and diagonal blocks equal to the defect roots
/// of the top-right block.
ResidualReport julia_consistency(const Block2x2& j, double base = kDefaultBaseTolerance);

}  // namespace dilatekit
