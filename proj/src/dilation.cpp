#include "dilatekit/dilation.hpp"

#include <cmath>
#include <sstream>

#include "dilatekit/eigen.hpp"

namespace dilatekit {

namespace {

constexpr double kPolyIdentityBase = 1e-11;

std::string norm_message(double norm) {
  std::ostringstream os;
  os.precision(17);
  os << "matrix is not a contraction: operator norm " << norm << " exceeds 1 + "
     << kContractionSlack;
  return os.str();
}

ComplexMatrix identity_minus(const ComplexMatrix& m) {
  ComplexMatrix out = -m;
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) += 1.0;
  return out;
}

void require_square(const Contraction& a, const char* op) {
  if (a.dim_h() != a.dim_k()) {
    throw DimensionError(std::string(op) + " requires a square contraction, got " +
                         a.matrix().shape());
  }
}

double julia_tolerance(const Contraction& a, double base) {
  return scaled_tolerance(a.dim_h() + a.dim_k(), base, frobenius_norm(a.matrix()));
}

}  // namespace

NotContractionError::NotContractionError(double norm)
    : std::invalid_argument(norm_message(norm)), norm_(norm) {}

Contraction Contraction::admit(ComplexMatrix m) {
  const double norm = operator_norm(m);
  if (!(norm <= 1.0 + kContractionSlack)) throw NotContractionError(norm);
  return {std::move(m), norm};
}

DefectPair defect_pair(const Contraction& a) {
  const ComplexMatrix& m = a.matrix();
  const ComplexMatrix star = adjoint(m);
  return {psd_sqrt(identity_minus(multiply(m, star))),
          psd_sqrt(identity_minus(multiply(star, m)))};
}

Block2x2::Block2x2(ComplexMatrix tl, ComplexMatrix tr, ComplexMatrix bl, ComplexMatrix br)
    : tl_(std::move(tl)), tr_(std::move(tr)), bl_(std::move(bl)), br_(std::move(br)) {
  if (tl_.rows() != tr_.rows() || bl_.rows() != br_.rows() || tl_.cols() != bl_.cols() ||
      tr_.cols() != br_.cols()) {
    throw DimensionError("Block2x2: incompatible blocks tl=" + tl_.shape() + " tr=" +
                         tr_.shape() + " bl=" + bl_.shape() + " br=" + br_.shape());
  }
}

Block2x2 Block2x2::split(const ComplexMatrix& m, std::size_t row_split, std::size_t col_split) {
  Blocks b = extract_blocks(m, row_split, col_split);
  return {std::move(b.tl), std::move(b.tr), std::move(b.bl), std::move(b.br)};
}

Block2x2 julia(const Contraction& a) { return julia(a, defect_pair(a)); }

Block2x2 julia(const Contraction& a, const DefectPair& defects) {
  return {defects.s, a.matrix(), -adjoint(a.matrix()), defects.t};
}

DCSplit dc_split(const Contraction& a) { return dc_split(a, defect_pair(a)); }

DCSplit dc_split(const Contraction& a, const DefectPair& defects) {
  const std::size_t h = a.dim_h();
  const std::size_t k = a.dim_k();
  return {assemble_blocks(defects.s, ComplexMatrix(h, k), ComplexMatrix(k, h), defects.t),
          assemble_blocks(ComplexMatrix(h, h), a.matrix(), -adjoint(a.matrix()),
                          ComplexMatrix(k, k))};
}

ResidualReport verify_julia(const Contraction& a, double base) {
  return verify_julia(a, defect_pair(a), base);
}

ResidualReport verify_julia(const Contraction& a, const DefectPair& defects, double base) {
  const double tol = julia_tolerance(a, base);
  const ComplexMatrix j = julia(a, defects).assembled();
  const DCSplit dc = dc_split(a, defects);
  const ComplexMatrix identity = ComplexMatrix::identity(j.rows());

  ResidualReport report;
  report.add("julia_isometry", isometry_defect(j), tol);
  report.add("julia_coisometry", coisometry_defect(j), tol);
  report.add("dc_commutator", frobenius_norm(dc.d * dc.c - dc.c * dc.d), tol);
  report.add("d2_minus_c2", frobenius_norm(dc.d * dc.d - dc.c * dc.c - identity), tol);
  return report;
}

double intertwining_residual(const Contraction& a) {
  return intertwining_residual(a, defect_pair(a));
}

double intertwining_residual(const Contraction& a, const DefectPair& defects) {
  return frobenius_norm(defects.s * a.matrix() - a.matrix() * defects.t);
}

double commutator_intertwining_residual(const Contraction& a, const DefectPair& defects) {
  const DCSplit dc = dc_split(a, defects);
  const ComplexMatrix commutator = dc.d * dc.c - dc.c * dc.d;
  return frobenius_norm(submatrix(commutator, 0, a.dim_h(), a.dim_h(), a.dim_k()));
}

Block2x2 flip(std::size_t dim_top, std::size_t dim_bottom) {
  return {ComplexMatrix(dim_top, dim_bottom), ComplexMatrix::identity(dim_top),
          ComplexMatrix::identity(dim_bottom), ComplexMatrix(dim_bottom, dim_top)};
}

Block2x2 halmos(const Contraction& a) {
  require_square(a, "halmos");
  return halmos(a, defect_pair(a));
}

Block2x2 halmos(const Contraction& a, const DefectPair& defects) {
  require_square(a, "halmos");
  return {a.matrix(), defects.s, defects.t, -adjoint(a.matrix())};
}

Block2x2 julia_column_switched(const Contraction& a) {
  return julia_column_switched(a, defect_pair(a));
}

Block2x2 julia_column_switched(const Contraction& a, const DefectPair& defects) {
  return {a.matrix(), defects.s, defects.t, -adjoint(a.matrix())};
}

double poly_intertwine_residual(const Contraction& a, const RealPolynomial& p) {
  const ComplexMatrix& m = a.matrix();
  const ComplexMatrix star = adjoint(m);
  const ComplexMatrix s2 = identity_minus(m * star);
  const ComplexMatrix t2 = identity_minus(star * m);
  return frobenius_norm(p(s2) * m - m * p(t2));
}

double poly_identity_tolerance(const Contraction& a, const RealPolynomial& p) {
  return static_cast<double>(a.dim_h() + a.dim_k()) * kPolyIdentityBase * p.coefficient_mass();
}

ResidualReport weierstrass_convergence_check(const Contraction& a, int k, double base) {
  return weierstrass_convergence_check(a, defect_pair(a), k, base);
}

ResidualReport weierstrass_convergence_check(const Contraction& a, const DefectPair& defects,
                                             int k, double base) {
  const ComplexMatrix& m = a.matrix();
  const ComplexMatrix star = adjoint(m);
  const ComplexMatrix ps = sqrt_sequence_matrix(identity_minus(m * star), k);
  const ComplexMatrix pt = sqrt_sequence_matrix(identity_minus(star * m), k);

  ResidualReport report;
  report.add("sqrt_approximation", frobenius_norm(ps - defects.s),
             static_cast<double>(a.dim_h()) * 2.0 / (k + 1));
  report.add("sequence_intertwine", frobenius_norm(ps * m - m * pt), julia_tolerance(a, base));
  if (k <= kMaxHornerSqrtOrder) {
    const RealPolynomial p = sqrt_poly_sequence(k);
    report.add("horner_intertwine", poly_intertwine_residual(a, p),
               poly_identity_tolerance(a, p));
  }
  return report;
}

ResidualReport julia_consistency(const Block2x2& j, double base) {
  if (j.rows() != j.cols() || j.row_split() != j.col_split()) {
    throw DimensionError("julia_consistency: expected matching splits of a square operator, got " +
                         j.assembled().shape() + " split at (" + std::to_string(j.row_split()) +
                         ", " + std::to_string(j.col_split()) + ")");
  }
  const ComplexMatrix full = j.assembled();
  const ComplexMatrix& a = j.tr();
  const double tol = scaled_tolerance(full.rows(), base, frobenius_norm(a));

  ResidualReport report;
  report.add("julia_isometry", isometry_defect(full), tol);
  report.add("julia_coisometry", coisometry_defect(full), tol);
  report.add("adjoint_corner", frobenius_norm(j.bl() + adjoint(a)), tol);

  const double norm = operator_norm(a);
  if (!(norm <= 1.0 + kContractionSlack)) {
    report.add("contraction", norm - 1.0, kContractionSlack);
    return report;
  }
  const DefectPair expected = defect_pair(Contraction::admit(a));
  report.add("top_defect", frobenius_norm(j.tl() - expected.s), tol);
  report.add("bottom_defect", frobenius_norm(j.br() - expected.t), tol);
  return report;
}

}  // namespace dilatekit
