#include "dilatekit/power_dilation.hpp"

#include <algorithm>
#include <string>

namespace dilatekit {

PowerDilation power_dilation(const Contraction& a, std::size_t n_steps) {
  if (a.dim_h() != a.dim_k()) {
    throw DimensionError("power_dilation requires a square contraction, got " +
                         a.matrix().shape());
  }
  return power_dilation(a, defect_pair(a), n_steps);
}

PowerDilation power_dilation(const Contraction& a, const DefectPair& defects,
                             std::size_t n_steps) {
  const std::size_t h = a.dim_h();
  if (h != a.dim_k()) {
    throw DimensionError("power_dilation requires a square contraction, got " +
                         a.matrix().shape());
  }
  if (n_steps < 1 || n_steps > kMaxPowerSteps) {
    throw std::invalid_argument("power_dilation: n_steps must be in [1, " +
                                std::to_string(kMaxPowerSteps) + "], got " +
                                std::to_string(n_steps));
  }
  const std::size_t last = n_steps * h;
  ComplexMatrix u((n_steps + 1) * h, (n_steps + 1) * h);
  place(u, a.matrix(), 0, 0);
  place(u, defects.s, 0, last);
  place(u, defects.t, h, 0);
  place(u, -adjoint(a.matrix()), h, last);
  const ComplexMatrix identity = ComplexMatrix::identity(h);
  for (std::size_t r = 2; r <= n_steps; ++r) place(u, identity, r * h, (r - 1) * h);
  return {std::move(u), n_steps, h};
}

ComplexMatrix compress_to_first_block(const ComplexMatrix& m, std::size_t dim_h) {
  return submatrix(m, 0, 0, dim_h, dim_h);
}

ResidualReport dilation_residuals(const PowerDilation& d, const Contraction& a, double base) {
  const std::size_t size = d.u.rows();
  if (a.dim_h() != a.dim_k() || a.dim_h() != d.dim_h || size != (d.n_steps + 1) * d.dim_h ||
      !d.u.is_square()) {
    throw DimensionError("dilation_residuals: dilation of size " + d.u.shape() + " with dim_h " +
                         std::to_string(d.dim_h) + " does not match contraction " +
                         a.matrix().shape());
  }
  ResidualReport report;
  const auto n = static_cast<double>(size);
  report.add("unitarity", std::max(isometry_defect(d.u), coisometry_defect(d.u)), n * base);

  const double compression_tol = n * 10.0 * base;
  ComplexMatrix u_power = ComplexMatrix::identity(size);
  ComplexMatrix a_power = ComplexMatrix::identity(d.dim_h);
  for (std::size_t step = 0; step <= d.n_steps; ++step) {
    if (step > 0) {
      u_power = u_power * d.u;
      a_power = a_power * a.matrix();
    }
    report.add("compression_" + std::to_string(step),
               frobenius_norm(compress_to_first_block(u_power, d.dim_h) - a_power),
               compression_tol);
  }
  return report;
}

}  // namespace dilatekit
