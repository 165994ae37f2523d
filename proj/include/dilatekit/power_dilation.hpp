#pragma once

#include <cstddef>

#include "dilatekit/dilation.hpp"

namespace dilatekit {

inline constexpr std::size_t kMaxPowerSteps = 16;

/// Unitary U on (n_steps + 1) copies of H whose compressions to the first
/// copy reproduce A^n for 0 ≤ n ≤ n_steps.
struct PowerDilation {
  ComplexMatrix u;
  std::size_t n_steps = 0;
  std::size_t dim_h = 0;
};

/// Block companion form
///
///   [ A  0 ... 0   S  ]
///   [ T  0 ... 0  −A* ]
///   [ 0  I           0 ]
///   [      ...        ]
///   [ 0  ...   I     0 ]
///
/// with (S, T) the defect roots of A. Unitarity rests on A*S = T A*, the
/// adjoint of the intertwining identity. For n_steps = 1 this is halmos(A).
PowerDilation power_dilation(const Contraction& a, std::size_t n_steps);
PowerDilation power_dilation(const Contraction& a, const DefectPair& defects,
                             std::size_t n_steps);

/// Top-left dim_h × dim_h block of m.
ComplexMatrix compress_to_first_block(const ComplexMatrix& m, std::size_t dim_h);

/// Reports "unitarity" (max of ‖U*U − I‖_F, ‖UU* − I‖_F, judged at size·base)
/// and "compression_<n>" = ‖P Uⁿ P − Aⁿ‖_F for n = 0…n_steps (judged at size·10·base).
ResidualReport dilation_residuals(const PowerDilation& d, const Contraction& a,
                                  double base = kDefaultBaseTolerance);

}  // namespace dilatekit
