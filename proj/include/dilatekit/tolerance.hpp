#pragma once

#include <cstddef>

namespace dilatekit {

inline constexpr double kDefaultBaseTolerance = 1e-10;

/// Base tolerance from DILATEKIT_TOL, or kDefaultBaseTolerance when unset.
/// Throws std::invalid_argument if the variable is set but not a positive double.
double base_tolerance_from_env();

/// dim · base · (1 + norm): every residual in the library is judged on this scale.
constexpr double scaled_tolerance(std::size_t dim, double base, double norm) noexcept {
  return static_cast<double>(dim) * base * (1.0 + norm);
}

}  // namespace dilatekit
