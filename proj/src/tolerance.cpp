#include "dilatekit/tolerance.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dilatekit {

double base_tolerance_from_env() {
  const char* raw = std::getenv("DILATEKIT_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultBaseTolerance;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0' || !std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string("DILATEKIT_TOL must be a positive number, got '") +
                                raw + "'");
  }
  return value;
}

}  // namespace dilatekit
