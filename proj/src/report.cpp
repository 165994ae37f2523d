#include "dilatekit/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dilatekit {

void ResidualReport::add(std::string name, double residual, double tolerance) {
  if (residual < 0.0) throw std::invalid_argument("negative residual for check " + name);
  const bool pass = !std::isnan(residual) && residual <= tolerance;
  checks_.push_back({std::move(name), residual, tolerance, pass});
}

void ResidualReport::merge(const ResidualReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool ResidualReport::passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check& ResidualReport::at(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check& c) { return c.name == name; });
  if (it == checks_.end()) throw std::out_of_range("no check named " + name);
  return *it;
}

}  // namespace dilatekit
