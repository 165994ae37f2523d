#pragma once

#include <string>
#include <vector>

namespace dilatekit {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Named residuals, each judged against its own tolerance.
class ResidualReport {
 public:
  /// Records a check; pass ⇔ residual ≤ tolerance (NaN never passes).
  void add(std::string name, double residual, double tolerance);
  void merge(const ResidualReport& other);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool passed() const noexcept;
  /// Throws std::out_of_range if no check has this name.
  const Check& at(const std::string& name) const;

 private:
  std::vector<Check> checks_;
};

}  // namespace dilatekit
