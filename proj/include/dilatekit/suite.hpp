#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dilatekit/generator.hpp"
#include "dilatekit/json_io.hpp"
#include "dilatekit/report.hpp"

namespace dilatekit {

/// Which checks verify_contraction runs beyond the Julia operator itself.
struct VerifyOptions {
  double base_tolerance = kDefaultBaseTolerance;
  std::size_t n_steps = 4;                    // power dilation horizon (square cases)
  std::vector<int> sqrt_orders{1, 2, 4, 8, 12};  // Weierstrass orders
};

/// Every per-contraction check, sharing one DefectPair:
/// defect squares, Julia unitarity and D/C mechanics, intertwining (both
/// routes), the column-switched variant, and for square A the Halmos
/// factorization and the power dilation; then the Weierstrass sequence.
ResidualReport verify_contraction(const Contraction& a, const VerifyOptions& options = {});

struct SuiteConfig {
  std::size_t trials = 100;
  std::size_t min_dim = 1;
  std::size_t max_dim = 8;
  std::vector<ContractionKind> kinds = all_kinds();
  double base_tolerance = kDefaultBaseTolerance;
  std::size_t n_steps = 4;
  std::vector<int> sqrt_orders{1, 2, 4, 8, 12};
  std::uint64_t seed = 42;
  unsigned workers = 1;     // 0 picks std::thread::hardware_concurrency()
  std::string report_path;  // empty: no report file

  /// Throws std::invalid_argument describing the first invalid field.
  void validate() const;
};

/// Kind and shape for trial `index`, from derive_seed(cfg.seed, index) alone.
GeneratorSpec trial_spec(const SuiteConfig& cfg, std::size_t index);

struct TrialOutcome {
  std::size_t index = 0;
  GeneratorSpec spec;
  ResidualReport report;
};

struct SuiteReport {
  std::vector<TrialOutcome> trials;  // ordered by index
  /// Per check name, the trial with the largest residual/tolerance ratio.
  ResidualReport worst;

  bool passed() const noexcept { return worst.passed(); }
  std::vector<std::size_t> failed_trials() const;
};

/// Runs every trial (optionally in parallel) and writes cfg.report_path if set.
SuiteReport run_suite(const SuiteConfig& cfg);

Json to_json(const SuiteReport& report, const SuiteConfig& cfg);

}  // namespace dilatekit
