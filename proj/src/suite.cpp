#include "dilatekit/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "dilatekit/dilation.hpp"
#include "dilatekit/eigen.hpp"
#include "dilatekit/power_dilation.hpp"

namespace dilatekit {

namespace {

constexpr double kRouteAgreement = 1e-13;
constexpr double kFactorizationSlack = 1e-14;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kUnitaryDefectMass = 1e-12;

ComplexMatrix identity_minus(const ComplexMatrix& m) {
  ComplexMatrix out = -m;
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) += 1.0;
  return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_entry(a - b);
}

double unitarity_defect(const ComplexMatrix& m) {
  return std::max(isometry_defect(m), coisometry_defect(m));
}

double ratio(const Check& c) {
  if (std::isnan(c.residual)) return std::numeric_limits<double>::infinity();
  if (c.tolerance > 0.0) return c.residual / c.tolerance;
  return c.residual == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

void run_trials(const SuiteConfig& cfg, const VerifyOptions& options,
                std::atomic<std::size_t>& next, std::vector<TrialOutcome>& outcomes) {
  for (std::size_t i = next++; i < cfg.trials; i = next++) {
    const GeneratorSpec spec = trial_spec(cfg, i);
    const Contraction a = gen_contraction(spec);
    ResidualReport report = verify_contraction(a, options);
    if (spec.kind == ContractionKind::unitary) {
      const DefectPair defects = defect_pair(a);
      report.add("unitary_zero_defects", frobenius_norm(defects.s) + frobenius_norm(defects.t),
                 kUnitaryDefectMass);
    }
    outcomes[i] = {i, spec, std::move(report)};
  }
}

}  // namespace

ResidualReport verify_contraction(const Contraction& a, const VerifyOptions& options) {
  const double base = options.base_tolerance;
  const ComplexMatrix& m = a.matrix();
  const std::size_t h = a.dim_h();
  const std::size_t k = a.dim_k();
  const double tol = scaled_tolerance(h + k, base, frobenius_norm(m));
  const DefectPair defects = defect_pair(a);

  ResidualReport report;
  report.add("defect_s_square",
             frobenius_norm(defects.s * defects.s - identity_minus(m * adjoint(m))), tol);
  report.add("defect_t_square",
             frobenius_norm(defects.t * defects.t - identity_minus(adjoint(m) * m)), tol);

  report.merge(verify_julia(a, defects, base));

  const double direct = intertwining_residual(a, defects);
  report.add("intertwining", direct, static_cast<double>(h + k) * base);
  report.add("intertwining_routes_agree",
             std::abs(direct - commutator_intertwining_residual(a, defects)), kRouteAgreement);

  const Block2x2 j = julia(a, defects);
  const ComplexMatrix switched = julia_column_switched(a, defects).assembled();
  report.add("switched_unitarity", unitarity_defect(switched), tol);
  report.add("switched_factorization",
             max_abs_difference(switched, j.assembled() * flip(h, k).assembled()),
             kFactorizationSlack);

  if (h == k) {
    const ComplexMatrix hal = halmos(a, defects).assembled();
    // Shared defects make the factorization exact, hence tolerance 0.
    report.add("halmos_factorization",
               max_abs_difference(hal, j.assembled() * flip(h, h).assembled()), 0.0);
    report.add("halmos_unitarity", unitarity_defect(hal), tol);

    const PowerDilation dil = power_dilation(a, defects, options.n_steps);
    const ResidualReport residuals = dilation_residuals(dil, a, base);
    for (const Check& c : residuals.checks()) {
      report.add("power_" + c.name, c.residual, c.tolerance);
    }
  }

  std::vector<int> orders = options.sqrt_orders;
  std::sort(orders.begin(), orders.end());
  double previous = std::numeric_limits<double>::infinity();
  double worst_increase = 0.0;
  for (int order : orders) {
    const ResidualReport w = weierstrass_convergence_check(a, defects, order, base);
    for (const Check& c : w.checks()) {
      report.add("weierstrass_k" + std::to_string(order) + "_" + c.name, c.residual, c.tolerance);
    }
    const double approx = w.at("sqrt_approximation").residual;
    if (std::isfinite(previous)) worst_increase = std::max(worst_increase, approx - previous);
    previous = approx;
  }
  if (orders.size() > 1) report.add("weierstrass_monotone", worst_increase, kMonotoneSlack);
  return report;
}

void SuiteConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("suite: trial count must be at least 1");
  if (min_dim < 1 || max_dim < min_dim) {
    throw std::invalid_argument("suite: dimension range [" + std::to_string(min_dim) + ", " +
                                std::to_string(max_dim) + "] is empty or contains 0");
  }
  if (kinds.empty()) throw std::invalid_argument("suite: no contraction kinds selected");
  for (ContractionKind kind : kinds) {
    if (kind == ContractionKind::rank_deficient && max_dim < 2) {
      throw std::invalid_argument("suite: rank_deficient needs max dimension ≥ 2");
    }
  }
  if (!(base_tolerance > 0.0) || !std::isfinite(base_tolerance)) {
    throw std::invalid_argument("suite: base tolerance must be positive");
  }
  if (n_steps < 1 || n_steps > kMaxPowerSteps) {
    throw std::invalid_argument("suite: n_steps must be in [1, " +
                                std::to_string(kMaxPowerSteps) + "]");
  }
  for (int order : sqrt_orders) {
    if (order < 1 || order > kMaxSqrtOrder) {
      throw std::invalid_argument("suite: square-root order " + std::to_string(order) +
                                  " outside [1, " + std::to_string(kMaxSqrtOrder) + "]");
    }
  }
}

GeneratorSpec trial_spec(const SuiteConfig& cfg, std::size_t index) {
  const std::uint64_t trial_seed = derive_seed(cfg.seed, index);
  Xoshiro256 rng(trial_seed);
  const ContractionKind kind = cfg.kinds[rng.between(0, cfg.kinds.size() - 1)];
  const std::size_t lo = kind == ContractionKind::rank_deficient ? std::max<std::size_t>(2, cfg.min_dim)
                                                                 : cfg.min_dim;
  std::size_t h = rng.between(lo, cfg.max_dim);
  std::size_t k = rng.between(lo, cfg.max_dim);
  // Square shapes on a third of the draws so Halmos and power checks get coverage.
  if (kind == ContractionKind::unitary || rng.uniform() < 1.0 / 3.0) k = h;
  if (kind == ContractionKind::isometry && h < k) std::swap(h, k);
  if (kind == ContractionKind::coisometry && h > k) std::swap(h, k);
  return {h, k, kind, rng.next()};
}

std::vector<std::size_t> SuiteReport::failed_trials() const {
  std::vector<std::size_t> out;
  for (const TrialOutcome& t : trials)
    if (!t.report.passed()) out.push_back(t.index);
  return out;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const VerifyOptions options{cfg.base_tolerance, cfg.n_steps, cfg.sqrt_orders};

  std::vector<TrialOutcome> outcomes(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    try {
      run_trials(cfg, options, next, outcomes);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = cfg.trials;
    }
  };

  unsigned workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                      : cfg.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.trials));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  // Aggregation walks trials in index order so the result is independent of scheduling.
  std::vector<std::string> names;
  std::map<std::string, Check> worst;
  for (const TrialOutcome& t : outcomes) {
    for (const Check& c : t.report.checks()) {
      auto [it, inserted] = worst.try_emplace(c.name, c);
      if (inserted) {
        names.push_back(c.name);
        continue;
      }
      if (ratio(c) > ratio(it->second)) it->second = c;
    }
  }
  // A failing check has ratio > 1 and every passing one ratio ≤ 1, so the
  // worst case fails exactly when some trial failed.
  SuiteReport result{std::move(outcomes), {}};
  for (const std::string& name : names) {
    const Check& c = worst.at(name);
    result.worst.add(c.name, c.residual, c.tolerance);
  }
  if (!cfg.report_path.empty()) write_json_file(cfg.report_path, to_json(result, cfg));
  return result;
}

Json to_json(const SuiteReport& report, const SuiteConfig& cfg) {
  Json out = to_json(report.worst);
  out["trials"] = report.trials.size();
  out["seed"] = cfg.seed;
  out["pass"] = report.passed();
  out["failed_trials"] = report.failed_trials();
  return out;
}

}  // namespace dilatekit
