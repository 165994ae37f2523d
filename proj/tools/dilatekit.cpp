// Command-line front end: every construction reads and writes the JSON
// matrix formats; exit status 0 = pass, 1 = verification failure,
// 2 = usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dilatekit/dilation.hpp"
#include "dilatekit/eigen.hpp"
#include "dilatekit/generator.hpp"
#include "dilatekit/json_io.hpp"
#include "dilatekit/power_dilation.hpp"
#include "dilatekit/suite.hpp"

namespace dk = dilatekit;

namespace {

constexpr int kPass = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string in;
  std::string out;
  std::string report;
  std::optional<double> tol;
  std::size_t n = 4;
  std::optional<std::size_t> cols;
  std::size_t trials = 100;
  std::size_t max_dim = 8;
  std::uint64_t seed = 42;
  std::string kind;
};

double base_tolerance(const Options& opt) {
  return opt.tol ? *opt.tol : dk::base_tolerance_from_env();
}

dk::Contraction load_contraction(const std::string& path) {
  return dk::Contraction::admit(dk::matrix_from_json(dk::read_json_file(path), path));
}

void emit(const Options& opt, const dk::Json& j) {
  if (opt.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    dk::write_json_file(opt.out, j);
  }
}

int finish(const Options& opt, const dk::ResidualReport& report) {
  if (!opt.report.empty()) dk::write_json_file(opt.report, dk::to_json(report));
  std::size_t failures = 0;
  for (const dk::Check& c : report.checks()) {
    if (c.pass) continue;
    ++failures;
    std::cerr << "FAIL " << c.name << ": residual " << c.residual << " > tolerance "
              << c.tolerance << '\n';
  }
  if (failures > 0) {
    std::cerr << failures << " of " << report.checks().size() << " checks failed\n";
    return kVerificationFailure;
  }
  std::cerr << "all " << report.checks().size() << " checks passed\n";
  return kPass;
}

int run_julia(const Options& opt) {
  const dk::Contraction a = load_contraction(opt.in);
  const dk::DefectPair defects = dk::defect_pair(a);
  emit(opt, dk::to_json(dk::julia(a, defects)));
  return finish(opt, dk::verify_julia(a, defects, base_tolerance(opt)));
}

int run_halmos(const Options& opt) {
  const dk::Contraction a = load_contraction(opt.in);
  const dk::Block2x2 h = dk::halmos(a);
  emit(opt, dk::to_json(h));
  const dk::ComplexMatrix m = h.assembled();
  dk::ResidualReport report;
  const double tol = dk::scaled_tolerance(m.rows(), base_tolerance(opt), dk::frobenius_norm(a.matrix()));
  report.add("halmos_isometry", dk::isometry_defect(m), tol);
  report.add("halmos_coisometry", dk::coisometry_defect(m), tol);
  return finish(opt, report);
}

int run_power(const Options& opt) {
  const dk::Contraction a = load_contraction(opt.in);
  const dk::PowerDilation d = dk::power_dilation(a, opt.n);
  emit(opt, dk::to_json(d));
  return finish(opt, dk::dilation_residuals(d, a, base_tolerance(opt)));
}

int run_intertwine(const Options& opt) {
  const dk::Contraction a = load_contraction(opt.in);
  const dk::DefectPair defects = dk::defect_pair(a);
  const double direct = dk::intertwining_residual(a, defects);
  dk::ResidualReport report;
  report.add("intertwining", direct,
             static_cast<double>(a.dim_h() + a.dim_k()) * base_tolerance(opt));
  report.add("intertwining_routes_agree",
             std::abs(direct - dk::commutator_intertwining_residual(a, defects)), 1e-13);
  std::cout.precision(17);
  std::cout << direct << '\n';
  return finish(opt, report);
}

int run_check(const Options& opt) {
  const dk::Json j = dk::read_json_file(opt.in);
  const double base = base_tolerance(opt);
  if (j.is_object() && j.contains("splits")) {
    return finish(opt, dk::julia_consistency(dk::block_from_json(j, opt.in), base));
  }
  if (j.is_object() && j.contains("n_steps")) {
    const dk::PowerDilation d = dk::power_dilation_from_json(j, opt.in);
    dk::ResidualReport report;
    report.add("unitarity", std::max(dk::isometry_defect(d.u), dk::coisometry_defect(d.u)),
               static_cast<double>(d.u.rows()) * base);
    return finish(opt, report);
  }
  const dk::Contraction a = dk::Contraction::admit(dk::matrix_from_json(j, opt.in));
  dk::VerifyOptions options;
  options.base_tolerance = base;
  options.n_steps = opt.n;
  return finish(opt, dk::verify_contraction(a, options));
}

int run_gen(const Options& opt) {
  dk::GeneratorSpec spec;
  spec.dim_h = opt.n;
  spec.dim_k = opt.cols.value_or(opt.n);
  spec.kind = opt.kind.empty() ? dk::ContractionKind::generic : dk::parse_kind(opt.kind);
  spec.seed = opt.seed;
  emit(opt, dk::to_json(dk::gen_contraction(spec).matrix()));
  return kPass;
}

int run_suite(const Options& opt) {
  dk::SuiteConfig cfg;
  cfg.trials = opt.trials;
  cfg.max_dim = opt.max_dim;
  cfg.seed = opt.seed;
  cfg.base_tolerance = base_tolerance(opt);
  cfg.n_steps = opt.n;
  cfg.report_path = opt.report;
  cfg.workers = 0;
  if (!opt.kind.empty()) cfg.kinds = {dk::parse_kind(opt.kind)};
  const dk::SuiteReport result = dk::run_suite(cfg);
  for (const dk::Check& c : result.worst.checks()) {
    std::cout << (c.pass ? "pass " : "FAIL ") << c.name << "  worst residual " << c.residual
              << "  tolerance " << c.tolerance << '\n';
  }
  const auto failed = result.failed_trials();
  std::cout << result.trials.size() - failed.size() << "/" << result.trials.size()
            << " trials passed\n";
  return result.passed() ? kPass : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dilatekit: Julia operators, Halmos dilations and unitary power dilations"};
  app.require_subcommand(1);
  Options opt;

  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", opt.in, "input matrix JSON")->required();
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", opt.tol, "base tolerance (overrides DILATEKIT_TOL)")
        ->check(CLI::PositiveNumber);
  };
  auto add_common = [&](CLI::App* cmd) {
    add_in(cmd);
    cmd->add_option("--out", opt.out, "output JSON (stdout if omitted)");
    cmd->add_option("--report", opt.report, "residual report JSON");
    add_tol(cmd);
  };

  auto* julia = app.add_subcommand("julia", "build the Julia operator [[S, A], [-A*, T]]");
  add_common(julia);
  auto* halmos = app.add_subcommand("halmos", "build the Halmos dilation [[A, S], [T, -A*]]");
  add_common(halmos);
  auto* power = app.add_subcommand("power", "build a unitary power dilation");
  add_common(power);
  power->add_option("--n", opt.n, "number of steps (1-16)")->required();

  auto* check = app.add_subcommand("check", "verify a matrix, Julia operator or dilation file");
  add_in(check);
  check->add_option("--report", opt.report, "residual report JSON");
  check->add_option("--n", opt.n, "power dilation steps for square matrices");
  add_tol(check);

  auto* intertwine = app.add_subcommand("intertwine", "print ||S A - A T||_F");
  add_in(intertwine);
  intertwine->add_option("--report", opt.report, "residual report JSON");
  add_tol(intertwine);

  auto* gen = app.add_subcommand("gen", "generate a seeded random contraction");
  gen->add_option("--n", opt.n, "rows (dim H)");
  gen->add_option("--cols", opt.cols, "columns (dim K), defaults to --n");
  gen->add_option("--kind", opt.kind, "generic|strict|unitary|isometry|coisometry|rank_deficient");
  gen->add_option("--seed", opt.seed, "64-bit seed");
  gen->add_option("--out", opt.out, "output JSON (stdout if omitted)");

  auto* suite = app.add_subcommand("suite", "run the randomized verification suite");
  suite->add_option("--trials", opt.trials, "number of trials");
  suite->add_option("--max-dim", opt.max_dim, "largest dimension");
  suite->add_option("--seed", opt.seed, "master seed");
  suite->add_option("--report", opt.report, "suite report JSON");
  suite->add_option("--kind", opt.kind, "restrict to one kind");
  suite->add_option("--n", opt.n, "power dilation steps");
  add_tol(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*julia) return run_julia(opt);
    if (*halmos) return run_halmos(opt);
    if (*power) return run_power(opt);
    if (*check) return run_check(opt);
    if (*intertwine) return run_intertwine(opt);
    if (*gen) return run_gen(opt);
    if (*suite) return run_suite(opt);
  } catch (const dk::NotContractionError& e) {
    std::cerr << "error: " << e.what() << "\n  measured norm: " << e.norm() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
