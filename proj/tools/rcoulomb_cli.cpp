// rcoulomb: command-line front end for V_m evaluation, tables, verification
// suites, model coefficients and effective-Hamiltonian ground states.
//
// Exit status: 0 ok, 1 usage, 2 domain, 3 non-convergence, 4 verification failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcoulomb/errors.hpp"
#include "rcoulomb/fourier.hpp"
#include "rcoulomb/magnetic_models.hpp"
#include "rcoulomb/potential.hpp"
#include "rcoulomb/spectral_solver.hpp"
#include "rcoulomb/verification.hpp"

namespace {

using namespace rcoulomb;

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kNoConvergence = 3, kVerifyFailed = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string column_label(double m) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "V_%g", m);
  return buf;
}

struct EvalArgs {
  double m = 0.0;
  double x = 0.0;
  std::string method = "auto";
  double tol = 1e-12;
};

struct TableArgs {
  std::vector<double> m_list;
  double x_min = 0.0;
  double x_max = 10.0;
  int points = 101;
  bool log = false;
  std::string format = "csv";
};

struct VerifyArgs {
  std::string suite = "all";
  std::string report = "text";
  bool inject_fault = false;
  double fault_shift = -1e-3;
};

struct PairArgs {
  int m1 = 0;
  int m2 = 0;
  bool antisymmetrize = false;
  bool decimal = false;
};

struct AvgArgs {
  int n = 1;
  double x = 0.0;
};

struct FourierArgs {
  double m = 0.0;
  double xi = 1.0;
  bool direct = false;
};

struct DeltaArgs {
  double m = 0.0;
  double beta = 1e4;
  std::string phi = "gaussian";
};

struct SpectrumArgs {
  std::string model = "zero";
  int n = 1;
  double z = 1.0;
  double b = 1.0;
  int grid_points = 0;
  double half_width = 0.0;
  double tol = 1e-10;
  bool boundary_check = false;
};

int run_eval(const EvalArgs& a) {
  QuadratureSpec spec;
  spec.rel_tol = a.tol;
  const Strategy s = parse_strategy(a.method);
  std::cout << num(v(a.m, a.x, s, spec).value) << '\n';
  return kOk;
}

int run_table(const TableArgs& a) {
  if (a.m_list.empty()) throw UsageError("--m-list needs at least one index");
  if (a.points < 1) throw UsageError("--points must be positive");
  if (!(a.x_min >= 0.0) || !(a.x_max >= a.x_min)) {
    throw UsageError("need 0 <= --x-min <= --x-max");
  }
  if (a.points == 1 && a.x_max != a.x_min) throw UsageError("one point needs --x-min == --x-max");
  if (a.log && !(a.x_min > 0.0)) throw UsageError("--log needs --x-min > 0");
  if (a.format != "csv" && a.format != "json") throw UsageError("--format is csv or json");

  std::vector<double> xs(a.points);
  for (int i = 0; i < a.points; ++i) {
    const double t = a.points == 1 ? 0.0 : static_cast<double>(i) / (a.points - 1);
    xs[i] = a.log ? a.x_min * std::pow(a.x_max / a.x_min, t) : a.x_min + t * (a.x_max - a.x_min);
  }
  // Evaluate everything first so a domain error leaves no partial table.
  std::vector<std::vector<double>> rows;
  rows.reserve(xs.size());
  for (double x : xs) {
    std::vector<double> row{x};
    for (double m : a.m_list) row.push_back(vm(m, x));
    rows.push_back(std::move(row));
  }

  std::vector<std::string> header{"x"};
  for (double m : a.m_list) header.push_back(column_label(m));
  if (a.format == "json") {
    nlohmann::json j;
    j["columns"] = header;
    j["rows"] = rows;
    std::cout << j.dump() << '\n';
    return kOk;
  }
  for (std::size_t c = 0; c < header.size(); ++c) std::cout << (c ? "," : "") << header[c];
  std::cout << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << num(row[c]);
    std::cout << '\n';
  }
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  VerifyOptions options;
  if (a.inject_fault) options.upper_bound_shift = a.fault_shift;
  const VerificationReport report = run_verification(a.suite, options);
  if (a.report == "json") {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    int passed = 0;
    for (const auto& c : report.checks) {
      passed += c.pass;
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " worst=" << num(c.worst_violation)
                << " tol=" << num(c.tolerance) << " at " << c.witness << '\n';
    }
    for (const auto& e : report.exploratory) {
      std::cout << "INFO " << e.id << " value=" << num(e.value) << " at " << e.witness << '\n';
    }
    std::cout << "suite " << report.suite << ": " << passed << "/" << report.checks.size()
              << " checks passed\n";
  }
  return report.passed() ? kOk : kVerifyFailed;
}

int run_pair(const PairArgs& a) {
  const PairCoefficients p = pair_decomposition(a.m1, a.m2, a.antisymmetrize);
  for (const auto& [k, w] : p.exact) {
    std::cout << "k=" << k << ",w=" << (a.decimal ? num(w.convert_to<double>()) : w.str()) << '\n';
  }
  return kOk;
}

int run_avg(const AvgArgs& a) {
  std::cout << num(v_av(a.n, a.x)) << '\n';
  return kOk;
}

int run_fourier(const FourierArgs& a) {
  const double value = a.direct ? fourier_v_direct(a.m, a.xi).value : fourier_v(a.m, a.xi);
  std::cout << num(value) << '\n';
  return kOk;
}

int run_delta(const DeltaArgs& a) {
  if (a.phi != "gaussian") throw UsageError("--phi supports only gaussian");
  std::cout << num(delta_pairing(a.m, a.beta, [](double x) { return std::exp(-x * x); })) << '\n';
  return kOk;
}

int run_spectrum(const SpectrumArgs& a) {
  if (a.n != 1 && a.n != 2) throw DomainError("spectrum supports N = 1 or N = 2 only");
  const FieldConfig config(a.n, a.z, a.b);
  const ModelKind model = parse_model(a.model);
  GridChoice choice = default_grid(a.n);
  if (a.grid_points > 0) choice.points = a.grid_points;
  if (a.half_width > 0.0) choice.half_width = a.half_width;
  const Grid1D grid(choice.half_width, choice.points);
  const SpectrumResult r = spectrum(config, model, grid, a.tol, a.boundary_check);

  std::cout << "E_0=" << num(r.state.energy) << '\n'
            << "e_h=" << num(r.state.energy) << '\n'
            << "E_0_conf=" << num(r.e_conf) << '\n'
            << "model=" << to_string(model) << '\n'
            << "N=" << a.n << '\n'
            << "grid_points=" << grid.points() << '\n'
            << "half_width=" << num(grid.half_width()) << '\n'
            << "spacing=" << num(grid.spacing()) << '\n'
            << "residual=" << num(r.state.residual) << '\n'
            << "iterations=" << r.state.iterations << '\n'
            << "factorizations=" << r.state.factorizations << '\n'
            << "certified=" << (r.state.certified ? "true" : "false") << '\n';
  if (r.boundary_shift) std::cout << "boundary_shift=" << num(*r.boundary_shift) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularized one-dimensional Coulomb potentials V_m and effective models"};
  app.set_version_flag("--version", std::string(library_version()));
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.require_subcommand(1);

  EvalArgs eval;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate V_m(x)");
  cmd_eval->add_option("--m", eval.m, "Index m >= -1")->required();
  cmd_eval->add_option("--x", eval.x, "Argument x >= 0")->required();
  cmd_eval->add_option("--method", eval.method,
                       "auto, quadrature, closed_m0, recursion, asymptotic, polynomial, exact")
      ->capture_default_str();
  cmd_eval->add_option("--tol", eval.tol, "Relative quadrature tolerance")->capture_default_str();

  TableArgs table;
  auto* cmd_table = app.add_subcommand("table", "Tabulate V_m on a grid");
  cmd_table->add_option("--m-list", table.m_list, "Comma-separated indices")
      ->required()
      ->delimiter(',');
  cmd_table->add_option("--x-min", table.x_min)->capture_default_str();
  cmd_table->add_option("--x-max", table.x_max)->capture_default_str();
  cmd_table->add_option("--points", table.points)->capture_default_str();
  cmd_table->add_flag("--log", table.log, "Logarithmic spacing");
  cmd_table->add_option("--format", table.format, "csv or json")->capture_default_str();

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run property suites");
  cmd_verify->add_option("--suite", verify.suite)
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  cmd_verify->add_option("--report", verify.report, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd_verify->add_flag("--inject-fault", verify.inject_fault,
                       "Perturb the upper bracket to test the harness");
  cmd_verify->add_option("--fault-shift", verify.fault_shift)->capture_default_str();

  PairArgs pair;
  auto* cmd_pair = app.add_subcommand("pair", "Decompose a Landau pair into V_k weights");
  cmd_pair->add_option("--m1", pair.m1)->required();
  cmd_pair->add_option("--m2", pair.m2)->required();
  cmd_pair->add_flag("--antisymmetrize", pair.antisymmetrize);
  cmd_pair->add_flag("--decimal", pair.decimal, "Print weights as decimals");

  AvgArgs avg;
  auto* cmd_avg = app.add_subcommand("avg", "Averaged potential V_av^N(x)");
  cmd_avg->add_option("--N", avg.n)->required();
  cmd_avg->add_option("--x", avg.x)->required();

  FourierArgs fourier;
  auto* cmd_fourier = app.add_subcommand("fourier", "Cosine transform of V_m");
  cmd_fourier->add_option("--m", fourier.m)->required();
  cmd_fourier->add_option("--xi", fourier.xi)->required();
  cmd_fourier->add_flag("--direct", fourier.direct, "Windowed x-space transform");

  DeltaArgs delta;
  auto* cmd_delta = app.add_subcommand("delta", "Pair (beta/log beta) V_m(beta x) with a test function");
  cmd_delta->add_option("--m", delta.m)->capture_default_str();
  cmd_delta->add_option("--beta", delta.beta)->required();
  cmd_delta->add_option("--phi", delta.phi)->capture_default_str();

  SpectrumArgs spec;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "Ground state of the effective Hamiltonian");
  cmd_spectrum->add_option("--model", spec.model, "zero or slater")->capture_default_str();
  cmd_spectrum->add_option("--N", spec.n)->required();
  cmd_spectrum->add_option("--Z", spec.z)->required();
  cmd_spectrum->add_option("--B", spec.b)->required();
  cmd_spectrum->add_option("--grid-points", spec.grid_points, "Odd point count (default by N)");
  cmd_spectrum->add_option("--half-width", spec.half_width, "Box half-width L (default by N)");
  cmd_spectrum->add_option("--tol", spec.tol)->capture_default_str();
  cmd_spectrum->add_flag("--boundary-check", spec.boundary_check, "Repeat at 1.5 L");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_eval) return run_eval(eval);
    if (*cmd_table) return run_table(table);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_pair) return run_pair(pair);
    if (*cmd_avg) return run_avg(avg);
    if (*cmd_fourier) return run_fourier(fourier);
    if (*cmd_delta) return run_delta(delta);
    if (*cmd_spectrum) return run_spectrum(spec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "not converged: " << e.what() << '\n';
    return kNoConvergence;
  }
  return kUsage;
}
