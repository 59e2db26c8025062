#include "rcoulomb/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rcoulomb/errors.hpp"

namespace rcoulomb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// One Gauss-Kronrod panel with the QUADPACK error heuristic. Node tables come
// from Boost.Math; only the rule application lives here.
template <unsigned N>
Panel kronrod_panel(const Integrand& f, double a, double b) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, N>;
  using Gauss = boost::math::quadrature::gauss<double, (N - 1) / 2>;
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  constexpr unsigned gauss_order = (N - 1) / 2;

  std::array<double, (N + 1) / 2> fp{}, fm{};
  const double fc = f(center);
  fp[0] = fm[0] = fc;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    fp[i] = f(center + half * xk[i]);
    fm[i] = f(center - half * xk[i]);
  }

  double kronrod = fc * wk[0];
  double gauss = 0.0;
  double abs_sum = std::abs(fc) * wk[0];
  // Gauss nodes sit at even Kronrod indices when the Gauss order is odd
  // (center included), otherwise at odd indices.
  const std::size_t gauss_start = (gauss_order & 1U) ? 2 : 1;
  if (gauss_order & 1U) gauss = fc * wg[0];
  for (std::size_t i = 1; i < xk.size(); ++i) {
    kronrod += (fp[i] + fm[i]) * wk[i];
    abs_sum += (std::abs(fp[i]) + std::abs(fm[i])) * wk[i];
  }
  for (std::size_t i = gauss_start; i < xk.size(); i += 2) {
    gauss += (fp[i] + fm[i]) * wg[i / 2];
  }
  const double mean = 0.5 * kronrod;
  double asc = std::abs(fc - mean) * wk[0];
  for (std::size_t i = 1; i < xk.size(); ++i) {
    asc += (std::abs(fp[i] - mean) + std::abs(fm[i] - mean)) * wk[i];
  }

  Panel p{a, b, kronrod * half, 0.0};
  double err = std::abs((kronrod - gauss) * half);
  const double resasc = asc * half;
  const double resabs = abs_sum * half;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  p.error = err;
  return p;
}

using PanelRule = Panel (*)(const Integrand&, double, double);

PanelRule select_rule(int order) {
  switch (order) {
    case 15: return &kronrod_panel<15>;
    case 21: return &kronrod_panel<21>;
    case 31: return &kronrod_panel<31>;
    case 41: return &kronrod_panel<41>;
    case 51: return &kronrod_panel<51>;
    case 61: return &kronrod_panel<61>;
    default:
      throw DomainError("rule_order must be one of 15, 21, 31, 41, 51, 61; got " +
                        std::to_string(order));
  }
}

double tolerance_for(const QuadratureSpec& spec, double value) {
  return std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw DomainError("abs_tol must be non-negative");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
  if (rule_order < 2) throw DomainError("rule_order must be at least 2");
  select_rule(rule_order);
}

IntegrationResult integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureSpec& spec) {
  spec.validate();
  if (!(a < b)) throw DomainError("integrate_finite requires a < b");
  const PanelRule rule = select_rule(spec.rule_order);
  const long evals_per_panel = spec.rule_order;

  // Max-heap on panel error.
  std::vector<Panel> heap{rule(f, a, b)};
  double total = heap.front().value;
  double total_err = heap.front().error;
  long evaluations = evals_per_panel;
  int subdivisions = 1;
  bool stalled = false;

  // Sum in left-to-right order so the result does not depend on heap layout.
  auto resum = [&heap, &total, &total_err] {
    std::vector<Panel> ordered(heap);
    std::sort(ordered.begin(), ordered.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    total = 0.0;
    total_err = 0.0;
    for (const auto& p : ordered) {
      total += p.value;
      total_err += p.error;
    }
  };

  for (;;) {
    while (total_err > tolerance_for(spec, total) && subdivisions < spec.max_subdivisions) {
      std::pop_heap(heap.begin(), heap.end());
      const Panel worst = heap.back();
      const double mid = 0.5 * (worst.a + worst.b);
      // Panel no longer resolvable in double precision.
      if (!(mid > worst.a && mid < worst.b)) {
        std::push_heap(heap.begin(), heap.end());
        stalled = true;
        break;
      }
      heap.pop_back();
      const Panel left = rule(f, worst.a, mid);
      const Panel right = rule(f, mid, worst.b);
      evaluations += 2 * evals_per_panel;
      ++subdivisions;
      total += left.value + right.value - worst.value;
      total_err += left.error + right.error - worst.error;
      heap.push_back(left);
      std::push_heap(heap.begin(), heap.end());
      heap.push_back(right);
      std::push_heap(heap.begin(), heap.end());
    }
    // The running sums drift; refine further if the exact re-sum disagrees.
    resum();
    if (stalled || subdivisions >= spec.max_subdivisions ||
        total_err <= tolerance_for(spec, total)) {
      break;
    }
  }
  const double value = total;
  const double error = total_err;

  IntegrationResult r;
  r.value = value;
  r.error_estimate = error;
  r.evaluations = evaluations;
  r.converged = std::isfinite(value) && error <= tolerance_for(spec, value);
  return r;
}

double laguerre_truncation_point(double alpha, double threshold) {
  if (!(threshold > 0.0)) threshold = std::numeric_limits<double>::min();
  return laguerre_truncation_point_log(alpha, std::log(threshold));
}

double laguerre_truncation_point_log(double alpha, double log_thr) {
  if (!(alpha > -1.0)) throw DomainError("Laguerre weight requires alpha > -1");
  auto log_weight = [alpha](double u) { return alpha * std::log(u) - u; };
  // The weight is decreasing for u > max(alpha, 0); search from there.
  double lo = std::max(alpha, 1.0);
  if (log_weight(lo) < log_thr) return lo;
  double hi = 2.0 * lo;
  while (log_weight(hi) >= log_thr) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-9 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_weight(mid) < log_thr ? hi : lo) = mid;
  }
  return hi;
}

IntegrationResult integrate_power_endpoint(const Integrand& h, double exponent, double end,
                                           const QuadratureSpec& spec) {
  if (!(exponent > -1.0)) throw DomainError("integrate_power_endpoint requires exponent > -1");
  if (!(end > 0.0)) throw DomainError("integrate_power_endpoint requires end > 0");
  if (exponent >= 1.0) {
    return integrate_finite([&](double v) { return std::pow(v, exponent) * h(v); }, 0.0, end,
                            spec);
  }
  const double p = 1.0 / (exponent + 1.0);
  const double prefactor = std::pow(end, exponent + 1.0) * p;
  QuadratureSpec scaled = spec;
  scaled.abs_tol = spec.abs_tol / prefactor;
  IntegrationResult r =
      integrate_finite([&](double s) { return h(end * std::pow(s, p)); }, 0.0, 1.0, scaled);
  r.value *= prefactor;
  r.error_estimate *= prefactor;
  return r;
}

GaussRule gauss_laguerre_rule(int n, double alpha) {
  if (n < 1) throw DomainError("Gauss-Laguerre rule needs at least one node");
  if (!(alpha > -1.0)) throw DomainError("Laguerre weight requires alpha > -1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(i * (i + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const double mu0 = std::tgamma(alpha + 1.0);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()[i];
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

namespace {

IntegrationResult laguerre_accelerated(const Integrand& f, const QuadratureSpec& spec,
                                       double alpha) {
  IntegrationResult r;
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int n : {16, 32, 64, 128}) {
    const GaussRule rule = gauss_laguerre_rule(n, alpha);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = rule.nodes[i];
      const double w = rule.weights[i];
      const double weight_fn = std::exp(alpha * std::log(u) - u);
      if (w == 0.0 || weight_fn == 0.0 || !std::isfinite(weight_fn)) continue;
      sum += w * (f(u) / weight_fn);
    }
    r.evaluations += n;
    if (std::isfinite(previous)) {
      r.value = sum;
      r.error_estimate = std::abs(sum - previous);
      if (r.error_estimate <= tolerance_for(spec, sum)) {
        r.converged = true;
        return r;
      }
    }
    previous = sum;
  }
  r.converged = false;
  return r;
}

}  // namespace

IntegrationResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                                          std::optional<LaguerreWeight> weight_hint) {
  spec.validate();
  if (weight_hint) {
    const double alpha = weight_hint->alpha;
    if (!(alpha > -1.0)) throw DomainError("Laguerre weight requires alpha > -1");
    IntegrationResult fast = laguerre_accelerated(f, spec, alpha);
    if (fast.converged) return fast;
    const double upper = laguerre_truncation_point(alpha, spec.abs_tol);
    IntegrationResult r = integrate_finite(f, 0.0, upper, spec);
    r.evaluations += fast.evaluations;
    r.truncation_point = upper;
    return r;
  }

  // Geometric sweep: [0,1], [1,2], [2,4], ... until two consecutive panels
  // are negligible.
  IntegrationResult total;
  total.converged = true;
  double lo = 0.0;
  double hi = 1.0;
  int quiet_panels = 0;
  for (int panel = 0; panel < 64; ++panel) {
    QuadratureSpec piece = spec;
    IntegrationResult r = integrate_finite(f, lo, hi, piece);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
    const double negligible = 0.1 * tolerance_for(spec, total.value);
    quiet_panels = (std::abs(r.value) <= negligible && r.error_estimate <= negligible)
                       ? quiet_panels + 1
                       : 0;
    lo = hi;
    hi *= 2.0;
    if (quiet_panels >= 2) {
      total.truncation_point = lo;
      total.converged = total.converged &&
                        total.error_estimate <= tolerance_for(spec, total.value);
      return total;
    }
  }
  total.truncation_point = lo;
  total.converged = false;
  return total;
}

}  // namespace rcoulomb
