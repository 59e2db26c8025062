#include "rcoulomb/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rcoulomb/errors.hpp"
#include "rcoulomb/potential.hpp"
#include "rcoulomb/special_functions.hpp"

namespace rcoulomb {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// int_X^inf x^{-p} cos(xi x) dx and its sine twin by repeated integration by
// parts; each level gains a factor p / (xi X).
double cos_tail(double p, double xi, double X, int depth);

double sin_tail(double p, double xi, double X, int depth) {
  const double boundary = std::pow(X, -p) * std::cos(xi * X) / xi;
  if (depth == 0) return boundary;
  return boundary - (p / xi) * cos_tail(p + 1.0, xi, X, depth - 1);
}

double cos_tail(double p, double xi, double X, int depth) {
  const double boundary = -std::pow(X, -p) * std::sin(xi * X) / xi;
  if (depth == 0) return boundary;
  return boundary + (p / xi) * sin_tail(p + 1.0, xi, X, depth - 1);
}

}  // namespace

double fourier_v(double m, double xi, const QuadratureSpec& spec) {
  if (!(m > -1.0)) throw DomainError("fourier_v requires m > -1");
  if (xi == 0.0 || std::isnan(xi)) {
    throw DomainError("the transform of V_m has a logarithmic singularity at xi = 0");
  }
  const double a = 0.25 * xi * xi;
  // Integrand s^m e^{-s} / (a+s)^{m+1}, written through s/(a+s) to stay finite.
  auto full = [&](double s) {
    if (s <= 0.0) return 0.0;
    return std::exp(m * std::log(s / (a + s)) - s) / (a + s);
  };
  auto smooth_part = [&](double s) { return std::exp(-s - (m + 1.0) * std::log(a + s)); };

  IntegrationResult near = m < 1.0 ? integrate_power_endpoint(smooth_part, m, a, spec)
                                   : integrate_finite(full, 0.0, a, spec);
  IntegrationResult far =
      integrate_semi_infinite([&](double t) { return full(a + t); }, spec);
  if (!near.converged || !far.converged) {
    throw ConvergenceError("fourier_v quadrature did not converge at xi = " + std::to_string(xi));
  }
  return kInvSqrt2Pi * (near.value + far.value);
}

double fourier_v0_closed(double xi) {
  if (xi == 0.0) throw DomainError("the transform of V_0 diverges at xi = 0");
  const double a = 0.25 * xi * xi;
  return kInvSqrt2Pi * std::exp(a) * exp_integral_e1(a);
}

DirectTransform fourier_v_direct(double m, double xi, const QuadratureSpec& spec) {
  if (!(m > -1.0)) throw DomainError("fourier_v_direct requires m > -1");
  if (xi == 0.0) throw DomainError("direct transform needs xi != 0");
  const double k = std::abs(xi);
  const double X = 200.0 / std::max(k, 0.1);

  QuadratureSpec panel_spec = spec;
  panel_spec.abs_tol = std::max(spec.abs_tol, 1e-13);
  const double period = 2.0 * std::numbers::pi / k;
  const int panels = static_cast<int>(std::ceil(X / period));
  double inside = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = i * period;
    const double hi = std::min(X, (i + 1) * period);
    if (!(hi > lo)) break;
    IntegrationResult r = integrate_finite(
        [&](double x) { return vm(m, x) * std::cos(k * x); }, lo, hi, panel_spec);
    if (!r.converged) throw ConvergenceError("direct transform panel did not converge");
    inside += r.value;
  }

  // V_m(x) ~ sum_j c_j x^{-2j-1} beyond the window.
  double tail = 0.0;
  for (int j = 0; j <= 3; ++j) {
    tail += asymptotic_coefficient(m, j) * cos_tail(2.0 * j + 1.0, k, X, 12);
  }
  DirectTransform out;
  out.window = X;
  out.tail_correction = 2.0 * kInvSqrt2Pi * tail;
  out.value = 2.0 * kInvSqrt2Pi * inside + out.tail_correction;
  return out;
}

}  // namespace rcoulomb
