#include "rcoulomb/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "rcoulomb/errors.hpp"
#include "rcoulomb/polynomials.hpp"
#include "rcoulomb/special_functions.hpp"

namespace rcoulomb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSqrtPi = 1.7724538509055160273;

void require_nonnegative_x(double x) {
  if (!(x >= 0.0)) {
    throw DomainError("V_m is even; pass |x| (got x = " + std::to_string(x) + ")");
  }
}

// V_m(x) = (2/Gamma(m+1)) int_0^inf v^{2m+1} e^{-v^2} / sqrt(x^2+v^2) dv after
// u = v^2, split at v = x so that the inner piece carries the power-law
// endpoint and the outer piece the Gaussian decay.
EvalResult v_by_quadrature(double m, double x, const QuadratureSpec& spec) {
  const double log_norm = log_gammafn(m + 1.0);
  const double lower = 1.0 / std::sqrt(x * x + m + 1.0);
  const double target = std::max(spec.abs_tol, spec.rel_tol * lower);
  const double u_max = laguerre_truncation_point_log(m, std::log(1e-3 * target) + log_norm);
  const double v_max = std::sqrt(u_max);
  const double x2 = x * x;

  // Integrand v^exponent * h(v).
  const double exponent = x > 0.0 ? 2.0 * m + 1.0 : 2.0 * m;
  auto h = [&](double t) {
    const double gauss = 2.0 * std::exp(-t * t - log_norm);
    return x > 0.0 ? gauss / std::sqrt(x2 + t * t) : gauss;
  };
  const double split = std::min(x > 0.0 ? x : 1.0, v_max);

  IntegrationResult inner = integrate_power_endpoint(h, exponent, split, spec);
  double value = inner.value;
  double error = inner.error_estimate;
  bool converged = inner.converged;
  if (split < v_max) {
    auto full = [&](double t) { return std::exp(exponent * std::log(t)) * h(t); };
    IntegrationResult outer = integrate_finite(full, split, v_max, spec);
    value += outer.value;
    error += outer.error_estimate;
    converged = converged && outer.converged;
  }
  const double tail = std::exp(m * std::log(u_max) - u_max - log_norm) / std::sqrt(x2 + u_max) /
                      std::max(1.0 - m / u_max, 0.5);
  error += tail;
  if (!converged) {
    throw ConvergenceError("quadrature for V_m(x) did not converge at m = " + std::to_string(m) +
                           ", x = " + std::to_string(x));
  }
  return EvalResult{value, error, Strategy::quadrature, u_max};
}

// Order whose first omitted term drops below rel * value, or -1 if the
// series starts growing before that.
int automatic_asymptotic_order(double m, double x, double rel) {
  double term = 1.0 / x;
  double sum = term;
  const double inv_x2 = 1.0 / (x * x);
  for (int k = 0; k < 400; ++k) {
    const double next = term * (-(2.0 * k + 1.0) / (2.0 * k + 2.0)) * (m + k + 1.0) * inv_x2;
    if (std::abs(next) < rel * std::abs(sum)) return k;
    if (std::abs(next) >= std::abs(term)) return -1;
    term = next;
    sum += term;
  }
  return -1;
}

EvalResult recursion_chain(double m, double x, const QuadratureSpec& spec) {
  if (!(m >= 1.0)) throw DomainError("recursion strategy needs m >= 1");
  if (!(x > 0.0)) throw DomainError("recursion strategy needs x > 0 (V_{-1} = 1/x seed)");
  const double frac = m - std::floor(m);
  double prev2, prev1, err2, err1;
  if (frac == 0.0) {
    prev2 = 1.0 / x;
    prev1 = v_closed_m0(x);
    err2 = kEps * prev2;
    err1 = 2.0 * kEps * prev1;
  } else {
    const EvalResult a = v_by_quadrature(frac - 1.0, x, spec);
    const EvalResult b = v_by_quadrature(frac, x, spec);
    prev2 = a.value;
    prev1 = b.value;
    err2 = a.error_estimate;
    err1 = b.error_estimate;
  }
  double current = prev1;
  double err = err1;
  const int steps = static_cast<int>(std::floor(m));
  for (int j = 1; j <= steps; ++j) {
    const double k = frac + j;
    current = v_recursion(k, x, prev1, prev2);
    err = (std::abs(k - 0.5 - x * x) * err1 + x * x * err2) / k + 2.0 * kEps * std::abs(current);
    prev2 = prev1;
    err2 = err1;
    prev1 = current;
    err1 = err;
  }
  return EvalResult{current, err, Strategy::recursion, std::nullopt};
}

}  // namespace

PotentialIndex::PotentialIndex(double m) : m_(m) {
  if (std::isnan(m) || m < kCoulomb || std::isinf(m)) {
    throw DomainError("potential index must satisfy m > -1 or m = -1; got " + std::to_string(m));
  }
}

bool PotentialIndex::is_integer() const { return std::floor(m_) == m_; }

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::quadrature: return "quadrature";
    case Strategy::closed_m0: return "closed_m0";
    case Strategy::recursion: return "recursion";
    case Strategy::asymptotic: return "asymptotic";
    case Strategy::polynomial: return "polynomial";
    case Strategy::exact: return "exact";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::automatic, Strategy::quadrature, Strategy::closed_m0,
                     Strategy::recursion, Strategy::asymptotic, Strategy::polynomial,
                     Strategy::exact}) {
    if (to_string(s) == name) return s;
  }
  throw DomainError("unknown evaluation method '" + std::string(name) + "'");
}

double asymptotic_switch_point(double m) { return std::sqrt(50.0 + 10.0 * m); }

EvalResult v(PotentialIndex index, double x, Strategy method, const QuadratureSpec& spec) {
  require_nonnegative_x(x);
  const double m = index.value();

  if (index.is_coulomb()) {
    if (x == 0.0) throw DomainError("V_{-1}(0) = 1/0 diverges");
    if (method != Strategy::automatic && method != Strategy::exact) {
      throw DomainError("the Coulomb sentinel only supports the exact strategy");
    }
    return EvalResult{1.0 / x, kEps / x, Strategy::exact, std::nullopt};
  }
  if (x == 0.0 && !(m > -0.5)) {
    throw DomainError("V_m(0) diverges for m <= -1/2; got m = " + std::to_string(m));
  }

  switch (method) {
    case Strategy::automatic: {
      if (x == 0.0) {
        const double value = v_at_zero(m);
        return EvalResult{value, 4.0 * kEps * value, Strategy::exact, std::nullopt};
      }
      if (m == 0.0) {
        const double value = v_closed_m0(x);
        return EvalResult{value, 4.0 * kEps * value, Strategy::closed_m0, std::nullopt};
      }
      if (x > asymptotic_switch_point(m)) {
        int order = automatic_asymptotic_order(m, x, 1e-16);
        if (order < 0) order = automatic_asymptotic_order(m, x, 1e-12);
        if (order >= 0) return v_asymptotic(m, x, order);
      }
      return v_by_quadrature(m, x, spec);
    }
    case Strategy::quadrature:
      return v_by_quadrature(m, x, spec);
    case Strategy::closed_m0: {
      if (m != 0.0) throw DomainError("closed_m0 strategy only applies to m = 0");
      const double value = v_closed_m0(x);
      return EvalResult{value, 4.0 * kEps * value, Strategy::closed_m0, std::nullopt};
    }
    case Strategy::recursion:
      return recursion_chain(m, x, spec);
    case Strategy::asymptotic: {
      if (x == 0.0) throw DomainError("asymptotic series needs x > 0");
      const int order = automatic_asymptotic_order(m, x, 1e-12);
      if (order < 0) {
        throw ConvergenceError("asymptotic series cannot reach 1e-12 at x = " +
                               std::to_string(x));
      }
      return v_asymptotic(m, x, order);
    }
    case Strategy::polynomial: {
      if (!index.is_integer() || m < 1.0) {
        throw DomainError("polynomial strategy needs integer m >= 1");
      }
      const int mi = static_cast<int>(m);
      const double value = pm_reconstruct(mi, x);
      const double cond = reconstruction_condition(mi, x);
      return EvalResult{value, 8.0 * (mi + 1) * kEps * cond * std::abs(value),
                        Strategy::polynomial, std::nullopt};
    }
    case Strategy::exact: {
      if (x != 0.0) throw DomainError("exact strategy only applies at x = 0 or m = -1");
      const double value = v_at_zero(m);
      return EvalResult{value, 4.0 * kEps * value, Strategy::exact, std::nullopt};
    }
  }
  throw DomainError("unhandled strategy");
}

double vm(double m, double x) { return v(m, x).value; }

double v_at_zero(double m) {
  if (!(m > -0.5)) throw DomainError("V_m(0) requires m > -1/2");
  return boost::math::tgamma_delta_ratio(m + 0.5, 0.5);
}

double v_closed_m0(double x) {
  require_nonnegative_x(x);
  return kSqrtPi * erfcx(x);
}

double v_recursion(double m, double x, double v_m_minus_1, double v_m_minus_2) {
  if (!(m >= 1.0)) throw DomainError("recursion requires m >= 1");
  if (!(x > 0.0)) throw DomainError("recursion requires x > 0");
  const double x2 = x * x;
  return ((m - 0.5 - x2) * v_m_minus_1 + x2 * v_m_minus_2) / m;
}

EvalResult v_recursion_chain(double m, double x, const QuadratureSpec& spec) {
  return recursion_chain(m, x, spec);
}

double v_iterated(int m, double x) {
  if (m < 1) throw DomainError("iterated recursion requires integer m >= 1");
  if (!(x > 0.0)) throw DomainError("iterated recursion requires x > 0");
  const double x2 = x * x;
  double previous = v_closed_m0(x);  // V_{k-1}
  double partial = 0.0;              // sum_{j=0}^{k-2} V_j
  for (int k = 1; k <= m; ++k) {
    const double next = ((1.0 - 2.0 * x2) * previous + partial + 2.0 * x) / (2.0 * k);
    partial += previous;
    previous = next;
  }
  return previous;
}

double v_derivative(double m, double x) {
  if (!(m >= 0.0)) throw DomainError("v_derivative requires m >= 0");
  require_nonnegative_x(x);
  if (x == 0.0) return m == 0.0 ? -2.0 : 0.0;
  if (m == 0.0) return 2.0 * (x * v_closed_m0(x) - 1.0);
  return 2.0 * x * (vm(m, x) - vm(m - 1.0, x));
}

double asymptotic_coefficient(double m, int k) {
  if (k < 0) throw DomainError("asymptotic coefficient index must be >= 0");
  double c = 1.0;
  for (int j = 0; j < k; ++j) c *= -(2.0 * j + 1.0) / (2.0 * j + 2.0) * (m + j + 1.0);
  return c;
}

EvalResult v_asymptotic(double m, double x, int order) {
  if (!(m > -1.0)) throw DomainError("asymptotic series requires m > -1");
  if (order < 0) throw DomainError("asymptotic order must be >= 0");
  if (!(x > 0.0) || !(x * x > m + order)) {
    throw ConvergenceError("asymptotic series of order " + std::to_string(order) +
                           " is outside its validity range (x^2 > m + order) at x = " +
                           std::to_string(x));
  }
  const double inv_x2 = 1.0 / (x * x);
  double term = 1.0 / x;
  double sum = term;
  for (int k = 0; k < order; ++k) {
    term *= -(2.0 * k + 1.0) / (2.0 * k + 2.0) * (m + k + 1.0) * inv_x2;
    sum += term;
  }
  const double omitted = term * (-(2.0 * order + 1.0) / (2.0 * order + 2.0)) *
                         (m + order + 1.0) * inv_x2;
  return EvalResult{sum, std::abs(omitted) + 2.0 * kEps * std::abs(sum), Strategy::asymptotic,
                    std::nullopt};
}

Bracket bracket(double m, double x) {
  if (!(m > -1.0)) throw DomainError("bracket requires m > -1");
  require_nonnegative_x(x);
  const double x2 = x * x;
  Bracket b;
  b.lower = 1.0 / std::sqrt(x2 + m + 1.0);
  b.upper = m > 0.0 ? 1.0 / std::sqrt(x2 + m) : std::numeric_limits<double>::infinity();
  return b;
}

double g_k(double x, double k) {
  if (!(k > 1.0)) throw DomainError("g_k requires k > 1");
  require_nonnegative_x(x);
  return k / ((k - 1.0) * x + std::sqrt(x * x + k));
}

double G_k_m(double y, double k, double m) {
  if (!(y >= 0.0)) throw DomainError("G_k^m requires y >= 0");
  if (m > 0.0) {
    // -m + sqrt((y+m)^2 + ky) rewritten without cancellation; divided by y.
    const double root = std::sqrt((y + m) * (y + m) + k * y);
    return k / ((k - 1.0) + (y + 2.0 * m + k) / (root + m));
  }
  if (y == 0.0) return 0.0;
  return k * y / ((k - 1.0) * y - m + std::sqrt((y + m) * (y + m) + k * y));
}

double v_av(int N, double x) {
  if (N < 1) throw DomainError("v_av requires N >= 1");
  require_nonnegative_x(x);
  double sum = 0.0;
  for (int m = 0; m < N; ++m) sum += vm(m, x);
  return sum / N;
}

double coulomb_deficit(double m, double x) {
  if (!(x > 0.0)) throw DomainError("coulomb_deficit requires x > 0");
  if (m == -1.0) return 0.0;
  if (!(m > -1.0)) throw DomainError("coulomb_deficit requires m >= -1");
  if (x > asymptotic_switch_point(m)) {
    const double inv_x2 = 1.0 / (x * x);
    double term = 1.0 / x;
    double sum = 0.0;
    for (int k = 0; k < 400; ++k) {
      const double next = term * (-(2.0 * k + 1.0) / (2.0 * k + 2.0)) * (m + k + 1.0) * inv_x2;
      if (std::abs(next) >= std::abs(term) && k > 0) break;
      term = next;
      sum -= term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    }
  }
  return 1.0 / x - vm(m, x);
}

double v_av_identity(int N, double x) {
  if (N < 1) throw DomainError("v_av requires N >= 1");
  require_nonnegative_x(x);
  if (x == 0.0) return 2.0 * v_at_zero(N);
  return 2.0 * vm(N, x) - (2.0 * x * x / N) * coulomb_deficit(N - 1, x);
}

}  // namespace rcoulomb
