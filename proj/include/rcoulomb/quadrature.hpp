#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace rcoulomb {

using Integrand = std::function<double(double)>;

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  /// Kronrod rule size; one of 15, 21, 31, 41, 51, 61.
  int rule_order = 21;

  /// Throws DomainError when a field is outside its admissible range.
  void validate() const;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
  /// Upper limit actually integrated to for semi-infinite problems (the
  /// truncation point); unset for finite intervals.
  std::optional<double> truncation_point;
};

/// Weight hint for integrate_semi_infinite. With a Laguerre hint the
/// integrand is assumed to behave like u^alpha e^{-u} g(u) with g smooth.
struct LaguerreWeight {
  double alpha = 0.0;
};

/// Globally adaptive Gauss-Kronrod integration on [a, b]. Endpoints are never
/// evaluated, so integrable endpoint singularities are allowed.
IntegrationResult integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureSpec& spec = {});

/// Integral over (0, inf). Without a hint the range is swept in geometrically
/// growing panels until the contribution of a panel falls below tolerance.
/// With a Laguerre hint a generalized Gauss-Laguerre rule of increasing order
/// is tried first; if successive orders disagree the routine falls back to
/// adaptive integration on [0, U], where U is the point past which
/// u^alpha e^{-u} < abs_tol.
IntegrationResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec = {},
                                          std::optional<LaguerreWeight> weight_hint = std::nullopt);

/// Smallest U >= max(alpha, 1) with U^alpha e^{-U} < threshold (bisection).
double laguerre_truncation_point(double alpha, double threshold);

/// Same, with the threshold given as its natural logarithm so that weights
/// carrying large normalizations (1/Gamma(m+1)) stay representable.
double laguerre_truncation_point_log(double alpha, double log_threshold);

/// int_0^end v^exponent h(v) dv for exponent > -1 and h smooth. When the
/// power is non-smooth at 0 (exponent < 1) the substitution
/// v = end * s^{1/(exponent+1)} turns the integrand into h alone.
IntegrationResult integrate_power_endpoint(const Integrand& h, double exponent, double end,
                                           const QuadratureSpec& spec = {});

/// Nodes and weights of the n-point generalized Gauss-Laguerre rule for the
/// weight u^alpha e^{-u} (Golub-Welsch).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_laguerre_rule(int n, double alpha);

}  // namespace rcoulomb
