#pragma once

// The regularized Coulomb potentials
//
//   V_m(x) = 1/Gamma(m+1) int_0^inf u^m e^{-u} / sqrt(x^2 + u) du,   m > -1,
//
// together with the sentinel V_{-1}(x) = 1/|x|, their closed forms,
// recursions, derivative, bounds and asymptotics.

#include <optional>
#include <string>
#include <string_view>

#include "rcoulomb/quadrature.hpp"

namespace rcoulomb {

/// Order m of a potential. Valid orders are m > -1 and the exact sentinel
/// m = -1 standing for the bare Coulomb potential 1/|x|.
class PotentialIndex {
 public:
  static constexpr double kCoulomb = -1.0;

  // Implicit so that plain doubles can be passed wherever an index is taken.
  PotentialIndex(double m);  // NOLINT(google-explicit-constructor)

  double value() const { return m_; }
  bool is_coulomb() const { return m_ == kCoulomb; }
  bool is_integer() const;

 private:
  double m_;
};

enum class Strategy {
  automatic,
  quadrature,
  closed_m0,
  recursion,
  asymptotic,
  polynomial,
  /// Exact formulas: V_m(0) = Gamma(m+1/2)/Gamma(m+1) and V_{-1} = 1/x.
  exact,
};

std::string_view to_string(Strategy s);
/// Parses "auto", "quadrature", "closed_m0", "recursion", "asymptotic",
/// "polynomial" or "exact"; throws DomainError otherwise.
Strategy parse_strategy(std::string_view name);

struct EvalResult {
  double value = 0.0;
  double error_estimate = 0.0;
  Strategy strategy = Strategy::automatic;
  /// Quadrature truncation point in the u variable, when quadrature was used.
  std::optional<double> truncation_point;
};

/// x beyond which the automatic strategy switches to the asymptotic series.
double asymptotic_switch_point(double m);

/// V_m(x) for x >= 0. The automatic strategy uses the exact forms at x = 0 and
/// for the sentinel, the closed form for m = 0, quadrature up to
/// asymptotic_switch_point(m) and the asymptotic series beyond it.
EvalResult v(PotentialIndex m, double x, Strategy method = Strategy::automatic,
             const QuadratureSpec& spec = {});

/// Shorthand for v(m, x).value with the automatic strategy.
double vm(double m, double x);

/// V_m(0) = Gamma(m + 1/2) / Gamma(m + 1), m > -1/2.
double v_at_zero(double m);

/// V_0(x) = sqrt(pi) e^{x^2} erfc(x).
double v_closed_m0(double x);

/// One step of the three-term recursion
///   V_m = [(m - 1/2 - x^2) V_{m-1} + x^2 V_{m-2}] / m,   m >= 1, x > 0.
double v_recursion(double m, double x, double v_m_minus_1, double v_m_minus_2);

/// Upward recursion chain from V_{-1} = 1/x and V_0 (integer m) or from
/// quadrature seeds at the fractional part (non-integer m >= 1).
EvalResult v_recursion_chain(double m, double x, const QuadratureSpec& spec = {});

/// The iterated recursion
///   V_m = [(1 - 2x^2) V_{m-1} + sum_{k=0}^{m-2} V_k + 2x] / (2m),
/// evaluated upward from V_0 for integer m >= 1 and x > 0.
double v_iterated(int m, double x);

/// V_m'(x) = 2x (V_m - V_{m-1}) for m >= 0. At x = 0 this is the one-sided
/// value: -2 for m = 0 and 0 for m > 0.
double v_derivative(double m, double x);

/// Partial sum of the large-x expansion through term `order`; the error
/// estimate is the first omitted term. Throws ConvergenceError when
/// x^2 <= m + order.
EvalResult v_asymptotic(double m, double x, int order);

/// Coefficient c_k with V_m(x) ~ sum_k c_k x^{-2k-1}:
/// c_k = (-1)^k (2k-1)!!/(2^k k!) Gamma(m+k+1)/Gamma(m+1).
double asymptotic_coefficient(double m, int k);

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// 1/sqrt(x^2+m+1) < V_m(x) < 1/sqrt(x^2+m). The upper bound needs m > 0 and
/// is +inf otherwise.
Bracket bracket(double m, double x);

/// g_k(x) = k / ((k-1)x + sqrt(x^2 + k)); g_pi <= V_0 < g_4.
double g_k(double x, double k);

/// G_k^m(y) = ky / ((k-1)y - m + sqrt((y+m)^2 + ky)); at y = 0 the limit is
/// returned. G_8^{m-1}(x^2) < V_m/V_{m-1} < G_4^m(x^2) for integer m >= 0.
double G_k_m(double y, double k, double m);

/// 1/x - V_m(x) for x > 0, summed directly from the tail of the large-x
/// expansion where that applies so the difference keeps full precision.
double coulomb_deficit(double m, double x);

/// Averaged potential (1/N) sum_{m<N} V_m(x).
double v_av(int N, double x);

/// The same average through 2V_N - (2x^2/N)(V_{-1} - V_{N-1}).
double v_av_identity(int N, double x);

}  // namespace rcoulomb
