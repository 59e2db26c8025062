#pragma once

// Exact-rational polynomials P_m, Q_{m-1} with
//   V_m(x) = P_m(x^2) V_0(x) + x Q_{m-1}(x^2),   integer m >= 1.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rcoulomb {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in y with exact rational coefficients, stored by ascending
/// power. The zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /// a + b y
  static RationalPolynomial linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of y^i, zero beyond the degree.
  Rational coefficient(int i) const;

  /// Horner evaluation in double after rounding each coefficient.
  double operator()(double y) const;
  Rational evaluate_exact(const Rational& y) const;
  /// sum |c_i| |y|^i, the scale against which rounding errors of a double
  /// evaluation are measured.
  double absolute_sum(double y) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs += rhs;
  }
  friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend RationalPolynomial operator*(RationalPolynomial lhs, const Rational& c) {
    return lhs *= c;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& lhs,
                                      const RationalPolynomial& rhs);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// e.g. "1/2 - y" or "3/8 - 1/2*y + 1/2*y^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

struct PolynomialPair {
  RationalPolynomial p;  ///< P_m, degree m
  RationalPolynomial q;  ///< Q_{m-1}, degree m - 1
};

/// P_m and Q_{m-1} from the three-term recursion, built once per m and
/// memoized behind a mutex.
PolynomialPair pm_qm(int m);

/// P_m(x^2) V_0(x) + x Q_{m-1}(x^2) in double precision. Ill-conditioned for
/// large x m; see reconstruction_condition.
double pm_reconstruct(int m, double x);

/// The same reconstruction carried out with 100 significant decimal digits
/// (including V_0), rounded to double at the end.
double pm_reconstruct_extended(int m, double x);

/// (|P_m(x^2)| V_0 + x |Q_{m-1}(x^2)|) / |V_m(x)|: the factor by which the
/// double-precision reconstruction amplifies rounding errors.
double reconstruction_condition(int m, double x);

/// P_m(y) = e^{-y} 1F1(1/2; 1/2 - m; y) / (m B(m, 1/2)), evaluated through
/// the Kummer transformation as the terminating series 1F1(-m; 1/2 - m; -y).
double pm_via_kummer(int m, double y);

}  // namespace rcoulomb
