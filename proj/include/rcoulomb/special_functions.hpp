#pragma once

// Scalar special functions. All are pure; poles and domain violations throw
// DomainError.

namespace rcoulomb {

double gammafn(double x);

/// log|Gamma(x)|.
double log_gammafn(double x);

/// Beta function Gamma(m) Gamma(n) / Gamma(m + n).
double betafn(double m, double n);

/// Scaled complementary error function e^{x^2} erfc(x).
double erfcx(double x);

/// Exponential integral E1(x) = int_x^inf e^{-t}/t dt, x > 0.
double exp_integral_e1(double x);

/// 1F1(a; b; y) for a a non-positive integer, where the series terminates
/// after -a + 1 terms. b must not be a non-positive integer that the series
/// reaches before terminating.
double kummer_terminating(double a, double b, double y);

}  // namespace rcoulomb
