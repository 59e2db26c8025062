#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "rcoulomb/errors.hpp"
#include "rcoulomb/polynomials.hpp"
#include "rcoulomb/special_functions.hpp"

using namespace rcoulomb;

TEST_SUITE("polynomials") {

TEST_CASE("first two pairs in exact arithmetic") {
  const PolynomialPair p1 = pm_qm(1);
  CHECK(p1.p == RationalPolynomial::linear(Rational(1, 2), Rational(-1)));
  CHECK(p1.q == RationalPolynomial::constant(Rational(1)));
  CHECK(p1.p.to_string() == "1/2 - y");

  // V_2 = ((3/2 - y) V_1 + y V_0) / 2 worked out by hand.
  const PolynomialPair p2 = pm_qm(2);
  CHECK(p2.p == RationalPolynomial({Rational(3, 8), Rational(-1, 2), Rational(1, 2)}));
  CHECK(p2.q == RationalPolynomial({Rational(3, 4), Rational(-1, 2)}));
}

TEST_CASE("degrees and leading coefficients") {
  for (int m = 1; m <= 20; ++m) {
    const PolynomialPair pq = pm_qm(m);
    CHECK(pq.p.degree() == m);
    CHECK(pq.q.degree() == m - 1);
    // Leading term of P_m is (-y)^m / m!.
    Rational lead = 1;
    for (int k = 1; k <= m; ++k) lead /= k;
    if (m % 2) lead = -lead;
    CHECK(pq.p.coefficient(m) == lead);
    // P_m(0) V_0(0) = V_m(0).
    CHECK(pq.p.coefficient(0).convert_to<double>() * std::sqrt(M_PI) ==
          doctest::Approx(std::exp(std::lgamma(m + 0.5) - std::lgamma(m + 1.0))).epsilon(1e-13));
  }
}

TEST_CASE("reconstruction against high-precision V_0 and the defining integral") {
  for (int m : {1, 2, 5, 10}) {
    for (double x : {0.0, 0.25, 1.0, 3.0}) {
      const PolynomialPair pq = pm_qm(m);
      const Rational y(x * x);
      const oracle::Float50 value =
          oracle::Float50(pq.p.evaluate_exact(y)) * oracle::v0_hp(x) +
          oracle::Float50(x) * oracle::Float50(pq.q.evaluate_exact(y));
      CAPTURE(m);
      CAPTURE(x);
      if (x > 0.0) CHECK(oracle::relative(static_cast<double>(value), oracle::vm(m, x)) <= 1e-12);
      CHECK(oracle::relative(pm_reconstruct_extended(m, x), static_cast<double>(value)) <= 1e-15);
    }
  }
  CHECK(pm_reconstruct(2, 1.0) == doctest::Approx(oracle::vm(2.0, 1.0)).epsilon(1e-12));
  CHECK(reconstruction_condition(10, 5.0) > reconstruction_condition(10, 0.5));
}

TEST_CASE("Kummer form") {
  CHECK(pm_via_kummer(1, 0.0) == doctest::Approx(1.0 / betafn(1.0, 0.5)).epsilon(1e-15));
  CHECK(pm_via_kummer(1, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pm_via_kummer(1, 2.0) == doctest::Approx(-1.5).epsilon(1e-14));
  CHECK(pm_via_kummer(2, 1.0) == doctest::Approx(pm_qm(2).p(1.0)).epsilon(1e-12));
  for (int m = 1; m <= 20; ++m) {
    for (double y : {0.0, 0.5, 4.0, 30.0}) {
      const PolynomialPair pq = pm_qm(m);
      CAPTURE(m);
      CAPTURE(y);
      CHECK(std::abs(pm_via_kummer(m, y) - pq.p.evaluate_exact(Rational(y)).convert_to<double>()) <=
            1e-10 * pq.p.absolute_sum(y));
    }
  }
}

TEST_CASE("arithmetic") {
  const RationalPolynomial a({Rational(1), Rational(2)});
  const RationalPolynomial b({Rational(-1), Rational(0), Rational(3)});
  CHECK((a * b) == RationalPolynomial({Rational(-1), Rational(-2), Rational(3), Rational(6)}));
  CHECK((a - a).degree() == -1);
  CHECK((a + b).to_string() == "2*y + 3*y^2");
  CHECK(a.evaluate_exact(Rational(1, 2)) == Rational(2));
}

TEST_CASE("invalid index") {
  CHECK_THROWS_AS(pm_qm(0), DomainError);
  CHECK_THROWS_AS(pm_via_kummer(0, 1.0), DomainError);
}

}  // TEST_SUITE
