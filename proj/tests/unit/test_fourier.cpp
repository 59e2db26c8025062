#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "rcoulomb/errors.hpp"
#include "rcoulomb/fourier.hpp"

using namespace rcoulomb;

TEST_SUITE("fourier") {

TEST_CASE("m = 0 against the exponential integral") {
  const double s2pi = std::sqrt(2.0 * std::numbers::pi);
  CHECK(fourier_v(0.0, 2.0) == doctest::Approx(std::numbers::e * oracle::e1(1.0) / s2pi).epsilon(1e-10));
  CHECK(fourier_v(0.0, 2.0) == doctest::Approx(0.237901).epsilon(1e-5));
  for (double xi : {0.5, 1.0, 2.0, 5.0, 20.0}) {
    const double a = xi * xi / 4.0;
    const double expected = static_cast<double>(exp(oracle::Float50(a)) *
                                                boost::math::expint(1, oracle::Float50(a))) /
                            s2pi;
    CAPTURE(xi);
    CHECK(oracle::relative(fourier_v(0.0, xi), expected) <= 1e-10);
    CHECK(oracle::relative(fourier_v0_closed(xi), expected) <= 1e-12);
  }
}

TEST_CASE("windowed direct transform") {
  for (double m : {0.0, 1.0, 2.0}) {
    const DirectTransform d = fourier_v_direct(m, 1.0);
    CAPTURE(m);
    CHECK(d.window == doctest::Approx(200.0));
    CHECK(std::abs(d.value - fourier_v(m, 1.0)) <= 1e-6);
  }
}

TEST_CASE("evenness, positivity, log singularity") {
  for (double m : {0.0, 0.5, 3.0}) {
    for (double xi : {0.1, 1.0, 4.0}) {
      CHECK(fourier_v(m, -xi) == fourier_v(m, xi));
      CHECK(fourier_v(m, xi) > 0.0);
    }
  }
  // The transform grows like -ln(xi^2/4)/sqrt(2 pi), slope -2/sqrt(2 pi) in ln xi.
  const double s2pi = std::sqrt(2.0 * std::numbers::pi);
  const double slope = (fourier_v(0.0, 1e-4) - fourier_v(0.0, 1e-3)) / std::log(0.1) * s2pi;
  CHECK(slope == doctest::Approx(-2.0).epsilon(1e-4));
  CHECK_THROWS_AS(fourier_v(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(fourier_v(-1.0, 1.0), DomainError);
}

}  // TEST_SUITE
