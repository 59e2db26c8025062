#include "rcoulomb/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <utility>

#include "rcoulomb/errors.hpp"
#include "rcoulomb/fourier.hpp"
#include "rcoulomb/magnetic_models.hpp"
#include "rcoulomb/polynomials.hpp"
#include "rcoulomb/potential.hpp"

#ifndef RCOULOMB_VERSION
#define RCOULOMB_VERSION "0.0.0"
#endif

namespace rcoulomb {

std::string_view library_version() { return RCOULOMB_VERSION; }

namespace {

constexpr double kSlack = 1e-9;
constexpr double kCurvatureSlack = 1e-10;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string point(std::initializer_list<std::pair<const char*, double>> coords) {
  std::string out;
  for (const auto& [name, value] : coords) {
    if (!out.empty()) out += ", ";
    out += name;
    out += "=";
    out += num(value);
  }
  return out;
}

// Relative amount by which a < b fails.
double below(double a, double b) { return (a - b) / std::max(std::abs(b), 1e-300); }

class Tracker {
 public:
  Tracker(std::string id, std::string grid, double tolerance)
      : id_(std::move(id)), grid_(std::move(grid)), tolerance_(tolerance) {}

  template <class Witness>
  void observe(double violation, Witness&& witness) {
    if (std::isnan(violation)) violation = std::numeric_limits<double>::infinity();
    ++points_;
    if (points_ == 1 || violation > worst_) {
      worst_ = violation;
      witness_ = witness();
    }
  }

  CheckResult finish() const {
    CheckResult r;
    r.id = id_;
    r.grid = grid_ + " (" + std::to_string(points_) + " points)";
    r.worst_violation = std::clamp(worst_, -std::numeric_limits<double>::max(),
                                   std::numeric_limits<double>::max());
    r.witness = witness_;
    r.tolerance = tolerance_;
    r.pass = points_ > 0 && worst_ <= tolerance_;
    return r;
  }

 private:
  std::string id_;
  std::string grid_;
  double tolerance_;
  long points_ = 0;
  double worst_ = 0.0;
  std::string witness_;
};

std::vector<double> m_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 40; ++i) g.push_back(0.5 * i);
  return g;
}

std::vector<int> integer_m() {
  std::vector<int> g;
  for (int m = 0; m <= 20; ++m) g.push_back(m);
  return g;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(static_cast<std::size_t>(points));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < points; ++i) g[i] = std::pow(10.0, a + (b - a) * i / (points - 1));
  return g;
}

std::vector<double> x_grid() { return log_grid(1e-3, 1e3, 49); }

const char* kMGrid = "m in {0, 0.5, ..., 20}";
const char* kIntGrid = "integer m in {0, ..., 20}";
const char* kXGrid = "x log-spaced, 49 points in [1e-3, 1e3]";

std::string grid_text(const char* m, const char* x) { return std::string(m) + "; " + x; }

// Second difference with step 0.01 x, relative to |f(x)|.
double relative_second_difference(const std::function<double(double)>& f, double x) {
  const double h = 0.01 * x;
  const double centre = f(x);
  return (f(x + h) - 2.0 * centre + f(x - h)) / std::abs(centre);
}

void suite_bounds(VerificationReport& report, const VerifyOptions& options) {
  const auto ms = m_grid();
  const auto xs = x_grid();
  std::map<std::pair<double, double>, double> cache;
  auto V = [&](double m, double x) {
    auto key = std::make_pair(m, x);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const double value = vm(m, x);
    cache.emplace(key, value);
    return value;
  };

  Tracker bracket_check("bracket", grid_text("m in {0.5, ..., 20}", kXGrid), kSlack);
  for (double m : ms) {
    if (m <= 0.0) continue;
    for (double x : xs) {
      const Bracket b = bracket(m, x);
      const double value = V(m, x);
      const double upper = b.upper + options.upper_bound_shift;
      bracket_check.observe(std::max(below(b.lower, value), below(value, upper)),
                            [&] { return point({{"m", m}, {"x", x}}); });
    }
  }
  report.checks.push_back(bracket_check.finish());

  Tracker monotone("decreasing_in_m", grid_text(kMGrid, kXGrid) + "; steps 1/2 and 1, V_0 < 1/x",
                   kSlack);
  for (double x : xs) {
    monotone.observe(below(V(0.0, x), 1.0 / x), [&] { return point({{"m", 0.0}, {"x", x}}); });
    for (double m : ms) {
      for (double step : {0.5, 1.0}) {
        if (m + step > 20.0) continue;
        monotone.observe(below(V(m + step, x), V(m, x)),
                         [&] { return point({{"m", m}, {"step", step}, {"x", x}}); });
      }
    }
  }
  report.checks.push_back(monotone.finish());

  Tracker weighted("m_times_v_increasing", grid_text(kMGrid, kXGrid), kSlack);
  for (double x : xs) {
    for (double m : ms) {
      if (m + 0.5 > 20.0) continue;
      weighted.observe(below(m * V(m, x), (m + 0.5) * V(m + 0.5, x)),
                       [&] { return point({{"m", m}, {"x", x}}); });
    }
  }
  report.checks.push_back(weighted.finish());

  Tracker decreasing("decreasing_in_x", grid_text(kMGrid, kXGrid), kSlack);
  for (double m : ms) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      decreasing.observe(below(V(m, xs[i + 1]), V(m, xs[i])),
                         [&] { return point({{"m", m}, {"x", xs[i]}}); });
    }
  }
  report.checks.push_back(decreasing.finish());

  const double scales[] = {0.5, 1.0 / std::numbers::sqrt2, 1.0, std::numbers::sqrt2, 2.0};
  Tracker scaling("scaled_increasing_in_a",
                  grid_text(kMGrid, kXGrid) + "; a in {1/2, 1/sqrt2, 1, sqrt2, 2}", kSlack);
  for (double m : ms) {
    for (double x : xs) {
      for (int i = 0; i + 1 < 5; ++i) {
        const double a = scales[i];
        const double b = scales[i + 1];
        scaling.observe(below(a * V(m, a * x), b * V(m, b * x)),
                        [&] { return point({{"m", m}, {"x", x}, {"a", a}}); });
      }
    }
  }
  report.checks.push_back(scaling.finish());

  Tracker subadditive("subadditivity", "m in {0, 0.5, ..., 20}; x, y log-spaced, 50x50 in [1e-3, 1e3]",
                      kSlack);
  const auto ys = log_grid(1e-3, 1e3, 50);
  for (double m : ms) {
    for (double x : ys) {
      for (double y : ys) {
        if (y < x) continue;
        const double lhs = 1.0 / vm(m, x + y);
        subadditive.observe(below(lhs, 1.0 / V(m, x) + 1.0 / V(m, y)),
                            [&] { return point({{"m", m}, {"x", x}, {"y", y}}); });
      }
    }
  }
  report.checks.push_back(subadditive.finish());

  Tracker large_x("large_x_deficit", grid_text(kMGrid, "x >= 5 from the log grid"), kSlack);
  for (double m : ms) {
    for (double x : xs) {
      if (x < 5.0) continue;
      const double deficit = coulomb_deficit(m, x);
      const double lower = m / (2.0 * std::pow(x * x + m, 1.5));
      const double upper = (m + 1.0) / (2.0 * x * x * x);
      double violation = below(deficit, upper);
      if (lower > 0.0) violation = std::max(violation, below(lower, deficit));
      large_x.observe(violation, [&] { return point({{"m", m}, {"x", x}}); });
    }
  }
  report.checks.push_back(large_x.finish());

  // Order-2 truncation error must fall by 2^5 or more when x doubles.
  Tracker decay("asymptotic_error_decay",
                "m in {0, 0.5, ..., 20}; x in {10, 20, 40}; violation = 32 err(2x)/err(x) - 1", 0.0);
  for (double m : ms) {
    for (double x : {10.0, 20.0}) {
      const double e1 = std::abs(v_asymptotic(m, x, 2).value - v(m, x, Strategy::quadrature).value);
      const double e2 =
          std::abs(v_asymptotic(m, 2 * x, 2).value - v(m, 2 * x, Strategy::quadrature).value);
      decay.observe(32.0 * e2 / e1 - 1.0, [&] { return point({{"m", m}, {"x", x}}); });
    }
  }
  report.checks.push_back(decay.finish());

  Tracker coefficients("asymptotic_leading_terms", "m in {0, 0.5, ..., 20}; terms 0..2", 1e-15);
  for (double m : ms) {
    const double expected[3] = {1.0, -(m + 1.0) / 2.0, 3.0 * (m + 2.0) * (m + 1.0) / 8.0};
    for (int k = 0; k < 3; ++k) {
      coefficients.observe(std::abs(asymptotic_coefficient(m, k) / expected[k] - 1.0),
                           [&] { return point({{"m", m}, {"k", static_cast<double>(k)}}); });
    }
  }
  report.checks.push_back(coefficients.finish());
}

void suite_ode(VerificationReport& report) {
  const auto ms = m_grid();
  const auto xs = x_grid();
  Tracker residual("ode_residual",
                   grid_text(kMGrid, kXGrid) +
                       "; Richardson central difference, h = min(1e-4, 0.05 x), absolute",
                   1e-6);
  const double h = 1e-4;
  for (double m : ms) {
    for (double x : xs) {
      // The third derivative grows like 1/x near the origin for m < 1.
      const double step = std::min(h, 0.05 * x);
      auto central = [&](double s) { return (vm(m, x + s) - vm(m, x - s)) / (2.0 * s); };
      const double fd = (4.0 * central(0.5 * step) - central(step)) / 3.0;
      residual.observe(std::abs(v_derivative(m, x) - fd),
                       [&] { return point({{"m", m}, {"x", x}}); });
    }
  }
  report.checks.push_back(residual.finish());

  Tracker origin("flat_at_origin", "integer m in {1, ..., 20}; |V_m(h) - V_m(0)| / h, h = 1e-4",
                 1e-3);
  for (int m = 1; m <= 20; ++m) {
    origin.observe(std::abs(vm(m, h) - v_at_zero(m)) / h,
                   [&] { return point({{"m", static_cast<double>(m)}}); });
  }
  report.checks.push_back(origin.finish());

  Tracker zero("value_at_origin", "m in {0.5, 1, ..., 20}; Gamma(m+1/2)/Gamma(m+1) vs quadrature",
               1e-12);
  for (double m : ms) {
    if (m <= 0.0) continue;
    zero.observe(std::abs(v(m, 0.0, Strategy::quadrature).value / v_at_zero(m) - 1.0),
                 [&] { return point({{"m", m}}); });
  }
  report.checks.push_back(zero.finish());
}

void suite_recursion(VerificationReport& report) {
  const auto xs = x_grid();
  long certified = 0;
  long total = 0;
  Tracker chain("recursion_vs_quadrature", "", kSlack);
  Tracker iterated("iterated_vs_quadrature", "", kSlack);
  for (double m = 1.0; m <= 20.0; m += 0.5) {
    for (double x : xs) {
      ++total;
      const EvalResult r = v_recursion_chain(m, x);
      // Upward recursion loses digits at large x m; compare only where the
      // propagated error estimate still certifies the value.
      if (!(r.error_estimate <= 1e-10 * std::abs(r.value))) continue;
      ++certified;
      const double q = v(m, x, Strategy::quadrature).value;
      chain.observe(std::abs(r.value / q - 1.0), [&] { return point({{"m", m}, {"x", x}}); });
      if (m == std::floor(m)) {
        iterated.observe(std::abs(v_iterated(static_cast<int>(m), x) / q - 1.0),
                         [&] { return point({{"m", m}, {"x", x}}); });
      }
    }
  }
  const std::string domain = "m in {1, 1.5, ..., 20}; " + std::string(kXGrid) +
                             "; restricted to points whose chain error estimate is <= 1e-10 (" +
                             std::to_string(certified) + " of " + std::to_string(total) + ")";
  CheckResult c = chain.finish();
  c.grid = domain + c.grid;
  CheckResult it = iterated.finish();
  it.grid = domain + "; integer m only" + it.grid;
  report.checks.push_back(c);
  report.checks.push_back(it);

  Tracker closed("closed_m0_vs_quadrature", kXGrid, kSlack);
  for (double x : xs) {
    closed.observe(std::abs(v_closed_m0(x) / v(0.0, x, Strategy::quadrature).value - 1.0),
                   [&] { return point({{"x", x}}); });
  }
  report.checks.push_back(closed.finish());

  std::vector<double> small_x{0.0};
  for (double x : xs) {
    if (x <= 20.0) small_x.push_back(x);
  }
  small_x.push_back(20.0);

  Tracker reconstruction("polynomial_reconstruction",
                         "integer m in {1, ..., 20}; x = 0 and log grid up to 20", 1e-10);
  Tracker kummer("kummer_formula",
                 "integer m in {1, ..., 20}; y = x^2 for x = 0 and log grid up to 20; error "
                 "relative to sum |p_i| y^i",
                 1e-10);
  for (int m = 1; m <= 20; ++m) {
    const PolynomialPair pq = pm_qm(m);
    for (double x : small_x) {
      const double q = v(m, x, Strategy::quadrature).value;
      reconstruction.observe(std::abs(pm_reconstruct_extended(m, x) / q - 1.0), [&] {
        return point({{"m", static_cast<double>(m)}, {"x", x}});
      });
      const double y = x * x;
      const double exact = pq.p.evaluate_exact(Rational(y)).convert_to<double>();
      kummer.observe(std::abs(pm_via_kummer(m, y) - exact) / pq.p.absolute_sum(y),
                     [&] { return point({{"m", static_cast<double>(m)}, {"y", y}}); });
    }
  }
  report.checks.push_back(reconstruction.finish());
  report.checks.push_back(kummer.finish());
}

void suite_convexity(VerificationReport& report) {
  const auto xs = x_grid();
  Tracker inverse("inverse_convex",
                  grid_text(kIntGrid, kXGrid) +
                      "; -(second difference of 1/V_m, step 0.01 x) / (1/V_m)",
                  kCurvatureSlack);
  for (int m : integer_m()) {
    auto f = [m](double x) { return 1.0 / vm(m, x); };
    for (double x : xs) {
      inverse.observe(-relative_second_difference(f, x),
                      [&] { return point({{"m", static_cast<double>(m)}, {"x", x}}); });
    }
  }
  report.checks.push_back(inverse.finish());

  Tracker v0("v0_convex", std::string(kXGrid) + "; -(relative second difference)",
             kCurvatureSlack);
  for (double x : xs) {
    v0.observe(-relative_second_difference([](double t) { return vm(0.0, t); }, x),
               [&] { return point({{"x", x}}); });
  }
  report.checks.push_back(v0.finish());

  // Existential: some probe point must show negative curvature.
  for (int m : {1, 2, 5}) {
    Tracker witness("not_convex_m" + std::to_string(m),
                    "x in {0.01, 0.02, ..., 0.5}; min relative second difference must be < 0",
                    0.0);
    double best = std::numeric_limits<double>::infinity();
    double best_x = 0.0;
    for (int i = 1; i <= 50; ++i) {
      const double x = 0.01 * i;
      const double d = relative_second_difference([m](double t) { return vm(m, t); }, x);
      if (d < best) {
        best = d;
        best_x = x;
      }
    }
    witness.observe(best,
                    [&] { return point({{"m", static_cast<double>(m)}, {"x", best_x}}); });
    CheckResult r = witness.finish();
    r.pass = best < 0.0;
    report.checks.push_back(r);
  }

  Tracker origin("curvature_at_origin", "integer m in {1, ..., 20}; V_m''(0) = 2(V_m(0) - V_{m-1}(0)) < 0",
                 0.0);
  for (int m = 1; m <= 20; ++m) {
    origin.observe(below(v_at_zero(m), v_at_zero(m - 1)),
                   [&] { return point({{"m", static_cast<double>(m)}}); });
  }
  CheckResult o = origin.finish();
  o.pass = o.worst_violation < 0.0;
  report.checks.push_back(o);

  // Open question: convexity in m.
  double worst = std::numeric_limits<double>::infinity();
  std::string where;
  for (double m = 0.5; m <= 19.5; m += 0.5) {
    for (double x : xs) {
      const double d = (vm(m + 0.5, x) - 2.0 * vm(m, x) + vm(m - 0.5, x)) / vm(m, x);
      if (d < worst) {
        worst = d;
        where = point({{"m", m}, {"x", x}});
      }
    }
  }
  report.exploratory.push_back(
      {"convexity_in_m",
       "min over the grid of (V_{m+1/2} - 2V_m + V_{m-1/2}) / V_m; negative would refute "
       "convexity in m",
       worst, where});
}

void suite_ratio(VerificationReport& report) {
  const auto xs = x_grid();
  Tracker bounds("ratio_bounds",
                 grid_text(kIntGrid, kXGrid) + "; G_8^{m-1}(x^2) < V_m/V_{m-1} < G_4^m(x^2)",
                 kSlack);
  for (int m : integer_m()) {
    for (double x : xs) {
      const double y = x * x;
      const double ratio = vm(m, x) / vm(m - 1, x);
      const double lo = G_k_m(y, 8.0, m - 1.0);
      const double hi = G_k_m(y, 4.0, m);
      bounds.observe(std::max(below(lo, ratio), below(ratio, hi)),
                     [&] { return point({{"m", static_cast<double>(m)}, {"x", x}}); });
    }
  }
  report.checks.push_back(bounds.finish());

  Tracker increasing("ratio_increasing_in_x",
                     std::string("integer m in {0, ..., 19}; ") + kXGrid + "; V_{m+1}/V_m",
                     kSlack);
  for (int m = 0; m < 20; ++m) {
    double previous = vm(m + 1, xs[0]) / vm(m, xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const double current = vm(m + 1, xs[i]) / vm(m, xs[i]);
      increasing.observe(below(previous, current),
                         [&] { return point({{"m", static_cast<double>(m)}, {"x", xs[i - 1]}}); });
      previous = current;
    }
  }
  report.checks.push_back(increasing.finish());

  Tracker g("g_bounds", std::string(kXGrid) + "; g_pi <= V_0 < g_4", kSlack);
  for (double x : xs) {
    const double v0 = vm(0.0, x);
    g.observe(std::max(below(g_k(x, std::numbers::pi), v0), below(v0, g_k(x, 4.0))),
              [&] { return point({{"x", x}}); });
  }
  report.checks.push_back(g.finish());

  Tracker origin("ratio_at_origin",
                 "integer m in {1, ..., 20}; V_m(0)/V_{m-1}(0) = (2m-1)/(2m) < G_4^m(0) = 2m/(2m+1)",
                 kSlack);
  for (int m = 1; m <= 20; ++m) {
    const double ratio = v_at_zero(m) / v_at_zero(m - 1);
    const double expected = (2.0 * m - 1.0) / (2.0 * m);
    const double limit = G_k_m(0.0, 4.0, m);
    origin.observe(std::max({std::abs(ratio / expected - 1.0) - kSlack, below(ratio, limit),
                             std::abs(limit / (2.0 * m / (2.0 * m + 1.0)) - 1.0) - kSlack}),
                   [&] { return point({{"m", static_cast<double>(m)}}); });
  }
  report.checks.push_back(origin.finish());

  // Open question: the ratio bounds for non-integer m.
  long violations = 0;
  double worst = -std::numeric_limits<double>::infinity();
  std::string where;
  for (double m = 0.5; m <= 19.5; m += 1.0) {
    for (double x : xs) {
      const double y = x * x;
      const double ratio = vm(m, x) / vm(m - 1.0, x);
      const double violation =
          std::max(below(G_k_m(y, 8.0, m - 1.0), ratio), below(ratio, G_k_m(y, 4.0, m)));
      if (violation > 0.0) ++violations;
      if (violation > worst) {
        worst = violation;
        where = point({{"m", m}, {"x", x}});
      }
    }
  }
  report.exploratory.push_back({"ratio_bounds_half_integer_m",
                                "worst relative violation of the ratio bounds at m in {0.5, 1.5, "
                                "..., 19.5}; strict violations counted: " +
                                    std::to_string(violations),
                                worst, where});
}

void suite_fourier(VerificationReport& report) {
  Tracker closed("m0_closed_form", "xi in {0.5, 1, 2, 5}", 1e-10);
  for (double xi : {0.5, 1.0, 2.0, 5.0}) {
    closed.observe(std::abs(fourier_v(0.0, xi) / fourier_v0_closed(xi) - 1.0),
                   [&] { return point({{"xi", xi}}); });
  }
  report.checks.push_back(closed.finish());

  Tracker direct("direct_transform", "m in {0, 1, 2}; xi = 1; window 200/max(xi, 0.1)", 1e-6);
  for (double m : {0.0, 1.0, 2.0}) {
    direct.observe(std::abs(fourier_v_direct(m, 1.0).value / fourier_v(m, 1.0) - 1.0),
                   [&] { return point({{"m", m}, {"xi", 1.0}}); });
  }
  report.checks.push_back(direct.finish());

  Tracker even("even_and_positive", "m in {-0.5, 0, 1, 2, 5}; xi log-spaced, 13 points in [1e-2, 1e2]",
               0.0);
  for (double m : {-0.5, 0.0, 1.0, 2.0, 5.0}) {
    for (double xi : log_grid(1e-2, 1e2, 13)) {
      const double plus = fourier_v(m, xi);
      const double minus = fourier_v(m, -xi);
      even.observe(plus > 0.0 ? std::abs(plus - minus) / plus : 1.0,
                   [&] { return point({{"m", m}, {"xi", xi}}); });
    }
  }
  report.checks.push_back(even.finish());

  Tracker singular("log_singularity",
                   "m in {0, 1, 2}; d(sqrt(2 pi) F) / d ln xi between xi = 1e-5 and 1e-4 vs -2, "
                   "absolute",
                   1e-3);
  const double root = std::sqrt(2.0 * std::numbers::pi);
  for (double m : {0.0, 1.0, 2.0}) {
    const double slope =
        root * (fourier_v(m, 1e-4) - fourier_v(m, 1e-5)) / std::log(10.0);
    singular.observe(std::abs(slope + 2.0), [&] { return point({{"m", m}}); });
  }
  report.checks.push_back(singular.finish());
}

void suite_avg(VerificationReport& report) {
  const auto xs = x_grid();
  Tracker identity("identity", std::string("N in {1, ..., 20}; ") + kXGrid, 1e-11);
  Tracker convex("convex",
                 std::string("N in {1, ..., 20}; ") + kXGrid + "; -(relative second difference)",
                 kCurvatureSlack);
  for (int n = 1; n <= 20; ++n) {
    for (double x : xs) {
      identity.observe(std::abs(v_av(n, x) / v_av_identity(n, x) - 1.0),
                       [&] { return point({{"N", static_cast<double>(n)}, {"x", x}}); });
      convex.observe(-relative_second_difference([n](double t) { return v_av(n, t); }, x),
                     [&] { return point({{"N", static_cast<double>(n)}, {"x", x}}); });
    }
  }
  report.checks.push_back(identity.finish());
  report.checks.push_back(convex.finish());

  Tracker cusp("cusp_slope",
               "N in {1, ..., 20}; Richardson one-sided slope at 0+ from h = 1e-4, 5e-5, absolute",
               1e-6);
  const double h = 1e-4;
  for (int n = 1; n <= 20; ++n) {
    const double f0 = v_av(n, 0.0);
    const double d1 = (v_av(n, h) - f0) / h;
    const double d2 = (v_av(n, 0.5 * h) - f0) / (0.5 * h);
    const double slope = 2.0 * d2 - d1;
    cusp.observe(std::abs(slope + 2.0 / n), [&] { return point({{"N", static_cast<double>(n)}}); });
  }
  report.checks.push_back(cusp.finish());

  Tracker single("single_term", std::string(kXGrid) + "; V_av^1 = V_0", 0.0);
  for (double x : xs) {
    single.observe(std::abs(v_av(1, x) - vm(0.0, x)), [&] { return point({{"x", x}}); });
  }
  report.checks.push_back(single.finish());
}

void suite_pairs(VerificationReport& report) {
  Tracker structure("slater_structure",
                    "N in {2, ..., 6}; weights > 0, exact sum 1, float sum within 1e-12, odd "
                    "support in {1, ..., 2N-1}",
                    1e-12);
  for (int n = 2; n <= 6; ++n) {
    const auto exact = slater_weights_exact(n);
    Rational sum = 0;
    double violation = 0.0;
    for (const auto& [k, w] : exact) {
      sum += w;
      if (!(w > 0) || k % 2 == 0 || k < 1 || k > 2 * n - 1) violation = 1.0;
    }
    if (sum != 1) violation = 1.0;
    const ModelPotentials model = slater_model(n);
    violation = std::max(violation, std::abs(model.interaction.weight_sum() - 1.0));
    structure.observe(violation, [&] { return point({{"N", static_cast<double>(n)}}); });
  }
  report.checks.push_back(structure.finish());

  Tracker parity("pair_parity",
                 "antisymmetrized m1 < m2 <= 5 odd only; product m1 = m2 <= 5 even only; exact "
                 "sums 1",
                 0.0);
  for (int m1 = 0; m1 <= 5; ++m1) {
    for (int m2 = m1; m2 <= 5; ++m2) {
      const bool anti = m1 != m2;
      const PairCoefficients pc = pair_decomposition(m1, m2, anti);
      Rational sum = 0;
      double violation = 0.0;
      for (const auto& [k, w] : pc.exact) {
        sum += w;
        if (!(w > 0) || (k % 2 == 0) == anti) violation = 1.0;
      }
      if (sum != 1) violation = 1.0;
      parity.observe(violation, [&] {
        return point({{"m1", static_cast<double>(m1)}, {"m2", static_cast<double>(m2)}});
      });
    }
  }
  report.checks.push_back(parity.finish());

  Tracker single("antisymmetric_01", "(m1, m2) = (0, 1) antisymmetrized is exactly {(1, 1)}", 0.0);
  const PairCoefficients p01 = pair_decomposition(0, 1, true);
  single.observe(p01.exact.size() == 1 && p01.exact[0].first == 1 && p01.exact[0].second == 1 ? 0.0
                                                                                              : 1.0,
                 [] { return std::string("m1=0, m2=1"); });
  report.checks.push_back(single.finish());

  Tracker oracle("gaussian_quadrature_oracle",
                 "(m1, m2) in {(0,1), (0,2), (1,2), (1,1), (2,2)}, product and antisymmetrized; "
                 "d in {1, 1.5, 2, 3, 5, 8}; 48^4-node Gauss-Hermite",
                 1e-6);
  const int pairs[5][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 1}, {2, 2}};
  for (const auto& p : pairs) {
    for (bool anti : {false, true}) {
      if (anti && p[0] == p[1]) continue;
      EffectiveInteraction w{pair_decomposition(p[0], p[1], anti).weights(),
                             1.0 / std::numbers::sqrt2};
      for (double d : {1.0, 1.5, 2.0, 3.0, 5.0, 8.0}) {
        const double brute = pair_interaction_bruteforce(p[0], p[1], anti, d);
        oracle.observe(std::abs(w(d) / brute - 1.0), [&] {
          return point({{"m1", static_cast<double>(p[0])},
                        {"m2", static_cast<double>(p[1])},
                        {"antisymmetrized", anti ? 1.0 : 0.0},
                        {"d", d}});
        });
      }
    }
  }
  report.checks.push_back(oracle.finish());

  Tracker tail("large_separation", "zero model and Slater N in {2, ..., 6}; |x W(x) - 1| at x = 1e4",
               1e-6);
  {
    const double x = 1e4;
    tail.observe(std::abs(x * zero_model(2).interaction(x) - 1.0),
                 [] { return std::string("model=zero"); });
    for (int n = 2; n <= 6; ++n) {
      tail.observe(std::abs(x * slater_model(n).interaction(x) - 1.0),
                   [&] { return "model=slater, " + point({{"N", static_cast<double>(n)}}); });
    }
  }
  report.checks.push_back(tail.finish());

  Tracker zero_ratio("zero_model_origin_ratio", "W(0)/V(0) = 1/sqrt 2", 1e-14);
  {
    const ModelPotentials z = zero_model(2);
    zero_ratio.observe(std::abs(z.interaction(0.0) / z.attraction(0.0) * std::numbers::sqrt2 - 1.0),
                       [] { return std::string("x=0"); });
  }
  report.checks.push_back(zero_ratio.finish());

  Tracker termwise("slater_below_v1",
                   "N in {2, ..., 6}; x log grid; W_N(x) <= V_1(x/sqrt2)/sqrt2", kSlack);
  for (int n = 2; n <= 6; ++n) {
    const ModelPotentials s = slater_model(n);
    for (double x : x_grid()) {
      const double bound = vm(1.0, x / std::numbers::sqrt2) / std::numbers::sqrt2;
      termwise.observe(below(s.interaction(x), bound),
                       [&] { return point({{"N", static_cast<double>(n)}, {"x", x}}); });
    }
  }
  report.checks.push_back(termwise.finish());

  Tracker attraction("slater_attraction_origin_decreasing", "N in {1, ..., 20}; V_av^N(0)", 0.0);
  for (int n = 1; n < 20; ++n) {
    attraction.observe(below(v_av(n + 1, 0.0), v_av(n, 0.0)),
                       [&] { return point({{"N", static_cast<double>(n)}}); });
  }
  CheckResult a = attraction.finish();
  a.pass = a.worst_violation < 0.0;
  report.checks.push_back(a);

  for (int n = 2; n <= 6; ++n) {
    const ModelPotentials s = slater_model(n);
    const ModelPotentials z = zero_model(n);
    report.exploratory.push_back(
        {"repulsion_ratio_N" + std::to_string(n),
         "W_slater(0) / W_zero(0); below 1 means repulsion weaker than the zero model",
         s.interaction(0.0) / z.interaction(0.0), "x=0"});
    report.exploratory.push_back({"slater_max_index_N" + std::to_string(n),
                                  "largest relative momentum in the Slater repulsion",
                                  static_cast<double>(s.interaction.terms.back().k),
                                  point({{"N", static_cast<double>(n)}})});
  }
}

void suite_delta(VerificationReport& report) {
  auto gaussian = [](double x) { return std::exp(-x * x); };
  const double betas[3] = {1e2, 1e4, 1e6};
  double pairing[3];
  for (int i = 0; i < 3; ++i) pairing[i] = delta_pairing(0.0, betas[i], gaussian);

  Tracker zero("zero_test_function", "m = 0; beta = 1e4; phi = 0, absolute", 0.0);
  zero.observe(std::abs(delta_pairing(0.0, 1e4, [](double) { return 0.0; })),
               [] { return std::string("beta=10000"); });
  report.checks.push_back(zero.finish());

  Tracker bands("gaussian_pairing_bands",
                "m = 0; phi = exp(-x^2); beta in {1e2, 1e4, 1e6}; |pairing - 1| minus band "
                "{0.35, 0.20, 0.12}",
                0.0);
  const double band[3] = {0.35, 0.20, 0.12};
  for (int i = 0; i < 3; ++i) {
    bands.observe(std::abs(pairing[i] - 1.0) - band[i],
                  [&] { return point({{"beta", betas[i]}, {"pairing", pairing[i]}}); });
  }
  report.checks.push_back(bands.finish());

  Tracker monotone("gaussian_pairing_monotone_toward_1",
                   "m = 0; phi = exp(-x^2); |pairing - 1| decreasing over beta in {1e2, 1e4, 1e6}",
                   0.0);
  for (int i = 0; i + 1 < 3; ++i) {
    monotone.observe(below(std::abs(pairing[i + 1] - 1.0), std::abs(pairing[i] - 1.0)),
                     [&] { return point({{"beta", betas[i + 1]}}); });
  }
  CheckResult mono = monotone.finish();
  mono.pass = mono.worst_violation < 0.0;
  report.checks.push_back(mono);

  Tracker mass("window_mass_stability",
               "m = 0; mass over |x| <= 1 at beta = 1e4 and 1e6; relative change", 0.10);
  const double m4 = delta_window_mass(0.0, 1e4, 1.0);
  const double m6 = delta_window_mass(0.0, 1e6, 1.0);
  mass.observe(std::abs(m6 / m4 - 1.0), [&] { return point({{"mass_1e4", m4}, {"mass_1e6", m6}}); });
  report.checks.push_back(mass.finish());

  for (int i = 0; i < 3; ++i) {
    report.exploratory.push_back({"gaussian_pairing_beta_" + num(betas[i]),
                                  "pairing of the scaled potential with exp(-x^2); the 1/x tail "
                                  "on both half-lines gives total weight 2 in the limit",
                                  pairing[i], point({{"beta", betas[i]}})});
  }
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["version"] = version;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"grid", c.grid},
                           {"worst_violation", c.worst_violation},
                           {"witness", c.witness},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  j["exploratory"] = nlohmann::json::array();
  for (const auto& e : exploratory) {
    j["exploratory"].push_back(
        {{"id", e.id}, {"description", e.description}, {"value", e.value}, {"witness", e.witness}});
  }
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",   "bounds",  "ode", "recursion", "convexity",
                                              "ratio", "fourier", "avg", "pairs",     "delta"};
  return names;
}

VerificationReport run_verification(std::string_view suite, const VerifyOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown verification suite '" + std::string(suite) + "'");
  }
  VerificationReport report;
  report.suite = std::string(suite);
  report.version = std::string(library_version());

  const bool all = suite == "all";
  auto prefixed = [&](const std::string& name, auto&& body) {
    if (!all && suite != name) return;
    const std::size_t first_check = report.checks.size();
    const std::size_t first_item = report.exploratory.size();
    body();
    for (std::size_t i = first_check; i < report.checks.size(); ++i) {
      report.checks[i].id = name + "." + report.checks[i].id;
    }
    for (std::size_t i = first_item; i < report.exploratory.size(); ++i) {
      report.exploratory[i].id = name + "." + report.exploratory[i].id;
    }
  };
  prefixed("bounds", [&] { suite_bounds(report, options); });
  prefixed("ode", [&] { suite_ode(report); });
  prefixed("recursion", [&] { suite_recursion(report); });
  prefixed("convexity", [&] { suite_convexity(report); });
  prefixed("ratio", [&] { suite_ratio(report); });
  prefixed("fourier", [&] { suite_fourier(report); });
  prefixed("avg", [&] { suite_avg(report); });
  prefixed("pairs", [&] { suite_pairs(report); });
  prefixed("delta", [&] { suite_delta(report); });
  return report;
}

}  // namespace rcoulomb
