#include "rcoulomb/magnetic_models.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "rcoulomb/errors.hpp"
#include "rcoulomb/potential.hpp"
#include "rcoulomb/quadrature.hpp"

namespace rcoulomb {

namespace {

using boost::multiprecision::cpp_int;

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

FieldConfig::FieldConfig(int electrons, double charge, double field)
    : electrons_(electrons), charge_(charge), field_(field), sqrt_field_(std::sqrt(field)) {
  if (electrons < 1) throw DomainError("electron count must be at least 1");
  if (!(charge >= 0.0)) throw DomainError("nuclear charge must be non-negative");
  if (!(field > 0.0) || !std::isfinite(field)) throw DomainError("field strength must be positive");
}

double EffectiveInteraction::operator()(double x) const {
  const double ax = std::abs(x) * scale;
  double sum = 0.0;
  for (const auto& t : terms) sum += t.weight * vm(t.k, ax);
  return scale * sum;
}

double EffectiveInteraction::weight_sum() const {
  double s = 0.0;
  for (const auto& t : terms) s += t.weight;
  return s;
}

void EffectiveInteraction::validate(double tol) const {
  int previous = std::numeric_limits<int>::min();
  for (const auto& t : terms) {
    if (!(t.weight > 0.0)) throw DomainError("interaction weights must be positive");
    if (t.k <= previous) throw DomainError("interaction indices must be sorted and unique");
    previous = t.k;
  }
  if (!terms.empty() && std::abs(weight_sum() - 1.0) > tol) {
    throw DomainError("interaction weights must sum to 1");
  }
}

std::vector<EffectiveInteraction::Term> PairCoefficients::weights() const {
  std::vector<EffectiveInteraction::Term> out;
  out.reserve(exact.size());
  for (const auto& [k, w] : exact) out.push_back({k, w.convert_to<double>()});
  return out;
}

PairCoefficients pair_decomposition(int m1, int m2, bool antisymmetrize) {
  if (m1 < 0 || m2 < 0) throw DomainError("Landau angular momenta must be non-negative");
  if (antisymmetrize && m1 == m2) {
    throw DomainError("antisymmetrized pair with m1 == m2 is the null state");
  }
  const int total = m1 + m2;
  const cpp_int denominator = (cpp_int(1) << total) * factorial(m1) * factorial(m2);

  PairCoefficients out;
  out.m1 = m1;
  out.m2 = m2;
  out.antisymmetrized = antisymmetrize;
  for (int k = 0; k <= total; ++k) {
    // Swapping the electrons flips the relative coordinate, so the
    // antisymmetric part keeps only odd k (with doubled weight).
    if (antisymmetrize && k % 2 == 0) continue;
    cpp_int amplitude = 0;
    for (int a = std::max(0, k - m2); a <= std::min(k, m1); ++a) {
      const int b = k - a;
      const cpp_int term = binomial(m1, a) * binomial(m2, b);
      amplitude += (b % 2 == 0) ? term : cpp_int(-term);
    }
    if (amplitude == 0) continue;
    Rational weight(amplitude * amplitude * factorial(total - k) * factorial(k), denominator);
    if (antisymmetrize) weight *= 2;
    out.exact.emplace_back(k, weight);
  }
  return out;
}

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::zero ? "zero" : "slater";
}

ModelKind parse_model(std::string_view name) {
  if (name == "zero") return ModelKind::zero;
  if (name == "slater") return ModelKind::slater;
  throw DomainError("unknown model '" + std::string(name) + "' (expected zero or slater)");
}

ModelPotentials zero_model(int electrons) {
  if (electrons < 1) throw DomainError("zero model requires N >= 1");
  ModelPotentials model;
  model.kind = ModelKind::zero;
  model.electrons = electrons;
  model.attraction = EffectiveInteraction{{{0, 1.0}}, 1.0};
  if (electrons >= 2) model.interaction = EffectiveInteraction{{{0, 1.0}}, kInvSqrt2};
  return model;
}

std::vector<std::pair<int, Rational>> slater_weights_exact(int electrons) {
  if (electrons < 2) throw DomainError("Slater interaction requires N >= 2");
  std::map<int, Rational> accumulated;
  const int pairs = electrons * (electrons - 1) / 2;
  for (int m1 = 0; m1 < electrons; ++m1) {
    for (int m2 = m1 + 1; m2 < electrons; ++m2) {
      for (const auto& [k, w] : pair_decomposition(m1, m2, true).exact) accumulated[k] += w;
    }
  }
  std::vector<std::pair<int, Rational>> out;
  for (auto& [k, w] : accumulated) out.emplace_back(k, w / pairs);
  return out;
}

ModelPotentials slater_model(int electrons) {
  if (electrons < 2) throw DomainError("Slater model requires N >= 2");
  ModelPotentials model;
  model.kind = ModelKind::slater;
  model.electrons = electrons;
  for (int m = 0; m < electrons; ++m) model.attraction.terms.push_back({m, 1.0 / electrons});
  model.attraction.scale = 1.0;
  for (const auto& [k, w] : slater_weights_exact(electrons)) {
    model.interaction.terms.push_back({k, w.convert_to<double>()});
  }
  model.interaction.scale = kInvSqrt2;
  return model;
}

ModelPotentials make_model(ModelKind kind, int electrons) {
  if (kind == ModelKind::zero) return zero_model(electrons);
  if (electrons == 1) {
    // A one-electron determinant is gamma_0 alone.
    ModelPotentials model = zero_model(1);
    model.kind = ModelKind::slater;
    return model;
  }
  return slater_model(electrons);
}

HamiltonianDescriptor hamiltonian_params(const FieldConfig& config, ModelKind model) {
  HamiltonianDescriptor d;
  d.electrons = config.electrons();
  d.charge = config.charge();
  d.mass = config.mass();
  d.kinetic_coefficient = config.sqrt_field();
  d.potentials = make_model(model, config.electrons());
  return d;
}

double energy_reconstruct(double e_h, int electrons, double field) {
  return std::sqrt(field) * e_h + electrons * field;
}

double delta_scaled(double m, double beta, double x) {
  if (!(beta > std::numbers::e)) throw DomainError("delta scaling requires beta > e");
  return beta / std::log(beta) * vm(m, std::abs(beta * x));
}

double delta_pairing(double m, double beta, const std::function<double(double)>& phi) {
  if (!(beta > std::numbers::e)) throw DomainError("delta scaling requires beta > e");
  if (!(m > -0.5)) throw DomainError("delta_pairing requires m > -1/2");
  // t = beta x folds both half-lines onto (0, inf).
  auto integrand = [&](double t) {
    const double s = t / beta;
    return vm(m, t) * (phi(s) + phi(-s));
  };
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-13;
  IntegrationResult r = integrate_semi_infinite(integrand, spec);
  if (!r.converged) throw ConvergenceError("delta pairing quadrature did not converge");
  return r.value / std::log(beta);
}

namespace {

// int_a^b V_m(t) dt for 0 <= a < b on panels that double in length.
double integrate_vm(double m, double a, double b) {
  QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  double total = 0.0;
  double lo = a;
  while (lo < b) {
    const double hi = std::min(b, lo < 1.0 ? 1.0 : 2.0 * lo);
    IntegrationResult r = integrate_finite([&](double t) { return vm(m, t); }, lo, hi, spec);
    if (!r.converged) throw ConvergenceError("scaled potential quadrature did not converge");
    total += r.value;
    lo = hi;
  }
  return total;
}

}  // namespace

double delta_scaled_mass(double m, double beta, double lo, double hi) {
  if (!(beta > std::numbers::e)) throw DomainError("delta scaling requires beta > e");
  if (!(m > -0.5)) throw DomainError("delta_scaled_mass requires m > -1/2");
  if (!(lo < hi)) throw DomainError("delta_scaled_mass requires lo < hi");
  double total;
  if (lo >= 0.0) {
    total = integrate_vm(m, beta * lo, beta * hi);
  } else if (hi <= 0.0) {
    total = integrate_vm(m, -beta * hi, -beta * lo);
  } else {
    total = integrate_vm(m, 0.0, -beta * lo) + integrate_vm(m, 0.0, beta * hi);
  }
  return total / std::log(beta);
}

double delta_window_mass(double m, double beta, double half_width) {
  if (!(half_width > 0.0)) throw DomainError("window half-width must be positive");
  return delta_scaled_mass(m, beta, -half_width, half_width);
}

double pair_interaction_bruteforce(int m1, int m2, bool antisymmetrize, double separation,
                                   int nodes_per_axis) {
  if (antisymmetrize && m1 == m2) throw DomainError("antisymmetrized pair with m1 == m2");
  if (nodes_per_axis < 2) throw DomainError("need at least two nodes per axis");
  // Gauss-Hermite rule for e^{-t^2} via Golub-Welsch.
  const int n = nodes_per_axis;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(0.5 * i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  std::vector<double> t(n), w(n);
  for (int i = 0; i < n; ++i) {
    t[i] = solver.eigenvalues()[i];
    const double v0 = solver.eigenvectors()(0, i);
    w[i] = std::sqrt(std::numbers::pi) * v0 * v0;
  }

  // 2D nodes zeta = y + i z with weights; precompute conj(zeta)^m.
  struct Node {
    double y, z, weight;
    std::complex<double> p1, p2;
  };
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::complex<double> zeta_bar(t[i], -t[j]);
      nodes.push_back({t[i], t[j], w[i] * w[j], std::pow(zeta_bar, m1), std::pow(zeta_bar, m2)});
    }
  }
  const double norm = std::pow(std::numbers::pi, 2) * std::tgamma(m1 + 1.0) * std::tgamma(m2 + 1.0);
  const double d2 = separation * separation;
  double sum = 0.0;
  for (const auto& a : nodes) {
    for (const auto& b : nodes) {
      double density;
      if (antisymmetrize) {
        density = 0.5 * std::norm(a.p1 * b.p2 - a.p2 * b.p1);
      } else {
        density = std::norm(a.p1) * std::norm(b.p2);
      }
      const double dy = a.y - b.y;
      const double dz = a.z - b.z;
      sum += a.weight * b.weight * density / std::sqrt(d2 + dy * dy + dz * dz);
    }
  }
  return sum / norm;
}

}  // namespace rcoulomb
