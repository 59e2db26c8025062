#include "rcoulomb/spectral_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SparseCholesky>

#include "rcoulomb/errors.hpp"

namespace rcoulomb {

Grid1D::Grid1D(double half_width, int points) : half_width_(half_width), points_(points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("grid half-width must be positive");
  }
  if (points < 3 || points % 2 == 0) throw DomainError("grid needs an odd number of points >= 3");
  spacing_ = 2.0 * half_width / (points - 1);
}

namespace {

using Triplet = Eigen::Triplet<double>;

double row_dominance(const SparseMatrix& k) {
  double worst = std::numeric_limits<double>::infinity();
  for (Eigen::Index col = 0; col < k.outerSize(); ++col) {
    double diag = 0.0;
    double off = 0.0;
    for (SparseMatrix::InnerIterator it(k, col); it; ++it) {
      if (it.row() == it.col()) {
        diag = std::abs(it.value());
      } else {
        off += std::abs(it.value());
      }
    }
    worst = std::min(worst, diag - off);
  }
  return worst;
}

SparseMatrix symmetrized(const SparseMatrix& a) {
  SparseMatrix t = a.transpose();
  SparseMatrix s = 0.5 * (a + t);
  s.makeCompressed();
  return s;
}

}  // namespace

DiscreteOperator build_one_particle(const Grid1D& grid, double kinetic_coefficient,
                                    const std::function<double(double)>& potential) {
  if (!(kinetic_coefficient > 0.0)) throw DomainError("kinetic coefficient must be positive");
  const int n = grid.interior();
  const double c = kinetic_coefficient / (grid.spacing() * grid.spacing());
  std::vector<Triplet> kinetic;
  kinetic.reserve(3 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    kinetic.emplace_back(i, i, 2.0 * c);
    if (i > 0) kinetic.emplace_back(i, i - 1, -c);
    if (i + 1 < n) kinetic.emplace_back(i, i + 1, -c);
  }
  SparseMatrix k(n, n);
  k.setFromTriplets(kinetic.begin(), kinetic.end());

  SparseMatrix u(n, n);
  std::vector<Triplet> diag;
  diag.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double value = potential(grid.x(i));
    if (!std::isfinite(value)) {
      throw DomainError("potential is not finite at x = " + std::to_string(grid.x(i)));
    }
    diag.emplace_back(i, i, value);
  }
  u.setFromTriplets(diag.begin(), diag.end());

  DiscreteOperator op;
  op.matrix = symmetrized(k + u);
  op.grid = grid;
  op.electrons = 1;
  op.kinetic_coefficient = kinetic_coefficient;
  op.kinetic_dominance = row_dominance(k);
  return op;
}

DiscreteOperator build_one_particle(const Grid1D& grid, const FieldConfig& config, ModelKind model) {
  const HamiltonianDescriptor h = hamiltonian_params(config, model);
  const double z = h.charge;
  const EffectiveInteraction attraction = h.potentials.attraction;
  DiscreteOperator op = build_one_particle(grid, h.kinetic_coefficient,
                                           [&](double x) { return -z * attraction(x); });
  op.model = model;
  op.charge = config.charge();
  op.field = config.field();
  return op;
}

DiscreteOperator build_two_particle_bosonic(const Grid1D& grid, double kinetic_coefficient,
                                            const std::function<double(double)>& potential,
                                            const std::function<double(double)>& interaction,
                                            int max_points) {
  if (!(kinetic_coefficient > 0.0)) throw DomainError("kinetic coefficient must be positive");
  if (grid.points() > max_points) {
    throw DomainError("two-particle grid of " + std::to_string(grid.points()) +
                      " points exceeds the cap of " + std::to_string(max_points));
  }
  const int m = grid.interior();
  const Eigen::Index dim = static_cast<Eigen::Index>(m) * (m + 1) / 2;
  const double c = kinetic_coefficient / (grid.spacing() * grid.spacing());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<double> u(static_cast<std::size_t>(m));
  std::vector<double> w(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    u[i] = potential(grid.x(i));
    w[i] = interaction(i * grid.spacing());
    if (!std::isfinite(u[i]) || !std::isfinite(w[i])) {
      throw DomainError("two-particle potentials must be finite on the grid");
    }
  }

  auto index = [m](int i, int j) -> Eigen::Index {
    if (i > j) std::swap(i, j);
    return static_cast<Eigen::Index>(i) * m - static_cast<Eigen::Index>(i) * (i - 1) / 2 + (j - i);
  };
  auto weight = [&](int i, int j) { return i == j ? 1.0 : inv_sqrt2; };

  std::vector<Triplet> kinetic;
  std::vector<Triplet> diagonal;
  kinetic.reserve(static_cast<std::size_t>(dim) * 5);
  diagonal.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const Eigen::Index b = index(i, j);
      kinetic.emplace_back(b, b, 4.0 * c);
      diagonal.emplace_back(b, b, u[i] + u[j] + w[j - i]);
      const double nb = weight(i, j);
      // Sum <p|T|q> over both orderings q of (i, j) and all lattice
      // neighbours p of q, folding p back onto its sorted index.
      const int orderings[2][2] = {{i, j}, {j, i}};
      for (int s = 0; s < (i == j ? 1 : 2); ++s) {
        const int q1 = orderings[s][0];
        const int q2 = orderings[s][1];
        const int neighbours[4][2] = {{q1 - 1, q2}, {q1 + 1, q2}, {q1, q2 - 1}, {q1, q2 + 1}};
        for (const auto& p : neighbours) {
          if (p[0] < 0 || p[0] >= m || p[1] < 0 || p[1] >= m) continue;
          kinetic.emplace_back(index(p[0], p[1]), b, -c * nb * weight(p[0], p[1]));
        }
      }
    }
  }
  SparseMatrix k(dim, dim);
  k.setFromTriplets(kinetic.begin(), kinetic.end());
  SparseMatrix d(dim, dim);
  d.setFromTriplets(diagonal.begin(), diagonal.end());

  DiscreteOperator op;
  op.matrix = symmetrized(k + d);
  op.grid = grid;
  op.electrons = 2;
  op.kinetic_coefficient = kinetic_coefficient;
  op.kinetic_dominance = row_dominance(k);
  return op;
}

DiscreteOperator build_two_particle_bosonic(const Grid1D& grid, const FieldConfig& config,
                                            ModelKind model, int max_points) {
  if (config.electrons() != 2) throw DomainError("two-particle operator needs N = 2");
  const HamiltonianDescriptor h = hamiltonian_params(config, model);
  const double z = h.charge;
  const EffectiveInteraction attraction = h.potentials.attraction;
  const EffectiveInteraction repulsion = h.potentials.interaction;
  DiscreteOperator op = build_two_particle_bosonic(
      grid, h.kinetic_coefficient, [&](double x) { return -z * attraction(x); },
      [&](double d) { return repulsion(d); }, max_points);
  op.model = model;
  op.charge = config.charge();
  op.field = config.field();
  return op;
}

std::optional<Eigen::Index> negative_pivots(const SparseMatrix& matrix, double shift) {
  SparseMatrix identity(matrix.rows(), matrix.cols());
  identity.setIdentity();
  SparseMatrix shifted = matrix - shift * identity;
  Eigen::SimplicialLDLT<SparseMatrix> ldlt(shifted);
  if (ldlt.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd d = ldlt.vectorD();
  if (!d.allFinite()) return std::nullopt;
  return (d.array() < 0.0).count();
}

namespace {

struct ShiftedFactor {
  Eigen::SimplicialLDLT<SparseMatrix> ldlt;
  SparseMatrix identity;
  const SparseMatrix& matrix;
  double shift = 0.0;

  explicit ShiftedFactor(const SparseMatrix& a) : identity(a.rows(), a.cols()), matrix(a) {
    identity.setIdentity();
    ldlt.analyzePattern(SparseMatrix(a + identity));
  }

  // True when A - s I factors with positive pivots only.
  bool factor_below_spectrum(double s) {
    ldlt.factorize(SparseMatrix(matrix - s * identity));
    if (ldlt.info() != Eigen::Success) return false;
    const Eigen::VectorXd d = ldlt.vectorD();
    if (!d.allFinite() || (d.array() <= 0.0).any()) return false;
    shift = s;
    return true;
  }
};

}  // namespace

GroundStateResult ground_state(const SparseMatrix& matrix, double tol, int max_iterations) {
  if (!(tol > 0.0)) throw DomainError("ground_state requires tol > 0");
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw DomainError("ground_state requires a non-empty square matrix");
  }
  const Eigen::Index n = matrix.rows();

  // Gershgorin interval.
  double lower = std::numeric_limits<double>::infinity();
  double upper = -std::numeric_limits<double>::infinity();
  for (Eigen::Index col = 0; col < matrix.outerSize(); ++col) {
    double diag = 0.0;
    double off = 0.0;
    for (SparseMatrix::InnerIterator it(matrix, col); it; ++it) {
      if (it.row() == it.col()) {
        diag += it.value();
      } else {
        off += std::abs(it.value());
      }
    }
    lower = std::min(lower, diag - off);
    upper = std::max(upper, diag + off);
  }
  const double scale = std::max({std::abs(lower), std::abs(upper), 1.0});

  GroundStateResult result;
  ShiftedFactor factor(matrix);
  double sigma = lower - 1e-3 * scale;
  while (!factor.factor_below_spectrum(sigma)) {
    // Only reachable through round-off in the Gershgorin bound.
    sigma -= 1e-3 * scale;
    if (++result.factorizations > 50) throw ConvergenceError("could not factor below the spectrum");
  }
  ++result.factorizations;

  Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> noise(-1.0, 1.0);

  for (int it = 1; it <= max_iterations; ++it) {
    Eigen::VectorXd next = factor.ldlt.solve(v);
    const double norm = next.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw ConvergenceError("inverse iteration broke down");
    v = next / norm;
    const Eigen::VectorXd av = matrix * v;
    const double rho = v.dot(av);
    const double r = (av - rho * v).norm();
    result.iterations = it;

    if (r <= tol) {
      // Every eigenvalue lies above rho - tol, and one lies within r of rho.
      const auto negatives = negative_pivots(matrix, rho - tol);
      ++result.factorizations;
      if (negatives && *negatives == 0) {
        result.energy = rho;
        result.eigvec = v;
        result.residual = r;
        result.certified = true;
        return result;
      }
      // Converged to an excited state; restart from a perturbed vector.
      for (Eigen::Index i = 0; i < n; ++i) v[i] += 0.5 * noise(rng) / std::sqrt(static_cast<double>(n));
      v.normalize();
      continue;
    }

    // Move the shift up to rho - 2r when that is a real gain and the
    // inertia confirms it stays below the spectrum.
    const double candidate = rho - 2.0 * r;
    if (candidate > factor.shift + 0.05 * (rho - factor.shift)) {
      const double previous = factor.shift;
      ++result.factorizations;
      if (!factor.factor_below_spectrum(candidate)) {
        ++result.factorizations;
        factor.factor_below_spectrum(previous);
      }
    }
  }
  throw ConvergenceError("inverse iteration did not reach tolerance " + std::to_string(tol) +
                         " in " + std::to_string(max_iterations) + " iterations");
}

GroundStateResult ground_state(const DiscreteOperator& op, double tol, int max_iterations) {
  return ground_state(op.matrix, tol, max_iterations);
}

GridChoice default_grid(int electrons) {
  if (electrons == 1) return {2001, 40.0};
  if (electrons == 2) return {201, 20.0};
  throw DomainError("exact diagonalization covers N = 1 and N = 2 only");
}

namespace {

// Same spacing, half-width scaled by `factor` (rounded to a whole number of cells).
Grid1D widened(const Grid1D& grid, double factor) {
  const int half_cells = (grid.points() - 1) / 2;
  const int wide_cells = static_cast<int>(std::lround(half_cells * factor));
  return Grid1D(wide_cells * grid.spacing(), 2 * wide_cells + 1);
}

GroundStateResult solve(const FieldConfig& config, ModelKind model, const Grid1D& grid, double tol) {
  if (config.electrons() == 1) return ground_state(build_one_particle(grid, config, model), tol);
  if (config.electrons() == 2) {
    return ground_state(build_two_particle_bosonic(grid, config, model), tol);
  }
  throw DomainError("exact diagonalization covers N = 1 and N = 2 only");
}

}  // namespace

SpectrumResult spectrum(const FieldConfig& config, ModelKind model, const Grid1D& grid, double tol,
                        bool boundary_check) {
  SpectrumResult out;
  out.grid = grid;
  out.state = solve(config, model, grid, tol);
  out.e_conf = energy_reconstruct(out.state.energy, config.electrons(), config.field());
  if (boundary_check) {
    const GroundStateResult wide = solve(config, model, widened(grid, 1.5), tol);
    out.boundary_shift = wide.energy - out.state.energy;
  }
  return out;
}

BindingReport binding_check(const FieldConfig& config, ModelKind model,
                            std::optional<GridChoice> choice, double tol) {
  const int n = config.electrons();
  if (n < 1 || n > 2) throw DomainError("binding_check covers N = 1 and N = 2 only");
  const GridChoice g = choice.value_or(default_grid(n));
  const Grid1D grid(g.half_width, g.points);
  const Grid1D wide = widened(grid, 1.5);

  BindingReport report;
  report.margin = 10.0 * tol;
  report.energy = solve(config, model, grid, tol).energy;
  report.energy_wide = solve(config, model, wide, tol).energy;
  if (n == 2) {
    const FieldConfig fewer(1, config.charge(), config.field());
    report.reference = solve(fewer, model, grid, tol).energy;
    report.reference_wide = solve(fewer, model, wide, tol).energy;
  }
  report.bound = report.energy < report.reference - report.margin;
  report.bound_at_wide_box = report.energy_wide < report.reference_wide - report.margin;
  return report;
}

double delta_well_benchmark(double mass, double charge, const Grid1D& grid, double tol) {
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
  const double h = grid.spacing();
  const double depth = -charge / h;
  DiscreteOperator op = build_one_particle(
      grid, 1.0 / mass, [&](double x) { return std::abs(x) < 0.5 * h ? depth : 0.0; });
  return ground_state(op, tol).energy;
}

double scaled_well_benchmark(double mass, double charge, double m, double beta, const Grid1D& grid,
                             double tol) {
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
  const double h = grid.spacing();
  DiscreteOperator op = build_one_particle(grid, 1.0 / mass, [&](double x) {
    return -charge * delta_scaled_mass(m, beta, x - 0.5 * h, x + 0.5 * h) / h;
  });
  return ground_state(op, tol).energy;
}

}  // namespace rcoulomb
