#include <cmath>
#include <numbers>

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "rcoulomb/errors.hpp"
#include "rcoulomb/potential.hpp"
#include "rcoulomb/spectral_solver.hpp"

using namespace rcoulomb;

namespace {

double box_energy(int points, double half_width) {
  const Grid1D grid(half_width, points);
  return ground_state(build_one_particle(grid, 1.0, [](double) { return 0.0; })).energy;
}

// Expands a vector on the i <= j basis to the full m x m grid function.
Eigen::MatrixXd expand_bosonic(const Eigen::VectorXd& v, int m) {
  Eigen::MatrixXd full(m, m);
  int idx = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const double c = i == j ? v[idx] : v[idx] / std::sqrt(2.0);
      full(i, j) = c;
      full(j, i) = c;
      ++idx;
    }
  }
  return full;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("diagonal matrix") {
  SparseMatrix a(3, 3);
  a.insert(0, 0) = 1.0;
  a.insert(1, 1) = 2.0;
  a.insert(2, 2) = 3.0;
  const GroundStateResult r = ground_state(a);
  CHECK(r.energy == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(std::abs(r.eigvec[0]) - 1.0) <= 1e-12);
  CHECK(r.certified);
}

TEST_CASE("grid") {
  const Grid1D g(40.0, 2001);
  CHECK(g.spacing() == doctest::Approx(0.04));
  CHECK(g.interior() == 1999);
  CHECK(g.x(g.centre()) == doctest::Approx(0.0));
  CHECK_THROWS_AS(Grid1D(1.0, 4), DomainError);
  CHECK_THROWS_AS(Grid1D(1.0, 1), DomainError);
  CHECK_THROWS_AS(Grid1D(-1.0, 5), DomainError);
}

TEST_CASE("particle in a box converges at second order") {
  const double L = 1.0;
  const double exact = std::pow(std::numbers::pi / (2.0 * L), 2);
  const double e1 = box_energy(101, L), e2 = box_energy(201, L), e3 = box_energy(401, L);
  CHECK(e3 == doctest::Approx(exact).epsilon(1e-4));
  CHECK((e2 - e1) / (e3 - e2) == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("operator structure") {
  const Grid1D grid(10.0, 201);
  const DiscreteOperator op = build_one_particle(grid, FieldConfig(1, 1.0, 4.0), ModelKind::zero);
  CHECK(op.dimension() == 199);
  CHECK((SparseMatrix(op.matrix.transpose()) - op.matrix).norm() == 0.0);
  CHECK(op.kinetic_coefficient == doctest::Approx(2.0));
  CHECK(op.kinetic_dominance >= 0.0);

  const DiscreteOperator two = build_two_particle_bosonic(Grid1D(5.0, 21), FieldConfig(2, 1.0, 1.0),
                                                          ModelKind::slater);
  CHECK(two.dimension() == 19 * 20 / 2);
  CHECK((SparseMatrix(two.matrix.transpose()) - two.matrix).norm() == 0.0);
  CHECK_THROWS_AS(build_two_particle_bosonic(Grid1D(5.0, 21), FieldConfig(1, 1.0, 1.0), ModelKind::zero),
                  DomainError);
  CHECK_THROWS_AS(build_two_particle_bosonic(Grid1D(5.0, 21), 1.0, [](double) { return 0.0; },
                                             [](double) { return 0.0; }, 11),
                  DomainError);
}

TEST_CASE("ground state invariants") {
  const Grid1D grid(20.0, 801);
  const GroundStateResult r =
      ground_state(build_one_particle(grid, FieldConfig(1, 1.0, 1.0), ModelKind::zero), 1e-10);
  CHECK(r.residual <= 1e-10);
  CHECK(r.eigvec.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.certified);
  const DiscreteOperator op = build_one_particle(grid, FieldConfig(1, 1.0, 1.0), ModelKind::zero);
  CHECK((op.matrix * r.eigvec - r.energy * r.eigvec).norm() <= r.residual * (1.0 + 1e-6));
  // Rayleigh quotients of trial vectors lie above the ground energy.
  Eigen::VectorXd trial(grid.interior());
  for (int j = 0; j < grid.interior(); ++j) trial[j] = std::exp(-std::abs(grid.x(j)));
  CHECK(trial.dot(op.matrix * trial) / trial.squaredNorm() >= r.energy - 1e-10);
}

TEST_CASE("delta well benchmark") {
  const Grid1D grid(40.0, 4001);
  CHECK(delta_well_benchmark(1.0, 1.0, grid) == doctest::Approx(-0.25).epsilon(0.02));
  CHECK(delta_well_benchmark(4.0, 1.0, grid) == doctest::Approx(-1.0).epsilon(0.02));
}

TEST_CASE("one electron binds in the zero model") {
  for (double z : {0.5, 1.0, 2.0}) {
    for (double b : {1.0, 100.0}) {
      const BindingReport r = binding_check(FieldConfig(1, z, b), ModelKind::zero);
      CAPTURE(z);
      CAPTURE(b);
      CHECK(r.bound);
      CHECK(r.energy < 0.0);
      CHECK(r.bound_at_wide_box);
    }
  }
  const BindingReport free = binding_check(FieldConfig(1, 0.0, 1.0), ModelKind::zero);
  CHECK_FALSE(free.bound);
}

TEST_CASE("doubling the charge lowers the energy") {
  const Grid1D grid(40.0, 2001);
  for (double b : {1.0, 100.0}) {
    const double e1 = spectrum(FieldConfig(1, 1.0, b), ModelKind::zero, grid).state.energy;
    const double e2 = spectrum(FieldConfig(1, 2.0, b), ModelKind::zero, grid).state.energy;
    CHECK(e2 < e1);
  }
}

TEST_CASE("enlarging the box never raises the energy") {
  const double tol = 1e-10;
  for (double z : {0.5, 1.0}) {
    double previous = INFINITY;
    for (double L : {10.0, 20.0, 30.0, 40.0}) {
      const int n = static_cast<int>(L / 0.04) + 1;
      const double e = spectrum(FieldConfig(1, z, 1.0), ModelKind::zero, Grid1D(L, n), tol).state.energy;
      CHECK(e <= previous + 10.0 * tol);
      previous = e;
    }
  }
}

TEST_CASE("two particles without interaction separate") {
  const Grid1D grid(8.0, 41);
  auto u = [](double x) { return -vm(0.0, std::abs(x)); };
  const GroundStateResult one = ground_state(build_one_particle(grid, 1.0, u));
  const GroundStateResult two =
      ground_state(build_two_particle_bosonic(grid, 1.0, u, [](double) { return 0.0; }));
  CHECK(std::abs(two.energy - 2.0 * one.energy) <= 2.0 * (one.residual + two.residual) + 1e-12);
  const GroundStateResult repelled = ground_state(build_two_particle_bosonic(
      grid, 1.0, u, [](double d) { return vm(0.0, std::abs(d) / std::sqrt(2.0)) / std::sqrt(2.0); }));
  CHECK(repelled.energy >= two.energy);
}

TEST_CASE("bosonic ground state matches the unrestricted product space") {
  const Grid1D grid(6.0, 31);
  const int m = grid.interior();
  const double h = grid.spacing();
  auto u = [](double x) { return -vm(0.0, std::abs(x)); };
  auto w = [](double d) { return vm(0.0, std::abs(d) / std::sqrt(2.0)) / std::sqrt(2.0); };
  // Dense Kronecker-sum Hamiltonian on all (i, j).
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    t(i, i) = 2.0 / (h * h);
    if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = -1.0 / (h * h);
  }
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(m * m, m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        full(i * m + j, k * m + j) += t(i, k);
        full(i * m + j, i * m + k) += t(j, k);
      }
      full(i * m + j, i * m + j) += u(grid.x(i)) + u(grid.x(j)) + w(grid.x(i) - grid.x(j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(full, Eigen::EigenvaluesOnly);

  const GroundStateResult r = ground_state(build_two_particle_bosonic(grid, 1.0, u, w));
  CHECK(std::abs(r.energy - dense.eigenvalues()[0]) <= 1e-9);
  const Eigen::MatrixXd psi = expand_bosonic(r.eigvec, m);
  CHECK((psi - psi.transpose()).norm() <= 1e-10);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectrum refuses unsupported electron counts") {
  CHECK_THROWS_AS(default_grid(3), DomainError);
  CHECK_THROWS_AS(spectrum(FieldConfig(3, 1.0, 1.0), ModelKind::slater, Grid1D(5.0, 21)), DomainError);
}

TEST_CASE("energy reconstruction in spectrum") {
  const SpectrumResult r = spectrum(FieldConfig(1, 1.0, 4.0), ModelKind::zero, Grid1D(20.0, 1001), 1e-10, true);
  CHECK(r.e_conf == doctest::Approx(2.0 * r.state.energy + 4.0).epsilon(1e-14));
  REQUIRE(r.boundary_shift.has_value());
  CHECK(std::abs(*r.boundary_shift) <= 1e-8);
}

}  // TEST_SUITE

TEST_SUITE("solver_two_electron") {

TEST_CASE("binding of a second electron at Z = 1, B = 1") {
  for (ModelKind kind : {ModelKind::zero, ModelKind::slater}) {
    const BindingReport r = binding_check(FieldConfig(2, 1.0, 1.0), kind);
    CAPTURE(to_string(kind));
    CHECK(std::isfinite(r.energy));
    CHECK(r.reference < 0.0);
    MESSAGE("E0(2) = " << r.energy << ", E0(1) = " << r.reference << ", bound = " << r.bound
                       << ", wide box E0(2) = " << r.energy_wide);
    CHECK(r.bound == r.bound_at_wide_box);
  }
}

}  // TEST_SUITE

TEST_SUITE("solver_refinement") {

// Stated requirement: refining the grid never raises E_0 by more than 10 tol.
TEST_CASE("refining the grid never raises the energy") {
  const double tol = 1e-10;
  for (double z : {0.5, 1.0, 2.0}) {
    double previous = INFINITY;
    for (int n : {501, 1001, 2001, 4001}) {
      const double e = spectrum(FieldConfig(1, z, 1.0), ModelKind::zero, Grid1D(40.0, n), tol).state.energy;
      CAPTURE(z);
      CAPTURE(n);
      CHECK(e <= previous + 10.0 * tol);
      previous = e;
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("solver_scaled_well") {

// Z (beta / log beta) V_0(beta x) in place of Z delta(x): the energy should lie
// between the delta-well value and 0 and approach the former as beta grows.
TEST_CASE("scaled potential approaches the delta well from above") {
  const Grid1D grid(40.0, 4001);
  const double delta = delta_well_benchmark(1.0, 1.0, grid);
  double previous_gap = INFINITY;
  for (double beta : {1e2, 1e3, 1e4}) {
    const double e = scaled_well_benchmark(1.0, 1.0, 0.0, beta, grid);
    CAPTURE(beta);
    CAPTURE(e);
    CHECK(e > delta);
    CHECK(e < 0.0);
    CHECK(std::abs(e - delta) < previous_gap);
    previous_gap = std::abs(e - delta);
  }
}

}  // TEST_SUITE
