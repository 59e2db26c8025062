#include <cmath>

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "rcoulomb/spectral_solver.hpp"

using namespace rcoulomb;

TEST_SUITE("solver_dense") {

TEST_CASE("sparse two-electron ground state against a dense eigensolver at n = 101") {
  const Grid1D grid(20.0, 101);
  for (ModelKind kind : {ModelKind::zero, ModelKind::slater}) {
    const DiscreteOperator op = build_two_particle_bosonic(grid, FieldConfig(2, 1.0, 1.0), kind);
    const GroundStateResult sparse = ground_state(op, 1e-10);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(Eigen::MatrixXd(op.matrix), Eigen::EigenvaluesOnly);
    CAPTURE(to_string(kind));
    CHECK(std::abs(sparse.energy - dense.eigenvalues()[0]) <= 1e-9);
    CHECK(sparse.certified);
  }
}

}  // TEST_SUITE
