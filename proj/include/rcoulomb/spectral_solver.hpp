#pragma once

// Finite-difference ground states of the effective one-dimensional
// Hamiltonian for one electron and for two bosonic-symmetric electrons.

#include <cstddef>
#include <functional>
#include <optional>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "rcoulomb/magnetic_models.hpp"

namespace rcoulomb {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Uniform grid on [-L, L] with an odd number of points; x = 0 is a node.
/// Dirichlet conditions pin both end points, leaving n - 2 unknowns.
class Grid1D {
 public:
  Grid1D(double half_width, int points);

  double half_width() const { return half_width_; }
  int points() const { return points_; }
  double spacing() const { return spacing_; }
  int interior() const { return points_ - 2; }
  /// Coordinate of interior unknown j (0 <= j < interior()).
  double x(int j) const { return -half_width_ + (j + 1) * spacing_; }
  /// Interior index of the node at x = 0.
  int centre() const { return (points_ - 3) / 2; }

 private:
  double half_width_;
  int points_;
  double spacing_;
};

struct DiscreteOperator {
  SparseMatrix matrix;
  Grid1D grid{1.0, 3};
  int electrons = 1;
  std::optional<ModelKind> model;  ///< empty for user-supplied potentials
  double charge = 0.0;
  double field = 0.0;
  double kinetic_coefficient = 1.0;
  /// min_i (|H_ii| - sum_{j != i} |H_ij|) of the kinetic part alone.
  double kinetic_dominance = 0.0;

  Eigen::Index dimension() const { return matrix.rows(); }
};

/// -c d^2/dx^2 + U(x) with the three-point Laplacian.
DiscreteOperator build_one_particle(const Grid1D& grid, double kinetic_coefficient,
                                    const std::function<double(double)>& potential);

/// One-electron operator with the attraction of the N-electron model in `config`.
DiscreteOperator build_one_particle(const Grid1D& grid, const FieldConfig& config, ModelKind model);

/// Largest grid (points per axis) accepted by the two-particle builders.
inline constexpr int kDefaultTwoParticleCap = 401;

/// Two particles on the symmetric subspace spanned by |ij> + |ji>, i <= j:
/// -c (d1^2 + d2^2) + U(x1) + U(x2) + W(x1 - x2). Dimension m(m+1)/2 with
/// m = grid.interior().
DiscreteOperator build_two_particle_bosonic(const Grid1D& grid, double kinetic_coefficient,
                                            const std::function<double(double)>& potential,
                                            const std::function<double(double)>& interaction,
                                            int max_points = kDefaultTwoParticleCap);

/// h(2, Z, M) restricted to bosonic wave functions. Requires config.electrons() == 2.
DiscreteOperator build_two_particle_bosonic(const Grid1D& grid, const FieldConfig& config,
                                            ModelKind model,
                                            int max_points = kDefaultTwoParticleCap);

struct GroundStateResult {
  double energy = 0.0;
  Eigen::VectorXd eigvec;  ///< unit 2-norm
  double residual = 0.0;   ///< ||H v - E v||
  int iterations = 0;
  int factorizations = 0;
  /// Inertia of H - (E - residual) I showed no negative pivot, so E is
  /// within `residual` of the lowest eigenvalue.
  bool certified = false;
};

/// Lowest eigenpair by shifted inverse iteration. Shifts stay below the
/// spectrum, checked through the LDL^T inertia. Throws ConvergenceError if
/// the residual does not reach `tol` within `max_iterations`.
GroundStateResult ground_state(const SparseMatrix& matrix, double tol = 1e-10,
                               int max_iterations = 500);
GroundStateResult ground_state(const DiscreteOperator& op, double tol = 1e-10,
                               int max_iterations = 500);

/// Number of negative pivots of LDL^T(A - shift I), or nullopt when the
/// factorization breaks down.
std::optional<Eigen::Index> negative_pivots(const SparseMatrix& matrix, double shift);

struct GridChoice {
  int points = 2001;
  double half_width = 40.0;
};

/// 2001 points on [-40, 40] for N = 1, 201 on [-20, 20] for N = 2.
GridChoice default_grid(int electrons);

struct SpectrumResult {
  GroundStateResult state;  ///< ground state of h
  double e_conf = 0.0;      ///< sqrt(B) e_h + N B
  Grid1D grid{1.0, 3};
  std::optional<double> boundary_shift;  ///< E_0(1.5 L) - E_0(L) when requested
};

/// Ground state of h(N, Z, M) for N in {1, 2}.
SpectrumResult spectrum(const FieldConfig& config, ModelKind model, const Grid1D& grid,
                        double tol = 1e-10, bool boundary_check = false);

struct BindingReport {
  bool bound = false;
  double energy = 0.0;           ///< E_0(N)
  double reference = 0.0;        ///< E_0(N - 1), 0 for N = 1
  double margin = 0.0;
  bool bound_at_wide_box = false;  ///< same test with half-width 1.5 L
  double energy_wide = 0.0;
  double reference_wide = 0.0;
};

/// E_0(N) < E_0(N - 1) - 10 tol on the given grid, repeated at 1.5 L.
/// N is config.electrons() and must be 1 or 2.
BindingReport binding_check(const FieldConfig& config, ModelKind model,
                            std::optional<GridChoice> grid = std::nullopt, double tol = 1e-10);

/// Ground energy of -(1/M) d^2/dx^2 - Z delta(x), the delta carried by the
/// centre cell as -Z/h. Exact value -M Z^2 / 4.
double delta_well_benchmark(double mass, double charge, const Grid1D& grid, double tol = 1e-10);

/// Same, with the delta replaced by Z (beta / log beta) V_m(beta x) averaged
/// over each cell.
double scaled_well_benchmark(double mass, double charge, double m, double beta,
                             const Grid1D& grid, double tol = 1e-10);

}  // namespace rcoulomb
