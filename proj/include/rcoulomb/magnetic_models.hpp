#pragma once

// Effective one-dimensional models of atoms in a strong magnetic field: the
// zero model (every electron in the m = 0 Landau state) and the Slater model
// (a determinant of the Landau states m = 0, ..., N-1).

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcoulomb/polynomials.hpp"

namespace rcoulomb {

/// Electron count, nuclear charge and field strength. The effective mass is
/// M = 1/sqrt(B).
class FieldConfig {
 public:
  FieldConfig(int electrons, double charge, double field);

  int electrons() const { return electrons_; }
  double charge() const { return charge_; }
  double field() const { return field_; }
  double sqrt_field() const { return sqrt_field_; }
  double mass() const { return 1.0 / sqrt_field_; }

 private:
  int electrons_;
  double charge_;
  double field_;
  double sqrt_field_;
};

/// Convex combination  scale * sum_k w_k V_k(scale * |x|).
/// Attractions use scale 1, pair interactions scale 1/sqrt(2).
struct EffectiveInteraction {
  struct Term {
    int k = 0;
    double weight = 0.0;
  };
  std::vector<Term> terms;  ///< sorted by k, unique, positive weights
  double scale = 1.0;

  double operator()(double x) const;
  double weight_sum() const;
  /// Throws DomainError unless weights are positive, indices unique and
  /// sorted, and the weights sum to 1 within `tol`.
  void validate(double tol = 1e-12) const;
};

struct PairCoefficients {
  int m1 = 0;
  int m2 = 0;
  bool antisymmetrized = false;
  /// (relative angular momentum k, exact weight), k ascending, zero weights
  /// dropped.
  std::vector<std::pair<int, Rational>> exact;

  std::vector<EffectiveInteraction::Term> weights() const;
};

/// Relative-momentum content of the two-electron Landau state
/// gamma_{m1} (x) gamma_{m2} (antisymmetrized on request). Expanding both
/// monomials in centre-of-mass and relative coordinates (zeta_1 +- zeta_2)/sqrt(2)
/// gives amplitudes on |M-k> (x) |k>; the weight of k is the squared norm.
PairCoefficients pair_decomposition(int m1, int m2, bool antisymmetrize);

enum class ModelKind { zero, slater };

std::string_view to_string(ModelKind kind);
ModelKind parse_model(std::string_view name);

struct ModelPotentials {
  ModelKind kind = ModelKind::zero;
  int electrons = 1;
  EffectiveInteraction attraction;   ///< V~
  EffectiveInteraction interaction;  ///< W~
};

/// V~ = V_0 and W~(d) = V_0(|d|/sqrt 2)/sqrt 2.
ModelPotentials zero_model(int electrons);

/// V~ = (1/N) sum_{m<N} V_m and W~ the uniform average of the antisymmetrized
/// pair decompositions over all pairs m1 < m2 < N. Requires N >= 2.
ModelPotentials slater_model(int electrons);

/// Exact Slater pair weights c_k (odd k), as rationals.
std::vector<std::pair<int, Rational>> slater_weights_exact(int electrons);

ModelPotentials make_model(ModelKind kind, int electrons);

/// Parameters of h(N, Z, M) = sum_j [-(1/M) d^2/dx_j^2 - Z V~(x_j)] + sum_{j<k} W~(x_j - x_k).
struct HamiltonianDescriptor {
  int electrons = 1;
  double charge = 0.0;
  double mass = 1.0;
  double kinetic_coefficient = 1.0;  ///< 1/M
  ModelPotentials potentials;

  bool has_interaction() const { return electrons >= 2; }
};

HamiltonianDescriptor hamiltonian_params(const FieldConfig& config, ModelKind model);

/// E_0^conf = sqrt(B) e_h + N B.
double energy_reconstruct(double e_h, int electrons, double field);

/// (beta / log beta) V_m(beta x).
double delta_scaled(double m, double beta, double x);

/// int (beta / log beta) V_m(beta x) phi(x) dx over the real line, beta > e.
double delta_pairing(double m, double beta, const std::function<double(double)>& phi);

/// int_lo^hi (beta / log beta) V_m(beta |x|) dx for lo < hi, m > -1/2.
double delta_scaled_mass(double m, double beta, double lo, double hi);

/// int_{-R}^{R} (beta / log beta) V_m(beta x) dx.
double delta_window_mass(double m, double beta, double half_width);

/// Transverse pair interaction computed by brute force: tensor Gauss-Hermite
/// quadrature over (y1, z1, y2, z2) of the two-electron Landau density
/// against 1/sqrt(d^2 + |zeta_1 - zeta_2|^2). Independent of the
/// centre-of-mass expansion in pair_decomposition.
double pair_interaction_bruteforce(int m1, int m2, bool antisymmetrize, double separation,
                                   int nodes_per_axis = 48);

}  // namespace rcoulomb
