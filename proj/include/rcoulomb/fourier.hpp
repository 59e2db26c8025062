#pragma once

#include "rcoulomb/quadrature.hpp"

namespace rcoulomb {

/// Fourier transform (1/sqrt(2 pi)) int V_m(x) e^{-i x xi} dx through its
/// one-dimensional representation
///   (4^{m+1}/sqrt(2 pi)) int_0^inf s^m e^{-s} / (xi^2 + 4s)^{m+1} ds.
/// xi = 0 is a logarithmic singularity and throws DomainError.
double fourier_v(double m, double xi, const QuadratureSpec& spec = {});

/// e^{xi^2/4} E1(xi^2/4) / sqrt(2 pi), the m = 0 transform in closed form.
double fourier_v0_closed(double xi);

struct DirectTransform {
  double value = 0.0;
  double window = 0.0;           ///< half-width X of the finite window
  double tail_correction = 0.0;  ///< contribution credited beyond the window
};

/// Direct transform: (2/sqrt(2 pi)) int_0^X V_m(x) cos(xi x) dx over the
/// window X = 200 / max(|xi|, 0.1), plus the part beyond X from the
/// large-x expansion of V_m integrated term by term by parts.
DirectTransform fourier_v_direct(double m, double xi, const QuadratureSpec& spec = {});

}  // namespace rcoulomb
