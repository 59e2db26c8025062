"""Regularized one-dimensional Coulomb potentials V_m and effective models."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    ConvergenceError,
    DomainError,
    __version__,
    bracket,
    energy_reconstruct,
    fourier_v,
    suite_names,
    v,
    v_at_zero,
    v_av,
    v_derivative,
    vm,
)


def pair_decomposition(m1, m2, antisymmetrize=False):
    """{k: Fraction} weights of V_k for the Landau pair (m1, m2)."""
    return {k: Fraction(int(p), int(q)) for k, p, q in _core.pair_decomposition(m1, m2, antisymmetrize)}


def slater_weights(n):
    return {k: Fraction(int(p), int(q)) for k, p, q in _core.slater_weights(n)}


def delta_pairing(m, beta):
    """Pairing of (beta/log beta) V_m(beta x) with exp(-x^2)."""
    return _core.delta_gaussian_pairing(m, beta)


def spectrum(model, n, z, b, grid_points=0, half_width=0.0, tol=1e-10):
    return _core.spectrum(model, n, z, b, grid_points, half_width, tol)


def verify(suite="all"):
    return json.loads(_core.verify_json(suite))


__all__ = [
    "ConvergenceError",
    "DomainError",
    "__version__",
    "bracket",
    "delta_pairing",
    "energy_reconstruct",
    "fourier_v",
    "pair_decomposition",
    "slater_weights",
    "spectrum",
    "suite_names",
    "v",
    "v_at_zero",
    "v_av",
    "v_derivative",
    "verify",
    "vm",
]
