"""Magnon squeezing of the cavity-magnon pair under a squeezed-vacuum drive.

Everything here works in the frame rotating at the squeezed-drive
frequency, where the input correlators are stationary and the steady
covariance solves a Lyapunov equation for any detunings. At resonance the
squeezed cavity-phase and magnon-amplitude variances have closed forms.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import InvalidParameterError
from .gaussdyn import build_two_mode, lyapunov_steady_state
from .params import SqueezedDrive, SystemParams


def resonant_variances_analytic(kappa_a: float, kappa_m: float, g_ma: float,
                                r: float, theta: float, n_m: float
                                ) -> tuple[float, float]:
    """Closed-form steady variances (cavity Y, magnon x) at zero detunings."""
    if kappa_a <= 0 or kappa_m <= 0:
        raise InvalidParameterError("decay rates must be positive")
    squeeze = math.cosh(2 * r) - math.cos(theta) * math.sinh(2 * r)
    g2 = g_ma * g_ma
    den = 2.0 * (kappa_a + kappa_m) * (g2 + kappa_a * kappa_m)
    var_y_cavity = (g2 * (2 * n_m + 1) * kappa_m
                    + kappa_a * (g2 + kappa_a * kappa_m + kappa_m**2) * squeeze) / den
    var_x_magnon = ((2 * n_m + 1) * kappa_m * (g2 + kappa_a * kappa_m + kappa_a**2)
                    + g2 * kappa_a * squeeze) / den
    return var_y_cavity, var_x_magnon


def optimal_magnon_variance(r: float, kappa_a: float, kappa_m: float) -> float:
    """Deep-transfer limit (e^{-2r} + kappa_m/kappa_a)/2 of the magnon variance."""
    if kappa_a <= 0:
        raise InvalidParameterError("cavity decay must be positive")
    return 0.5 * (math.exp(-2.0 * r) + kappa_m / kappa_a)


class QuadratureVariances(NamedTuple):
    var_X: float
    var_Y: float
    var_x: float
    var_y: float


def detuned_variances(params: SystemParams, drive: SqueezedDrive,
                      detuning_a: float, detuning_m: float) -> QuadratureVariances:
    """Steady variances of all four quadratures at arbitrary detunings."""
    model, diffusion = build_two_mode(params, drive, detuning_a, detuning_m)
    V = lyapunov_steady_state(model, diffusion)
    return QuadratureVariances(*(float(V[i, i]) for i in range(4)))


def squeezing_db(variance: float) -> float:
    """Squeezing below vacuum in dB; positive means below the vacuum 1/2."""
    if variance <= 0:
        raise InvalidParameterError("variance must be positive")
    return -10.0 * math.log10(2.0 * variance)
