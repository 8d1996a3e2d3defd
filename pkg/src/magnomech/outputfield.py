"""Squeezing spectrum of the cavity output field.

The measurable witness of magnon squeezing: the output of the one-sided
cavity carries the reflected squeezed input filtered by the cavity-magnon
response, and strong coupling imprints features at the polariton
frequencies. Works in the squeezed-carrier frame of the two-mode system,
where all correlators are stationary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .params import SqueezedDrive, SystemParams, squeezed_noise_moments


@dataclass(frozen=True)
class OutputCoefficients:
    """Scattering of the output quadrature Z(phi) onto the input channels.

    delta_Z_out(w) = on_a * a_in(w) + on_a_dag * a_in^dag(-w)
                   + on_m * m_in(w) + on_m_dag * m_in^dag(-w)
    """

    on_a: complex
    on_a_dag: complex
    on_m: complex
    on_m_dag: complex


def output_coefficients(params: SystemParams, detuning_a: float,
                        detuning_m: float, omega: float,
                        phi: float) -> OutputCoefficients:
    """Closed-form input-output coefficients of the output quadrature."""
    ka, km, g = params.cavity_decay, params.magnon_decay, params.coupling_ma
    da, dm, w = detuning_a, detuning_m, omega
    den_m = g * g - (da - 1j * ka - w) * (dm - 1j * km - w)
    den_p = g * g - (da + 1j * ka + w) * (dm + 1j * km + w)
    e_m = cmath.exp(-1j * phi) / math.sqrt(2.0)
    e_p = cmath.exp(1j * phi) / math.sqrt(2.0)
    on_a = e_m * (-1.0 + 2j * ka * (dm - 1j * km - w) / den_m)
    on_a_dag = e_p * (-1.0 - 2j * ka * (dm + 1j * km + w) / den_p)
    root = 1j * g * math.sqrt(2.0 * ka * km)
    on_m = -e_m * math.sqrt(2.0) * root / den_m
    on_m_dag = e_p * math.sqrt(2.0) * root / den_p
    return OutputCoefficients(on_a, on_a_dag, on_m, on_m_dag)


def output_coefficients_generic(params: SystemParams, detuning_a: float,
                                detuning_m: float, omega: float,
                                phi: float) -> OutputCoefficients:
    """Same coefficients from the transfer matrix and the input-output relation.

    Builds delta_a_out = sqrt(2*kappa_a) * delta_a - a_in from the
    frequency response of the intracavity fluctuations; cross-check for
    the closed forms.
    """
    from .gaussdyn import build_two_mode, transfer_matrix

    drive = SqueezedDrive()  # coefficients do not depend on the bath
    model, _ = build_two_mode(params, drive, detuning_a, detuning_m)
    T = transfer_matrix(model, omega)
    gain = model.noise_gain
    # intracavity annihilation row: delta_a = (X + iY)/sqrt2
    row = (T[0, :] + 1j * T[1, :]) / math.sqrt(2.0) * gain
    sqrt2ka = math.sqrt(2.0 * params.cavity_decay)
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    alpha = sqrt2ka * (row[0] - 1j * row[1]) * inv_sqrt2 - 1.0
    beta = sqrt2ka * (row[0] + 1j * row[1]) * inv_sqrt2
    gamma = sqrt2ka * (row[2] - 1j * row[3]) * inv_sqrt2
    delta = sqrt2ka * (row[2] + 1j * row[3]) * inv_sqrt2
    # quadrature Z(phi) mixes the row at +w with the conjugate row at -w
    Tm = transfer_matrix(model, -omega)
    row_m = (Tm[0, :] + 1j * Tm[1, :]) / math.sqrt(2.0) * gain
    alpha_m = sqrt2ka * (row_m[0] - 1j * row_m[1]) * inv_sqrt2 - 1.0
    beta_m = sqrt2ka * (row_m[0] + 1j * row_m[1]) * inv_sqrt2
    gamma_m = sqrt2ka * (row_m[2] - 1j * row_m[3]) * inv_sqrt2
    delta_m = sqrt2ka * (row_m[2] + 1j * row_m[3]) * inv_sqrt2
    e_m = cmath.exp(-1j * phi) / math.sqrt(2.0)
    e_p = cmath.exp(1j * phi) / math.sqrt(2.0)
    return OutputCoefficients(
        on_a=e_m * alpha + e_p * np.conj(beta_m),
        on_a_dag=e_m * beta + e_p * np.conj(alpha_m),
        on_m=e_m * gamma + e_p * np.conj(delta_m),
        on_m_dag=e_m * delta + e_p * np.conj(gamma_m),
    )


def output_spectrum_value(params: SystemParams, drive: SqueezedDrive,
                          detuning_a: float, detuning_m: float,
                          omega: float, phi: float) -> float:
    """Symmetrised output-quadrature spectrum at one frequency (vacuum = 1/2)."""
    sq_n, sq_m = squeezed_noise_moments(drive)
    n_m = params.magnon_thermal
    cp = output_coefficients(params, detuning_a, detuning_m, omega, phi)
    cm = output_coefficients(params, detuning_a, detuning_m, -omega, phi)
    s = (0.5 * (2 * sq_n + 1) * (cp.on_a * cm.on_a_dag + cm.on_a * cp.on_a_dag)
         + 0.5 * (2 * n_m + 1) * (cp.on_m * cm.on_m_dag + cm.on_m * cp.on_m_dag)
         + sq_m * cp.on_a * cm.on_a
         + sq_m.conjugate() * cp.on_a_dag * cm.on_a_dag)
    return float(s.real)


@dataclass(frozen=True)
class SpectrumTrace:
    """Sampled output spectrum S(w) for one quadrature phase."""

    quadrature: str
    phase: float
    omega: np.ndarray
    values: np.ndarray


def output_spectrum(params: SystemParams, drive: SqueezedDrive,
                    detuning_a: float, detuning_m: float,
                    omega_grid, phi: float) -> SpectrumTrace:
    """Sample the output-quadrature squeezing spectrum on a frequency grid."""
    grid = np.asarray(omega_grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2 or np.any(np.diff(grid) <= 0):
        raise InvalidParameterError("omega grid must be increasing, length >= 2")
    vals = np.array([
        output_spectrum_value(params, drive, detuning_a, detuning_m, w, phi)
        for w in grid])
    label = {0.0: "X", math.pi / 2: "Y"}.get(phi % (2 * math.pi), f"Z(phi={phi:.4g})")
    return SpectrumTrace(label, phi, grid, vals)


def find_spectrum_features(trace: SpectrumTrace,
                           flat_rtol: float = 1e-9) -> np.ndarray:
    """Locations (rad/s) of interior local extrema, parabolically refined.

    A trace that is flat to ``flat_rtol`` (relative to its mean magnitude)
    has no features and yields an empty array. Precision of the returned
    locations is limited by the sampling grid.
    """
    w, s = trace.omega, np.asarray(trace.values, dtype=float)
    scale = max(abs(s.max()), abs(s.min()), 1e-300)
    if s.max() - s.min() <= flat_rtol * scale:
        return np.array([])
    slope_signs = np.sign(np.diff(s))
    nonzero = np.nonzero(slope_signs)[0]
    locs = []
    for a, b in zip(nonzero[:-1], nonzero[1:]):
        if slope_signs[a] == slope_signs[b]:
            continue
        # extremum bracketed between samples a and b+1 (flat runs allowed)
        segment = s[a:b + 2]
        rel = np.argmax(segment) if slope_signs[a] > 0 else np.argmin(segment)
        i = min(max(a + int(rel), 1), len(s) - 2)
        left, mid, right = s[i - 1], s[i], s[i + 1]
        denom = left - 2.0 * mid + right
        shift = 0.5 * (left - right) / denom if denom != 0 else 0.0
        shift = min(max(shift, -1.0), 1.0)
        locs.append(w[i] + shift * (w[i + 1] - w[i]))
    return np.array(locs)
