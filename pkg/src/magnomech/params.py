"""Physical parameters, derived working-point quantities, and validity checks.

Every rate and frequency is angular (rad/s). Temperatures are in kelvin,
lengths in meters, magnetic fields in tesla. Quadrature variances are
dimensionless with vacuum = 1/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from . import constants
from .errors import ConvergenceError, InvalidParameterError

TWO_PI = 2.0 * math.pi


def thermal_occupation(freq: float, temp: float) -> float:
    """Mean thermal occupation 1/(exp(hbar*w/kB*T) - 1) of a mode at freq (rad/s)."""
    if freq <= 0:
        raise InvalidParameterError(f"mode frequency must be positive, got {freq}")
    if temp < 0:
        raise InvalidParameterError(f"temperature must be nonnegative, got {temp}")
    if temp == 0:
        return 0.0
    x = constants.HBAR * freq / (constants.KB * temp)
    if x > 700:  # exp would overflow; occupation is indistinguishable from 0
        return 0.0
    return 1.0 / math.expm1(x)


def spin_count(diameter: float) -> float:
    """Total number of spins in a YIG sphere of the given diameter."""
    if diameter < 0:
        raise InvalidParameterError("diameter must be nonnegative")
    return constants.SPIN_DENSITY * constants.sphere_volume(diameter)


def rabi_frequency(b0: float, n_spins: float) -> float:
    """Drive coupling strength (sqrt(5)/4) * gamma * sqrt(N) * B0 in rad/s."""
    if b0 < 0 or n_spins < 0:
        raise InvalidParameterError("field amplitude and spin count must be nonnegative")
    return math.sqrt(5.0) / 4.0 * constants.GYRO * math.sqrt(n_spins) * b0


@dataclass(frozen=True)
class SystemParams:
    """Device rates and frequencies (rad/s), temperature (K) and sphere size (m).

    ``drive_freq`` and ``squeeze_freq`` are the magnon-drive and
    squeezed-input carrier frequencies; the dynamics modules work with
    detunings, so these are optional bookkeeping (0 = unspecified).
    """

    cavity_freq: float
    magnon_freq: float
    mech_freq: float
    cavity_decay: float
    magnon_decay: float
    mech_damping: float
    coupling_ma: float
    bare_coupling_mb: float
    rabi: float = 0.0
    temperature: float = 0.0
    sphere_diameter: float = 250e-6
    drive_freq: float = 0.0
    squeeze_freq: float = 0.0

    def __post_init__(self):
        for name in ("cavity_freq", "magnon_freq", "mech_freq", "cavity_decay",
                     "magnon_decay", "mech_damping", "coupling_ma",
                     "bare_coupling_mb", "rabi", "temperature",
                     "sphere_diameter"):
            if getattr(self, name) < 0:
                raise InvalidParameterError(f"{name} must be nonnegative")

    @classmethod
    def from_hz(cls, *, cavity_freq_hz, magnon_freq_hz, mech_freq_hz,
                kappa_a_hz, kappa_m_hz, gamma_b_hz, g_ma_hz, g_mb_hz,
                temperature_k=0.0, sphere_diameter_m=250e-6, rabi_rad_s=0.0,
                drive_freq_hz=0.0, squeeze_freq_hz=0.0) -> "SystemParams":
        """Build from ordinary frequencies nu = omega/2pi in Hz."""
        return cls(
            cavity_freq=TWO_PI * cavity_freq_hz,
            magnon_freq=TWO_PI * magnon_freq_hz,
            mech_freq=TWO_PI * mech_freq_hz,
            cavity_decay=TWO_PI * kappa_a_hz,
            magnon_decay=TWO_PI * kappa_m_hz,
            mech_damping=TWO_PI * gamma_b_hz,
            coupling_ma=TWO_PI * g_ma_hz,
            bare_coupling_mb=TWO_PI * g_mb_hz,
            rabi=rabi_rad_s,
            temperature=temperature_k,
            sphere_diameter=sphere_diameter_m,
            drive_freq=TWO_PI * drive_freq_hz,
            squeeze_freq=TWO_PI * squeeze_freq_hz,
        )

    @property
    def magnon_thermal(self) -> float:
        return thermal_occupation(self.magnon_freq, self.temperature)

    @property
    def phonon_thermal(self) -> float:
        return thermal_occupation(self.mech_freq, self.temperature)


@dataclass(frozen=True)
class SqueezedDrive:
    """Broadband squeezed-vacuum input: parameter r, phase theta, detuning (rad/s)."""

    squeeze_r: float = 0.0
    squeeze_theta: float = 0.0
    detuning_s: float = 0.0

    def __post_init__(self):
        if self.squeeze_r < 0:
            raise InvalidParameterError("squeezing parameter r must be nonnegative")

    def noise_moments(self) -> tuple[float, complex]:
        return squeezed_noise_moments(self)

    @staticmethod
    def from_db(db_value: float, theta: float = 0.0, detuning_s: float = 0.0) -> "SqueezedDrive":
        """Map an input squeezing level in dB onto r (ideal broadband mapping)."""
        if db_value < 0:
            raise InvalidParameterError("input squeezing in dB must be nonnegative")
        return SqueezedDrive(db_value * math.log(10.0) / 20.0, theta, detuning_s)


def squeezed_noise_moments(drive: SqueezedDrive) -> tuple[float, complex]:
    """Bath moments (sinh^2 r, e^{i theta} sinh r cosh r) of the squeezed input."""
    sh, ch = math.sinh(drive.squeeze_r), math.cosh(drive.squeeze_r)
    return sh * sh, cmath.exp(1j * drive.squeeze_theta) * sh * ch


@dataclass(frozen=True)
class WorkingPoint:
    """Semiclassical operating point of the driven three-mode system.

    ``eff_coupling`` is i*sqrt(2)*g_mb*<m>; for the red-detuned regime used
    throughout it is (nearly) real and its magnitude feeds the drift matrix.
    ``mean_magnon_approx`` is the large-detuning closed form kept for
    cross-checking.
    """

    detuning_a: float
    detuning_m: float
    eff_detuning_m: float
    mean_magnon: complex
    mean_position: float
    eff_coupling: complex
    rabi: float
    mean_magnon_approx: complex = 0j

    @property
    def eff_coupling_mag(self) -> float:
        return abs(self.eff_coupling)

    @property
    def eff_coupling_phase_residual(self) -> float:
        """|Im G|/|G| departure from the ideal purely-real effective coupling."""
        g = self.eff_coupling
        return abs(g.imag) / abs(g) if g != 0 else 0.0


def _mean_magnon(rabi, g_ma, kappa_a, kappa_m, delta_a, eff_delta_m) -> complex:
    den = g_ma**2 + (1j * eff_delta_m + kappa_m) * (1j * delta_a + kappa_a)
    return rabi * (1j * delta_a + kappa_a) / den


def _mean_magnon_large_detuning(rabi, g_ma, delta_a, eff_delta_m) -> complex:
    den = g_ma**2 - eff_delta_m * delta_a
    if den == 0:
        return complex("inf")
    return 1j * rabi * delta_a / den


def working_point(params: SystemParams, rabi: float, *, detuning_a: float,
                  eff_detuning_m: float | None = None,
                  detuning_m: float | None = None,
                  max_iter: int = 10_000, rtol: float = 1e-14) -> WorkingPoint:
    """Solve the steady-state magnon amplitude and effective coupling.

    Exactly one of ``eff_detuning_m`` (the shifted detuning, the default
    mode of use) or ``detuning_m`` (bare detuning; the magnon-phonon shift
    is then found by fixed-point iteration) must be given.
    """
    if (eff_detuning_m is None) == (detuning_m is None):
        raise InvalidParameterError(
            "give exactly one of eff_detuning_m or detuning_m")
    if params.mech_freq <= 0:
        raise InvalidParameterError("mech_freq must be positive")
    g_ma, ka, km = params.coupling_ma, params.cavity_decay, params.magnon_decay
    g_mb, wb = params.bare_coupling_mb, params.mech_freq

    if eff_detuning_m is not None:
        eff = eff_detuning_m
        mean_m = _mean_magnon(rabi, g_ma, ka, km, detuning_a, eff)
        mean_q = -(g_mb / wb) * abs(mean_m) ** 2
        bare = eff - g_mb * mean_q
    else:
        # self-consistent shift: eff = detuning_m - (g_mb^2/wb)*|<m>|^2
        eff = detuning_m
        for _ in range(max_iter):
            mean_m = _mean_magnon(rabi, g_ma, ka, km, detuning_a, eff)
            new_eff = detuning_m - (g_mb**2 / wb) * abs(mean_m) ** 2
            if abs(new_eff - eff) <= rtol * max(abs(new_eff), wb):
                eff = new_eff
                break
            eff = new_eff
        else:
            raise ConvergenceError(
                f"working-point fixed point not converged in {max_iter} iterations")
        mean_m = _mean_magnon(rabi, g_ma, ka, km, detuning_a, eff)
        mean_q = -(g_mb / wb) * abs(mean_m) ** 2
        bare = detuning_m

    return WorkingPoint(
        detuning_a=detuning_a,
        detuning_m=bare,
        eff_detuning_m=eff,
        mean_magnon=mean_m,
        mean_position=mean_q,
        eff_coupling=1j * math.sqrt(2.0) * g_mb * mean_m,
        rabi=rabi,
        mean_magnon_approx=_mean_magnon_large_detuning(rabi, g_ma, detuning_a, eff),
    )


def working_point_for_coupling(params: SystemParams, eff_coupling_mag: float, *,
                               detuning_a: float,
                               eff_detuning_m: float) -> WorkingPoint:
    """Back-solve the drive strength that realises a target |G_mb|.

    The magnitude of the steady magnon amplitude follows from
    |G_mb| = sqrt(2)*g_mb*|<m>|, and the drive strength from the modulus of
    the steady-state relation between drive and amplitude.
    """
    if eff_coupling_mag < 0:
        raise InvalidParameterError("target coupling must be nonnegative")
    g_mb = params.bare_coupling_mb
    if eff_coupling_mag == 0:
        return working_point(params, 0.0, detuning_a=detuning_a,
                             eff_detuning_m=eff_detuning_m)
    if g_mb <= 0:
        raise InvalidParameterError(
            "bare magnomechanical coupling must be positive to target G_mb")
    mean_abs = eff_coupling_mag / (math.sqrt(2.0) * g_mb)
    ka, km, g_ma = params.cavity_decay, params.magnon_decay, params.coupling_ma
    den = g_ma**2 + (1j * eff_detuning_m + km) * (1j * detuning_a + ka)
    rabi = mean_abs * abs(den) / abs(1j * detuning_a + ka)
    return working_point(params, rabi, detuning_a=detuning_a,
                         eff_detuning_m=eff_detuning_m)


@dataclass(frozen=True)
class ValidityReport:
    """Checks that the linearised model is trustworthy at a working point.

    ``low_lying``: magnon excitation number against the spin-count bound 5N.
    ``kerr``: Kerr-nonlinearity drive against the Rabi frequency.
    Strict flags use margin 0.01 (two orders of magnitude below the bound);
    relaxed flags use 0.1, the level the reference device numbers occupy.
    """

    magnon_number: float
    spin_bound: float
    kerr_coeff: float
    kerr_drive: float
    rabi: float
    strict_margin: float = 0.01
    relaxed_margin: float = 0.1
    low_lying_ratio: float = field(init=False, default=0.0)
    kerr_ratio: float = field(init=False, default=0.0)

    def __post_init__(self):
        object.__setattr__(self, "low_lying_ratio",
                           self.magnon_number / self.spin_bound if self.spin_bound else math.inf)
        object.__setattr__(self, "kerr_ratio",
                           self.kerr_drive / self.rabi if self.rabi else
                           (0.0 if self.kerr_drive == 0 else math.inf))

    @property
    def low_lying_ok(self) -> bool:
        return self.low_lying_ratio <= self.strict_margin

    @property
    def kerr_ok(self) -> bool:
        return self.kerr_ratio <= self.strict_margin

    @property
    def low_lying_ok_relaxed(self) -> bool:
        return self.low_lying_ratio <= self.relaxed_margin

    @property
    def kerr_ok_relaxed(self) -> bool:
        return self.kerr_ratio <= self.relaxed_margin


def validity_report(params: SystemParams, wp: WorkingPoint) -> ValidityReport:
    """Evaluate the low-excitation and weak-Kerr bounds for a working point."""
    n_spins = spin_count(params.sphere_diameter)
    magnon_number = abs(wp.mean_magnon) ** 2
    kerr = constants.kerr_coefficient(params.sphere_diameter)
    return ValidityReport(
        magnon_number=magnon_number,
        spin_bound=2.0 * constants.SPIN_S * n_spins,
        kerr_coeff=kerr,
        kerr_drive=kerr * abs(wp.mean_magnon) ** 3,
        rabi=wp.rabi,
    )
