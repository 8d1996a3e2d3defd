"""Drift/diffusion construction, Lyapunov steady states, covariance propagation.

Quadrature ordering is fixed everywhere as (X, Y, x, y, q, p): cavity,
magnon, mechanics. The two-mode system uses the first four entries. This
ordering is never permuted.

Frequency-domain convention: f(w) = Int f(t) e^{iwt} dt, so d/dt -> -iw and
the transfer matrix is T(w) = (-iw*I - A)^(-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, InvalidParameterError, StabilityError
from .params import SqueezedDrive, SystemParams, WorkingPoint, squeezed_noise_moments

STABILITY_MARGIN = 1e-9
LYAPUNOV_RTOL = 1e-10


@dataclass(frozen=True)
class BathSpec:
    """Input-noise moments seen by a linear model in its rotating frame."""

    squeeze_n: float          # mean photon number of the squeezed input
    squeeze_m: complex        # phase-sensitive moment of the squeezed input
    detuning_s: float         # squeezed-carrier detuning in this frame (rad/s)
    magnon_thermal: float
    phonon_thermal: float


@dataclass(frozen=True)
class LinearModel:
    """Linearised quadrature dynamics du/dt = A u + n(t).

    ``noise_gain`` holds the diagonal coupling of each input-quadrature
    channel into n(t): sqrt(2*kappa_a) on the cavity pair, sqrt(2*kappa_m)
    on the magnon pair, and (0, 1) on (q, p) - position carries no noise.
    """

    drift: np.ndarray
    noise_gain: np.ndarray
    bath: BathSpec
    cavity_decay: float
    magnon_decay: float
    mech_damping: float = 0.0
    mech_freq: float = 0.0

    @property
    def dim(self) -> int:
        return self.drift.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvals(self.drift)


@dataclass(frozen=True)
class DiffusionMatrix:
    """Symmetrised input-noise correlations D(t), possibly modulated.

    D(t) = base + cos_amp*cos(mod_freq*t) + sin_amp*sin(mod_freq*t).
    The modulation frequency is twice the squeezed-carrier detuning; a
    frame with zero detuning gives a constant matrix.
    """

    base: np.ndarray
    cos_amp: np.ndarray
    sin_amp: np.ndarray
    mod_freq: float

    @property
    def is_static(self) -> bool:
        return self.mod_freq == 0.0 or (
            not np.any(self.cos_amp) and not np.any(self.sin_amp))

    def at(self, t: float) -> np.ndarray:
        if self.is_static:
            return self.base
        ph = self.mod_freq * t
        return self.base + math.cos(ph) * self.cos_amp + math.sin(ph) * self.sin_amp


def _cavity_diffusion_blocks(kappa_a, sq_n, sq_m):
    """Static and modulated parts of the 2x2 cavity noise block."""
    base = kappa_a * (2.0 * sq_n + 1.0) * np.eye(2)
    cos_amp = 2.0 * kappa_a * np.array([[sq_m.real, sq_m.imag],
                                        [sq_m.imag, -sq_m.real]])
    sin_amp = 2.0 * kappa_a * np.array([[sq_m.imag, -sq_m.real],
                                        [-sq_m.real, -sq_m.imag]])
    return base, cos_amp, sin_amp


def _diffusion(dim, kappa_a, kappa_m, bath, gamma_b=0.0) -> DiffusionMatrix:
    base = np.zeros((dim, dim))
    cos_amp = np.zeros((dim, dim))
    sin_amp = np.zeros((dim, dim))
    cb, cc, cs = _cavity_diffusion_blocks(kappa_a, bath.squeeze_n, bath.squeeze_m)
    base[:2, :2] = cb
    cos_amp[:2, :2] = cc
    sin_amp[:2, :2] = cs
    base[2, 2] = base[3, 3] = kappa_m * (2.0 * bath.magnon_thermal + 1.0)
    if dim == 6:
        base[5, 5] = gamma_b * (2.0 * bath.phonon_thermal + 1.0)
    if bath.detuning_s == 0.0:
        # stationary frame: fold the phase-sensitive part into the base
        base = base + cos_amp
        cos_amp = np.zeros((dim, dim))
        sin_amp = np.zeros((dim, dim))
        return DiffusionMatrix(base, cos_amp, sin_amp, 0.0)
    return DiffusionMatrix(base, cos_amp, sin_amp, 2.0 * bath.detuning_s)


def build_two_mode(params: SystemParams, drive: SqueezedDrive,
                   detuning_a: float, detuning_m: float
                   ) -> tuple[LinearModel, DiffusionMatrix]:
    """Cavity-magnon fluctuation model in the frame of the squeezed carrier.

    Detunings are taken relative to the squeezed-drive frequency, so the
    squeezed-bath correlators are stationary and the diffusion matrix is
    constant.
    """
    ka, km, g = params.cavity_decay, params.magnon_decay, params.coupling_ma
    if ka <= 0 or km <= 0:
        raise InvalidParameterError("cavity and magnon decay must be positive")
    da, dm = detuning_a, detuning_m
    drift = np.array([
        [-ka,  da,  0.0,  g],
        [-da, -ka, -g,   0.0],
        [0.0,  g,  -km,  dm],
        [-g,  0.0, -dm, -km],
    ])
    sq_n, sq_m = squeezed_noise_moments(drive)
    bath = BathSpec(sq_n, sq_m, 0.0, params.magnon_thermal, 0.0)
    gain = np.array([math.sqrt(2 * ka), math.sqrt(2 * ka),
                     math.sqrt(2 * km), math.sqrt(2 * km)])
    model = LinearModel(drift, gain, bath, ka, km)
    return model, _diffusion(4, ka, km, bath)


def build_three_mode(params: SystemParams, drive: SqueezedDrive,
                     wp: WorkingPoint) -> tuple[LinearModel, DiffusionMatrix]:
    """Cavity-magnon-mechanics model in the frame of the magnon drive.

    The squeezed carrier sits at ``drive.detuning_s`` in this frame, so the
    phase-sensitive cavity-noise entries oscillate at twice that detuning.
    The drift uses |G_mb|; a residual complex phase of the effective
    coupling is diagnostic only (see WorkingPoint).
    """
    ka, km = params.cavity_decay, params.magnon_decay
    if ka <= 0 or km <= 0:
        raise InvalidParameterError("cavity and magnon decay must be positive")
    gb, wb, g = params.mech_damping, params.mech_freq, params.coupling_ma
    da, dmt = wp.detuning_a, wp.eff_detuning_m
    G = wp.eff_coupling_mag
    drift = np.array([
        [-ka,  da,   0.0,  g,    0.0,  0.0],
        [-da, -ka,  -g,    0.0,  0.0,  0.0],
        [0.0,  g,   -km,   dmt, -G,    0.0],
        [-g,   0.0, -dmt, -km,   0.0,  0.0],
        [0.0,  0.0,  0.0,  0.0,  0.0,  wb],
        [0.0,  0.0,  0.0,  G,   -wb,  -gb],
    ])
    sq_n, sq_m = squeezed_noise_moments(drive)
    bath = BathSpec(sq_n, sq_m, drive.detuning_s,
                    params.magnon_thermal, params.phonon_thermal)
    gain = np.array([math.sqrt(2 * ka), math.sqrt(2 * ka),
                     math.sqrt(2 * km), math.sqrt(2 * km), 0.0, 1.0])
    model = LinearModel(drift, gain, bath, ka, km, gb, wb)
    return model, _diffusion(6, ka, km, bath, gb)


def stability(model: LinearModel) -> tuple[bool, np.ndarray]:
    """Strict stability flag and drift eigenvalues.

    Numerically marginal spectra are reported unstable rather than letting
    the steady state blow up silently.
    """
    eig = model.eigenvalues()
    scale = np.abs(eig).max() if eig.size else 0.0
    is_stable = bool(scale > 0 and eig.real.max() < -STABILITY_MARGIN * scale)
    return is_stable, eig


def lyapunov_steady_state(model: LinearModel, diffusion: DiffusionMatrix) -> np.ndarray:
    """Steady covariance from A V + V A^T = -D via Kronecker vectorisation.

    Matrices here are at most 6x6, so the dense 36x36 solve is exact and
    cheap; the residual is checked against LYAPUNOV_RTOL.
    """
    if not diffusion.is_static:
        raise InvalidParameterError(
            "Lyapunov steady state needs a time-independent diffusion matrix")
    ok, eig = stability(model)
    if not ok:
        raise StabilityError(
            f"drift matrix is not strictly stable (max Re eig = {eig.real.max():.3e})")
    A = model.drift
    D = diffusion.base
    n = A.shape[0]
    K = np.kron(np.eye(n), A) + np.kron(A, np.eye(n))
    v = np.linalg.solve(K, -D.flatten(order="F"))
    V = v.reshape((n, n), order="F")
    V = 0.5 * (V + V.T)
    resid = np.abs(A @ V + V @ A.T + D).max()
    scale = max(np.abs(D).max(), np.abs(A).max() * np.abs(V).max(), 1e-300)
    if resid > LYAPUNOV_RTOL * scale:
        raise np.linalg.LinAlgError(
            f"Lyapunov residual {resid / scale:.2e} exceeds {LYAPUNOV_RTOL}")
    return V


def transfer_matrix(model: LinearModel, omega: float) -> np.ndarray:
    """T(w) = (-iw*I - A)^(-1), the frequency response of the fluctuations."""
    n = model.dim
    M = -1j * omega * np.eye(n) - model.drift
    return np.linalg.solve(M, np.eye(n, dtype=complex))


def default_step(model: LinearModel, diffusion: DiffusionMatrix | None = None) -> float:
    """Step size resolving the fastest drift and modulation scales."""
    rates = [float(np.abs(model.eigenvalues()).max())]
    if diffusion is not None and not diffusion.is_static:
        rates.append(diffusion.mod_freq)
    return 0.05 / max(rates)


def _rk4_path(A, diffusion, V0, n_steps, dt, t0=0.0, keep=False):
    V = V0.copy()
    t = t0
    out = [V0.copy()] if keep else None
    for _ in range(n_steps):
        k1 = A @ V + V @ A.T + diffusion.at(t)
        V1 = V + 0.5 * dt * k1
        k2 = A @ V1 + V1 @ A.T + diffusion.at(t + 0.5 * dt)
        V2 = V + 0.5 * dt * k2
        k3 = A @ V2 + V2 @ A.T + diffusion.at(t + 0.5 * dt)
        V3 = V + dt * k3
        k4 = A @ V3 + V3 @ A.T + diffusion.at(t + dt)
        V = V + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t += dt
        if keep:
            out.append(V.copy())
    return (V, out) if keep else (V, None)


def propagate_covariance(model: LinearModel, diffusion: DiffusionMatrix,
                         V0: np.ndarray, t_end: float, dt: float | None = None,
                         *, keep_path: bool = False, check: bool = True,
                         check_rtol: float = 1e-6):
    """Integrate dV/dt = A V + V A^T + D(t) with fixed-step RK4.

    Returns (times, V_end) or (times, path) with ``keep_path``. A
    step-halving comparison guards against too-coarse steps and raises
    AccuracyError when the halved-step answer disagrees beyond
    ``check_rtol`` (relative, max norm).
    """
    if dt is None:
        dt = default_step(model, diffusion)
    if dt <= 0 or t_end < 0:
        raise InvalidParameterError("need dt > 0 and t_end >= 0")
    n_steps = max(1, int(math.ceil(t_end / dt)))
    dt = t_end / n_steps if t_end > 0 else dt
    A = model.drift
    V_end, path = _rk4_path(A, diffusion, np.asarray(V0, dtype=float),
                            n_steps, dt, keep=keep_path)
    if check and t_end > 0:
        V_half, _ = _rk4_path(A, diffusion, np.asarray(V0, dtype=float),
                              2 * n_steps, dt / 2.0)
        scale = max(np.abs(V_half).max(), 1e-300)
        err = np.abs(V_end - V_half).max() / scale
        if err > check_rtol:
            raise AccuracyError(
                f"step-halving mismatch {err:.2e} > {check_rtol}; reduce dt")
    times = np.linspace(0.0, t_end, n_steps + 1)
    if keep_path:
        return times, np.array(path)
    return times, V_end


# --- covariance-matrix sanity helpers ----------------------------------

def symplectic_form(n_modes: int) -> np.ndarray:
    blk = np.array([[0.0, 1.0], [-1.0, 0.0]])
    out = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        out[2 * k: 2 * k + 2, 2 * k: 2 * k + 2] = blk
    return out


def is_physical_covariance(V: np.ndarray, atol: float = 1e-9) -> bool:
    """Symmetric, positive semidefinite, and uncertainty-bounded covariance.

    The bound checked is V + (i/2)*Omega >= 0 with Omega the symplectic
    form for [q,p]-commutators equal to i.
    """
    V = np.asarray(V, dtype=float)
    if V.shape[0] != V.shape[1] or V.shape[0] % 2:
        return False
    if np.abs(V - V.T).max() > atol * max(1.0, np.abs(V).max()):
        return False
    sym_eigs = np.linalg.eigvalsh(V)
    if sym_eigs.min() < -atol * max(1.0, sym_eigs.max()):
        return False
    omega = symplectic_form(V.shape[0] // 2)
    herm = V + 0.5j * omega
    rs_eigs = np.linalg.eigvalsh(herm)
    return bool(rs_eigs.min() >= -atol * max(1.0, np.abs(rs_eigs).max()))


def mode_uncertainty_products(V: np.ndarray) -> np.ndarray:
    """Per-mode det of the 2x2 diagonal blocks; >= 1/4 for physical states."""
    n = V.shape[0] // 2
    out = np.empty(n)
    for k in range(n):
        blk = V[2 * k: 2 * k + 2, 2 * k: 2 * k + 2]
        out[k] = blk[0, 0] * blk[1, 1] - blk[0, 1] * blk[1, 0]
    return out
