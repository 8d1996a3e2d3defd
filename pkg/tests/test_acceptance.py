"""Acceptance suite: one test per release criterion, at its stated tolerance.

Each test prints a single PASS/FAIL line (visible with ``pytest -s`` or on
failure) so the suite doubles as a checklist.
"""

import math
import time

import numpy as np
import pytest
from scipy.optimize import brentq

import magnomech as mm

TWO_PI = 2.0 * math.pi

KA = TWO_PI * 5e6
KM = TWO_PI * 1e6
G_MA = TWO_PI * 2e7


def report(name, ok, detail):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def test_analytic_regression_closed_form():
    t0 = time.perf_counter()
    for _ in range(1000):
        vy, vx = mm.resonant_variances_analytic(KA, KM, G_MA, 1.0, 0.0, 0.0)
    per_call = (time.perf_counter() - t0) / 1000.0
    db_x = mm.squeezing_db(vx)
    db_y = mm.squeezing_db(vy)
    ok = (abs(db_x - 5.40) <= 0.01 and abs(db_y - 5.56) <= 0.01
          and per_call < 1e-3)
    report("analytic-regression", ok,
           f"magnon {db_x:.4f} dB, cavity {db_y:.4f} dB, {per_call * 1e6:.1f} us/call")


def test_decoupled_limit():
    vy, vx = mm.resonant_variances_analytic(KA, KM, 0.0, 1.0, 0.0, 0.0)
    db_y = mm.squeezing_db(vy)
    ok = abs(db_y - 8.69) <= 0.01 and abs(vx - 0.5) <= 1e-10
    report("decoupled-limit", ok, f"cavity {db_y:.4f} dB, magnon var {vx}")


def test_reduced_input_regression():
    _, vx = mm.resonant_variances_analytic(KA, KM, G_MA, 0.4455, 0.0, 0.0)
    db_x = mm.squeezing_db(vx)
    ok = abs(db_x - 2.89) <= 0.02
    report("reduced-input", ok, f"magnon {db_x:.4f} dB")


def test_lyapunov_vs_analytic_grid():
    params = mm.SystemParams.from_hz(
        cavity_freq_hz=1e10, magnon_freq_hz=1e10, mech_freq_hz=1e7,
        kappa_a_hz=5e6, kappa_m_hz=1e6, gamma_b_hz=100.0, g_ma_hz=2e7,
        g_mb_hz=0.1, temperature_k=0.0)
    rs = np.linspace(0.0, 2.0, 5)
    thetas = np.linspace(0.0, 2 * math.pi, 5)
    n_ms = (0.0, 0.3, 1.0, 3.0)
    worst = 0.0
    count = 0
    t0 = time.perf_counter()
    for r in rs:
        for theta in thetas:
            for n_m in n_ms:
                model, diff = mm.build_two_mode(params, mm.SqueezedDrive(r, theta),
                                                0.0, 0.0)
                base = diff.base.copy()
                base[2, 2] = base[3, 3] = KM * (2 * n_m + 1)
                diff = mm.DiffusionMatrix(base, diff.cos_amp, diff.sin_amp, 0.0)
                V = mm.lyapunov_steady_state(model, diff)
                vy, vx = mm.resonant_variances_analytic(KA, KM, G_MA, r, theta, n_m)
                worst = max(worst, abs(V[1, 1] - vy) / vy, abs(V[2, 2] - vx) / vx)
                count += 1
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-10 and elapsed < 1.0 and count == 100
    report("lyapunov-vs-analytic", ok,
           f"{count} points, worst rel {worst:.2e}, {elapsed:.3f} s")


def test_mechanical_squeezing_reference_point(mech_params, mech_drive, mech_wp):
    t0 = time.perf_counter()
    mv = mm.interaction_picture_variance(mech_params, mech_drive, mech_wp)
    elapsed = time.perf_counter() - t0
    db_q = mm.squeezing_db(mv.var_q_tilde)
    ok = abs(db_q - 5.21) <= 0.15 and elapsed < 10.0
    report("mechanical-squeezing", ok, f"{db_q:.4f} dB in {elapsed:.2f} s")


def test_mechanical_squeezing_reduced_input(mech_params, mech_wp):
    wb = mech_params.mech_freq
    drive = mm.SqueezedDrive(0.4455, 0.0, wb)
    mv10 = mm.interaction_picture_variance(mech_params, drive, mech_wp)
    params50 = mm.SystemParams.from_hz(
        cavity_freq_hz=1e10, magnon_freq_hz=1e10, mech_freq_hz=1e7,
        kappa_a_hz=3e6, kappa_m_hz=6e5, gamma_b_hz=100.0, g_ma_hz=4.2e6,
        g_mb_hz=0.1, temperature_k=0.050)
    mv50 = mm.interaction_picture_variance(params50, drive, mech_wp)
    db10 = mm.squeezing_db(mv10.var_q_tilde)
    db50 = mm.squeezing_db(mv50.var_q_tilde)
    ok = abs(db10 - 2.77) <= 0.15 and abs(db50 - 2.05) <= 0.15
    report("mechanical-squeezing-reduced", ok,
           f"{db10:.4f} dB at 10 mK, {db50:.4f} dB at 50 mK")


def test_temperature_robustness_threshold(mech_wp):
    params = mm.SystemParams.from_hz(
        cavity_freq_hz=1e10, magnon_freq_hz=1e10, mech_freq_hz=1e7,
        kappa_a_hz=3e6, kappa_m_hz=6e5, gamma_b_hz=100.0, g_ma_hz=4.2e6,
        g_mb_hz=0.1, temperature_k=0.200)
    wb = params.mech_freq

    def excess(r):
        drive = mm.SqueezedDrive(r, 0.0, wb)
        mv = mm.interaction_picture_variance(params, drive, mech_wp)
        return mv.var_q_tilde - 0.5

    r_star = brentq(excess, 0.25, 0.60, xtol=1e-3)
    ok = abs(r_star - 0.42) <= 0.05
    report("temperature-threshold", ok, f"r* = {r_star:.4f} at 200 mK")


def test_oracle_equivalence_grid(mech_params):
    wb = mech_params.mech_freq
    t0 = time.perf_counter()
    worst = 0.0
    for r in (0.0, 0.5, 1.0):
        for g_hz in (5e5, 1e6, 1.5e6):
            drive = mm.SqueezedDrive(r, 0.0, wb)
            wp = mm.working_point_for_coupling(mech_params, TWO_PI * g_hz,
                                               detuning_a=1.1 * wb,
                                               eff_detuning_m=wb)
            mv = mm.interaction_picture_variance(mech_params, drive, wp)
            orc = mm.limit_cycle_variance_oracle(mech_params, drive, wp)
            worst = max(worst,
                        abs(orc.var_q_tilde - mv.var_q_tilde) / mv.var_q_tilde,
                        abs(orc.var_p_tilde - mv.var_p_tilde) / mv.var_p_tilde)
    elapsed = time.perf_counter() - t0
    ok = worst < 0.01 and elapsed < 300.0
    report("oracle-equivalence", ok,
           f"3x3 grid worst rel {worst:.2e}, {elapsed:.1f} s")


def test_vacuum_reduction(mech_params, mech_wp):
    wb = mech_params.mech_freq
    drive = mm.SqueezedDrive(0.0, 0.0, wb)
    mv = mm.interaction_picture_variance(mech_params, drive, mech_wp)
    vq, vp = mm.lab_variances_vacuum_drive(mech_params, mech_wp)
    rel_q = abs(mv.dc_q - vq) / vq
    rel_p = abs(mv.dc_p - vp) / vp
    wp0 = mm.working_point(mech_params, 0.0, detuning_a=1.1 * wb,
                           eff_detuning_m=wb)
    mv0 = mm.interaction_picture_variance(mech_params,
                                          mm.SqueezedDrive(1.0, 0.0, wb), wp0)
    thermal = mech_params.phonon_thermal + 0.5
    rel_t = abs(mv0.var_q_tilde - thermal) / thermal
    ok = rel_q < 1e-4 and rel_p < 1e-4 and rel_t < 0.01
    report("vacuum-reduction", ok,
           f"lyapunov rel ({rel_q:.2e}, {rel_p:.2e}), thermal rel {rel_t:.2e}")


def test_validity_numbers(mech_params, mech_wp):
    rep = mm.validity_report(mech_params, mech_wp)
    m_abs = abs(mech_wp.mean_magnon)
    ok = (abs(m_abs - 1.1e7) <= 0.1 * 1.1e7
          and abs(rep.magnon_number - 1.1e14) <= 0.2 * 1.1e14
          and abs(rep.spin_bound - 1.7e17) <= 0.05 * 1.7e17
          and 4e13 <= rep.kerr_drive <= 6e13
          and abs(mech_wp.rabi - 5.5e14) <= 0.1 * 5.5e14)
    report("validity-numbers", ok,
           f"|<m>| = {m_abs:.3e}, bound {rep.spin_bound:.3e}, "
           f"Kerr drive {rep.kerr_drive:.3e} vs Omega {mech_wp.rabi:.3e}")


def test_output_spectrum_criteria(magnon_params):
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(10):
        w = TWO_PI * rng.uniform(-4e7, 4e7)
        phi = rng.uniform(0, 2 * math.pi)
        closed = mm.output_coefficients(magnon_params, 0.0, 0.0, w, phi)
        generic = mm.output_coefficients_generic(magnon_params, 0.0, 0.0, w, phi)
        for name in ("on_a", "on_a_dag", "on_m", "on_m_dag"):
            a, b = getattr(closed, name), getattr(generic, name)
            worst = max(worst, abs(a - b) / max(abs(a), 1e-30))
    grid = TWO_PI * np.linspace(-4e7, 4e7, 641)
    trace = mm.output_spectrum(magnon_params, mm.SqueezedDrive(1.0, 0.0),
                               0.0, 0.0, grid, math.pi / 2)
    feats = mm.find_spectrum_features(trace)
    has_both = (np.any(np.abs(feats - G_MA) < KA + G_MA * 0.05)
                and np.any(np.abs(feats + G_MA) < KA + G_MA * 0.05))
    decoupled = mm.SystemParams.from_hz(
        cavity_freq_hz=1e10, magnon_freq_hz=1e10, mech_freq_hz=1e7,
        kappa_a_hz=5e6, kappa_m_hz=1e6, gamma_b_hz=100.0, g_ma_hz=0.0,
        g_mb_hz=0.1, temperature_k=0.020)
    val = mm.output_spectrum_value(decoupled, mm.SqueezedDrive(1.0, 0.0),
                                   0.0, 0.0, 0.0, math.pi / 2)
    flat_ok = abs(val - 0.5 * math.e**-2) <= 1e-6
    ok = worst < 1e-10 and has_both and flat_ok
    report("output-spectrum", ok,
           f"coeff rel {worst:.2e}, features {np.round(feats / TWO_PI / 1e6, 2)} MHz, "
           f"reflected level {val:.6f}")


def test_uncertainty_and_positivity_suite(mech_params, mech_drive, mech_wp,
                                          magnon_params):
    checked = 0
    rng = np.random.default_rng(31)
    for _ in range(10):
        drive = mm.SqueezedDrive(rng.uniform(0, 2), rng.uniform(0, 2 * math.pi))
        da = TWO_PI * rng.uniform(-1e7, 1e7)
        dm = TWO_PI * rng.uniform(-1e7, 1e7)
        model, diff = mm.build_two_mode(magnon_params, drive, da, dm)
        V = mm.lyapunov_steady_state(model, diff)
        assert mm.is_physical_covariance(V)
        assert np.all(mm.mode_uncertainty_products(V) >= 0.25 - 1e-12)
        checked += 1
    orc = mm.limit_cycle_variance_oracle(mech_params, mech_drive, mech_wp)
    assert mm.is_physical_covariance(orc.covariance, atol=1e-7)
    assert orc.var_q_tilde * orc.var_p_tilde >= 0.25
    checked += 1
    grid = TWO_PI * np.linspace(-4e7, 4e7, 321)
    for g_hz in (0.0, 1e7, 2e7):
        params = mm.SystemParams.from_hz(
            cavity_freq_hz=1e10, magnon_freq_hz=1e10, mech_freq_hz=1e7,
            kappa_a_hz=5e6, kappa_m_hz=1e6, gamma_b_hz=100.0, g_ma_hz=g_hz,
            g_mb_hz=0.1, temperature_k=0.020)
        trace = mm.output_spectrum(params, mm.SqueezedDrive(1.0, 0.0),
                                   0.0, 0.0, grid, math.pi / 2)
        assert np.all(trace.values >= 0.0)
        checked += 1
    spec = mm.mechanical_spectrum(mech_params, mech_drive, mech_wp,
                                  np.linspace(-3, 3, 301) * mech_params.mech_freq)
    assert np.all(spec.stationary >= 0.0)
    checked += 1
    report("uncertainty-positivity", True, f"{checked} objects checked")


def test_sweep_determinism(tmp_path):
    payloads = []
    for tag in ("first", "second"):
        cfg = mm.figure_preset("fig2a")
        table = mm.run_sweep(cfg)
        path = tmp_path / f"{tag}.csv"
        mm.emit(table, "csv", str(path))
        payloads.append(path.read_bytes())
    ok = payloads[0] == payloads[1] and len(payloads[0]) > 100
    report("determinism", ok, f"{len(payloads[0])} bytes, byte-identical")
