import math

import pytest

import magnomech as mm

TWO_PI = 2.0 * math.pi


@pytest.fixture(scope="session")
def magnon_params():
    """Cavity-magnon device used for the magnon-squeezing figures."""
    return mm.SystemParams.from_hz(
        cavity_freq_hz=1e10, magnon_freq_hz=1e10, mech_freq_hz=1e7,
        kappa_a_hz=5e6, kappa_m_hz=1e6, gamma_b_hz=100.0,
        g_ma_hz=2e7, g_mb_hz=0.1, temperature_k=0.020)


@pytest.fixture(scope="session")
def mech_params():
    """Three-mode device used for the phonon-squeezing figures."""
    return mm.SystemParams.from_hz(
        cavity_freq_hz=1e10, magnon_freq_hz=1e10, mech_freq_hz=1e7,
        kappa_a_hz=3e6, kappa_m_hz=6e5, gamma_b_hz=100.0,
        g_ma_hz=4.2e6, g_mb_hz=0.1, temperature_k=0.010)


@pytest.fixture(scope="session")
def mech_drive(mech_params):
    """Squeezed input r = 1 detuned by the mechanical frequency."""
    return mm.SqueezedDrive(1.0, 0.0, mech_params.mech_freq)


@pytest.fixture(scope="session")
def mech_wp(mech_params):
    """Optimal working point: |G_mb|/2pi = 1.5 MHz at the red-detuned setting."""
    wb = mech_params.mech_freq
    return mm.working_point_for_coupling(
        mech_params, TWO_PI * 1.5e6, detuning_a=1.1 * wb, eff_detuning_m=wb)
