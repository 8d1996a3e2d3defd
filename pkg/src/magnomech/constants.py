"""Physical constants and YIG material anchors used across the package.

All angular frequencies and rates in this package are stored in rad/s;
ordinary frequencies (Hz) appear only at the configuration boundary.
"""

import math

HBAR = 1.054571817e-34      # J s (CODATA 2018)
KB = 1.380649e-23           # J/K (exact SI)

# gyromagnetic ratio of the electron spin in YIG, gamma/2pi = 28 GHz/T
GYRO = 2 * math.pi * 28e9   # rad s^-1 T^-1

# spin density of YIG
SPIN_DENSITY = 4.22e27      # m^-3

# ground-state spin of the Fe3+ ion; low-excitation bound is 2*N*s = 5N
SPIN_S = 2.5

# magnon self-Kerr coefficient scales as 1/V; anchored to a 250-um sphere.
# (The 1-mm anchor, 2pi*1e-10 rad/s, is the same constant: volume ratio 64.)
KERR_REF_DIAMETER = 250e-6              # m
KERR_REF = 2 * math.pi * 6.4e-9         # rad/s at the reference diameter


def sphere_volume(diameter: float) -> float:
    """Volume of a sphere of the given diameter."""
    return math.pi / 6.0 * diameter**3


def kerr_coefficient(diameter: float) -> float:
    """Magnon Kerr coefficient for a YIG sphere of the given diameter (rad/s)."""
    if diameter <= 0:
        raise ValueError("sphere diameter must be positive")
    return KERR_REF * sphere_volume(KERR_REF_DIAMETER) / sphere_volume(diameter)
