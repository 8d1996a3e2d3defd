"""Steady-state squeezing simulator for driven cavity magnomechanics.

A microwave cavity mode, a magnon mode (Kittel mode of a YIG sphere) and
a mechanical vibration mode form a linearised Gaussian network driven by
a squeezed vacuum input. The package computes steady covariances,
quadrature noise spectra, and the squeezing transferred to magnons and
phonons, plus the cavity output spectrum that witnesses it.
"""

from .constants import kerr_coefficient, sphere_volume
from .errors import (AccuracyError, ConvergenceError, IntegrationError,
                     InvalidParameterError, MagnomechError, StabilityError,
                     UsageError)
from .gaussdyn import (BathSpec, DiffusionMatrix, LinearModel, build_three_mode,
                       build_two_mode, default_step, is_physical_covariance,
                       lyapunov_steady_state, mode_uncertainty_products,
                       propagate_covariance, stability, symplectic_form,
                       transfer_matrix)
from .outputfield import (OutputCoefficients, SpectrumTrace, find_spectrum_features,
                          output_coefficients, output_coefficients_generic,
                          output_spectrum, output_spectrum_value)
from .params import (SqueezedDrive, SystemParams, ValidityReport, WorkingPoint,
                     rabi_frequency, spin_count, squeezed_noise_moments,
                     thermal_occupation, validity_report, working_point,
                     working_point_for_coupling)
from .sweep import (ResultTable, SweepAxis, SweepConfig, emit, figure_preset,
                    preset_names, run_sweep)
from .threemode import (LimitCycleResult, MechanicalVariances, NoiseRows,
                        SpectrumDecomposition, interaction_picture_variance,
                        lab_variances_vacuum_drive, limit_cycle_variance_oracle,
                        mechanical_spectrum, quadrature_noise_rows)
from .twomode import (QuadratureVariances, detuned_variances,
                      optimal_magnon_variance, resonant_variances_analytic,
                      squeezing_db)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
