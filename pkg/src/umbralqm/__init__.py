"""Discrete one-dimensional quantum mechanics on a uniform lattice.

The package realizes the umbral-calculus discretization: delta operators and
their basic polynomial sequences for the right, left and symmetric
correspondences, discrete exponential and trigonometric functions, and the
resulting Schrodinger spectra for constant potentials and the infinite well.
"""

from .correspondences import (
    EvaluationOverflow,
    LatticePoint,
    SummationStatus,
    TaylorSeries,
    basic_polynomial,
    basic_polynomial_value,
    basic_polynomial_value_log,
    exponential_series_exact,
    umbral_transform,
    zeros_of_basic_polynomial,
)
from .functions import (
    AdditionLawReport,
    ConsistencyError,
    DiscreteFunction,
    DomainError,
    WaveSpec,
    addition_law_check,
    amplitude_growth,
    amplitude_growth_log,
    closed_form_status,
    minimum_wavelength_points,
    momentum_to_wavelength,
    tabulate_exp,
    tabulate_exp_series,
    tabulate_trig,
    umbral_exp,
    umbral_exp_series,
    umbral_trig,
    wavelength_to_momentum,
)
from .operators import (
    Correspondence,
    DeltaConditionReport,
    DeltaOperator,
    InvalidDeltaError,
    Kind,
    apply_beta,
    apply_delta,
    apply_shift,
    apply_xi,
    beta_operator,
    check_delta_conditions,
    commutator_residual,
    coordinate_operator,
    left,
    pincherle_derivative,
    right,
    shift_operator,
    symmetric,
    xi_operator,
)
from .polynomials import Polynomial
from .schrodinger import (
    ELECTRON_MASS_KG,
    EV_J,
    HBAR_JS,
    PLANCK_LENGTH_M,
    PLANCK_TIME_S,
    PROTON_MASS_KG,
    EnergyBounds,
    NonPhysicalStateError,
    PhysicalUnits,
    PlaneWaveState,
    WaveFunctionTable,
    WellLevel,
    WellSpectrum,
    WindowTooSmallError,
    apply_hamiltonian,
    energy_bounds,
    energy_scale_ev,
    infinite_well_max_energy_log10,
    infinite_well_spectrum,
    infinite_well_wavefunction,
    lattice_delta,
    separate,
    well_momentum,
    well_state_count,
)

__version__ = "0.1.0"

__all__ = [
    "AdditionLawReport",
    "ConsistencyError",
    "Correspondence",
    "DeltaConditionReport",
    "DeltaOperator",
    "DiscreteFunction",
    "DomainError",
    "ELECTRON_MASS_KG",
    "EV_J",
    "EnergyBounds",
    "EvaluationOverflow",
    "HBAR_JS",
    "InvalidDeltaError",
    "Kind",
    "LatticePoint",
    "NonPhysicalStateError",
    "PLANCK_LENGTH_M",
    "PLANCK_TIME_S",
    "PROTON_MASS_KG",
    "PhysicalUnits",
    "PlaneWaveState",
    "Polynomial",
    "SummationStatus",
    "TaylorSeries",
    "WaveFunctionTable",
    "WaveSpec",
    "WellLevel",
    "WellSpectrum",
    "WindowTooSmallError",
    "addition_law_check",
    "amplitude_growth",
    "amplitude_growth_log",
    "apply_beta",
    "apply_delta",
    "apply_hamiltonian",
    "apply_shift",
    "apply_xi",
    "basic_polynomial",
    "basic_polynomial_value",
    "basic_polynomial_value_log",
    "beta_operator",
    "check_delta_conditions",
    "closed_form_status",
    "commutator_residual",
    "coordinate_operator",
    "energy_bounds",
    "energy_scale_ev",
    "exponential_series_exact",
    "infinite_well_max_energy_log10",
    "infinite_well_spectrum",
    "infinite_well_wavefunction",
    "lattice_delta",
    "left",
    "minimum_wavelength_points",
    "momentum_to_wavelength",
    "pincherle_derivative",
    "right",
    "separate",
    "shift_operator",
    "symmetric",
    "tabulate_exp",
    "tabulate_exp_series",
    "tabulate_trig",
    "umbral_exp",
    "umbral_exp_series",
    "umbral_transform",
    "umbral_trig",
    "wavelength_to_momentum",
    "well_momentum",
    "well_state_count",
    "xi_operator",
    "zeros_of_basic_polynomial",
]
