"""Discrete time-separated Schrodinger problems.

Plane-wave eigenstates under a constant potential, the two lattice energy
bounds, and the infinite-well spectra with the tan (right/left) and sin
(symmetric) quantization rules. Spectra use natural units hbar = 1, 2m = 1,
so E = k^2; `PhysicalUnits` converts to eV where laboratory numbers are
wanted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .functions import DiscreteFunction, DomainError, closed_form_status, umbral_exp, umbral_trig
from .operators import Correspondence, Kind

HBAR_JS = 1.054571817e-34  # CODATA 2018
EV_J = 1.602176634e-19  # exact
ELECTRON_MASS_KG = 9.1093837015e-31
PROTON_MASS_KG = 1.67262192369e-27
PLANCK_LENGTH_M = 1.62e-35
PLANCK_TIME_S = 5.39e-44

# Momenta within one part in 1e12 of the k*sigma = 1 boundary count as
# boundary waves: the tan rule lands there only through rounding
# (tan(pi/4) != 1 in doubles) and must not be classified as convergent.
_BOUNDARY_EPS = 1e-12


class WindowTooSmallError(ValueError):
    """The sample window cannot absorb the stencil of the requested operator."""


class NonPhysicalStateError(ValueError):
    """The requested well level sits on the tan pole (infinite energy)."""


@dataclass(frozen=True)
class PhysicalUnits:
    """Laboratory constants for converting lattice results to eV."""

    hbar: float = HBAR_JS
    mass: float = ELECTRON_MASS_KG
    sigma_m: float = PLANCK_LENGTH_M
    tau_s: float = PLANCK_TIME_S

    def __post_init__(self):
        for name in ("hbar", "mass", "sigma_m", "tau_s"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class EnergyBounds:
    """The two lattice energy ceilings, in eV."""

    e_max_time_ev: float
    e_max_space_ev: float

    @property
    def binding_ev(self) -> float:
        return min(self.e_max_time_ev, self.e_max_space_ev)


def energy_scale_ev(u: PhysicalUnits) -> float:
    """eV value of one unit of (k sigma)^2, i.e. hbar^2/(2 m sigma^2)."""
    return u.hbar**2 / (2 * u.mass * u.sigma_m**2) / EV_J


def energy_bounds(u: PhysicalUnits) -> EnergyBounds:
    """Upper energy limits from the convergence of the time and space waves."""
    return EnergyBounds(u.hbar / u.tau_s / EV_J, energy_scale_ev(u))


def separate(
    E: float, tau: float, n_steps: int, kind: Kind = Kind.SYMMETRIC
) -> DiscreteFunction:
    """Time factor of the separated solution sampled on t = n*tau, n = 0..n_steps.

    The continuous factor exp(i E t) discretizes to the chosen
    correspondence's exponential at imaginary momentum; |E tau| < 1 is the
    temporal convergence bound. The symmetric evolution is unimodular.
    """
    if tau <= 0:
        raise ValueError("tau must be positive")
    if n_steps < 0:
        raise ValueError("n_steps must be >= 0")
    if abs(E) * tau >= 1:
        raise DomainError("time evolution requires |E tau| < 1")
    c = Correspondence(kind, tau)
    ik = complex(0.0, E)
    values = [umbral_exp(c, ik, n) for n in range(n_steps + 1)]
    statuses = [closed_form_status(c, ik, n) for n in range(n_steps + 1)]
    return DiscreteFunction(tau, 0, values, statuses)


@dataclass(frozen=True)
class PlaneWaveState:
    """A e(+ik) + B e(-ik) (oscillatory) or A e(+k) + B e(-k) (evanescent)."""

    correspondence: Correspondence
    k: float
    amplitude_forward: complex = 1.0
    amplitude_backward: complex = 0.0
    oscillatory: bool = True

    def __post_init__(self):
        if self.amplitude_forward == 0 and self.amplitude_backward == 0:
            raise ValueError("at least one amplitude must be nonzero")

    def sample(self, m: int) -> complex:
        c = self.correspondence
        kk = complex(0.0, self.k) if self.oscillatory else complex(self.k)
        return self.amplitude_forward * umbral_exp(c, kk, m) + self.amplitude_backward * umbral_exp(c, -kk, m)

    def tabulate(self, window: tuple[int, int]) -> DiscreteFunction:
        lo, hi = int(window[0]), int(window[1])
        if lo > hi:
            raise ValueError("window minimum exceeds maximum")
        values = [self.sample(m) for m in range(lo, hi + 1)]
        return DiscreteFunction(self.correspondence.sigma_float(), lo, values)


_STEP_SHRINK = {Kind.RIGHT: (0, 1), Kind.LEFT: (1, 0), Kind.SYMMETRIC: (1, 1)}


def lattice_delta(c: Correspondence, f: DiscreteFunction) -> DiscreteFunction:
    """Apply the difference operator to lattice samples; the window shrinks by the stencil."""
    if abs(f.sigma - c.sigma_float()) > 1e-12 * c.sigma_float():
        raise ValueError("sample spacing does not match the correspondence")
    lo_cut, hi_cut = _STEP_SHRINK[c.kind]
    lo, hi = f.m_min + lo_cut, f.m_max - hi_cut
    if lo > hi:
        raise WindowTooSmallError("window too small for one difference step")
    s = c.sigma_float()
    values = []
    for m in range(lo, hi + 1):
        if c.kind is Kind.RIGHT:
            values.append((f.value(m + 1) - f.value(m)) / s)
        elif c.kind is Kind.LEFT:
            values.append((f.value(m) - f.value(m - 1)) / s)
        else:
            values.append((f.value(m + 1) - f.value(m - 1)) / (2 * s))
    statuses = [f.status(m) for m in range(lo, hi + 1)]
    return DiscreteFunction(f.sigma, lo, values, statuses)


def apply_hamiltonian(c: Correspondence, V0: float, psi: DiscreteFunction) -> DiscreteFunction:
    """Apply H = -delta^2 + V0 to the samples; result lives on the interior window."""
    second = lattice_delta(c, lattice_delta(c, psi))
    values = [-second.value(m) + V0 * psi.value(m) for m in second.indices()]
    return DiscreteFunction(psi.sigma, second.m_min, values, list(second.statuses))


@dataclass(frozen=True)
class WellLevel:
    n: int
    momentum: float
    energy: float
    physical: bool
    convergent: bool


@dataclass(frozen=True)
class WellSpectrum:
    """Quantized levels of the infinite well with M lattice points (L = M sigma)."""

    kind: Kind
    M: int
    sigma: float
    levels: tuple[WellLevel, ...]

    @property
    def degeneracy_pairs(self) -> list[tuple[int, int]]:
        return [(lv.n, self.M - lv.n) for lv in self.levels]

    def energy_of(self, n: int) -> float:
        """Energy of level n for 1 <= n <= M-1; n and M-n are parity partners."""
        if not 1 <= n <= self.M - 1:
            raise ValueError("n must lie in [1, M-1]")
        folded = min(n, self.M - n)
        return self.levels[folded - 1].energy


def infinite_well_spectrum(
    c: Correspondence, M: int, sigma: Optional[float] = None
) -> WellSpectrum:
    """All floor(M/2) candidate levels under the correspondence's quantum rule.

    Right/left: k_n = tan(pi n / M)/sigma, with the n = M/2 state flagged
    non-physical (tan pole). Symmetric: k_n = sin(pi n / M)/sigma, always
    bounded by 1/sigma; the k sigma = 1 boundary state counts as convergent
    because its closed form is defined.
    """
    if M < 2:
        raise ValueError("M must be >= 2")
    s = float(sigma) if sigma is not None else c.sigma_float()
    if s <= 0:
        raise ValueError("sigma must be positive")
    levels = []
    for n in range(1, M // 2 + 1):
        theta = math.pi * n / M
        if c.kind is Kind.SYMMETRIC:
            ks = math.sin(theta)
            levels.append(WellLevel(n, ks / s, (ks / s) ** 2, True, True))
            continue
        if M % 2 == 0 and n == M // 2:
            levels.append(WellLevel(n, math.inf, math.inf, False, False))
            continue
        ks = math.tan(theta)
        levels.append(WellLevel(n, ks / s, (ks / s) ** 2, True, ks < 1.0 - _BOUNDARY_EPS))
    return WellSpectrum(c.kind, M, s, tuple(levels))


def well_momentum(c: Correspondence, M: int, n: int, sigma: Optional[float] = None) -> float:
    """Quantized momentum of level n (1 <= n <= M-1) under the correspondence's rule."""
    if not 1 <= n <= M - 1:
        raise ValueError("n must lie in [1, M-1]")
    s = float(sigma) if sigma is not None else c.sigma_float()
    theta = math.pi * n / M
    if c.kind is Kind.SYMMETRIC:
        return math.sin(theta) / s
    if M % 2 == 0 and n == M // 2:
        raise NonPhysicalStateError(f"level n={n} of M={M} sits on the tan pole")
    return math.tan(theta) / s


@dataclass(frozen=True)
class WaveFunctionTable:
    """Discrete well eigenfunction sampled on m = 0..M, with boundary diagnostics."""

    kind: Kind
    M: int
    n: int
    sigma: float
    samples: tuple[float, ...]

    @property
    def max_abs(self) -> float:
        return max(abs(v) for v in self.samples)

    @property
    def argmax_m(self) -> int:
        values = [abs(v) for v in self.samples]
        return values.index(max(values))

    @property
    def boundary_residual_left(self) -> float:
        return abs(self.samples[0])

    @property
    def boundary_residual_right(self) -> float:
        return abs(self.samples[-1])


def infinite_well_wavefunction(
    c: Correspondence, M: int, n: int, sigma: Optional[float] = None
) -> WaveFunctionTable:
    """Discrete sine eigenfunction of level n on the well of M points.

    Raises NonPhysicalStateError on the right/left tan pole (n = M/2) and
    DomainError for levels whose momentum exceeds the convergence boundary
    |k sigma| = 1 (these exist formally but have no convergent series).
    """
    if M < 2:
        raise ValueError("M must be >= 2")
    if not 1 <= n <= M - 1:
        raise ValueError("n must lie in [1, M-1]")
    s = float(sigma) if sigma is not None else c.sigma_float()
    k = well_momentum(c, M, n, s)
    cc = Correspondence(c.kind, s)
    samples = tuple(umbral_trig(cc, k, m, "sin") for m in range(M + 1))
    return WaveFunctionTable(c.kind, M, n, s, samples)


def well_state_count(c: Correspondence, M: int) -> tuple[int, int, int]:
    """(total, physical, convergent) level counts of the M-point well."""
    spectrum = infinite_well_spectrum(c, M)
    total = len(spectrum.levels)
    physical = sum(1 for lv in spectrum.levels if lv.physical)
    convergent = sum(1 for lv in spectrum.levels if lv.convergent)
    return total, physical, convergent


def infinite_well_max_energy_log10(u: PhysicalUnits, M: int) -> float:
    """log10 of the top tan-rule well energy in eV, assembled in log space.

    The top state n = (M-1)/2 sits next to the tan pole; its momentum is
    cot(pi/(2M))/sigma, evaluated through the complement so the result stays
    accurate for lattice counts far beyond double resolution of pi/2.
    """
    if M < 3:
        raise ValueError("M must be >= 3")
    cot = 1.0 / math.tan(math.pi / (2 * M))
    return math.log10(energy_scale_ev(u)) + 2 * math.log10(cot)
