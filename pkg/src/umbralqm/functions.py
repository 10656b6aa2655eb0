"""Discrete exponential, trigonometric and hyperbolic functions.

Closed forms for the three correspondences, the series route for
cross-checking them, and the wave bookkeeping: momentum/wavelength relations,
minimal waves, and the amplitude growth factor of the non-periodic
right/left waves.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .correspondences import (
    SummationStatus,
    TaylorSeries,
    exponential_series_exact,
    umbral_transform,
)
from .operators import Correspondence, Kind


class DomainError(ValueError):
    """The requested point lies outside the convergence domain of the function."""


class ConsistencyError(ArithmeticError):
    """A nominally real result came back with a non-negligible imaginary part."""


_MIN_POINTS = {Kind.RIGHT: 8.0, Kind.LEFT: 8.0, Kind.SYMMETRIC: 4.0}

_TRIG_NAMES = ("sin", "cos", "sinh", "cosh")


def minimum_wavelength_points(c: Correspondence) -> float:
    """Points per wavelength of the shortest representable wave (k*sigma = 1)."""
    return _MIN_POINTS[c.kind]


def umbral_exp(c: Correspondence, k, m: int):
    """Closed-form discrete exponential at lattice index m.

    Right: (1 + k sigma)^m, Left: (1 - k sigma)^(-m),
    Symmetric: (k sigma + sqrt((k sigma)^2 + 1))^m with the principal root.
    """
    m = int(m)
    ks = k * c.sigma_float()
    is_complex = isinstance(ks, complex)
    if c.kind is Kind.RIGHT:
        base, expo = 1 + ks, m
    elif c.kind is Kind.LEFT:
        base, expo = 1 - ks, -m
    else:
        root = cmath.sqrt(ks * ks + 1) if is_complex else math.sqrt(ks * ks + 1)
        base, expo = ks + root, m
    if base == 0:
        if expo < 0:
            raise DomainError("closed form is 0 raised to a negative power")
        return 1.0 if expo == 0 else 0.0
    return base**expo


def umbral_exp_series(
    c: Correspondence, k, m: int, tol: float = 1e-12
) -> tuple[complex, SummationStatus]:
    """Discrete exponential summed from the series k^n/n! times the basic values.

    Real momenta go through the exact integer accumulator, which survives the
    catastrophic cancellation of the alternating branches; complex momenta
    use the floating transform.
    """
    if isinstance(k, complex) and k.imag != 0.0:
        return umbral_transform(TaylorSeries.exponential(k), c, m, tol)
    kr = float(k.real) if isinstance(k, complex) else float(k)
    return exponential_series_exact(c, Fraction(kr), m, tol)


def closed_form_status(c: Correspondence, k, m: int) -> SummationStatus:
    """Status the series route would report for the closed-form value at m."""
    m = int(m)
    if m == 0:
        return SummationStatus.EXACT_CUTOFF
    if c.kind is Kind.RIGHT and m > 0:
        return SummationStatus.EXACT_CUTOFF
    if c.kind is Kind.LEFT and m < 0:
        return SummationStatus.EXACT_CUTOFF
    ks = abs(k * c.sigma_float())
    return SummationStatus.CONVERGED if ks < 1 else SummationStatus.DIVERGED


def umbral_trig(c: Correspondence, k: float, m: int, which: str) -> float:
    """Discrete sin/cos/sinh/cosh built from the discrete exponential.

    sin and cos admit |k sigma| <= 1 (the boundary is the minimal wave);
    sinh and cosh require |k sigma| < 1. The circular functions are combined
    from complex exponentials and must come back real to within a relative
    imaginary residue of 1e-12, which is then discarded.
    """
    if which not in _TRIG_NAMES:
        raise ValueError(f"which must be one of {_TRIG_NAMES}")
    k = float(k)
    ks = abs(k) * c.sigma_float()
    if which in ("sin", "cos"):
        if ks > 1.0:
            raise DomainError("sin/cos require |k sigma| <= 1")
        ep = umbral_exp(c, complex(0.0, k), m)
        em = umbral_exp(c, complex(0.0, -k), m)
        z = (ep - em) / 2j if which == "sin" else (ep + em) / 2
        if abs(z.imag) > 1e-12 * max(1.0, abs(z)):
            raise ConsistencyError(
                f"imaginary residue {z.imag!r} on a real {which} value"
            )
        return z.real
    if ks >= 1.0:
        raise DomainError("sinh/cosh require |k sigma| < 1")
    ep = umbral_exp(c, k, m)
    em = umbral_exp(c, -k, m)
    return (ep - em) / 2 if which == "sinh" else (ep + em) / 2


def wavelength_to_momentum(c: Correspondence, l: float) -> float:
    """Momentum of the wave with l lattice points per wavelength.

    Symmetric: k = sin(2 pi / l)/sigma; right/left: k = tan(2 pi / l)/sigma.
    The minimum admitted l (4 symmetric, 8 right/left) is the k*sigma = 1
    boundary wave; anything shorter is rejected.
    """
    lmin = _MIN_POINTS[c.kind]
    if l < lmin:
        raise DomainError(f"need at least {lmin:g} points per wavelength")
    angle = 2 * math.pi / l
    s = c.sigma_float()
    if c.kind is Kind.SYMMETRIC:
        return math.sin(angle) / s
    return math.tan(angle) / s


def momentum_to_wavelength(c: Correspondence, k: float) -> float:
    """Wavelength of the discrete wave with momentum k, for 0 < k*sigma <= 1."""
    s = k * c.sigma_float()
    if not 0 < s <= 1:
        raise DomainError("requires 0 < k sigma <= 1")
    angle = math.asin(s) if c.kind is Kind.SYMMETRIC else math.atan(s)
    return 2 * math.pi * c.sigma_float() / angle


def amplitude_growth(l: float, n: int) -> float:
    """Envelope factor sec(2 pi / l)^(l n) of right/left waves after n periods."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if l <= 4:
        raise DomainError("growth factor is defined for l > 4")
    cos_val = math.cos(2 * math.pi / l)
    if cos_val == 0:
        raise DomainError("secant pole")
    return (1.0 / cos_val) ** (l * n)


def amplitude_growth_log(l: float, n: int) -> float:
    """Natural log of amplitude_growth, for point counts far past the double range."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if l <= 4:
        raise DomainError("growth factor is defined for l > 4")
    return -l * n * math.log(math.cos(2 * math.pi / l))


@dataclass(frozen=True)
class WaveSpec:
    """A discrete wave: momentum, points per wavelength and wavelength, kept consistent."""

    correspondence: Correspondence
    k: float
    points_per_wavelength: float
    wavelength: float

    def __post_init__(self):
        sigma = self.correspondence.sigma_float()
        if not 0 < self.k * sigma <= 1:
            raise DomainError("discrete waves require 0 < k sigma <= 1")
        if abs(self.wavelength - self.points_per_wavelength * sigma) > 1e-10 * self.wavelength:
            raise ValueError("wavelength and point count disagree")
        if abs(momentum_to_wavelength(self.correspondence, self.k) - self.wavelength) > 1e-10 * self.wavelength:
            raise ValueError("momentum and wavelength disagree for this correspondence")

    @property
    def is_minimal(self) -> bool:
        return abs(self.k * self.correspondence.sigma_float() - 1.0) < 1e-12

    @classmethod
    def from_momentum(cls, c: Correspondence, k: float) -> "WaveSpec":
        lam = momentum_to_wavelength(c, k)
        return cls(c, k, lam / c.sigma_float(), lam)

    @classmethod
    def from_points(cls, c: Correspondence, l: float) -> "WaveSpec":
        k = wavelength_to_momentum(c, l)
        return cls(c, k, l, l * c.sigma_float())


@dataclass(frozen=True)
class AdditionLawReport:
    """Products probing the two exponential addition laws on the lattice."""

    translation_product: float
    translation_expected: float
    two_constant_product: float
    two_constant_expected: float

    @property
    def translation_residual(self) -> float:
        return abs(self.translation_product - self.translation_expected)

    @property
    def two_constant_residual(self) -> float:
        return abs(self.two_constant_product - self.two_constant_expected)


def addition_law_check(
    c: Correspondence, k: float, k2: float, m: int, n: int
) -> AdditionLawReport:
    """Check E(k,m)E(k,n) = E(k,m+n) and probe E(k,m)E(k2,m) vs E(k+k2,m).

    The same-momentum translation law survives discretization; the
    two-momentum law generically does not.
    """
    s = c.sigma_float()
    if abs(k) * s >= 1 or abs(k2) * s >= 1:
        raise DomainError("both momenta must satisfy |k sigma| < 1")
    return AdditionLawReport(
        umbral_exp(c, k, m) * umbral_exp(c, k, n),
        umbral_exp(c, k, m + n),
        umbral_exp(c, k, m) * umbral_exp(c, k2, m),
        umbral_exp(c, k + k2, m),
    )


@dataclass
class DiscreteFunction:
    """Samples of a lattice function on a contiguous index window."""

    sigma: float
    m_min: int
    values: list
    statuses: list = field(default_factory=list)

    def __post_init__(self):
        if not self.values:
            raise ValueError("window must contain at least one point")
        if not self.statuses:
            self.statuses = [SummationStatus.CONVERGED] * len(self.values)
        if len(self.statuses) != len(self.values):
            raise ValueError("statuses and values must align")

    @property
    def m_max(self) -> int:
        return self.m_min + len(self.values) - 1

    @property
    def window(self) -> tuple[int, int]:
        return self.m_min, self.m_max

    def indices(self) -> range:
        return range(self.m_min, self.m_max + 1)

    def value(self, m: int):
        if not self.m_min <= m <= self.m_max:
            raise KeyError(f"index {m} outside window {self.window}")
        return self.values[m - self.m_min]

    def status(self, m: int) -> SummationStatus:
        if not self.m_min <= m <= self.m_max:
            raise KeyError(f"index {m} outside window {self.window}")
        return self.statuses[m - self.m_min]

    def moduli(self) -> list[float]:
        return [abs(v) for v in self.values]


def _check_window(window: tuple[int, int]) -> tuple[int, int]:
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ValueError("window minimum exceeds maximum")
    return lo, hi


def tabulate_exp(c: Correspondence, k, window: tuple[int, int]) -> DiscreteFunction:
    """Closed-form exponential samples with the status the series would report."""
    lo, hi = _check_window(window)
    values = [umbral_exp(c, k, m) for m in range(lo, hi + 1)]
    statuses = [closed_form_status(c, k, m) for m in range(lo, hi + 1)]
    return DiscreteFunction(c.sigma_float(), lo, values, statuses)


def tabulate_exp_series(
    c: Correspondence, k, window: tuple[int, int], tol: float = 1e-12
) -> DiscreteFunction:
    """Series-summed exponential samples; statuses come from the summation itself."""
    lo, hi = _check_window(window)
    values, statuses = [], []
    for m in range(lo, hi + 1):
        v, st = umbral_exp_series(c, k, m, tol)
        values.append(v)
        statuses.append(st)
    return DiscreteFunction(c.sigma_float(), lo, values, statuses)


def tabulate_trig(
    c: Correspondence, k: float, window: tuple[int, int], which: str = "sin"
) -> DiscreteFunction:
    lo, hi = _check_window(window)
    values = [umbral_trig(c, k, m, which) for m in range(lo, hi + 1)]
    statuses = [closed_form_status(c, k, m) for m in range(lo, hi + 1)]
    return DiscreteFunction(c.sigma_float(), lo, values, statuses)
