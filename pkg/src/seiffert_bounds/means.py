"""Bivariate means of two positive numbers.

Every mean here is symmetric, homogeneous of degree 1, and sits between
``min(a, b)`` and ``max(a, b)`` (strictly so for ``a != b``).  The diagonal
``a == b`` is handled by continuous extension: every mean returns ``a``.

The main cast:

* Seiffert mean      ``T(a,b) = (a-b) / (2 arctan((a-b)/(a+b)))``
* centroidal mean    ``Cbar(a,b) = 2(a² + ab + b²) / (3(a+b))``
* arithmetic ``A``, geometric ``G``, root-square ``S``, contra-harmonic ``C``
* power mean         ``M_p(a,b) = ((aᵖ + bᵖ)/2)^(1/p)`` with ``M_0 := G``
* blend mean         ``J(x) = Cbar(xa+(1-x)b, xb+(1-x)a)`` for x in [1/2, 1],
  which interpolates from ``A`` (x = 1/2) to ``Cbar`` (x = 1).

The scalar API takes a validated :class:`PositivePair`.  The ``*_values``
functions are vectorized cores operating on arrays *without validation*; the
bulk verification code builds on them.

All functions are pure; there is no shared mutable state, so everything here
is safe to call concurrently.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "DEFAULT_REL_TOL",
    "SEIFFERT_SERIES_CUTOFF",
    "PositivePair",
    "MeanKind",
    "seiffert_mean",
    "centroidal_mean",
    "classical_mean",
    "power_mean",
    "blend_mean",
    "mean_value",
    "t_over_arctan",
    "seiffert_values",
    "centroidal_values",
    "blend_values",
    "arithmetic_values",
    "geometric_values",
    "root_square_values",
    "contra_harmonic_values",
    "power_values",
]

#: Default relative comparison tolerance; individual call sites may override.
DEFAULT_REL_TOL = 1e-12

#: Below this |a-b|/(a+b), the Seiffert quotient is evaluated through the
#: reciprocal series of arctan(t)/t instead of the 0/0-prone raw quotient.
#: At the cutoff the first neglected series term is t¹⁰/11 < 1e-41.
SEIFFERT_SERIES_CUTOFF = 1e-4


@dataclass(frozen=True)
class PositivePair:
    """An ordered pair of strictly positive, finite reals.

    Raises :class:`DomainError` on non-finite or non-positive entries; ``a == b``
    is allowed (means extend continuously to the diagonal).
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"pair entries must be finite, got ({self.a!r}, {self.b!r})")
        if a <= 0.0 or b <= 0.0:
            raise DomainError(f"pair entries must be strictly positive, got ({a}, {b})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


class MeanKind(enum.Enum):
    """Tags for the means exposed through :func:`mean_value`."""

    SEIFFERT = "seiffert"
    ARITHMETIC = "arithmetic"
    GEOMETRIC = "geometric"
    ROOT_SQUARE = "root-square"
    CONTRA_HARMONIC = "contra-harmonic"
    CENTROIDAL = "centroidal"
    POWER = "power"


_CLASSICAL = (
    MeanKind.ARITHMETIC,
    MeanKind.GEOMETRIC,
    MeanKind.ROOT_SQUARE,
    MeanKind.CONTRA_HARMONIC,
    MeanKind.POWER,
)


def t_over_arctan(t):
    """``t / arctan(t)``, stable down to t = 0 (value 1 there).

    For |t| < :data:`SEIFFERT_SERIES_CUTOFF` uses
    ``1 / (1 - t²/3 + t⁴/5 - t⁶/7 + t⁸/9)``.  Array-capable.
    """
    t = np.asarray(t, dtype=float)
    u = t * t
    small = np.abs(t) < SEIFFERT_SERIES_CUTOFF
    us = np.where(small, u, 0.0)
    recip = 1.0 / (1.0 - us / 3.0 + us * us / 5.0 - us * us * us / 7.0 + us * us * us * us / 9.0)
    td = np.where(small, 0.5, t)
    return np.where(small, recip, td / np.arctan(td))


def seiffert_values(a, b):
    """Seiffert mean on positive array input (no validation)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    s = a + b
    return 0.5 * s * t_over_arctan((a - b) / s)


def centroidal_values(a, b):
    """Centroidal mean on positive array input (no validation)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    # diagonal short-circuit keeps the continuous extension bit-exact
    return np.where(a == b, a, 2.0 * ((a * a + b * b) + a * b) / (3.0 * (a + b)))


def blend_values(x, a, b):
    """Centroidal mean of the blended pair (xa+(1-x)b, xb+(1-x)a).

    The blend is formed as b + x·(a-b) and a - x·(a-b), which is exact on the
    diagonal and keeps the pair sum a+b bit-exact.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = x * (a - b)
    return centroidal_values(b + d, a - d)


def arithmetic_values(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return 0.5 * (a + b)


def geometric_values(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.where(a == b, a, np.sqrt(a * b))


def root_square_values(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.where(a == b, a, np.sqrt(0.5 * (a * a + b * b)))


def contra_harmonic_values(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.where(a == b, a, (a * a + b * b) / (a + b))


def power_values(a, b, p):
    """Power mean M_p in max- (or min-) factored form to dodge overflow.

    M_p = max·((1+rᵖ)/2)^(1/p) with r = min/max for p > 0, and the
    min-factored mirror for p < 0; p = 0 short-circuits to the geometric mean.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if p == 0.0:
        return geometric_values(a, b)
    hi = np.maximum(a, b)
    lo = np.minimum(a, b)
    r = lo / hi
    if p > 0.0:
        return hi * (0.5 * (1.0 + r**p)) ** (1.0 / p)
    return lo * (0.5 * (1.0 + r ** (-p))) ** (1.0 / p)


def seiffert_mean(pair: PositivePair) -> float:
    """Seiffert mean ``(a-b) / (2 arctan((a-b)/(a+b)))``, = a on the diagonal.

    Lies strictly between the arithmetic and root-square means for a != b.
    """
    _check_pair(pair)
    return float(seiffert_values(pair.a, pair.b))


def centroidal_mean(pair: PositivePair) -> float:
    """Centroidal mean ``2(a² + ab + b²) / (3(a+b))``."""
    _check_pair(pair)
    return float(centroidal_values(pair.a, pair.b))


def power_mean(pair: PositivePair, p: float) -> float:
    """p-th power mean, continuous and strictly increasing in p; M_0 = G."""
    _check_pair(pair)
    if not math.isfinite(p):
        raise DomainError(f"power exponent must be finite, got {p!r}")
    return float(power_values(pair.a, pair.b, float(p)))


def classical_mean(kind: MeanKind, pair: PositivePair, p: float | None = None) -> float:
    """One of A, G, S, C or M_p selected by ``kind``.

    ``p`` is required for (and only for) :attr:`MeanKind.POWER`.
    """
    _check_pair(pair)
    if kind not in _CLASSICAL:
        raise DomainError(
            f"{kind} is not a classical mean; use seiffert_mean/centroidal_mean"
        )
    if kind is MeanKind.POWER:
        if p is None:
            raise DomainError("Power mean requires an exponent p")
        return power_mean(pair, p)
    if p is not None:
        raise DomainError(f"exponent p is only meaningful for {MeanKind.POWER}")
    fn = {
        MeanKind.ARITHMETIC: arithmetic_values,
        MeanKind.GEOMETRIC: geometric_values,
        MeanKind.ROOT_SQUARE: root_square_values,
        MeanKind.CONTRA_HARMONIC: contra_harmonic_values,
    }[kind]
    return float(fn(pair.a, pair.b))


def blend_mean(x: float, pair: PositivePair) -> float:
    """Blend mean J(x): centroidal mean of (xa+(1-x)b, xb+(1-x)a).

    Requires 1/2 <= x <= 1.  J(1/2) = A(a,b) and J(1) = Cbar(a,b); J is
    continuous and strictly increasing on [1/2, 1] for a != b.
    """
    _check_pair(pair)
    x = float(x)
    if not (math.isfinite(x) and 0.5 <= x <= 1.0):
        raise DomainError(f"blend parameter must lie in [1/2, 1], got {x!r}")
    return float(blend_values(x, pair.a, pair.b))


def mean_value(kind: MeanKind, pair: PositivePair, p: float | None = None) -> float:
    """Dispatch any :class:`MeanKind` (CLI convenience)."""
    if kind is MeanKind.SEIFFERT:
        return seiffert_mean(pair)
    if kind is MeanKind.CENTROIDAL:
        return centroidal_mean(pair)
    return classical_mean(kind, pair, p)


def _check_pair(pair: PositivePair) -> None:
    if not isinstance(pair, PositivePair):
        raise DomainError(f"expected PositivePair, got {type(pair).__name__}")
