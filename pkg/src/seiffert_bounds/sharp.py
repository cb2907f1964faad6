"""Sharp constants and bulk verification of the two double inequalities.

Everything reduces to one scale-free profile.  For the pair (x, 1), x > 1,
put t = (x-1)/(x+1) in (0, 1); then, with A the arithmetic mean,

    seiffert/A        = t/arctan(t)
    centroidal/A      = 1 + t²/3        contra-harmonic/A = 1 + t²
    root-square/A     = sqrt(1 + t²)
    blend(p)/A        = 1 + (2p-1)²t²/3

(the p-blend multiplies the pair difference by 2p-1 and keeps the sum).  So
both double inequalities collapse onto the excess ratio

    r(t) = (seiffert - A)/(contra-harmonic - A) = (t/arctan(t) - 1)/t²,

which decreases strictly from 1/3 (t→0⁺) to 4/π-1 (t→1⁻):

* blend bounds:  blend(α) < seiffert < blend(β)  ⇔  (2α-1)²/3 < r(t) < (2β-1)²/3,
  sharp at α = (1+sqrt(12/π-3))/2 (where (2α-1)²/3 = 4/π-1) and β = 1;
* ratio bounds:  α₁C + (1-α₁)A < seiffert < β₁C + (1-β₁)A  ⇔  α₁ < r(t) < β₁,
  sharp at α₁ = 4/π-1 and β₁ = 1/3.

The verifiers assert strict inequality of the margin functions at every
sample and, for samples with t >= 1e-3, additionally compare the raw
double-precision means (below that the true slack ~t⁴ falls under one ulp of
the means themselves and raw doubles tie).  Margins near the limits are
evaluated through series forms that stay fully accurate, e.g.
1/3 - r(t) = (4/45)t² - (44/945)t⁴ + … obtained by exact long division of the
arctan series.

Sampling is log-uniform in a/b over (1, ratio_max] plus deterministic
near-boundary points {1+10⁻ᵏ} and {10⁺ᵏ}: sharpness lives at the boundary and
uniform sampling would miss it.  All scans are vectorized and pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from . import means
from .errors import BracketError, DomainError

__all__ = [
    "RATIO_LOWER",
    "RATIO_UPPER",
    "blend_alpha_closed",
    "blend_alpha_numeric",
    "excess_ratio_taylor",
    "excess_ratio",
    "excess_ratio_upper_margin",
    "excess_ratio_lower_margin",
    "ratio_grid_scan",
    "sample_ratios",
    "VerificationResult",
    "verify_blend_bounds",
    "verify_ratio_bounds",
    "verify_prior_bounds",
    "verify_ordering_chain",
    "SharpnessWitness",
    "SharpConstantReport",
    "constants_report",
    "CONSTANT_GAP_LIMIT",
]

#: Sharp bounds of the excess ratio: inf = 4/π - 1, sup = 1/3.
RATIO_LOWER = 4.0 / math.pi - 1.0
RATIO_UPPER = 1.0 / 3.0

#: Largest tolerated |closed_form - discovered| before reports count as failed.
CONSTANT_GAP_LIMIT = 1e-10

#: Below this t the raw-mean comparisons are skipped (true slack under 1 ulp).
_DIRECT_T_FLOOR = 1e-3

#: r(t) switches from the exact-coefficient series to the direct quotient here.
_SERIES_SWITCH = 0.5
_SERIES_TERMS = 32


def excess_ratio_taylor(order: int) -> tuple[Fraction, ...]:
    """Exact Taylor coefficients of r(t) in powers of t², by long division.

    Reciprocal of arctan(t)/t = Σ (-1)^k t^{2k}/(2k+1):  r(t) = Σ_k coef[k]·t^{2k}
    with coef = (1/3, -4/45, 44/945, -428/14175, …).
    """
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    a = [Fraction((-1) ** k, 2 * k + 1) for k in range(order + 1)]
    b = [Fraction(1)]
    for n in range(1, order + 1):
        b.append(-sum(a[j] * b[n - j] for j in range(1, n + 1)))
    return tuple(b[1:])


_RATIO_COEFFS = np.array([float(c) for c in excess_ratio_taylor(_SERIES_TERMS)])


def _ratio_series(u: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(u)
    for c in _RATIO_COEFFS[::-1]:
        acc = acc * u + c
    return acc


def _tail_series(u: np.ndarray) -> np.ndarray:
    """Σ_{k>=2} coef[k]·u^{k-1}  (so that 1/3 - r = -u·this… sign handled by caller)."""
    acc = np.zeros_like(u)
    for c in _RATIO_COEFFS[:0:-1]:
        acc = acc * u + c
    return acc


def _validated_t(t) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if arr.size and not np.all((arr > 0.0) & (arr < 1.0)):
        bad = arr[~((arr > 0.0) & (arr < 1.0))].ravel()
        raise DomainError(f"t must lie in (0, 1), got e.g. {bad[:3]}")
    return arr


def _excess_ratio_values(t: np.ndarray) -> np.ndarray:
    u = t * t
    small = np.abs(t) <= _SERIES_SWITCH
    td = np.where(small, 0.75, t)
    direct = (td / np.arctan(td) - 1.0) / (td * td)
    return np.where(small, _ratio_series(u), direct)


def _upper_margin_values(t: np.ndarray) -> np.ndarray:
    """1/3 - r(t) > 0 without cancellation (series below the switch)."""
    u = t * t
    small = np.abs(t) <= _SERIES_SWITCH
    td = np.where(small, 0.75, t)
    direct = RATIO_UPPER - (td / np.arctan(td) - 1.0) / (td * td)
    return np.where(small, -u * _tail_series(u), direct)


def excess_ratio(t):
    """r(t) = (t/arctan t - 1)/t² for t in (0, 1).  Scalar or array.

    Equals the mean composite (seiffert - A)/(contra-harmonic - A) at the pair
    ((1+t)/(1-t), 1).  Accurate to a few 1e-15 relative over the whole domain.
    """
    arr = _validated_t(t)
    out = _excess_ratio_values(arr)
    return float(out) if np.isscalar(t) or arr.ndim == 0 else out


def excess_ratio_upper_margin(t):
    """1/3 - r(t), strictly positive on (0, 1), fully accurate as t→0⁺."""
    arr = _validated_t(t)
    out = _upper_margin_values(arr)
    return float(out) if np.isscalar(t) or arr.ndim == 0 else out


def excess_ratio_lower_margin(t):
    """r(t) - (4/π - 1), strictly positive on (0, 1), → 0 as t→1⁻."""
    arr = _validated_t(t)
    out = _excess_ratio_values(arr) - RATIO_LOWER
    return float(out) if np.isscalar(t) or arr.ndim == 0 else out


def blend_alpha_closed() -> float:
    """The sharp lower blend constant (1 + sqrt(12/π - 3))/2 ≈ 0.95269157."""
    return 0.5 * (1.0 + math.sqrt(12.0 / math.pi - 3.0))


def blend_alpha_numeric() -> float:
    """The same constant recovered by root-finding, not by the closed form.

    Solves π - 3/(p²-p+1) = 0 (the t→∞ limit of the blend gap) on (1/2, 1);
    the limit is strictly increasing there with a sign change, so the bracket
    cannot fail.  Agrees with :func:`blend_alpha_closed` to well under 1e-12.
    """
    def limit(p: float) -> float:
        return math.pi - 3.0 / (p * p - p + 1.0)

    lo, hi = 0.5 + 1e-9, 1.0
    if not limit(lo) < 0.0 < limit(hi):
        raise BracketError("blend-gap limit failed to bracket a root on (1/2, 1)")
    return float(brentq(limit, lo, hi, xtol=1e-15, rtol=8.9e-16))


def sample_ratios(
    rng: np.random.Generator,
    n: int,
    ratio_max: float = 1e8,
    include_boundary: bool = True,
) -> np.ndarray:
    """Log-uniform ratios a/b in (1, ratio_max] plus boundary points."""
    if n < 1:
        raise DomainError(f"samples must be >= 1, got {n}")
    if not ratio_max > 1.0:
        raise DomainError(f"ratio_max must exceed 1, got {ratio_max}")
    x = np.exp(rng.random(n) * math.log(ratio_max))
    np.maximum(x, 1.0 + 1e-12, out=x)
    if include_boundary:
        near = 1.0 + 10.0 ** -np.arange(1.0, 10.0)
        far = 10.0 ** np.arange(1.0, math.floor(math.log10(max(ratio_max, 10.0))) + 1.0)
        extra = np.concatenate([near, far, [ratio_max]])
        x = np.concatenate([x, extra[extra <= ratio_max]])
    return x


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of one bulk suite.

    ``min_slack_left``/``min_slack_right`` are the smallest margins of the
    reduced ratio inequality (left: r - lower constant, right: upper constant
    - r), with the ratios where they occur; a witness is attached when the
    suite failed.
    """

    suite: str
    passed: bool
    n_samples: int
    min_slack_left: float
    min_slack_right: float
    arg_left: float
    arg_right: float
    witness: dict | None = None
    stats: dict = field(default_factory=dict)

    def as_report(self) -> dict:
        rep = {
            "suite": self.suite,
            "pass": self.passed,
            "n_samples": self.n_samples,
            "min_slack_left": self.min_slack_left,
            "min_slack_right": self.min_slack_right,
            "witness": self.witness,
        }
        rep.update(self.stats)
        return rep


def _result(suite, x, left, right, witness, n, stats=None) -> VerificationResult:
    kl = int(np.argmin(left))
    kr = int(np.argmin(right))
    return VerificationResult(
        suite=suite,
        passed=witness is None,
        n_samples=n,
        min_slack_left=float(left[kl]),
        min_slack_right=float(right[kr]),
        arg_left=float(x[kl]),
        arg_right=float(x[kr]),
        witness=witness,
        stats=stats or {},
    )


def _mean_side_witness(x: float, side: str, lhs: float, rhs: float) -> dict:
    return {"ratio": x, "side": side, "lhs": lhs, "rhs": rhs}


def verify_blend_bounds(
    samples: int = 10**6,
    *,
    seed: int = 0,
    ratio_max: float = 1e8,
    alpha: float | None = None,
    beta: float = 1.0,
    include_boundary: bool = True,
) -> VerificationResult:
    """Bulk check of blend(α) < seiffert < blend(β) over sampled ratios.

    Defaults verify the sharp statement (α the closed-form constant, β = 1).
    Any violated sample fails the suite with the offending ratio and both mean
    values attached; shifting α above the sharp constant is expected to fail
    at large ratios, shifting β below 1 near the diagonal.
    """
    alpha = blend_alpha_closed() if alpha is None else float(alpha)
    for name, val in (("alpha", alpha), ("beta", beta)):
        if not (math.isfinite(val) and 0.5 <= val <= 1.0):
            raise DomainError(f"{name} must lie in [1/2, 1], got {val!r}")
    rng = np.random.default_rng(seed)
    x = sample_ratios(rng, samples, ratio_max, include_boundary)
    t = (x - 1.0) / (x + 1.0)
    r = _excess_ratio_values(t)

    lo_const = (2.0 * alpha - 1.0) ** 2 / 3.0
    left = r - lo_const
    if beta == 1.0:
        right = _upper_margin_values(t)
    else:
        right = (2.0 * beta - 1.0) ** 2 / 3.0 - r

    witness = None
    bad = np.nonzero((left <= 0.0) | (right <= 0.0))[0]
    if len(bad) == 0:
        m = t >= _DIRECT_T_FLOOR
        xm = x[m]
        seif = means.seiffert_values(xm, 1.0)
        lo_mean = means.blend_values(alpha, xm, 1.0)
        hi_mean = means.blend_values(beta, xm, 1.0)
        direct_bad = np.nonzero(~((lo_mean < seif) & (seif < hi_mean)))[0]
        if len(direct_bad):
            k = int(direct_bad[0])
            side = "lower" if not lo_mean[k] < seif[k] else "upper"
            lhs, rhs = (
                (float(lo_mean[k]), float(seif[k]))
                if side == "lower"
                else (float(seif[k]), float(hi_mean[k]))
            )
            witness = _mean_side_witness(float(xm[k]), side, lhs, rhs)
    else:
        k = int(bad[0])
        side = "lower" if left[k] <= 0.0 else "upper"
        lhs = float(means.blend_values(alpha if side == "lower" else beta, x[k], 1.0))
        rhs = float(means.seiffert_values(x[k], 1.0))
        if side == "lower":
            witness = _mean_side_witness(float(x[k]), side, lhs, rhs)
        else:
            witness = _mean_side_witness(float(x[k]), side, rhs, lhs)
    return _result("thm1", x, left, right, witness, len(x))


def verify_ratio_bounds(
    samples: int = 10**6,
    *,
    seed: int = 0,
    ratio_max: float = 1e8,
    alpha1: float | None = None,
    beta1: float | None = None,
    include_boundary: bool = True,
) -> VerificationResult:
    """Bulk check of α₁ < r(t) < β₁ (and the equivalent mean combination).

    Reports the observed infimum/supremum, which approach 4/π-1 and 1/3
    monotonically from inside as the sampling reaches t → 1⁻ and t → 0⁺.
    """
    alpha1 = RATIO_LOWER if alpha1 is None else float(alpha1)
    beta1 = RATIO_UPPER if beta1 is None else float(beta1)
    rng = np.random.default_rng(seed)
    x = sample_ratios(rng, samples, ratio_max, include_boundary)
    t = (x - 1.0) / (x + 1.0)
    if include_boundary:
        t_extra = np.concatenate([10.0 ** -np.arange(1.0, 8.0), 1.0 - 10.0 ** -np.arange(1.0, 8.0)])
        t = np.concatenate([t, t_extra])
        x = np.concatenate([x, (1.0 + t_extra) / (1.0 - t_extra)])
    r = _excess_ratio_values(t)

    left = r - alpha1
    if beta1 == RATIO_UPPER:
        right = _upper_margin_values(t)
    else:
        right = beta1 - r

    witness = None
    bad = np.nonzero((left <= 0.0) | (right <= 0.0))[0]
    if len(bad):
        k = int(bad[0])
        side = "lower" if left[k] <= 0.0 else "upper"
        witness = _mean_side_witness(float(x[k]), side, float(r[k]), alpha1 if side == "lower" else beta1)
    else:
        m = t >= _DIRECT_T_FLOOR
        xm = x[m]
        seif = means.seiffert_values(xm, 1.0)
        arith = means.arithmetic_values(xm, 1.0)
        contra = means.contra_harmonic_values(xm, 1.0)
        lo_mean = alpha1 * contra + (1.0 - alpha1) * arith
        hi_mean = beta1 * contra + (1.0 - beta1) * arith
        direct_bad = np.nonzero(~((lo_mean < seif) & (seif < hi_mean)))[0]
        if len(direct_bad):
            k = int(direct_bad[0])
            side = "lower" if not lo_mean[k] < seif[k] else "upper"
            witness = _mean_side_witness(float(xm[k]), side, float(lo_mean[k]), float(seif[k]))
    ki, ks = int(np.argmin(r)), int(np.argmax(r))
    stats = {"inf": float(r[ki]), "sup": float(r[ks]), "arg_inf": float(x[ki]), "arg_sup": float(x[ks])}
    return _result("thm2", x, left, right, witness, len(x), stats)


def ratio_grid_scan(n: int = 10**6, t_min: float = 1e-7, t_max: float = 1.0 - 1e-7) -> dict:
    """Uniform grid scan of r(t) on [t_min, t_max]: extremes + monotonicity."""
    if not (0.0 < t_min < t_max < 1.0):
        raise DomainError("need 0 < t_min < t_max < 1")
    grid = np.linspace(t_min, t_max, n)
    vals = _excess_ratio_values(grid)
    diffs = np.diff(vals)
    return {
        "inf": float(vals[-1]),
        "sup": float(vals[0]),
        "arg_inf": float(grid[-1]),
        "arg_sup": float(grid[0]),
        "monotone_decreasing": bool(np.all(diffs < 0.0)),
        "n": n,
    }


# Prior sharp constants regression-checked against the same mean stack:
#   alpha_S·S + (1-alpha_S)·A < T < (2/3)·S + (1/3)·A
#   C(alpha_2-blend) < T < C(beta_2-blend)
_PRIOR_ALPHA_S = (4.0 - math.pi) / ((math.sqrt(2.0) - 1.0) * math.pi)
_PRIOR_BETA_S = 2.0 / 3.0
_PRIOR_ALPHA_2 = 0.5 * (1.0 + math.sqrt(4.0 / math.pi - 1.0))
_PRIOR_BETA_2 = (3.0 + math.sqrt(3.0)) / 6.0


def verify_prior_bounds(
    samples: int = 10**5,
    *,
    seed: int = 0,
    ratio_max: float = 1e8,
    include_boundary: bool = True,
) -> VerificationResult:
    """Regression of the four earlier sharp bounds at their stated constants.

    In profile form (u = sqrt(1+t²)):

    * lower S-combination:  r(t) > alpha_S/(1+u)      (equality only at t→1)
    * upper S-combination:  r(t) < (2/3)/(1+u)        (equality only at t→0)
    * lower C-blend:        r(t) > (2·alpha_2-1)² = 4/π-1
    * upper C-blend:        r(t) < (2·beta_2-1)²  = 1/3

    Cross-validates the Seiffert/root-square/arithmetic/contra-harmonic stack
    against the literature constants; raw-mean comparisons run for t >= 1e-3.
    """
    rng = np.random.default_rng(seed)
    x = sample_ratios(rng, samples, ratio_max, include_boundary)
    t = (x - 1.0) / (x + 1.0)
    r = _excess_ratio_values(t)
    u = np.sqrt(1.0 + t * t)

    m_lower_s = r - _PRIOR_ALPHA_S / (1.0 + u)
    # (2/3)/(1+u) - r, written against the stable upper margin:
    m_upper_s = _upper_margin_values(t) - t * t / (3.0 * (1.0 + u) ** 2)
    # (2·alpha_2-1)² = 4/π-1 and (2·beta_2-1)² = (sqrt(3)/3)² = 1/3 exactly, so
    # the C-blend margins coincide with the ratio margins (float-squaring the
    # constants would only inject ulp noise at the sharp ends).
    m_lower_c = r - RATIO_LOWER
    m_upper_c = _upper_margin_values(t)

    margins = {
        "lower_S_combination": m_lower_s,
        "upper_S_combination": m_upper_s,
        "lower_C_blend": m_lower_c,
        "upper_C_blend": m_upper_c,
    }
    witness = None
    for name, vals in margins.items():
        bad = np.nonzero(vals <= 0.0)[0]
        if len(bad):
            k = int(bad[0])
            witness = _mean_side_witness(float(x[k]), name, float(vals[k]), 0.0)
            break

    if witness is None:
        m = t >= _DIRECT_T_FLOOR
        xm = x[m]
        seif = means.seiffert_values(xm, 1.0)
        arith = means.arithmetic_values(xm, 1.0)
        rootsq = means.root_square_values(xm, 1.0)
        lo_s = _PRIOR_ALPHA_S * rootsq + (1.0 - _PRIOR_ALPHA_S) * arith
        hi_s = _PRIOR_BETA_S * rootsq + (1.0 - _PRIOR_BETA_S) * arith
        lo_c = means.contra_harmonic_values(
            _PRIOR_ALPHA_2 * xm + (1.0 - _PRIOR_ALPHA_2), _PRIOR_ALPHA_2 + (1.0 - _PRIOR_ALPHA_2) * xm
        )
        hi_c = means.contra_harmonic_values(
            _PRIOR_BETA_2 * xm + (1.0 - _PRIOR_BETA_2), _PRIOR_BETA_2 + (1.0 - _PRIOR_BETA_2) * xm
        )
        ok = (lo_s < seif) & (seif < hi_s) & (lo_c < seif) & (seif < hi_c)
        direct_bad = np.nonzero(~ok)[0]
        if len(direct_bad):
            k = int(direct_bad[0])
            witness = _mean_side_witness(float(xm[k]), "raw-mean", float(seif[k]), 0.0)

    left = np.minimum(m_lower_s, m_lower_c)
    right = np.minimum(m_upper_s, m_upper_c)
    stats = {name: float(vals.min()) for name, vals in margins.items()}
    return _result("priors", x, left, right, witness, len(x), stats)


def verify_ordering_chain(
    samples: int = 10**5,
    *,
    seed: int = 0,
    ratio_max: float = 1e6,
) -> VerificationResult:
    """Strict ordering G < A < centroidal < S < C plus A < seiffert < S.

    Pairs are (x·k, k) with x log-uniform in [1+2e-5, ratio_max] and the scale
    k log-uniform in [1e-3, 1e3].  The ratio floor keeps every consecutive
    slack (≥ ~t²/6 relative) two orders above double rounding, so the strict
    raw comparisons are meaningful at every sample.
    """
    rng = np.random.default_rng(seed)
    lo = 1.0 + 2e-5
    x = np.exp(rng.random(samples) * (math.log(ratio_max) - math.log(lo)) + math.log(lo))
    k = np.exp(rng.uniform(math.log(1e-3), math.log(1e3), samples))
    a, b = x * k, k
    g = means.geometric_values(a, b)
    am = means.arithmetic_values(a, b)
    cb = means.centroidal_values(a, b)
    s = means.root_square_values(a, b)
    c = means.contra_harmonic_values(a, b)
    tm = means.seiffert_values(a, b)
    ok = (g < am) & (am < cb) & (cb < s) & (s < c) & (am < tm) & (tm < s)
    witness = None
    bad = np.nonzero(~ok)[0]
    if len(bad):
        j = int(bad[0])
        witness = _mean_side_witness(float(x[j]), "chain", float(a[j]), float(b[j]))
    rel = lambda hi_v, lo_v: (hi_v - lo_v) / am  # noqa: E731 - local shorthand
    left = np.minimum.reduce([rel(am, g), rel(cb, am), rel(tm, am)])
    right = np.minimum.reduce([rel(s, cb), rel(c, s), rel(s, tm)])
    return _result("chain", x, left, right, witness, samples)


@dataclass(frozen=True)
class SharpnessWitness:
    """A ratio violating the bound once its constant moves past the optimum."""

    shift: float
    ratio: float
    lhs: float
    rhs: float


@dataclass(frozen=True)
class SharpConstantReport:
    """A discovered constant next to its closed-form reference."""

    name: str
    closed_form: float
    discovered: float
    abs_gap: float
    witness: SharpnessWitness | None

    def as_dict(self) -> dict:
        w = None
        if self.witness is not None:
            w = {
                "shift": self.witness.shift,
                "ratio": self.witness.ratio,
                "lhs": self.witness.lhs,
                "rhs": self.witness.rhs,
            }
        return {
            "name": self.name,
            "closed_form": self.closed_form,
            "discovered": self.discovered,
            "gap": self.abs_gap,
            "witness": w,
        }


def _blend_lower_violation_witness(alpha: float, shift: float) -> SharpnessWitness:
    """First large ratio where blend(alpha) >= seiffert (alpha pushed past sharp)."""
    xs = np.geomspace(10.0, 1e8, 600)
    blend = means.blend_values(alpha, xs, 1.0)
    seif = means.seiffert_values(xs, 1.0)
    idx = np.nonzero(blend > seif)[0]
    if len(idx) == 0:
        raise BracketError(f"no blend violation found for alpha={alpha}")
    k = int(idx[0])
    return SharpnessWitness(shift=shift, ratio=float(xs[k]), lhs=float(blend[k]), rhs=float(seif[k]))


def _blend_upper_violation_witness(beta: float, shift: float) -> SharpnessWitness:
    """Near-diagonal ratio where seiffert >= blend(beta) (beta pushed below 1)."""
    xs = 1.0 + np.geomspace(1e-3, 1e-1, 400)
    blend = means.blend_values(beta, xs, 1.0)
    seif = means.seiffert_values(xs, 1.0)
    idx = np.nonzero(seif > blend)[0]
    if len(idx) == 0:
        raise BracketError(f"no blend violation found for beta={beta}")
    k = int(idx[0])
    return SharpnessWitness(shift=shift, ratio=float(xs[k]), lhs=float(seif[k]), rhs=float(blend[k]))


def _ratio_violation_witness(const: float, side: str, shift: float) -> SharpnessWitness:
    ts = np.geomspace(1e-6, 1.0 - 1e-10, 2000) if side == "upper" else 1.0 - np.geomspace(1e-10, 0.5, 2000)
    r = _excess_ratio_values(ts)
    mask = r >= const if side == "upper" else r <= const
    idx = np.nonzero(mask)[0]
    if len(idx) == 0:
        raise BracketError(f"no ratio violation found for constant {const} ({side})")
    k = int(idx[0])
    xr = (1.0 + ts[k]) / (1.0 - ts[k])
    lhs, rhs = (float(r[k]), const) if side == "upper" else (const, float(r[k]))
    return SharpnessWitness(shift=shift, ratio=float(xr), lhs=lhs, rhs=rhs)


def constants_report(probe_shift: float = 1e-6) -> list[SharpConstantReport]:
    """All four sharp constants: closed form vs independent numeric discovery.

    * blend_alpha — root-finding on the t→∞ gap limit;
    * blend_beta  — supremum of the inverse map (1+sqrt(3r(t)))/2 as t→0⁺;
    * ratio_alpha / ratio_beta — extremes of r(t) on boundary-refined grids.

    Each report carries a sharpness witness: a ratio violating the bound with
    the constant pushed ``probe_shift`` past its optimum.
    """
    small_t = np.geomspace(1e-8, 1e-2, 400)
    big_t = 1.0 - np.geomspace(1e-10, 1e-2, 400)

    lam_c = blend_alpha_closed()
    lam_n = blend_alpha_numeric()
    rep_alpha = SharpConstantReport(
        name="blend_alpha",
        closed_form=lam_c,
        discovered=lam_n,
        abs_gap=abs(lam_c - lam_n),
        witness=_blend_lower_violation_witness(min(1.0, lam_c + probe_shift), probe_shift),
    )

    beta_disc = float(np.max(0.5 * (1.0 + np.sqrt(3.0 * _excess_ratio_values(small_t)))))
    rep_beta = SharpConstantReport(
        name="blend_beta",
        closed_form=1.0,
        discovered=beta_disc,
        abs_gap=abs(1.0 - beta_disc),
        witness=_blend_upper_violation_witness(1.0 - probe_shift, -probe_shift),
    )

    inf_disc = float(np.min(_excess_ratio_values(big_t)))
    rep_a1 = SharpConstantReport(
        name="ratio_alpha",
        closed_form=RATIO_LOWER,
        discovered=inf_disc,
        abs_gap=abs(RATIO_LOWER - inf_disc),
        witness=_ratio_violation_witness(RATIO_LOWER + probe_shift, "lower", probe_shift),
    )
    sup_disc = float(np.max(_excess_ratio_values(small_t)))
    rep_b1 = SharpConstantReport(
        name="ratio_beta",
        closed_form=RATIO_UPPER,
        discovered=sup_disc,
        abs_gap=abs(RATIO_UPPER - sup_disc),
        witness=_ratio_violation_witness(RATIO_UPPER - probe_shift, "upper", -probe_shift),
    )
    return [rep_alpha, rep_beta, rep_a1, rep_b1]
