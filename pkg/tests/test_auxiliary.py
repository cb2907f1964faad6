"""Auxiliary chain: endpoint identities, derivative structure, critical points."""

import math
from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest

from seiffert_bounds import (
    BlendGapFamily,
    BracketError,
    DomainError,
    blend_alpha_closed,
    counterexample_witness,
    derivative_identity_residual,
    locate_critical_points,
)
from seiffert_bounds import means, oracle

SHARP = blend_alpha_closed()

# Frozen from 60-digit evaluation.
CHAIN3_AT_1_SHARP = -0.2704220486917679  # 18/pi - 6
LEAD_COEFF_SHARP = 0.37714056243239186  # (36 + 18 pi - 9 pi^2)/pi^2
PI_MINUS_3 = 0.14159265358979323

# Independent root-finding (mpmath.findroot on the printed polynomials,
# development-time oracle) froze the expected ladder at the sharp parameter:
T0_REF = 2.07554878324807
T1_REF = 3.4444307019363785
T2_REF = 4.793669301769289
T3_REF = 6.1393103891675604


def _rational_coeff_lists(p: Fraction):
    """Ascending t-power coefficient lists exactly as printed, in Fractions."""
    c1 = 4 * p**4 - 8 * p**3 + 18 * p**2 - 14 * p + 1
    c2 = 4 * p**4 - 8 * p**3 + 9 * p**2 - 5 * p + 1
    c3 = 4 * p**4 - 8 * p**3 + 6 * p**2 - 2 * p + 1
    return {
        1: [c1, -4 * c2, 6 * c3, -4 * c2, c1],
        2: [-c2, 3 * c3, -3 * c2, c1],
        3: [c3, -2 * c2, c1],
        4: [-c2, c1],
    }


def _poly_eval(coeffs, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _shifted_eval(level: int, p: Fraction, t: Fraction) -> Fraction:
    """The library's shifted forms, replayed in exact rational arithmetic."""
    coeffs = _rational_coeff_lists(p)
    c1 = coeffs[4][1]
    u = p * p - p
    s = t - 1
    if level == 1:
        return 36 * u * (s**2 + s**3) + c1 * s**4
    if level == 2:
        return 18 * u * s + 27 * u * s**2 + c1 * s**3
    if level == 3:
        return 6 * u + 18 * u * s + c1 * s**2
    return 9 * u + c1 * s


class TestChainPolynomials:
    def test_shifted_equals_printed_exactly(self):
        # degree <= 4: agreement at 5 rational points per level is identity
        rng = np.random.default_rng(0)
        pts = [Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 3), Fraction(10)]
        for _ in range(100):
            p = Fraction(int(rng.integers(501, 1000)), 1000)  # p in (1/2, 1)
            lists = _rational_coeff_lists(p)
            for level in (1, 2, 3, 4):
                for t in pts:
                    assert _shifted_eval(level, p, t) == _poly_eval(lists[level], t)

    def test_derivative_chain_exact(self):
        # chain2 = chain1'/4, chain3 = chain2'/3, chain4 = chain3'/2
        rng = np.random.default_rng(1)
        for _ in range(100):
            p = Fraction(int(rng.integers(501, 1000)), 1000)
            lists = _rational_coeff_lists(p)
            for level, divisor in ((1, 4), (2, 3), (3, 2)):
                derived = [k * c for k, c in enumerate(lists[level]) if k > 0]
                assert [c / divisor for c in derived] == lists[level + 1]

    def test_endpoint_identities(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            p = float(rng.uniform(0.5 + 1e-6, 1.0))
            fam = BlendGapFamily(p)
            assert fam.chain(1.0, 1) == 0.0
            assert fam.chain(1.0, 2) == 0.0
            assert fam.chain(1.0, 3) == pytest.approx(6 * p * p - 6 * p, rel=1e-13)
            assert fam.chain(1.0, 4) == pytest.approx(9 * p * p - 9 * p, rel=1e-13)

    def test_chain3_at_sharp(self):
        fam = BlendGapFamily(SHARP)
        assert fam.chain(1.0, 3) == pytest.approx(CHAIN3_AT_1_SHARP, rel=1e-13)
        assert fam.chain(1.0, 4) == pytest.approx(1.5 * CHAIN3_AT_1_SHARP, rel=1e-13)

    def test_leading_coefficient_at_sharp(self):
        c1 = BlendGapFamily(SHARP).chain_coefficients()[0]
        assert c1 == pytest.approx(LEAD_COEFF_SHARP, rel=1e-13)
        assert c1 > 0.0

    def test_unit_parameter_quartic(self):
        fam = BlendGapFamily(1.0)
        assert fam.chain(3.0, 1) == 16.0
        ts = 1.0 + np.geomspace(1e-9, 99.0, 10_000)
        got = fam.chain_values(ts, 1)
        ref = (ts - 1.0) ** 4
        assert np.max(np.abs(got - ref) / ref) < 1e-13

    def test_level_validation(self):
        fam = BlendGapFamily(0.9)
        for level in (0, 5, -1):
            with pytest.raises(DomainError):
                fam.chain(2.0, level)


class TestFamilyBasics:
    @pytest.mark.parametrize("p", [0.5, 0.4, 1.2, -1.0, math.nan])
    def test_parameter_validation(self, p):
        with pytest.raises(DomainError):
            BlendGapFamily(p)

    def test_unit_parameter_allowed(self):
        assert BlendGapFamily(1.0).p == 1.0

    def test_gap_domain(self):
        fam = BlendGapFamily(0.8)
        for t in (1.0, 0.5, -2.0, math.inf):
            with pytest.raises(DomainError):
                fam.gap(t)

    def test_gap_vanishes_at_diagonal_limit(self):
        fam = BlendGapFamily(SHARP)
        assert abs(fam.gap(1.0 + 1e-9)) < 1e-8

    def test_gap_limit_unit_parameter(self):
        fam = BlendGapFamily(1.0)
        assert abs(fam.gap(1e8) - PI_MINUS_3) < 1e-6
        assert fam.limit_at_infinity() == pytest.approx(PI_MINUS_3, rel=1e-13)

    def test_gap_limit_sharp_parameter(self):
        fam = BlendGapFamily(SHARP)
        assert abs(fam.gap(1e8)) < 1e-6

    def test_gap_limit_generic(self):
        fam = BlendGapFamily(0.8)
        assert abs(fam.gap(1e9) - fam.limit_at_infinity()) < 1e-6

    def test_gap_branch_continuity(self):
        # the two evaluation branches must agree where they meet (t = 2);
        # |gap'| <= ~0.1 there, so the true change over the 4e-13 straddle is < 5e-14
        for p in (0.6, 0.8, SHARP, 1.0):
            fam = BlendGapFamily(p)
            assert fam.gap(2.0 * (1 - 1e-13)) == pytest.approx(fam.gap(2.0 * (1 + 1e-13)), abs=2e-13)

    def test_gap_vs_oracle(self):
        for p in (0.7, SHARP, 1.0):
            fam = BlendGapFamily(p)
            with mp.workdps(40):
                for t in (1.001, 1.7, 2.0, 6.14, 55.0, 1e4):
                    tm, pm = mp.mpf(t), mp.mpf(p)
                    u1 = pm * tm + 1 - pm
                    u2 = pm + (1 - pm) * tm
                    q = u1 * u1 + u1 * u2 + u2 * u2
                    ref = 4 * mp.atan((tm - 1) / (tm + 1)) - 3 * (tm * tm - 1) / q
                    assert abs(fam.gap(t) - float(ref)) < 1e-14 + 1e-13 * abs(float(ref))


class TestFactorization:
    def test_identity_bulk(self):
        # blend(p) - seiffert = difference_factor * gap, to 1e-12 of the mean scale
        rng = np.random.default_rng(5)
        p = rng.uniform(0.55, 0.999, 2000)
        t = np.exp(rng.uniform(math.log(1.2), math.log(200.0), 2000))
        worst = 0.0
        for pi, ti in zip(p, t):
            fam = BlendGapFamily(pi)
            lhs = float(means.blend_values(pi, ti, 1.0) - means.seiffert_values(ti, 1.0))
            rhs = float(fam.difference_factor(ti)) * fam.gap(ti)
            scale = max(
                float(means.seiffert_values(ti, 1.0)), float(means.blend_values(pi, ti, 1.0))
            )
            worst = max(worst, abs(lhs - rhs) / scale)
        assert worst < 1e-12

    def test_identity_high_precision_spots(self):
        # the factorization is exact algebra: mpmath agreement to ~working precision
        with mp.workdps(50):
            for pv, tv in [(0.6, 1.5), (0.8, 3.0), (0.97, 40.0), (SHARP, 6.14), (0.999, 1.01)]:
                p, t = mp.mpf(pv), mp.mpf(tv)
                u1 = p * t + 1 - p
                u2 = p + (1 - p) * t
                q = u1 * u1 + u1 * u2 + u2 * u2
                blend = 2 * (u1 * u1 + u1 * u2 + u2 * u2) / (3 * (u1 + u2))
                seif = (t - 1) / (2 * mp.atan((t - 1) / (t + 1)))
                gap = 4 * mp.atan((t - 1) / (t + 1)) - 3 * (t * t - 1) / q
                factor = q / (6 * (1 + t) * mp.atan((t - 1) / (t + 1)))
                assert abs((blend - seif) - factor * gap) < mp.mpf("1e-30")

    def test_factor_positive(self):
        fam = BlendGapFamily(0.77)
        ts = np.geomspace(1.0 + 1e-8, 1e8, 100)
        assert np.all(fam.difference_factor(ts) > 0.0)


class TestDerivativeIdentity:
    @pytest.mark.parametrize("p", [0.8, 1.0, SHARP])
    def test_residual_contract(self, p):
        fam = BlendGapFamily(p)
        grid = np.geomspace(1.0001, 50.0, 100)
        assert derivative_identity_residual(fam, grid) <= 1e-6

    def test_near_diagonal_points(self):
        fam = BlendGapFamily(SHARP)
        grid = np.geomspace(1.001, 1.1, 50)
        assert derivative_identity_residual(fam, grid) <= 1e-6

    def test_grid_validation(self):
        fam = BlendGapFamily(0.8)
        with pytest.raises(DomainError):
            derivative_identity_residual(fam, [1.0000001, 2.0])


class TestCriticalPoints:
    def test_ladder_at_sharp(self):
        report = locate_critical_points(BlendGapFamily(SHARP))
        assert 1.0 < report.t0 < report.t1 < report.t2 < report.t3
        assert max(report.residuals) < 1e-10
        assert report.t0 == pytest.approx(T0_REF, rel=1e-9)
        assert report.t1 == pytest.approx(T1_REF, rel=1e-9)
        assert report.t2 == pytest.approx(T2_REF, rel=1e-9)
        assert report.t3 == pytest.approx(T3_REF, rel=1e-9)

    def test_brackets_verified_post_hoc(self):
        fam = BlendGapFamily(SHARP)
        report = locate_critical_points(fam)
        for root, level in zip((report.t0, report.t1, report.t2, report.t3), (4, 3, 2, 1)):
            lo, hi = root * (1 - 1e-9), root * (1 + 1e-9)
            assert fam.chain(lo, level) < 0.0 < fam.chain(hi, level)

    def test_gap_negative_on_wide_grid(self):
        fam = BlendGapFamily(SHARP)
        ts = 1.0 + np.geomspace(1e-5, 1e8 - 1.0, 10_000)
        assert np.all(fam.gap_values(ts) < 0.0)

    def test_chain_limits_grow(self):
        # every chain level is positive and increasing between t = 1e7 and 1e8
        fam = BlendGapFamily(SHARP)
        for level in (1, 2, 3, 4):
            left, right = fam.chain(1e7, level), fam.chain(1e8, level)
            assert 0.0 < left < right

    def test_unit_parameter_gap_increasing_positive(self):
        # grid floor 2e-3: below it the true value ~s^5/90 sinks under the
        # ~4e-19 evaluation noise; 300 log points keep consecutive increments
        # (~20% of the value) well above that noise too
        fam = BlendGapFamily(1.0)
        ts = 1.0 + np.geomspace(2e-3, 99.0, 300)
        vals = fam.gap_values(ts)
        assert np.all(vals > 0.0)
        assert np.all(np.diff(vals) > 0.0)

    def test_bracket_failure_far_from_sharp(self):
        # at p = 0.8 the quartic's leading coefficient is negative: no ladder
        with pytest.raises(BracketError):
            locate_critical_points(BlendGapFamily(0.8))


class TestWitnesses:
    def test_above_alpha(self):
        w = counterexample_witness(0.97, "above_alpha")
        assert 1.0 < w.t < 1e12
        assert w.blend_value > w.seiffert_value
        assert oracle.blend(0.97, w.t, 1.0, dps=40) > oracle.seiffert(w.t, 1.0, dps=40)

    def test_below_one_near_diagonal(self):
        w = counterexample_witness(0.99, "below_one")
        assert 1.0 < w.t < 1.5
        assert w.seiffert_value > w.blend_value
        assert oracle.seiffert(w.t, 1.0, dps=40) > oracle.blend(0.99, w.t, 1.0, dps=40)

    def test_below_one_mid_parameter(self):
        w = counterexample_witness(0.75, "below_one")
        assert 1.0 < w.t < 1.01

    def test_side_validation(self):
        with pytest.raises(DomainError):
            counterexample_witness(0.94, "above_alpha")  # below the sharp constant
        with pytest.raises(DomainError):
            counterexample_witness(1.0, "below_one")
        with pytest.raises(DomainError):
            counterexample_witness(0.8, "sideways")
