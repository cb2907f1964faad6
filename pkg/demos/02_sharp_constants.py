#!/usr/bin/env python3
"""Re-deriving the sharp constants and probing their sharpness.

Both double inequalities reduce to the excess ratio
r(t) = (T - A)/(C - A) = (t/arctan t - 1)/t², which falls strictly from 1/3
at t -> 0 to 4/π - 1 at t -> 1.  The best blend constant is where
(2α-1)²/3 meets the infimum: α = (1 + sqrt(12/π - 3))/2.
"""

from seiffert_bounds import (
    RATIO_LOWER,
    RATIO_UPPER,
    blend_alpha_closed,
    blend_alpha_numeric,
    constants_report,
    excess_ratio,
    ratio_grid_scan,
    verify_blend_bounds,
    verify_ratio_bounds,
)

print("closed form  alpha =", blend_alpha_closed())
print("root-finder  alpha =", blend_alpha_numeric())
print("gap =", abs(blend_alpha_closed() - blend_alpha_numeric()))

print("\nexcess ratio r(t) sweeps (1/3 down to 4/pi-1):")
for t in (1e-6, 0.1, 0.5, 0.9, 1 - 1e-6):
    print(f"  r({t:.6g}) = {excess_ratio(t):.15f}")
print(f"  bounds: 4/pi-1 = {RATIO_LOWER:.15f},  1/3 = {RATIO_UPPER:.15f}")

print("\ngrid scan (10^5 points):")
scan = ratio_grid_scan(10**5)
print(f"  inf = {scan['inf']:.12f} (gap to 4/pi-1: {scan['inf'] - RATIO_LOWER:.2e})")
print(f"  sup = {scan['sup']:.12f} (gap to 1/3:    {RATIO_UPPER - scan['sup']:.2e})")
print(f"  strictly decreasing: {scan['monotone_decreasing']}")

print("\nbulk verification (10^5 samples each, boundary points included):")
for res in (verify_blend_bounds(10**5, seed=1), verify_ratio_bounds(10**5, seed=1)):
    print(
        f"  {res.suite}: pass={res.passed}  "
        f"min left slack {res.min_slack_left:.3e} at a/b={res.arg_left:.4g}, "
        f"min right slack {res.min_slack_right:.3e} at a/b={res.arg_right:.4g}"
    )

print("\nsharpness: nudging a constant past its optimum breaks the bound")
shifted = verify_blend_bounds(10**4, seed=1, alpha=blend_alpha_closed() + 1e-4)
w = shifted.witness
print(f"  alpha + 1e-4 fails at a/b = {w['ratio']:.6g} (blend {w['lhs']!r} > T {w['rhs']!r})")
safe = verify_blend_bounds(10**4, seed=1, alpha=blend_alpha_closed() - 1e-4)
print(f"  alpha - 1e-4 never fails: pass={safe.passed}")

print("\nfull constants report:")
for rep in constants_report():
    print(f"  {rep.name:12s} closed={rep.closed_form:.15f} discovered={rep.discovered:.15f} gap={rep.abs_gap:.1e}")
    print(f"  {'':12s} witness at a/b={rep.witness.ratio:.6g} after shift {rep.witness.shift:+.0e}")
