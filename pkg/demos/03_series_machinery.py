#!/usr/bin/env python3
"""Bernoulli numbers, zeta values, and the even-order trig expansions.

The exact rational Bernoulli table drives three expansions; truncation error
is controlled by geometric tail bounds from c_n = 2 zeta(2n)/pi^(2n) < 2 zeta(2)/pi^(2n).
"""

import math

from seiffert_bounds import (
    bernoulli_even,
    cot_series,
    csc2_series,
    ratio_coefficient,
    ratio_series,
    truncated_series,
    zeta_even,
)

print("Bernoulli numbers B_{2n} (exact rationals, sign alternates):")
for n in range(1, 9):
    print(f"  B_{2*n:<3d} = {bernoulli_even(n)}")

print("\nzeta at even integers via the Bernoulli closed form:")
for q in (1, 2, 3, 5, 10):
    print(f"  zeta({2*q:2d}) = {zeta_even(q):.15f}")
print(f"  checks: pi^2/6  = {math.pi**2 / 6:.15f},  pi^4/90 = {math.pi**4 / 90:.15f}")

print("\ncot and 1/sin^2 partial sums (order 40) vs direct trig:")
for x in (0.05, 0.5, 1.2):
    print(f"  x={x:4}:  cot series={cot_series(x, 40):.15f}  trig={math.cos(x)/math.sin(x):.15f}")
    print(f"  {'':7} csc2 series={csc2_series(x, 40):.15f}  trig={1/math.sin(x)**2:.15f}")

print("\nthe combined ratio series R(theta) = cot(theta)/theta - 1/sin^2(theta) + 1:")
print(f"  leading signed coefficient: -{ratio_coefficient(1)}  (so R(0+) = 1/3)")
for theta in (1e-4, 0.3, math.pi / 4):
    print(f"  R({theta:.6g}) = {ratio_series(theta, 40):.15f}")
print(f"  R(pi/4) equals 4/pi - 1 = {4/math.pi - 1:.15f}")

print("\nproven tail bounds at truncation order N:")
for kind in ("cot", "csc2", "ratio"):
    for order in (5, 10, 40):
        ts = truncated_series(kind, order)
        print(f"  {kind:5s} N={order:2d} on (0, {ts.radius:.4f}]: remainder <= {ts.tail_bound:.3e}")
