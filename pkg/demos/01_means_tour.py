#!/usr/bin/env python3
"""Tour of the bivariate means and their ordering.

Every mean lives strictly between min(a,b) and max(a,b), is symmetric, and
scales linearly with its arguments.  For a != b the classical chain is

    G < A < centroidal < S < C,

with the Seiffert mean sandwiched as A < T < S, and the blend mean J(x)
sweeping continuously from A (x = 1/2) up to the centroidal mean (x = 1).
"""

import numpy as np

from seiffert_bounds import (
    MeanKind,
    PositivePair,
    blend_mean,
    centroidal_mean,
    classical_mean,
    seiffert_mean,
)

pair = PositivePair(1.0, 3.0)
print(f"pair (a, b) = ({pair.a}, {pair.b})")
print(f"  geometric        G = {classical_mean(MeanKind.GEOMETRIC, pair):.12f}")
print(f"  arithmetic       A = {classical_mean(MeanKind.ARITHMETIC, pair):.12f}")
print(f"  Seiffert         T = {seiffert_mean(pair):.12f}")
print(f"  centroidal           {centroidal_mean(pair):.12f}")
print(f"  root-square      S = {classical_mean(MeanKind.ROOT_SQUARE, pair):.12f}")
print(f"  contra-harmonic  C = {classical_mean(MeanKind.CONTRA_HARMONIC, pair):.12f}")

print("\npower mean sweep (strictly increasing in p, M_0 = G, M_2 = S):")
for p in (-10.0, -1.0, 0.0, 1.0, 2.0, 10.0):
    print(f"  M_{p:+5.1f} = {classical_mean(MeanKind.POWER, pair, p):.12f}")

print("\nblend mean J(x) interpolates arithmetic -> centroidal:")
for x in np.linspace(0.5, 1.0, 6):
    print(f"  J({x:.1f}) = {blend_mean(float(x), pair):.12f}")

t = seiffert_mean(pair)
lo = blend_mean(0.5, pair)
hi = blend_mean(1.0, pair)
print(f"\nJ(1/2) = A = {lo:.12f} < T = {t:.12f} < J(1) = centroidal = {hi:.12f}")
print("so some x* in (1/2, 1) crosses T; the sharp bounds pin x* down exactly.")

print("\nnear-diagonal stability: T at |a-b|/(a+b) = 1e-12 stays fully accurate")
tiny = PositivePair((1 + 1e-12) / (1 - 1e-12), 1.0)
print(f"  T = {seiffert_mean(tiny)!r} (arithmetic mean = {classical_mean(MeanKind.ARITHMETIC, tiny)!r})")
