#!/usr/bin/env python3
"""Partial-sum bounds: single-index, optimized order, and profiles over N."""

import math

import numpy as np

from gdseries import (
    DirichletSeries,
    LineGrid,
    builtin_coefficients,
    hardy_check,
    kronecker_norm,
    make_frequency,
    sigma_u_estimate,
    sn_bound,
    sn_bound_optimal,
    theorem_bound_profile,
)

# the bound for one cutoff: 3 c(k) (lambda_{N+1} / gap_N)^k per unit of norm
freq = make_frequency("linear", 5)
for variant in ("paper", "exact"):
    b = sn_bound(freq, 3, 1.0, variant)
    print(f"S_3 bound, k=1, {variant:5s}: {b.value:.12f}")
print("(paper value is 9e/pi =", 9.0 * math.e / math.pi, ")")

# the order k is free; minimizing over it never loses to k = 1
best = sn_bound_optimal(freq, 3)
print(f"optimized: k* = {best.k:.4f} bound = {best.value:.6f}")

# profiles over N show what drives each regime's envelope
print("\n== bound/envelope profiles ==")
freq_log = make_frequency("log", 2000)
prof = theorem_bound_profile(freq_log, "bc", Ns=range(500, 2000, 250))
for n, ratio in prof.csv_rows():
    print(f"BC   N={n:5d} ratio={ratio:.6f}")

freq_lin = make_frequency("linear", 400)
prof = theorem_bound_profile(freq_lin, "lc", params={"delta": 0.1}, Ns=range(300, 400, 20))
for n, ratio in prof.csv_rows():
    print(f"LC   N={n:5d} ratio={ratio:.6f}  (3e/pi = {3 * math.e / math.pi:.6f})")

# Hardy's inequality ties the plain coefficient sum to a weighted sup
D = DirichletSeries(make_frequency("linear", 8), builtin_coefficients("seeded-normal", 8, seed=2))
lhs, rhs = hardy_check(D, 4, 1.0)
print(f"\nhardy: lhs={lhs:.6f} <= rhs={rhs:.6f} margin={rhs - lhs:.6f}")

# Kronecker: on a rationally independent frequency the sup on the imaginary
# axis is the full coefficient mass
K = DirichletSeries(make_frequency("logprimes", 4), np.array([1.0, -2.0, 3.0j, 0.5]))
rep = kronecker_norm(K)
print(f"kronecker: value={rep.value} exact={rep.exact} status={rep.status}")

# a uniform-convergence abscissa estimate from line sups of partial sums
D = DirichletSeries(make_frequency("log", 128), builtin_coefficients("seeded-normal", 128, seed=9))
est = sigma_u_estimate(D, LineGrid(0.0, 0.0, 50.0, 0.05))
print(f"\nsigma_u estimate: {est.estimate:.4f} trend={est.trend}")
