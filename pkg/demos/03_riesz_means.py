#!/usr/bin/env python3
"""Riesz means R_x^k: the typical means, their identities, and the k -> 0 limit."""

import argparse
import math

import numpy as np

from gdseries import (
    DirichletSeries,
    LineGrid,
    beta_identity,
    c_exact,
    check_abel_integral,
    check_fractional_identity,
    make_frequency,
    paper_constant,
    proof_integral,
    riesz_mean,
    riesz_truncation,
    riesz_uniform_error,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x", type=float, default=20.0)
    args = ap.parse_args()

    freq = make_frequency("linear", 64)
    D = DirichletSeries(freq, np.ones(64, dtype=complex))
    s = 0.4 + 1.3j

    # k = 0 is the bare partial sum over lambda_n < x; k > 0 tapers the tail.
    # With unit coefficients the truncated polynomial's coefficients are the
    # taper weights (1 - lambda/x)^k themselves.
    print("== taper weights at x =", args.x, "==")
    for k in (0.0, 0.5, 1.0):
        tr = riesz_truncation(D, k, args.x)
        w = tr.coeffs.real
        print(f"k={k:3.1f} terms={len(w):3d} head={w[:3].round(6)} tail={w[-3:].round(6)}")

    for k in (0.0, 0.5, 1.0):
        print(f"R_x^{k}(D)(s) =", riesz_mean(D, k, args.x, s))

    # the integral identities behind the means; residuals are quadrature-level
    abel = check_abel_integral(D, 1.0, args.x + 0.5)
    frac = check_fractional_identity(D, 0.5, t=2.5, tau=1e-4)
    lhs, rhs = beta_identity(1.5, 2.5)
    print("\nabel residual      :", abel)
    print("fractional residual:", frac)
    print("beta residual      :", abs(lhs - rhs))

    # the norm constant, three ways: exact, its small-k form, and the
    # proof integral that produces it
    print("\n== constants at k=1 ==")
    print("c_exact(1)        =", c_exact(1.0), "(= e/2)")
    print("paper_constant(1) =", paper_constant(1.0), "(= e/pi, small-k form)")
    print("proof_integral(1) =", proof_integral(1.0), "(= pi/2)")

    # uniform error of R_x^1 against the limit function for the geometric
    # series on sigma = 0.5: the error halves with x but carries a visible
    # constant (x * err is nearly flat), so decay is honest but not fast
    ref = lambda s: 1.0 / (1.0 - np.exp(-np.asarray(s, dtype=complex)))
    freq128 = make_frequency("linear", 128)
    G = DirichletSeries(freq128, np.ones(128, dtype=complex), reference=ref)
    grid = LineGrid(0.5, 0.0, 2.0 * math.pi, 1e-3)
    print("\n== uniform error on sigma = 0.5 ==")
    for x in (10.0, 20.0, 40.0, 80.0):
        err = riesz_uniform_error(G, 1.0, 0.5, x, grid)
        print(f"x={x:5.1f} sup-error={err:.6f} x*err={x * err:.3f}")


if __name__ == "__main__":
    main()
