"""Partial-sum bounds and abscissa estimators.

The central inequality: for a series bounded on the closed right half-plane,
the N-th partial sum at s = 0 satisfies

    |S_N| <= 3 * c(k) * (lambda_{N+1} / gap_N)^k * sup-norm,

where gap_N = lambda_{N+1} - lambda_N and c(k) is a Riesz norm constant
(``variant="paper"`` uses the small-k form (e/pi) Gamma(k+1)/k, ``"exact"``
uses the integral-exact value; see ``riesz.c_exact``).  Everything here is
computed in log space so that frequencies like e^{e^{lambda}} growth do not
overflow: profile rows carry log-bounds plus bound/envelope ratios, which stay
O(1) by design.

Estimators for the convergence, absolute-convergence and uniform abscissas
share one windowed-limsup rule (see ``estimates``); each feeds it the ratio
sequence appropriate to its abscissa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .estimates import AbscissaEstimate, windowed_limsup
from .frequency import Frequency, refine_gaps
from .series import DirichletSeries, LineGrid

__all__ = [
    "SnBound",
    "sn_bound",
    "sn_bound_optimal",
    "ProfileRow",
    "ProfileReport",
    "theorem_bound_profile",
    "sigma_c_estimate",
    "sigma_a_estimate",
    "sigma_u_estimate",
    "delta_sequence_estimate",
    "hardy_check",
    "KroneckerNorm",
    "kronecker_norm",
]

_LOG_3 = math.log(3.0)
_LOG_E_OVER_PI = 1.0 - math.log(math.pi)


def _log_c(k: float, log_k: Optional[float], variant: str) -> float:
    """log of the norm constant c(k), with log k supplied symbolically.

    ``log_k`` defaults to log(k); passing it explicitly keeps tiny orders like
    k = e^{-delta lambda} exact after k itself underflows to zero.
    """
    if variant not in ("paper", "exact"):
        raise ValueError(f"unknown constant variant {variant!r}")
    if log_k is None:
        if k <= 0:
            raise ValueError("need k > 0")
        log_k = math.log(k)
    base = _LOG_E_OVER_PI + math.lgamma(1.0 + k) - log_k
    if variant == "paper":
        return base
    # exact variant: multiply by k * (sqrt(pi)/2) Gamma(k/2) / Gamma((k+1)/2).
    # Via Gamma(k/2) = 2 Gamma(1 + k/2) / k the explicit log k cancels, so the
    # formula survives k underflowing to 0 (it then equals the paper form, its
    # small-k limit).
    return (
        base
        + 0.5 * math.log(math.pi)
        + math.lgamma(1.0 + k / 2.0)
        - math.lgamma((k + 1.0) / 2.0)
    )


@dataclass(frozen=True)
class SnBound:
    """One partial-sum bound: |S_N| <= 3 c(k) (lambda_{N+1}/gap_N)^k * norm."""

    N: int
    k: float
    variant: str
    log_factor: float
    value: float

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "k": self.k,
            "variant": self.variant,
            "logFactor": self.log_factor,
            "value": self.value,
        }


def sn_bound(freq: Frequency, N: int, k: float, variant: str = "paper") -> SnBound:
    """Bound factor for |S_N| per unit of half-plane sup-norm.

    Needs lambda_{N+1}, so N + 1 <= M; indices are 1-based.  ``value`` is the
    factor itself (may overflow to inf for extreme frequencies; ``log_factor``
    never does).
    """
    if not 0 < k <= 1:
        raise ValueError("need 0 < k <= 1")
    if not 1 <= N < freq.M:
        raise ValueError(f"need 1 <= N < M = {freq.M} (the bound uses lambda_(N+1))")
    lam_next = float(freq.values[N])
    if lam_next <= 0:
        raise ValueError("need lambda_(N+1) > 0")
    log_gap = float(freq.log_gap_values()[N - 1])
    log_factor = _LOG_3 + _log_c(k, None, variant) + k * (math.log(lam_next) - log_gap)
    with np.errstate(over="ignore"):
        value = float(np.exp(log_factor))
    return SnBound(N=N, k=k, variant=variant, log_factor=log_factor, value=value)


def sn_bound_optimal(freq: Frequency, N: int, variant: str = "paper") -> SnBound:
    """Minimise the sn_bound factor over k in (0, 1].

    The log-factor is sampled on a geometric k-grid; if the samples are
    unimodal the bracket around the minimum is refined by golden-section
    search, otherwise the best grid point is returned as-is.
    """
    ks = np.geomspace(1e-6, 1.0, 64)
    vals = np.array([sn_bound(freq, N, float(k), variant).log_factor for k in ks])
    i = int(np.argmin(vals))
    interior_minima = 0
    for j in range(1, len(ks) - 1):
        if vals[j] < vals[j - 1] and vals[j] < vals[j + 1]:
            interior_minima += 1
    if interior_minima > 1:
        return sn_bound(freq, N, float(ks[i]), variant)
    lo = float(ks[max(0, i - 1)])
    hi = float(ks[min(len(ks) - 1, i + 1)])
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc = sn_bound(freq, N, c, variant).log_factor
    fd = sn_bound(freq, N, d, variant).log_factor
    for _ in range(80):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = sn_bound(freq, N, c, variant).log_factor
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = sn_bound(freq, N, d, variant).log_factor
        if b - a < 1e-12 * max(1.0, b):
            break
    k_best = (a + b) / 2.0
    best = sn_bound(freq, N, k_best, variant)
    grid_best = sn_bound(freq, N, float(ks[i]), variant)
    return best if best.log_factor <= grid_best.log_factor else grid_best


# ---------------------------------------------------------------------------
# theorem bound profiles


@dataclass(frozen=True)
class ProfileRow:
    N: int
    log_bound: float
    ratio: float


@dataclass(frozen=True)
class ProfileReport:
    """Bound/envelope ratios along a frequency, per growth regime.

    regimes: "bc" (gap >= C e^{-(l+delta) lambda}, envelope lambda_N, order
    k = 1/lambda_N), "lc" (gap >= C e^{-e^{delta lambda}}, envelope
    e^{delta lambda_N}, k = e^{-delta lambda_N}) and "poly" (gap >=
    C e^{-(l+delta) lambda^d}, envelope lambda_N^d, k = 1/lambda_N^d).
    Orders are clamped to at most 1.  Each row's ratio is
    exp(log_bound - log_envelope): the partial-sum bound divided by the
    growth envelope the regime's theorem predicts, so a bounded ratio along N
    is the observable form of the theorem.
    """

    regime: str
    variant: str
    params: Dict[str, float]
    refined: bool
    rows: Tuple[ProfileRow, ...]

    def to_dict(self) -> dict:
        return {
            "regime": self.regime,
            "variant": self.variant,
            "params": dict(self.params),
            "refined": self.refined,
            "rows": [
                {"N": r.N, "logBound": r.log_bound, "ratio": r.ratio} for r in self.rows
            ],
        }

    def csv_rows(self) -> List[Tuple[int, float]]:
        """(N, ratio) pairs; the ratio is the plot-ready bounded quantity."""
        return [(r.N, r.ratio) for r in self.rows]


def _regime_log_k_and_envelope(
    regime: str, lam: float, params: Dict[str, float]
) -> Tuple[float, float]:
    """(log k before clamping, log envelope) at lambda_N for one regime."""
    if regime == "bc":
        return -math.log(lam), math.log(lam)
    if regime == "lc":
        delta = params["delta"]
        return -delta * lam, delta * lam
    if regime == "poly":
        d = params["d"]
        return -d * math.log(lam), d * math.log(lam)
    raise ValueError(f"unknown regime {regime!r}")


def theorem_bound_profile(
    freq: Frequency,
    regime: str,
    params: Optional[Dict[str, float]] = None,
    Ns: Optional[Sequence[int]] = None,
    variant: str = "paper",
    auto_refine: bool = True,
) -> ProfileReport:
    """Per-N bound factors with the regime's natural order choice.

    For each N the order is k = min(1, exp(regime log-k)) and the row records
    log_bound = log 3 + log c(k) + k (log lambda_{N+1} - log gap_N) together
    with ratio = exp(log_bound - log_envelope).  Under the regime's gap
    condition the ratio is bounded along N, which is what the profile is for.

    Frequencies with a gap above 1 are refined first (``auto_refine``), since
    the bound is monotone under gap refinement while the envelope is not.
    """
    params = dict(params or {})
    if regime == "lc" and "delta" not in params:
        raise ValueError("lc regime needs params['delta']")
    if regime == "poly" and "d" not in params:
        raise ValueError("poly regime needs params['d']")
    refined = False
    if auto_refine and freq.M >= 2 and float(np.max(freq.gaps)) > 1.0:
        freq = refine_gaps(freq)
        refined = True
    if Ns is None:
        Ns = range(1, freq.M)
    rows = []
    log_gaps = freq.log_gap_values()
    for N in Ns:
        if not 1 <= N < freq.M:
            raise ValueError(f"need 1 <= N < M = {freq.M}")
        lam_N = float(freq.values[N - 1])
        lam_next = float(freq.values[N])
        if lam_N <= 0:
            continue
        log_k_raw, log_env = _regime_log_k_and_envelope(regime, lam_N, params)
        log_k = min(log_k_raw, 0.0)
        k = math.exp(log_k)
        log_bound = (
            _LOG_3
            + _log_c(k, log_k, variant)
            + k * (math.log(lam_next) - float(log_gaps[N - 1]))
        )
        diff = log_bound - log_env
        ratio = math.exp(diff) if diff < 700.0 else math.inf
        rows.append(ProfileRow(N=int(N), log_bound=log_bound, ratio=ratio))
    return ProfileReport(
        regime=regime, variant=variant, params=params, refined=refined, rows=tuple(rows)
    )


# ---------------------------------------------------------------------------
# abscissa estimators


def sigma_c_estimate(D: DirichletSeries) -> AbscissaEstimate:
    """Windowed limsup of log |sum_{n<=N} a_n| / lambda_N (convergence)."""
    lam = D.freq.values
    csum = np.cumsum(D.coeffs)
    pairs = []
    for N in range(1, D.M + 1):
        if lam[N - 1] <= 0:
            continue
        mag = abs(csum[N - 1])
        if mag == 0:
            continue
        pairs.append((N, math.log(mag) / float(lam[N - 1])))
    return windowed_limsup("sigma_c", pairs)


def sigma_a_estimate(D: DirichletSeries) -> AbscissaEstimate:
    """Windowed limsup of log (sum_{n<=N} |a_n|) / lambda_N (absolute)."""
    lam = D.freq.values
    csum = np.cumsum(np.abs(D.coeffs))
    pairs = []
    for N in range(1, D.M + 1):
        if lam[N - 1] <= 0:
            continue
        mag = float(csum[N - 1])
        if mag == 0:
            continue
        pairs.append((N, math.log(mag) / float(lam[N - 1])))
    return windowed_limsup("sigma_a", pairs)


def _partial_sup_profile(D: DirichletSeries, grid: LineGrid) -> np.ndarray:
    """Grid sup of |S_N(sigma + it)| for every N at once.

    One pass over the grid with a cumulative sum along the coefficient axis;
    entry N-1 is the sup for the length-N partial sum.
    """
    ts = grid.points()
    lam = D.freq.values
    amp = D.coeffs * np.exp(-lam * grid.sigma)
    sups = np.zeros(D.M)
    chunk = max(1, (1 << 21) // max(1, D.M))
    for start in range(0, ts.size, chunk):
        tt = ts[start : start + chunk]
        terms = np.exp(-1j * np.outer(tt, lam)) * amp[None, :]
        csum = np.cumsum(terms, axis=1)
        np.maximum(sups, np.abs(csum).max(axis=0), out=sups)
    return sups


def sigma_u_estimate(D: DirichletSeries, grid: LineGrid) -> AbscissaEstimate:
    """Windowed limsup of log sup_t |S_N(it)| / lambda_N (uniform).

    The sup is a grid max on the sigma = 0 line; it underestimates the true
    sup, so the estimate is a floor for sigma_u on the chosen window.
    """
    sups = _partial_sup_profile(
        D, LineGrid(0.0, grid.t_min, grid.t_max, grid.step)
    )
    lam = D.freq.values
    pairs = []
    for N in range(1, D.M + 1):
        if lam[N - 1] <= 0 or sups[N - 1] <= 0:
            continue
        pairs.append((N, math.log(float(sups[N - 1])) / float(lam[N - 1])))
    return windowed_limsup("sigma_u", pairs)


def delta_sequence_estimate(
    family: Sequence[DirichletSeries], grid: LineGrid
) -> AbscissaEstimate:
    """Windowed limsup over a family sharing one frequency.

    Member j contributes max over the final-third N of
    log sup_t |S_N^{(j)}(it)| / lambda_N; the family-level windowed limsup of
    those is the Delta estimate.
    """
    if len(family) < 1:
        raise ValueError("need a nonempty family")
    base = family[0].freq.values
    for D in family[1:]:
        if not np.array_equal(D.freq.values, base):
            raise ValueError("family members must share one frequency")
    pairs = []
    for j, D in enumerate(family, start=1):
        sups = _partial_sup_profile(D, LineGrid(0.0, grid.t_min, grid.t_max, grid.step))
        lam = D.freq.values
        ratios = [
            math.log(float(sups[N - 1])) / float(lam[N - 1])
            for N in range(1, D.M + 1)
            if lam[N - 1] > 0 and sups[N - 1] > 0
        ]
        if not ratios:
            continue
        w = max(1, math.ceil(len(ratios) / 3))
        pairs.append((j, max(ratios[-w:])))
    return windowed_limsup("Delta", pairs)


def hardy_check(
    D: DirichletSeries,
    N: int,
    k: float,
    x_points: int = 257,
    max_rounds: int = 12,
    tol: float = 1e-9,
) -> Tuple[float, float]:
    """(lhs, rhs) of |sum_{n<=N} a_n| <= 3 gap_N^{-k} sup_x |sum_{lambda_n<x} a_n (x-lambda_n)^k|.

    The sup runs over x in [0, lambda_{N+1}]; the grid is refined (step
    halved) until the observed max stabilises to ``tol`` relative or the
    round budget runs out.  The inequality holds for every choice of the
    first N coefficients, which makes it a good property-test target.
    """
    if not 0 < k <= 1:
        raise ValueError("need 0 < k <= 1")
    if not 1 <= N < D.M:
        raise ValueError(f"need 1 <= N < M = {D.M} (the window ends at lambda_(N+1))")
    if x_points < 3:
        raise ValueError("need x_points >= 3")
    lhs = abs(complex(np.sum(D.coeffs[:N])))
    lam = D.freq.values
    lam_next = float(lam[N])
    log_gap = float(D.freq.log_gap_values()[N - 1])

    def grid_max(m: int) -> float:
        xs = lam_next * np.arange(m + 1) / m
        best = 0.0
        chunk = max(1, (1 << 20) // max(1, D.M))
        for start in range(0, xs.size, chunk):
            diff = xs[start : start + chunk, None] - lam[None, :]
            w = np.where(diff > 0.0, np.power(np.maximum(diff, 1e-300), k), 0.0)
            best = max(best, float(np.max(np.abs(w @ D.coeffs))))
        return best

    m = x_points - 1
    sup = grid_max(m)
    for _ in range(max_rounds - 1):
        m *= 2
        nxt = grid_max(m)
        stable = abs(nxt - sup) <= tol * max(nxt, 1e-300)
        sup = max(sup, nxt)
        if stable:
            break
    rhs = 3.0 * math.exp(-k * log_gap) * sup
    return lhs, rhs


@dataclass(frozen=True)
class KroneckerNorm:
    """Half-plane norm by coefficient sum, exact iff the frequency is marked
    q-linearly independent."""

    value: float
    exact: bool
    status: str

    def to_dict(self) -> dict:
        return {"value": self.value, "exact": self.exact, "status": self.status}


def kronecker_norm(arg, q_independent: Optional[bool] = None) -> KroneckerNorm:
    """sum |a_n| as the sup norm on the closed right half-plane.

    For q-linearly independent frequencies this is the exact norm (the
    rotations e^{-i t lambda_n} come arbitrarily close to aligning all
    terms); otherwise it is only the trivial upper bound and is labelled as
    such.  Accepts a DirichletSeries (independence read off the frequency
    metadata) or a bare coefficient sequence, possibly empty, with the flag
    passed explicitly.
    """
    if isinstance(arg, DirichletSeries):
        value = arg.abs_sum(0.0)
        independent = arg.freq.q_independent if q_independent is None else q_independent
    else:
        coeffs = np.asarray(list(arg), dtype=complex)
        value = float(math.fsum(np.abs(coeffs))) if coeffs.size else 0.0
        independent = bool(q_independent)
    if independent:
        return KroneckerNorm(value=value, exact=True, status="exact-sup-norm")
    return KroneckerNorm(value=value, exact=False, status="upper-bound-only")
