"""Command-line front end: every operation behind one subcommand each.

Layout: ``gdseries COMMAND ACTION [flags]`` with commands {freq, series,
riesz, bound, abscissa, perron, neder, suite}.  JSON (sorted keys) is the
canonical output; ``--format csv`` is accepted only for two-column tables
(profiles, ratio sequences) and for the coefficient file format itself.
Exit codes: 0 success, 1 failed check in a suite run, 2 usage error.

The DISPATCH table records which operations each action owns; the test suite
verifies the ownership is a partition (no operation reachable from two
actions, none orphaned).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import acceptance
from .bounds import (
    delta_sequence_estimate,
    hardy_check,
    kronecker_norm,
    sigma_a_estimate,
    sigma_c_estimate,
    sigma_u_estimate,
    sn_bound,
    sn_bound_optimal,
    theorem_bound_profile,
)
from .frequency import (
    BUILTIN_KINDS,
    Frequency,
    check_bc,
    check_lc,
    check_poly_growth,
    estimate_L,
    make_frequency,
    read_frequency_file,
    refine_gaps,
)
from .neder import (
    fejer_identity_residual,
    fejer_polynomial,
    fejer_sup,
    fejer_sup_max,
    neder_cauchy_check,
    neder_construct,
    neder_divergence_check,
)
from .perron import PerronQuery, perron_integral, perron_vs_direct, required_T, tail_bound
from .riesz import (
    beta_identity,
    c_exact,
    check_abel_integral,
    check_fractional_identity,
    paper_constant,
    proof_integral,
    riesz_mean,
    riesz_truncation,
    riesz_uniform_error,
    sigma_u_k_estimate,
    typical_mean_A,
)
from .series import (
    DirichletSeries,
    LineGrid,
    builtin_coefficients,
    coefficient_recover,
    evaluate,
    halfplane_norm,
    line_sup_report,
    read_coefficients_csv,
    series_from_descriptor,
    translate,
    with_self_reference,
)

__all__ = ["RunConfig", "DISPATCH", "build_parser", "run", "main"]

# Ownership registry: (command, action) -> operations it exposes.  Exactly
# one action per operation; the partition is enforced by a test.
DISPATCH: Dict[Tuple[str, str], Tuple[str, ...]] = {
    ("freq", "make"): ("frequency.make_frequency", "frequency.read_frequency_file"),
    ("freq", "check-bc"): ("frequency.check_bc",),
    ("freq", "check-lc"): ("frequency.check_lc",),
    ("freq", "check-poly"): ("frequency.check_poly_growth",),
    ("freq", "density"): ("frequency.estimate_L",),
    ("freq", "refine"): ("frequency.refine_gaps",),
    ("series", "eval"): ("series.evaluate", "series.series_from_descriptor"),
    ("series", "sup"): ("series.line_sup_report", "series.line_sup"),
    ("series", "norm"): ("series.halfplane_norm",),
    ("series", "translate"): ("series.translate",),
    ("series", "recover"): ("series.coefficient_recover",),
    ("series", "coeffs"): (
        "series.builtin_coefficients",
        "series.read_coefficients_csv",
        "series.write_coefficients_csv",
    ),
    ("riesz", "mean"): ("riesz.riesz_mean",),
    ("riesz", "truncate"): ("riesz.riesz_truncation",),
    ("riesz", "typical"): ("riesz.typical_mean_A",),
    ("riesz", "abel"): ("riesz.check_abel_integral",),
    ("riesz", "fractional"): ("riesz.check_fractional_identity",),
    ("riesz", "beta"): ("riesz.beta_identity",),
    ("riesz", "error"): ("riesz.riesz_uniform_error", "series.with_self_reference"),
    ("riesz", "sigma-u-k"): ("riesz.sigma_u_k_estimate",),
    ("riesz", "constants"): ("riesz.c_exact", "riesz.paper_constant", "riesz.proof_integral"),
    ("bound", "sn"): ("bounds.sn_bound",),
    ("bound", "sn-opt"): ("bounds.sn_bound_optimal",),
    ("bound", "profile"): ("bounds.theorem_bound_profile",),
    ("bound", "hardy"): ("bounds.hardy_check",),
    ("bound", "kronecker"): ("bounds.kronecker_norm",),
    ("abscissa", "sigma-c"): ("bounds.sigma_c_estimate",),
    ("abscissa", "sigma-a"): ("bounds.sigma_a_estimate",),
    ("abscissa", "sigma-u"): ("bounds.sigma_u_estimate",),
    ("abscissa", "delta"): ("bounds.delta_sequence_estimate",),
    ("perron", "eval"): ("perron.perron_integral",),
    ("perron", "check"): ("perron.perron_vs_direct",),
    ("perron", "required-t"): ("perron.required_T",),
    ("perron", "tail"): ("perron.tail_bound",),
    ("neder", "build"): ("neder.neder_construct",),
    ("neder", "divergence"): ("neder.neder_divergence_check",),
    ("neder", "cauchy"): ("neder.neder_cauchy_check",),
    ("neder", "identity"): ("neder.fejer_identity_residual",),
    ("neder", "fejer"): ("neder.fejer_polynomial", "neder.fejer_sup", "neder.fejer_sup_max"),
    ("suite", "acceptance"): ("acceptance.run_all", "acceptance.run_criterion"),
}


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: command, action, shared knobs, per-action params."""

    command: str
    action: str
    format: str = "json"
    out: Optional[str] = None
    seed: int = 7
    tol_sup: float = 1e-4
    quad_tol: float = 1e-8
    tol_slope: float = 1e-3
    grid_sigma: float = 1e-3
    grid_t_min: float = 0.0
    grid_t_max: float = 100.0
    grid_step: float = 0.05
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("tol_sup", "quad_tol", "tol_slope", "grid_step"):
            if getattr(self, name) <= 0:
                raise ValueError(f"--{name.replace('_', '-')} must be > 0")

    def grid(self) -> LineGrid:
        return LineGrid(self.grid_sigma, self.grid_t_min, self.grid_t_max, self.grid_step)


_COMMON_KEYS = {
    "command",
    "action",
    "format",
    "out",
    "seed",
    "tol_sup",
    "quad_tol",
    "tol_slope",
    "grid_sigma",
    "grid_t_min",
    "grid_t_max",
    "grid_step",
}


def _config_from(args: argparse.Namespace) -> RunConfig:
    ns = vars(args)
    params = {k: v for k, v in ns.items() if k not in _COMMON_KEYS}
    return RunConfig(
        command=ns["command"],
        action=ns["action"],
        format=ns.get("format", "json"),
        out=ns.get("out"),
        seed=ns.get("seed", 7),
        tol_sup=ns.get("tol_sup", 1e-4),
        quad_tol=ns.get("quad_tol", 1e-8),
        tol_slope=ns.get("tol_slope", 1e-3),
        grid_sigma=ns.get("grid_sigma", 1e-3),
        grid_t_min=ns.get("grid_t_min", 0.0),
        grid_t_max=ns.get("grid_t_max", 100.0),
        grid_step=ns.get("grid_step", 0.05),
        params=params,
    )


# ---------------------------------------------------------------------------
# input resolution


def _frequency_from(cfg: RunConfig) -> Frequency:
    p = cfg.params
    if p.get("freq_file"):
        return read_frequency_file(p["freq_file"])
    return make_frequency(p.get("kind", "log"), p.get("n", 100), p.get("params"))


def _series_from(cfg: RunConfig) -> DirichletSeries:
    p = cfg.params
    if p.get("descriptor"):
        return series_from_descriptor(p["descriptor"], seed=cfg.seed)
    freq = _frequency_from(cfg)
    if p.get("coeffs_file"):
        coeffs = read_coefficients_csv(p["coeffs_file"])
    else:
        coeffs = builtin_coefficients(p.get("coeffs", "ones"), freq.M, cfg.seed)
    return DirichletSeries(freq, coeffs)


def _pairs(vals: complex) -> List[float]:
    return [float(vals.real), float(vals.imag)]


def _head(values: Sequence[float], limit: int = 12) -> List[float]:
    return [float(v) for v in values[:limit]]


# ---------------------------------------------------------------------------
# handlers: each returns (payload, optional csv table (header, rows))

Table = Optional[Tuple[Tuple[str, ...], List[tuple]]]
Handler = Callable[[RunConfig], Tuple[dict, Table]]


def _h_freq_make(cfg: RunConfig):
    freq = _frequency_from(cfg)
    gaps = freq.gaps
    payload = {
        **freq.to_dict(),
        "head": _head(freq.values),
        "minGap": float(np.min(gaps)) if gaps.size else None,
        "maxGap": float(np.max(gaps)) if gaps.size else None,
    }
    rows = [(n, float(v)) for n, v in enumerate(freq.values, start=1)]
    return payload, (("index", "lambda"), rows)


def _h_freq_check_bc(cfg: RunConfig):
    freq = _frequency_from(cfg)
    rep = check_bc(freq, cfg.params["l"], cfg.params["delta"], cfg.tol_slope)
    return rep.to_dict(), None


def _h_freq_check_lc(cfg: RunConfig):
    freq = _frequency_from(cfg)
    rep = check_lc(freq, cfg.params["delta"], cfg.tol_slope)
    return rep.to_dict(), None


def _h_freq_check_poly(cfg: RunConfig):
    freq = _frequency_from(cfg)
    rep = check_poly_growth(freq, cfg.params["l"], cfg.params["d"], cfg.params["delta"], cfg.tol_slope)
    return rep.to_dict(), None


def _h_freq_density(cfg: RunConfig):
    est = estimate_L(_frequency_from(cfg))
    return est.to_dict(), (("index", "ratio"), [(i, r) for i, r in est.ratios])


def _h_freq_refine(cfg: RunConfig):
    freq = _frequency_from(cfg)
    fine = refine_gaps(freq)
    payload = {
        "before": freq.M,
        "after": fine.M,
        "head": _head(fine.values),
        "maxGapAfter": float(np.max(fine.gaps)) if fine.M > 1 else None,
    }
    rows = [(n, float(v)) for n, v in enumerate(fine.values, start=1)]
    return payload, (("index", "lambda"), rows)


def _h_series_eval(cfg: RunConfig):
    D = _series_from(cfg)
    s = complex(cfg.params.get("sigma", 0.0), cfg.params.get("t", 0.0))
    N = cfg.params.get("n_terms")
    val = evaluate(D, s, N)
    return {"s": _pairs(s), "terms": N if N is not None else D.M, "value": _pairs(val)}, None


def _h_series_sup(cfg: RunConfig):
    D = _series_from(cfg)
    rep = line_sup_report(D, cfg.params.get("n_terms"), cfg.grid(), cfg.tol_sup)
    return rep.to_dict(), None


def _h_series_norm(cfg: RunConfig):
    D = _series_from(cfg)
    rep = halfplane_norm(
        D,
        t_min=cfg.grid_t_min,
        t_max=cfg.grid_t_max,
        step=cfg.grid_step,
        sigma_min=cfg.grid_sigma,
        levels=cfg.params.get("levels", 8),
        tol_sup=cfg.tol_sup,
    )
    return rep.to_dict(), None


def _h_series_translate(cfg: RunConfig):
    D = _series_from(cfg)
    s0 = complex(cfg.params.get("sigma", 0.0), cfg.params.get("t", 0.0))
    shifted = translate(D, s0)
    payload = {
        "s0": _pairs(s0),
        "M": shifted.M,
        "coefficientsHead": [_pairs(c) for c in shifted.coeffs[:8]],
    }
    rows = [(n, c.real, c.imag) for n, c in enumerate(shifted.coeffs, start=1)]
    return payload, (("index", "re", "im"), rows)


def _h_series_recover(cfg: RunConfig):
    D = with_self_reference(_series_from(cfg))
    n = cfg.params["n_index"]
    got = coefficient_recover(
        D, n, cfg.params.get("sigma", 1.0), cfg.params.get("t_height", 1e4), cfg.grid_step
    )
    actual = complex(D.coeffs[n - 1])
    return {
        "n": n,
        "recovered": _pairs(got),
        "actual": _pairs(actual),
        "residual": abs(got - actual),
    }, None


def _h_series_coeffs(cfg: RunConfig):
    D = _series_from(cfg)
    payload = {
        "M": D.M,
        "tag": cfg.params.get("coeffs", "ones"),
        "coefficientsHead": [_pairs(c) for c in D.coeffs[:8]],
        "absSum": D.abs_sum(0.0),
    }
    rows = [(n, c.real, c.imag) for n, c in enumerate(D.coeffs, start=1)]
    return payload, (("index", "re", "im"), rows)


def _h_riesz_mean(cfg: RunConfig):
    D = _series_from(cfg)
    s = complex(cfg.params.get("sigma", 0.0), cfg.params.get("t", 0.0))
    val = riesz_mean(D, cfg.params["k"], cfg.params["x"], s)
    return {"k": cfg.params["k"], "x": cfg.params["x"], "s": _pairs(s), "value": _pairs(val)}, None


def _h_riesz_truncate(cfg: RunConfig):
    D = _series_from(cfg)
    trunc = riesz_truncation(D, cfg.params["k"], cfg.params["x"])
    if trunc is None:
        return {"terms": 0, "empty": True}, (("index", "re", "im"), [])
    payload = {
        "terms": trunc.M,
        "empty": False,
        "coefficientsHead": [_pairs(c) for c in trunc.coeffs[:8]],
    }
    rows = [(n, c.real, c.imag) for n, c in enumerate(trunc.coeffs, start=1)]
    return payload, (("index", "re", "im"), rows)


def _h_riesz_typical(cfg: RunConfig):
    D = _series_from(cfg)
    w = complex(cfg.params.get("sigma", 0.0), cfg.params.get("t", 0.0))
    val = typical_mean_A(D, cfg.params["k"], w, cfg.params["x"])
    return {"k": cfg.params["k"], "x": cfg.params["x"], "w": _pairs(w), "value": _pairs(val)}, None


def _h_riesz_abel(cfg: RunConfig):
    D = _series_from(cfg)
    resid = check_abel_integral(D, cfg.params["k"], cfg.params["x"], cfg.quad_tol)
    return {"k": cfg.params["k"], "x": cfg.params["x"], "residual": resid, "tol": cfg.quad_tol}, None


def _h_riesz_fractional(cfg: RunConfig):
    D = _series_from(cfg)
    resid = check_fractional_identity(
        D, cfg.params["k"], cfg.params["t_point"], cfg.params.get("tau", 1e-4), cfg.quad_tol
    )
    return {
        "k": cfg.params["k"],
        "t": cfg.params["t_point"],
        "tau": cfg.params.get("tau", 1e-4),
        "residual": resid,
        "tol": cfg.quad_tol,
    }, None


def _h_riesz_beta(cfg: RunConfig):
    lhs, rhs = beta_identity(cfg.params["alpha"], cfg.params["beta"], cfg.quad_tol)
    return {
        "alpha": cfg.params["alpha"],
        "beta": cfg.params["beta"],
        "quadrature": lhs,
        "gammaRatio": rhs,
        "difference": abs(lhs - rhs),
    }, None


def _h_riesz_error(cfg: RunConfig):
    D = _series_from(cfg)
    if cfg.params.get("self_reference", True):
        D = with_self_reference(D)
    err = riesz_uniform_error(D, cfg.params["k"], cfg.params["sigma"], cfg.params["x"], cfg.grid())
    return {
        "k": cfg.params["k"],
        "sigma": cfg.params["sigma"],
        "x": cfg.params["x"],
        "error": err,
    }, None


def _h_riesz_sigma_u_k(cfg: RunConfig):
    D = _series_from(cfg)
    est = sigma_u_k_estimate(D, cfg.params["k"], cfg.params["xs"], cfg.grid(), cfg.tol_sup)
    return est.to_dict(), (("index", "ratio"), [(i, r) for i, r in est.ratios])


def _h_riesz_constants(cfg: RunConfig):
    k = cfg.params.get("k", 1.0)
    return {
        "k": k,
        "exact": c_exact(k),
        "paper": paper_constant(k),
        "proofIntegral": proof_integral(k),
    }, None


def _h_bound_sn(cfg: RunConfig):
    freq = _frequency_from(cfg)
    b = sn_bound(freq, cfg.params["n_index"], cfg.params["k"], cfg.params.get("variant", "paper"))
    return b.to_dict(), None


def _h_bound_sn_opt(cfg: RunConfig):
    freq = _frequency_from(cfg)
    b = sn_bound_optimal(freq, cfg.params["n_index"], cfg.params.get("variant", "paper"))
    return b.to_dict(), None


def _h_bound_profile(cfg: RunConfig):
    freq = _frequency_from(cfg)
    regime = cfg.params["regime"]
    params = {}
    if cfg.params.get("delta") is not None:
        params["delta"] = cfg.params["delta"]
    if cfg.params.get("d") is not None:
        params["d"] = cfg.params["d"]
    Ns = None
    if cfg.params.get("n_start") is not None:
        Ns = range(
            cfg.params["n_start"],
            cfg.params.get("n_stop") or freq.M,
            cfg.params.get("n_step") or 1,
        )
    prof = theorem_bound_profile(freq, regime, params, Ns=Ns, variant=cfg.params.get("variant", "paper"))
    return prof.to_dict(), (("N", "ratio"), list(prof.csv_rows()))


def _h_bound_hardy(cfg: RunConfig):
    D = _series_from(cfg)
    lhs, rhs = hardy_check(D, cfg.params["n_index"], cfg.params["k"])
    return {
        "N": cfg.params["n_index"],
        "k": cfg.params["k"],
        "lhs": lhs,
        "rhs": rhs,
        "satisfied": lhs <= rhs + 1e-12,
    }, None


def _h_bound_kronecker(cfg: RunConfig):
    D = _series_from(cfg)
    return kronecker_norm(D).to_dict(), None


def _h_abscissa_sigma_c(cfg: RunConfig):
    est = sigma_c_estimate(_series_from(cfg))
    return est.to_dict(), (("index", "ratio"), [(i, r) for i, r in est.ratios])


def _h_abscissa_sigma_a(cfg: RunConfig):
    est = sigma_a_estimate(_series_from(cfg))
    return est.to_dict(), (("index", "ratio"), [(i, r) for i, r in est.ratios])


def _h_abscissa_sigma_u(cfg: RunConfig):
    est = sigma_u_estimate(_series_from(cfg), cfg.grid())
    return est.to_dict(), (("index", "ratio"), [(i, r) for i, r in est.ratios])


def _h_abscissa_delta(cfg: RunConfig):
    freq = _frequency_from(cfg)
    count = cfg.params.get("count", 8)
    family = [
        DirichletSeries(freq, builtin_coefficients("seeded-normal", freq.M, cfg.seed + j))
        for j in range(count)
    ]
    est = delta_sequence_estimate(family, cfg.grid())
    return est.to_dict(), (("index", "ratio"), [(i, r) for i, r in est.ratios])


def _perron_query(cfg: RunConfig) -> PerronQuery:
    return PerronQuery(
        x=cfg.params["x"],
        k=cfg.params["k"],
        epsilon=cfg.params.get("epsilon", 1.0),
        T=cfg.params.get("t_height", 1e3),
        step=cfg.params.get("step") or cfg.grid_step,
    )


def _h_perron_eval(cfg: RunConfig):
    D = _series_from(cfg)
    res = perron_integral(D, _perron_query(cfg), f_norm=cfg.params.get("f_norm"), quad_tol=cfg.quad_tol)
    return res.to_dict(), None


def _h_perron_check(cfg: RunConfig):
    D = _series_from(cfg)
    comp = perron_vs_direct(D, _perron_query(cfg), f_norm=cfg.params.get("f_norm"), quad_tol=cfg.quad_tol)
    return comp.to_dict(), None


def _h_perron_required_t(cfg: RunConfig):
    f_norm = cfg.params.get("f_norm")
    if f_norm is None:
        f_norm = _series_from(cfg).abs_sum(0.0)
    k, x, eps = cfg.params["k"], cfg.params["x"], cfg.params.get("epsilon", 1.0)
    tau = cfg.params.get("tau", 1e-4)
    T = required_T(k, x, eps, f_norm, tau)
    return {
        "k": k,
        "x": x,
        "epsilon": eps,
        "fNorm": f_norm,
        "tol": tau,
        "T": T,
        "tailAtT": tail_bound(k, x, eps, f_norm, T),
    }, None


def _h_perron_tail(cfg: RunConfig):
    f_norm = cfg.params.get("f_norm")
    if f_norm is None:
        f_norm = _series_from(cfg).abs_sum(0.0)
    k, x, eps = cfg.params["k"], cfg.params["x"], cfg.params.get("epsilon", 1.0)
    T = cfg.params.get("t_height", 1e3)
    return {"k": k, "x": x, "epsilon": eps, "fNorm": f_norm, "T": T, "tail": tail_bound(k, x, eps, f_norm, T)}, None


def _neder_from(cfg: RunConfig):
    base = _frequency_from(cfg)
    return neder_construct(
        base,
        cfg.params["x"],
        r_cap=cfg.params.get("r_cap"),
        point_budget=cfg.params.get("point_budget", 10_000),
    )


def _h_neder_build(cfg: RunConfig):
    c = _neder_from(cfg)
    rows = [(float(v), float(w.real)) for v, w in zip(c.eta.values, c.coeffs)]
    return c.to_dict(), (("eta", "coefficient"), rows)


def _h_neder_divergence(cfg: RunConfig):
    c = _neder_from(cfg)
    rows = neder_divergence_check(c)
    payload = {
        "x": c.x,
        "rows": [r.to_dict() for r in rows],
        "allUncappedPass": all(r.passed for r in rows if not r.exempt),
    }
    return payload, None


def _h_neder_cauchy(cfg: RunConfig):
    c = _neder_from(cfg)
    observed, bound = neder_cauchy_check(
        c, cfg.params.get("k_low", 1), cfg.params.get("k_high", 3), cfg.grid()
    )
    return {
        "kLow": cfg.params.get("k_low", 1),
        "kHigh": cfg.params.get("k_high", 3),
        "observed": observed,
        "bound": bound,
        "satisfied": observed <= bound + 1e-9,
    }, None


def _h_neder_identity(cfg: RunConfig):
    c = _neder_from(cfg)
    rng = np.random.default_rng(cfg.seed)
    count = cfg.params.get("samples", 10)
    s_values = [complex(rng.uniform(0.05, 1.0), rng.uniform(-10.0, 10.0)) for _ in range(count)]
    resid = fejer_identity_residual(c, cfg.params.get("k_prefix", 3), s_values)
    return {"kPrefix": cfg.params.get("k_prefix", 3), "samples": count, "residual": resid}, None


def _h_neder_fejer(cfg: RunConfig):
    m = cfg.params.get("m", 3)
    poly = fejer_polynomial(m)
    return {
        "m": m,
        "coefficients": [float(v) for v in poly.coeffs],
        "sup": fejer_sup(m),
        "supMax64": fejer_sup_max(64),
    }, None


def _h_suite_acceptance(cfg: RunConfig):
    only = cfg.params.get("only") or None
    results = acceptance.run_all(cfg.seed, only)
    print(acceptance.format_table(results), file=sys.stderr)
    criteria = []
    for r in results:
        d = r.to_dict()
        d.pop("elapsedSeconds", None)  # timings vary; JSON must not
        criteria.append(d)
    failed = sum(not r.passed for r in results)
    return {
        "seed": cfg.seed,
        "criteria": criteria,
        "passed": len(results) - failed,
        "failed": failed,
    }, None


HANDLERS: Dict[Tuple[str, str], Handler] = {
    ("freq", "make"): _h_freq_make,
    ("freq", "check-bc"): _h_freq_check_bc,
    ("freq", "check-lc"): _h_freq_check_lc,
    ("freq", "check-poly"): _h_freq_check_poly,
    ("freq", "density"): _h_freq_density,
    ("freq", "refine"): _h_freq_refine,
    ("series", "eval"): _h_series_eval,
    ("series", "sup"): _h_series_sup,
    ("series", "norm"): _h_series_norm,
    ("series", "translate"): _h_series_translate,
    ("series", "recover"): _h_series_recover,
    ("series", "coeffs"): _h_series_coeffs,
    ("riesz", "mean"): _h_riesz_mean,
    ("riesz", "truncate"): _h_riesz_truncate,
    ("riesz", "typical"): _h_riesz_typical,
    ("riesz", "abel"): _h_riesz_abel,
    ("riesz", "fractional"): _h_riesz_fractional,
    ("riesz", "beta"): _h_riesz_beta,
    ("riesz", "error"): _h_riesz_error,
    ("riesz", "sigma-u-k"): _h_riesz_sigma_u_k,
    ("riesz", "constants"): _h_riesz_constants,
    ("bound", "sn"): _h_bound_sn,
    ("bound", "sn-opt"): _h_bound_sn_opt,
    ("bound", "profile"): _h_bound_profile,
    ("bound", "hardy"): _h_bound_hardy,
    ("bound", "kronecker"): _h_bound_kronecker,
    ("abscissa", "sigma-c"): _h_abscissa_sigma_c,
    ("abscissa", "sigma-a"): _h_abscissa_sigma_a,
    ("abscissa", "sigma-u"): _h_abscissa_sigma_u,
    ("abscissa", "delta"): _h_abscissa_delta,
    ("perron", "eval"): _h_perron_eval,
    ("perron", "check"): _h_perron_check,
    ("perron", "required-t"): _h_perron_required_t,
    ("perron", "tail"): _h_perron_tail,
    ("neder", "build"): _h_neder_build,
    ("neder", "divergence"): _h_neder_divergence,
    ("neder", "cauchy"): _h_neder_cauchy,
    ("neder", "identity"): _h_neder_identity,
    ("neder", "fejer"): _h_neder_fejer,
    ("suite", "acceptance"): _h_suite_acceptance,
}


# ---------------------------------------------------------------------------
# parser


def _common_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--tol-sup", type=float, default=1e-4)
    p.add_argument("--quad-tol", type=float, default=1e-8)
    p.add_argument("--tol-slope", type=float, default=1e-3)
    p.add_argument("--grid-sigma", type=float, default=1e-3)
    p.add_argument("--grid-t-min", type=float, default=0.0)
    p.add_argument("--grid-t-max", type=float, default=100.0)
    p.add_argument("--grid-step", type=float, default=0.05)
    return p


def _freq_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--kind", choices=BUILTIN_KINDS, default="log")
    p.add_argument("--n", type=int, default=100, help="frequency length M")
    p.add_argument("--params", type=float, nargs="*", help="values for custom-from-list")
    p.add_argument("--freq-file", metavar="PATH")
    return p


def _series_parent() -> argparse.ArgumentParser:
    p = _freq_parent()
    p.add_argument("--coeffs", default="ones", help="builtin coefficient tag")
    p.add_argument("--coeffs-file", metavar="PATH")
    p.add_argument("--descriptor", metavar="PATH", help="series descriptor JSON")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_parent()
    freq_src = _freq_parent()
    series_src = _series_parent()

    parser = argparse.ArgumentParser(prog="gdseries", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    def action(cmd_sub, name, *parents, **kwargs):
        return cmd_sub.add_parser(name, parents=list(parents), **kwargs)

    freq = commands.add_parser("freq", help="frequency construction and gap conditions")
    fa = freq.add_subparsers(dest="action", metavar="ACTION")
    action(fa, "make", common, freq_src)
    p = action(fa, "check-bc", common, freq_src)
    p.add_argument("--l", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p = action(fa, "check-lc", common, freq_src)
    p.add_argument("--delta", type=float, required=True)
    p = action(fa, "check-poly", common, freq_src)
    p.add_argument("--l", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    action(fa, "density", common, freq_src)
    action(fa, "refine", common, freq_src)

    series = commands.add_parser("series", help="evaluation, sups, norms, coefficients")
    sa = series.add_subparsers(dest="action", metavar="ACTION")
    p = action(sa, "eval", common, series_src)
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--n-terms", type=int)
    p = action(sa, "sup", common, series_src)
    p.add_argument("--n-terms", type=int)
    p = action(sa, "norm", common, series_src)
    p.add_argument("--levels", type=int, default=8)
    p = action(sa, "translate", common, series_src)
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--t", type=float, default=0.0)
    p = action(sa, "recover", common, series_src)
    p.add_argument("--n-index", type=int, required=True)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--t-height", type=float, default=1e4)
    action(sa, "coeffs", common, series_src)

    riesz = commands.add_parser("riesz", help="Riesz means and integral identities")
    ra = riesz.add_subparsers(dest="action", metavar="ACTION")
    p = action(ra, "mean", common, series_src)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--t", type=float, default=0.0)
    p = action(ra, "truncate", common, series_src)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p = action(ra, "typical", common, series_src)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--t", type=float, default=0.0)
    p = action(ra, "abel", common, series_src)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p = action(ra, "fractional", common, series_src)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--t-point", type=float, required=True)
    p.add_argument("--tau", type=float, default=1e-4)
    p = action(ra, "beta", common)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p = action(ra, "error", common, series_src)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--sigma", type=float, default=0.5)
    p.add_argument("--self-reference", action=argparse.BooleanOptionalAction, default=True)
    p = action(ra, "sigma-u-k", common, series_src)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--xs", type=float, nargs="+", required=True)
    p = action(ra, "constants", common)
    p.add_argument("--k", type=float, default=1.0)

    bound = commands.add_parser("bound", help="partial-sum bounds and norms")
    ba = bound.add_subparsers(dest="action", metavar="ACTION")
    p = action(ba, "sn", common, freq_src)
    p.add_argument("--n-index", type=int, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--variant", choices=("paper", "exact"), default="paper")
    p = action(ba, "sn-opt", common, freq_src)
    p.add_argument("--n-index", type=int, required=True)
    p.add_argument("--variant", choices=("paper", "exact"), default="paper")
    p = action(ba, "profile", common, freq_src)
    p.add_argument("--regime", choices=("bc", "lc", "poly"), required=True)
    p.add_argument("--delta", type=float)
    p.add_argument("--d", type=float)
    p.add_argument("--variant", choices=("paper", "exact"), default="paper")
    p.add_argument("--n-start", type=int)
    p.add_argument("--n-stop", type=int)
    p.add_argument("--n-step", type=int)
    p = action(ba, "hardy", common, series_src)
    p.add_argument("--n-index", type=int, required=True)
    p.add_argument("--k", type=float, required=True)
    action(ba, "kronecker", common, series_src)

    absc = commands.add_parser("abscissa", help="convergence abscissa estimators")
    aa = absc.add_subparsers(dest="action", metavar="ACTION")
    action(aa, "sigma-c", common, series_src)
    action(aa, "sigma-a", common, series_src)
    action(aa, "sigma-u", common, series_src)
    p = action(aa, "delta", common, freq_src)
    p.add_argument("--count", type=int, default=8)

    perron = commands.add_parser("perron", help="truncated Perron inversion")
    pa = perron.add_subparsers(dest="action", metavar="ACTION")
    for name in ("eval", "check"):
        p = action(pa, name, common, series_src)
        p.add_argument("--x", type=float, required=True)
        p.add_argument("--k", type=float, required=True)
        p.add_argument("--epsilon", type=float, default=1.0)
        p.add_argument("--t-height", type=float, default=1e3)
        p.add_argument("--step", type=float)
        p.add_argument("--f-norm", type=float)
    p = action(pa, "required-t", common, series_src)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--tau", type=float, default=1e-4)
    p.add_argument("--f-norm", type=float)
    p = action(pa, "tail", common, series_src)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--t-height", type=float, default=1e3)
    p.add_argument("--f-norm", type=float)

    neder = commands.add_parser("neder", help="divergent-series counterexample builder")
    na = neder.add_subparsers(dest="action", metavar="ACTION")
    for name in ("build", "divergence", "cauchy", "identity"):
        p = action(na, name, common, freq_src)
        p.add_argument("--x", type=float, required=True)
        p.add_argument("--r-cap", type=int)
        p.add_argument("--point-budget", type=int, default=10_000)
        if name == "cauchy":
            p.add_argument("--k-low", type=int, default=1)
            p.add_argument("--k-high", type=int, default=3)
        if name == "identity":
            p.add_argument("--k-prefix", type=int, default=3)
            p.add_argument("--samples", type=int, default=10)
    p = action(na, "fejer", common)
    p.add_argument("--m", type=int, default=3)

    suite = commands.add_parser("suite", help="acceptance checks")
    ua = suite.add_subparsers(dest="action", metavar="ACTION")
    p = action(ua, "acceptance", common)
    p.add_argument("--only", type=int, nargs="*", help="criterion ids to run")

    return parser


# ---------------------------------------------------------------------------
# output


def _json_default(obj):
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)!r}")


def _render_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=_json_default) + "\n"


def _render_csv(table) -> str:
    header, rows = table
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if getattr(args, "command", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    if getattr(args, "action", None) is None:
        print(f"error: {args.command} needs an action", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    try:
        cfg = _config_from(args)
        payload, table = HANDLERS[(cfg.command, cfg.action)](cfg)
        if cfg.format == "csv":
            if table is None:
                raise ValueError(f"{cfg.command} {cfg.action} has no CSV form (JSON only)")
            text = _render_csv(table)
        else:
            text = _render_json(payload)
        _emit(text, cfg.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.command == "suite" and payload.get("failed", 0) > 0:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
