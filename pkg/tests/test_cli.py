import importlib
import json
import math

import pytest

from gdseries.cli import DISPATCH, HANDLERS, run

# one fast, known-good invocation per (command, action)
ARGV = {
    ("freq", "make"): ["freq", "make", "--kind", "log", "--n", "12"],
    ("freq", "check-bc"): ["freq", "check-bc", "--kind", "log", "--n", "50", "--l", "1", "--delta", "0.1"],
    ("freq", "check-lc"): ["freq", "check-lc", "--kind", "interleave-exp2", "--n", "20", "--delta", "0.5"],
    ("freq", "check-poly"): ["freq", "check-poly", "--kind", "sqrtlog", "--n", "40", "--l", "1", "--d", "2", "--delta", "0.1"],
    ("freq", "density"): ["freq", "density", "--kind", "log", "--n", "50"],
    ("freq", "refine"): ["freq", "refine", "--kind", "linear", "--n", "5"],
    ("series", "eval"): ["series", "eval", "--kind", "linear", "--n", "6", "--coeffs", "alternating", "--sigma", "0.5", "--t", "1.0"],
    ("series", "sup"): ["series", "sup", "--kind", "log", "--n", "12", "--grid-t-max", "10"],
    ("series", "norm"): ["series", "norm", "--kind", "log", "--n", "12", "--grid-t-max", "20", "--levels", "4"],
    ("series", "translate"): ["series", "translate", "--kind", "linear", "--n", "6", "--sigma", "0.3", "--t", "2.0"],
    ("series", "recover"): ["series", "recover", "--kind", "linear", "--n", "4", "--n-index", "2", "--sigma", "1.0", "--t-height", "2000"],
    ("series", "coeffs"): ["series", "coeffs", "--coeffs", "seeded-normal", "--n", "8", "--seed", "3"],
    ("riesz", "mean"): ["riesz", "mean", "--kind", "linear", "--n", "6", "--k", "1", "--x", "3.5"],
    ("riesz", "truncate"): ["riesz", "truncate", "--kind", "linear", "--n", "6", "--k", "0.5", "--x", "3.5"],
    ("riesz", "typical"): ["riesz", "typical", "--kind", "linear", "--n", "6", "--k", "1", "--x", "3.5", "--sigma", "0.2"],
    ("riesz", "abel"): ["riesz", "abel", "--kind", "linear", "--n", "6", "--k", "1", "--x", "3.3"],
    ("riesz", "fractional"): ["riesz", "fractional", "--kind", "linear", "--n", "4", "--k", "0.5", "--t-point", "2.5", "--tau", "1e-3"],
    ("riesz", "beta"): ["riesz", "beta", "--alpha", "1.5", "--beta", "2.5"],
    ("riesz", "error"): ["riesz", "error", "--kind", "linear", "--n", "8", "--k", "1", "--x", "4.0", "--sigma", "0.5", "--grid-t-max", "10"],
    ("riesz", "sigma-u-k"): ["riesz", "sigma-u-k", "--kind", "linear", "--n", "8", "--k", "1", "--xs", "2", "4", "6", "--grid-t-max", "6.3"],
    ("riesz", "constants"): ["riesz", "constants", "--k", "0.5"],
    ("bound", "sn"): ["bound", "sn", "--kind", "linear", "--n", "5", "--n-index", "3", "--k", "1"],
    ("bound", "sn-opt"): ["bound", "sn-opt", "--kind", "linear", "--n", "5", "--n-index", "3"],
    ("bound", "profile"): ["bound", "profile", "--kind", "log", "--n", "60", "--regime", "bc", "--n-start", "30", "--n-stop", "50", "--n-step", "5"],
    ("bound", "hardy"): ["bound", "hardy", "--kind", "linear", "--n", "6", "--n-index", "3", "--k", "1"],
    ("bound", "kronecker"): ["bound", "kronecker", "--kind", "logprimes", "--n", "4"],
    ("abscissa", "sigma-c"): ["abscissa", "sigma-c", "--kind", "log", "--n", "50", "--coeffs", "alternating"],
    ("abscissa", "sigma-a"): ["abscissa", "sigma-a", "--kind", "log", "--n", "50"],
    ("abscissa", "sigma-u"): ["abscissa", "sigma-u", "--kind", "log", "--n", "16", "--grid-t-max", "20"],
    ("abscissa", "delta"): ["abscissa", "delta", "--kind", "log", "--n", "16", "--count", "4", "--grid-t-max", "20"],
    ("perron", "eval"): ["perron", "eval", "--kind", "linear", "--n", "2", "--x", "1.5", "--k", "1", "--epsilon", "0.5", "--t-height", "2000", "--quad-tol", "0.01"],
    ("perron", "check"): ["perron", "check", "--kind", "linear", "--n", "2", "--x", "1.5", "--k", "1", "--epsilon", "0.5", "--t-height", "2000", "--quad-tol", "0.01"],
    ("perron", "required-t"): ["perron", "required-t", "--kind", "linear", "--n", "2", "--x", "1.5", "--k", "1", "--epsilon", "0.5", "--tau", "1e-3"],
    ("perron", "tail"): ["perron", "tail", "--kind", "linear", "--n", "2", "--x", "1.5", "--k", "1", "--t-height", "1000"],
    ("neder", "build"): ["neder", "build", "--kind", "linear", "--n", "6", "--x", "0.1"],
    ("neder", "divergence"): ["neder", "divergence", "--kind", "linear", "--n", "6", "--x", "0.1"],
    ("neder", "cauchy"): ["neder", "cauchy", "--kind", "linear", "--n", "6", "--x", "0.1", "--k-low", "1", "--k-high", "3", "--grid-t-max", "20", "--grid-step", "0.1"],
    ("neder", "identity"): ["neder", "identity", "--kind", "linear", "--n", "6", "--x", "0.1", "--k-prefix", "2", "--samples", "5"],
    ("neder", "fejer"): ["neder", "fejer", "--m", "4"],
    ("suite", "acceptance"): ["suite", "acceptance", "--only", "9"],
}


def test_every_operation_has_exactly_one_subcommand():
    seen = {}
    for key, ops in DISPATCH.items():
        for op in ops:
            assert op not in seen, f"{op} owned by both {seen[op]} and {key}"
            seen[op] = key
    for op in seen:
        module, name = op.split(".")
        mod = importlib.import_module(f"gdseries.{module}")
        assert hasattr(mod, name), f"dispatch names missing function {op}"


def test_handlers_cover_dispatch_exactly():
    assert set(HANDLERS) == set(DISPATCH)
    assert set(ARGV) == set(DISPATCH)


@pytest.mark.parametrize("key", sorted(ARGV), ids=lambda k: f"{k[0]}-{k[1]}")
def test_action_runs_and_emits_json(key, capsys):
    assert run(ARGV[key]) == 0
    out = capsys.readouterr().out
    json.loads(out)  # canonical JSON on stdout


def test_check_bc_reports_evidence_for_log_frequency(capsys):
    code = run(["freq", "check-bc", "--kind", "log", "--n", "100", "--l", "1", "--delta", "0.1", "--format", "json"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "evidence-for"
    assert data["condition"] == "BC"


def test_sn_bound_matches_hand_value(capsys):
    assert run(ARGV[("bound", "sn")]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == pytest.approx(9.0 * math.e / math.pi, rel=1e-13)


def test_output_is_byte_deterministic(capsys):
    argv = ARGV[("freq", "density")]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    second = capsys.readouterr().out
    assert first == second


def test_seeded_coefficients_follow_the_seed(capsys):
    base = ["series", "coeffs", "--coeffs", "seeded-normal", "--n", "8"]
    assert run(base + ["--seed", "11"]) == 0
    first = capsys.readouterr().out
    assert run(base + ["--seed", "11"]) == 0
    again = capsys.readouterr().out
    assert run(base + ["--seed", "12"]) == 0
    other = capsys.readouterr().out
    assert first == again
    assert first != other


def test_usage_errors_exit_2(capsys):
    assert run([]) == 2
    assert run(["frq"]) == 2
    assert run(["freq"]) == 2
    assert run(["freq", "make", "--bogus"]) == 2
    capsys.readouterr()


def test_domain_errors_exit_2(capsys):
    assert run(["bound", "sn", "--kind", "linear", "--n", "5", "--n-index", "0", "--k", "1"]) == 2
    assert "error:" in capsys.readouterr().err
    assert run(["freq", "density", "--kind", "log", "--n", "20", "--tol-sup", "0"]) == 2
    assert "error:" in capsys.readouterr().err


def test_csv_format_for_two_column_tables(capsys):
    argv = ARGV[("bound", "profile")] + ["--format", "csv"]
    assert run(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "N,ratio"
    assert len(lines) > 1
    for line in lines[1:]:
        n, ratio = line.split(",")
        int(n)
        float(ratio)


def test_csv_format_rejected_without_a_table(capsys):
    argv = ARGV[("bound", "sn")] + ["--format", "csv"]
    assert run(argv) == 2
    assert "no CSV form" in capsys.readouterr().err


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "density.json"
    argv = ARGV[("freq", "density")] + ["--out", str(target)]
    assert run(argv) == 0
    assert capsys.readouterr().out == ""
    data = json.loads(target.read_text())
    assert data["which"] == "L"


def test_suite_exit_codes(capsys):
    assert run(["suite", "acceptance", "--only", "9"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert data["failed"] == 0
    assert "elapsedSeconds" not in captured.out
    assert "criteria passed" in captured.err

    assert run(["suite", "acceptance", "--only", "5"]) == 1
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert data["failed"] == 1
    assert "[FAIL]" in captured.err
