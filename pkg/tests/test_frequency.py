import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdseries import (
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


def test_builtin_kinds_construct_and_are_monotone():
    for kind in BUILTIN_KINDS:
        if kind == "custom-from-list":
            freq = make_frequency(kind, 4, [0.0, 0.5, 1.25, 3.0])
        else:
            freq = make_frequency(kind, 40)
        assert freq.M == (4 if kind == "custom-from-list" else 40)
        assert np.all(np.diff(freq.values) > 0)


def test_linear_frequency_starts_at_zero():
    freq = make_frequency("linear", 5)
    assert freq.values.tolist() == [0.0, 1.0, 2.0, 3.0, 4.0]


def test_log_frequency_is_log_n():
    freq = make_frequency("log", 6)
    assert np.allclose(freq.values, np.log(np.arange(1, 7)))
    assert freq.values[0] == 0.0


def test_logprimes_is_q_independent_and_log_is_not():
    assert make_frequency("logprimes", 5).q_independent
    assert not make_frequency("log", 5).q_independent


def test_make_frequency_rejects_unknown_kind():
    with pytest.raises(ValueError):
        make_frequency("ramanujan", 10)


def test_make_frequency_rejects_non_monotone_custom():
    with pytest.raises(ValueError):
        make_frequency("custom-from-list", 3, [0.0, 1.0, 1.0])


def test_values_are_read_only():
    freq = make_frequency("linear", 4)
    with pytest.raises(ValueError):
        freq.values[0] = -1.0


def test_interleave_exp2_log_gaps_are_exact():
    # the squeezed point sits e^(-n^2) below the next integer; float
    # subtraction of the values underflows long before n = 50, so the
    # log-gap metadata must carry the exact exponent
    freq = make_frequency("interleave-exp2", 100)
    lg = freq.log_gap_values()
    assert np.all(np.isfinite(lg))
    assert lg[0] == -1.0
    assert lg[2] == -4.0
    assert lg[4] == -9.0
    assert lg.min() == -2500.0
    # the naive float route bottoms out near one ulp (about e^-36 at these
    # magnitudes) while the true gap at n = 10 is e^-100
    assert lg[18] == -100.0
    assert np.log(freq.gaps[18]) > -40.0


def test_estimate_L_log_is_exactly_one():
    est = estimate_L(make_frequency("log", 2000))
    assert est.estimate == 1.0
    assert est.trend == "convergent"
    assert all(r == 1.0 for _, r in est.ratios)


def test_estimate_L_linear_goes_to_zero():
    est = estimate_L(make_frequency("linear", 2000))
    assert est.estimate < 0.05
    assert est.trend == "convergent"


def test_estimate_L_needs_three_points():
    with pytest.raises(ValueError):
        estimate_L(make_frequency("linear", 2))


def test_check_bc_log_holds():
    rep = check_bc(make_frequency("log", 100), l=1.0, delta=0.1)
    assert rep.verdict == "evidence-for"
    assert rep.condition == "BC"
    assert np.isfinite(rep.infimum_log_constant)


def test_check_bc_interleave_fails():
    rep = check_bc(make_frequency("interleave-exp2", 100), l=1.0, delta=0.1)
    assert rep.verdict == "evidence-against"


def test_check_lc_interleave_holds():
    rep = check_lc(make_frequency("interleave-exp2", 100), delta=0.5)
    assert rep.verdict == "evidence-for"


def test_check_lc_rejects_bad_delta():
    with pytest.raises(ValueError):
        check_lc(make_frequency("log", 10), delta=0.0)


def test_check_poly_growth_sqrtlog_holds():
    rep = check_poly_growth(make_frequency("sqrtlog", 2000), l=1.0, d=2.0, delta=0.1)
    assert rep.verdict == "evidence-for"


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.floats(min_value=0.01, max_value=5.0), min_size=1, max_size=12),
)
def test_refine_gaps_caps_every_gap_and_keeps_input(gap_list):
    vals = np.concatenate([[0.0], np.cumsum(gap_list)])
    freq = Frequency(vals)
    fine = refine_gaps(freq)
    assert np.all(np.diff(fine.values) <= 1.0 + 1e-12)
    # original points survive as a subsequence
    pos = np.searchsorted(fine.values, freq.values)
    assert np.allclose(fine.values[pos], freq.values, atol=1e-12)


def test_refine_gaps_noop_when_already_fine():
    freq = make_frequency("log", 30)
    fine = refine_gaps(freq)
    assert fine.M == freq.M


def test_read_frequency_file_roundtrip(tmp_path):
    p = tmp_path / "freq.txt"
    p.write_text("# comment line\n0.0\n0.5\n\n1.75\n")
    freq = read_frequency_file(p)
    assert freq.values.tolist() == [0.0, 0.5, 1.75]


def test_read_frequency_file_rejects_decreasing(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1.0\n0.5\n")
    with pytest.raises(ValueError):
        read_frequency_file(p)
