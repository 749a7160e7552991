import json
from fractions import Fraction

import pytest

from pascal_rays.errors import DomainError, UsageError
from pascal_rays.pf import (
    Grid,
    darroch_bounds,
    darroch_mean,
    generating_polynomial,
    is_pf,
    newton_check,
    pf_report,
    sweep_conjecture_pf,
    sweep_conjecture_ray_unimodal,
    sweep_conjecture_turning,
    transversal_support_length,
)
from pascal_rays.props import classify
from pascal_rays.rays import RayParams
from pascal_rays.records import dec_frac

from oracles import C


def row(n):
    return [C(n, k) for k in range(n + 1)]


def shallow(n):
    return [C(n - i, i) for i in range(n // 2 + 1)]


def test_generating_polynomial():
    P = generating_polynomial([1, 3, 3, 1])
    assert P(1) == 8 and P(-1) == 0
    with pytest.raises(UsageError):
        generating_polynomial([])


@pytest.mark.parametrize("values,expected", [
    ([1, 4, 6, 4, 1], True),
    ([1, 1, 1], False),
    ([1, 3, 1], True),
    ([0, 1, 3, 1, 0], True),
    ([7], True),
    ([1, 2, 3, 2, 1], False),
])
def test_is_pf_examples(values, expected):
    assert is_pf(values) is expected


def test_is_pf_needs_contiguous_support():
    with pytest.raises(DomainError):
        is_pf([1, 0, 1])
    with pytest.raises(DomainError):
        is_pf([0, 0])


def test_newton_examples():
    assert newton_check(row(6))
    assert not newton_check([1, 1, 1])
    # a_1**2 = 9 and 1*3*2*2 = 12
    assert not newton_check([1, 3, 3])
    with pytest.raises(UsageError):
        newton_check([1, 2])
    with pytest.raises(DomainError):
        newton_check([1, 0, 1])


def test_darroch_examples():
    assert darroch_bounds(row(4)) == (2, 2)
    assert darroch_bounds(row(5)) == (2, 3)
    assert darroch_mean([1, 5, 6, 1]) == Fraction(20, 13)
    assert darroch_bounds([1, 5, 6, 1]) == (1, 2)
    with pytest.raises(DomainError):
        darroch_bounds([1, 1, 1])


def _pf_consequences(values):
    assert is_pf(values)
    rep = classify(values)
    assert rep.is_log_concave
    if len(values) >= 3:
        assert newton_check(values)
    lo, hi = darroch_bounds(values)
    assert lo <= rep.modes[0] and rep.modes[1] <= hi
    assert rep.modes[1] - rep.modes[0] <= 1


def test_rows_and_shallow_diagonals():
    for n in range(0, 61):
        _pf_consequences(row(n))
        assert darroch_mean(row(n)) == Fraction(n, 2)
    for n in range(0, 31):
        _pf_consequences(shallow(n))


def test_pf_report_round_trip():
    rep = pf_report([0, 1, 5, 6, 1])
    d = rep.as_dict()
    assert d["is_pf"] and d["newton_holds"]
    assert d["darroch_interval"] == [1, 2] and d["darroch_mean"] == "20/13"
    assert d["empirical_modes"] == [2, 2]
    assert pf_report([2, 1]).newton_holds is None


def test_transversal_support_length():
    p = RayParams(10, 0, 1, 2)
    n = transversal_support_length(p)
    values = [C(10 + i, 2 * i) for i in range(n + 3)]
    assert values[n - 1] > 0 and values[n:] == [0, 0, 0]
    with pytest.raises(DomainError):
        transversal_support_length(RayParams(3, 1, 2, 1))


def test_empty_grid():
    out = sweep_conjecture_ray_unimodal(Grid(max_n0=-1, max_d=2), 10)
    assert out.checked_count == 0 and out.holds


def test_unimodal_sweep_small_grid():
    out = sweep_conjecture_ray_unimodal(Grid(max_n0=5, max_d=3), 30)
    assert out.holds
    assert out.checked_count == sum(n + 1 for n in range(6)) * 16


def test_unimodal_sweep_signed():
    out = sweep_conjecture_ray_unimodal(Grid(max_n0=5, max_d=2), 12, signed=True)
    assert out.holds and out.skipped_count > 0


def test_pf_sweep_explicit_families():
    rays = [RayParams(n, 0, 0, 1) for n in range(0, 31)]
    rays += [RayParams(n, 0, 1, 2) for n in range(0, 31)]
    out = sweep_conjecture_pf(rays)
    assert out.holds and out.checked_count == 62


def test_pf_sweep_forward_only_counterexample():
    out = sweep_conjecture_pf([RayParams(5, 3, 1, 2)], whole_line=False)
    assert not out.holds
    cx = out.counterexamples[0]
    assert [dec_frac(c) for c in cx["polynomial"]] == [10, 6, 1]
    assert sweep_conjecture_pf([RayParams(5, 3, 1, 2)]).holds


def test_pf_sweep_window_truncation_noted():
    out = sweep_conjecture_pf([RayParams(20, 0, 0, 1)], window=5)
    assert any("truncated" in n for n in out.notes)


def test_turning_sweep_families():
    # apex rays are log-convex from the start
    out = sweep_conjecture_turning([RayParams(0, 0, 2, 1), RayParams(0, 0, 3, 1)], 40)
    assert out.holds
    assert [o["turning_point"] for o in out.observations] == [0, 0]
    vert = sweep_conjecture_turning([RayParams(2, 0, 2, 1)], 20)
    assert vert.observations[0]["turning_point"] == 3


def test_turning_sweep_tie_is_weak():
    out = sweep_conjecture_turning([RayParams(3, 0, 3, 1)], 20)
    assert out.holds and out.observations[0].get("weak")


def test_sweeps_deterministic_and_parallel_agree():
    g = Grid(max_n0=4, max_d=3)
    for sweep, window in [(sweep_conjecture_ray_unimodal, 20), (sweep_conjecture_pf, None),
                          (sweep_conjecture_turning, 20)]:
        a = sweep(g, window).to_json()
        b = sweep(g, window).to_json()
        c = sweep(g, window, jobs=2).to_json()
        assert a == b == c
        assert json.loads(a)["holds_on_grid"]
