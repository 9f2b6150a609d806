"""Enumeration oracle: box minimiser, verifiers, report algebra."""

from fractions import Fraction

import pytest

from hypsurf.catalog import surface_params
from hypsurf.oracle import (
    CapForm,
    ConstraintSet,
    OracleReport,
    Violation,
    min_ratio_over_box,
    run_verifier,
    verify_global_witness,
    verify_multipoint_formula,
    verify_single_point_chain,
)


def test_cap_form():
    cap = CapForm(2, 3, 1)
    assert cap.value(4, 5) == 24
    with pytest.raises(ValueError):
        CapForm(-1, 0)


def test_min_ratio_small_box_by_hand():
    # weights (w_alpha, w_beta) = (2, 3); caps m <= beta, m <= alpha;
    # the ratio (3*beta + 2*alpha)/min(alpha, beta) is minimised at
    # alpha = beta = m, giving 5.
    cons = ConstraintSet((CapForm(0, 1), CapForm(1, 0)))
    assert min_ratio_over_box((2, 3), cons, 4) == Fraction(5)
    # fractional weights exercise the common-denominator path
    assert min_ratio_over_box((Fraction(1, 2), Fraction(1, 3)), cons, 4) == Fraction(5, 6)


def test_min_ratio_infeasible():
    cons = ConstraintSet((CapForm(0, 0, 0),))
    with pytest.raises(ValueError):
        min_ratio_over_box((1, 1), cons, 3)


def test_report_merge_monoid():
    r1 = OracleReport(grid="g", instances_checked=3, min_gap=Fraction(1, 2))
    r2 = OracleReport(grid="g", instances_checked=4, min_gap=Fraction(1, 3),
                      violations=[Violation("p", 1, 1, 1, Fraction(0), Fraction(1))])
    merged = r1.merge(r2)
    assert merged.instances_checked == 7
    assert merged.min_gap == Fraction(1, 3)
    assert not merged.passed
    # commutative in the observable fields
    other = r2.merge(r1)
    assert other.instances_checked == merged.instances_checked
    assert other.min_gap == merged.min_gap
    assert len(other.violations) == len(merged.violations)


@pytest.mark.parametrize("type_id", range(1, 8))
def test_multipoint_verifier_small_grid(type_id):
    report = verify_multipoint_formula(surface_params(type_id), grid_max=4, box=8)
    assert report.passed
    assert report.instances_checked > 0
    assert report.min_gap is not None and report.min_gap >= 0


@pytest.mark.parametrize("type_id", (1, 3, 5, 7))
def test_single_chain_small_grid(type_id):
    report = verify_single_point_chain(surface_params(type_id), grid_max=5, box=6)
    assert report.passed
    assert report.min_gap == 0  # slope boundaries are in the grid by construction


def test_single_chain_rejects_even_types():
    with pytest.raises(ValueError):
        verify_single_point_chain(surface_params(2), grid_max=3, box=3)


@pytest.mark.parametrize("type_id", range(1, 8))
def test_global_witness_small_grid(type_id):
    report = verify_global_witness(surface_params(type_id), grid_max=8)
    assert report.passed
    assert report.instances_checked > 0


def test_run_verifier_parallel_merge_matches_serial():
    s = surface_params(3)
    serial = run_verifier("multipoint", s, grid_max=4, box=8, jobs=1)
    parallel = run_verifier("multipoint", s, grid_max=4, box=8, jobs=2)
    assert parallel.instances_checked == serial.instances_checked
    assert parallel.min_gap == serial.min_gap
    assert parallel.passed and serial.passed


def test_run_verifier_unknown_prop():
    with pytest.raises(ValueError):
        run_verifier("nonsense", surface_params(1), 3, 3)
