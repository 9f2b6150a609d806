"""Ampleness criteria: frozen verdicts and tri-state behaviour."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypsurf.catalog import surface_params
from hypsurf.lattice import DivisorClass, intersect
from hypsurf.positivity import (
    Outcome,
    Status,
    decide_ample,
    homogeneous_ample,
    kuchle_ample,
    min_k_for,
    necessary_checks,
    nef_for_d,
    nonhomogeneous_ample,
)


def uniform(a, b, d, r):
    return DivisorClass(a, b, (d,) * r)


def trace_by_name(verdict):
    return {c.name: c for c in verdict.criteria_trace}


def test_min_k_for():
    assert [min_k_for(r) for r in (0, 1, 2, 3, 8, 9, 10, 18, 19)] == [0, 1, 1, 2, 2, 3, 3, 3, 4]
    for r in range(1, 200):
        k = min_k_for(r)
        assert 2 * k * k >= r > 2 * (k - 1) * (k - 1)


def test_kuchle():
    s = surface_params(1)
    v = kuchle_ample(uniform(3, 3, 1, 10), s)
    assert v.status is Status.PROVEN
    assert v.criteria_trace[0].detail == "n=3, L^2=8 > 0"
    v = kuchle_ample(uniform(2, 2, 1, 8), s)
    assert v.status is Status.UNKNOWN
    assert v.criteria_trace[0].outcome is Outcome.FAILED  # L^2 = 0
    v = kuchle_ample(uniform(5, 7, 1, 4), s)
    assert v.criteria_trace[0].outcome is Outcome.NOT_APPLICABLE  # gcd(5,7)=1
    v = kuchle_ample(uniform(4, 6, 2, 4), s)
    assert v.criteria_trace[0].outcome is Outcome.NOT_APPLICABLE  # d != 1


def test_homogeneous():
    s = surface_params(1)
    assert homogeneous_ample(uniform(4, 6, 1, 8), s).status is Status.PROVEN
    v = homogeneous_ample(uniform(2, 9, 1, 8), s)
    assert v.status is Status.UNKNOWN  # 2*2^2 = 8 is not > 8
    assert v.criteria_trace[0].outcome is Outcome.FAILED
    v = homogeneous_ample(DivisorClass(4, 6, (1, 2)), s)
    assert v.criteria_trace[0].outcome is Outcome.NOT_APPLICABLE


def test_nonhomogeneous():
    s1 = surface_params(1)  # mu = 2
    v = nonhomogeneous_ample(DivisorClass(12, 11, (2, 3, 4)), s1)
    assert v.status is Status.PROVEN  # 23 > 2*9 = 18
    v = nonhomogeneous_ample(uniform(3, 3, 1, 10), s1)
    assert v.status is Status.UNKNOWN  # 6 is not > 20
    assert "6 <= 20" in v.criteria_trace[0].detail
    s7 = surface_params(7)  # mu = 6
    assert nonhomogeneous_ample(DivisorClass(10, 2, (1,)), s7).status is Status.PROVEN


def test_decide_ample_frozen_cases():
    s1 = surface_params(1)
    # the floor criterion proves (3,3,1^10) even though the coefficient one fails
    v = decide_ample(uniform(3, 3, 1, 10), s1)
    assert v.status is Status.PROVEN
    names = trace_by_name(v)
    assert names["homogeneous"].outcome is Outcome.PASSED
    assert names["nonhomogeneous"].outcome is Outcome.FAILED
    # necessary failure refutes with a witness
    s2 = surface_params(2)
    v = decide_ample(DivisorClass(1, 5, (2,)), s2)  # gamma/mu * a = 2 is not > 2
    assert v.status is Status.REFUTED
    assert v.witnesses and intersect(v.witnesses[0], DivisorClass(1, 5, (2,))) <= 0
    # un-blown-up surface: positivity of a and b decides
    assert decide_ample(DivisorClass(2, 3), s1).status is Status.PROVEN
    assert decide_ample(DivisorClass(0, 5), s1).status is Status.REFUTED


def test_decide_ample_unknown():
    s = surface_params(1)
    # ample-looking class that no sufficient criterion covers
    v = decide_ample(uniform(2, 9, 1, 8), s)
    assert v.status is Status.UNKNOWN


def test_nef_for_d():
    assert nef_for_d(5, 5, 8, Fraction(5, 2)) is True
    assert nef_for_d(4, 6, 8, 2) is True
    assert nef_for_d(4, 6, 18, 2) is False  # k = 3, floor(4/2) = 2 < 3
    with pytest.raises(ValueError):
        nef_for_d(5, 5, 7, 1)
    with pytest.raises(ValueError):
        nef_for_d(5, 5, 8, 0)


# -- randomized invariants -----------------------------------------------

surfaces = st.integers(1, 7).map(surface_params)
small_classes = st.builds(
    DivisorClass, st.integers(-6, 12), st.integers(-6, 12),
    st.lists(st.integers(-3, 6), min_size=0, max_size=5).map(tuple))


@given(small_classes, surfaces)
def test_verdict_exclusive_and_traced(L, s):
    v = decide_ample(L, s)
    assert v.status in (Status.PROVEN, Status.REFUTED, Status.UNKNOWN)
    if v.status is Status.REFUTED:
        # every witness really meets L non-positively
        for w in v.witnesses:
            assert intersect(w, L) <= 0
    if v.status is Status.PROVEN:
        # proven classes pass every necessary check
        assert all(ok for _, ok, _ in necessary_checks(L, s))


@given(small_classes, surfaces, st.integers(1, 4), st.integers(1, 4))
def test_nonhomogeneous_monotone_in_a_b(L, s, da, db):
    """Growing a and b never turns a proven coefficient test unproven."""
    if nonhomogeneous_ample(L, s).status is Status.PROVEN:
        bigger = DivisorClass(L.a + da, L.b + db, L.d)
        assert nonhomogeneous_ample(bigger, s).status is Status.PROVEN
