"""Ampleness tests on blow-ups of hyperelliptic surfaces.

Three sufficient criteria (decomposable classes with positive square,
homogeneous floor bounds, and a coefficient test for non-homogeneous
classes) are combined with the necessary fibre/exceptional checks into a
tri-state verdict.  A failed sufficient criterion never refutes ampleness:
the criteria are sufficient but not necessary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .catalog import SurfaceData
from .lattice import DivisorClass, FibreKind, fibre_class, self_intersection, unit_vector


class Status(enum.Enum):
    PROVEN = "proven"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


class Outcome(enum.Enum):
    PASSED = "passed"
    FAILED = "failed"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class CriterionResult:
    name: str
    outcome: Outcome
    detail: str


@dataclass(frozen=True)
class AmpleVerdict:
    status: Status
    criteria_trace: tuple[CriterionResult, ...]
    witnesses: tuple[DivisorClass, ...] = ()


def min_k_for(r: int) -> int:
    """Least integer k with 2k^2 >= r, i.e. the ceiling of sqrt(r/2)."""
    if r <= 0:
        return 0
    k = isqrt(r // 2)
    while 2 * k * k < r:
        k += 1
    return k


def necessary_checks(
    L: DivisorClass, s: SurfaceData
) -> list[tuple[str, bool, DivisorClass | None]]:
    """Evaluate every numerical condition that ampleness forces.

    Each entry is (name, passed, witness); a failing entry carries the curve
    class that meets L non-positively.
    """
    r = L.r
    checks: list[tuple[str, bool, DivisorClass | None]] = []
    checks.append(("a_positive", L.a > 0, None if L.a > 0 else fibre_class(s, r, FibreKind.FIBRE_B)))
    checks.append(("b_positive", L.b > 0, None if L.b > 0 else fibre_class(s, r, FibreKind.FIBRE_A)))
    for i, di in enumerate(L.d, start=1):
        if di <= 0:
            # the exceptional curve E_i is -e_i in the subtracted-coefficient
            # convention, so L.E_i = d_i <= 0
            e_i = DivisorClass(0, 0, tuple(-x for x in unit_vector(i, r)))
            checks.append((f"exceptional_degree_{i}", False, e_i))
        else:
            checks.append((f"exceptional_degree_{i}", True, None))
        ok_a = s.mu * L.b > di
        checks.append(
            (f"fibre_a_through_point_{i}", ok_a,
             None if ok_a else fibre_class(s, r, FibreKind.A_MINUS_E, i))
        )
        ok_b = s.gamma_over_mu * L.a > di
        checks.append(
            (f"fibre_b_through_point_{i}", ok_b,
             None if ok_b else fibre_class(s, r, FibreKind.B_MINUS_E, i))
        )
    sq = self_intersection(L)
    checks.append(("positive_self_intersection", sq > 0, None if sq > 0 else L))
    return checks


def _uniform_d(L: DivisorClass) -> int | None:
    if L.r == 0:
        return None
    vals = set(L.d)
    return vals.pop() if len(vals) == 1 else None


def kuchle_ample(L: DivisorClass, s: SurfaceData) -> AmpleVerdict:
    """Decomposability criterion for classes of shape n*H' - sum E_i.

    Proven iff some n >= 2 divides both a and b with positive quotients and
    L^2 > 0; n = gcd(a, b) is used since any valid n gives the same square
    test.  Classes with non-unit exceptional coefficients are out of shape,
    not refuted.
    """
    if L.r == 0 or any(di != 1 for di in L.d):
        trace = CriterionResult("kuchle", Outcome.NOT_APPLICABLE,
                                "requires shape (a, b, 1, ..., 1) with r >= 1")
        return AmpleVerdict(Status.UNKNOWN, (trace,))
    n = gcd(L.a, L.b) if L.a > 0 and L.b > 0 else 0
    if n < 2:
        trace = CriterionResult("kuchle", Outcome.NOT_APPLICABLE,
                                f"no common factor n >= 2 of a={L.a}, b={L.b}")
        return AmpleVerdict(Status.UNKNOWN, (trace,))
    sq = self_intersection(L)
    if sq > 0:
        trace = CriterionResult("kuchle", Outcome.PASSED, f"n={n}, L^2={sq} > 0")
        return AmpleVerdict(Status.PROVEN, (trace,))
    trace = CriterionResult("kuchle", Outcome.FAILED, f"L^2={sq} <= 0")
    return AmpleVerdict(Status.UNKNOWN, (trace,))


def homogeneous_ample(L: DivisorClass, s: SurfaceData) -> AmpleVerdict:
    """Floor criterion for uniform classes (a, b, d, ..., d):

    Proven iff floor(a/d) and floor(b/d) are >= 2 and have squares exceeding
    r/2.  Exact integer transcription of floor > max{1, sqrt(r/2)}.
    """
    d = _uniform_d(L)
    if d is None or d < 1 or L.a < 1 or L.b < 1:
        trace = CriterionResult("homogeneous", Outcome.NOT_APPLICABLE,
                                "requires a, b >= 1 and uniform d >= 1 with r >= 1")
        return AmpleVerdict(Status.UNKNOWN, (trace,))
    fa, fb = L.a // d, L.b // d
    r = L.r
    if fa >= 2 and fb >= 2 and 2 * fa * fa > r and 2 * fb * fb > r:
        trace = CriterionResult(
            "homogeneous", Outcome.PASSED,
            f"floor(a/d)={fa}, floor(b/d)={fb}, 2*{min(fa, fb)}^2={2 * min(fa, fb) ** 2} > {r}")
        return AmpleVerdict(Status.PROVEN, (trace,))
    trace = CriterionResult(
        "homogeneous", Outcome.FAILED,
        f"floor(a/d)={fa}, floor(b/d)={fb} must both be >= 2 with 2*floor^2 > r={r}")
    return AmpleVerdict(Status.UNKNOWN, (trace,))


def nonhomogeneous_ample(L: DivisorClass, s: SurfaceData) -> AmpleVerdict:
    """Coefficient criterion for arbitrary non-negative d_i:

    Proven iff a > d_i and mu*b > d_i for all i, and a + b > mu * sum d_i.
    """
    if any(di < 0 for di in L.d):
        trace = CriterionResult("nonhomogeneous", Outcome.NOT_APPLICABLE,
                                "requires non-negative exceptional coefficients")
        return AmpleVerdict(Status.UNKNOWN, (trace,))
    mu = s.mu
    total = sum(L.d)
    cond1 = all(L.a > di and mu * L.b > di for di in L.d)
    cond2 = L.a + L.b > mu * total
    if cond1 and cond2:
        trace = CriterionResult(
            "nonhomogeneous", Outcome.PASSED,
            f"a, mu*b exceed every d_i and a+b={L.a + L.b} > {mu * total}=mu*sum(d)")
        return AmpleVerdict(Status.PROVEN, (trace,))
    reason = ("coefficient condition a, mu*b > d_i failed" if not cond1
              else f"a+b={L.a + L.b} <= {mu * total}=mu*sum(d)")
    trace = CriterionResult("nonhomogeneous", Outcome.FAILED, reason)
    return AmpleVerdict(Status.UNKNOWN, (trace,))


def decide_ample(L: DivisorClass, s: SurfaceData) -> AmpleVerdict:
    """Combine the necessary checks with every sufficient criterion.

    Any necessary failure refutes with a witness; on the un-blown-up surface
    positivity of a and b already decides ampleness.
    """
    trace: list[CriterionResult] = []
    witnesses: list[DivisorClass] = []
    refuted = False
    for name, ok, witness in necessary_checks(L, s):
        trace.append(CriterionResult(f"necessary:{name}",
                                     Outcome.PASSED if ok else Outcome.FAILED,
                                     "" if ok else "witness meets L non-positively"))
        if not ok:
            refuted = True
            if witness is not None:
                witnesses.append(witness)
    if refuted:
        return AmpleVerdict(Status.REFUTED, tuple(trace), tuple(witnesses))
    if L.r == 0:
        trace.append(CriterionResult("base_surface", Outcome.PASSED,
                                     "on the un-blown-up surface a, b > 0 is equivalent to ampleness"))
        return AmpleVerdict(Status.PROVEN, tuple(trace))
    proven = False
    for crit in (kuchle_ample, homogeneous_ample, nonhomogeneous_ample):
        verdict = crit(L, s)
        trace.extend(verdict.criteria_trace)
        proven = proven or verdict.status is Status.PROVEN
    return AmpleVerdict(Status.PROVEN if proven else Status.UNKNOWN, tuple(trace))


def nef_for_d(a: int, b: int, r: int, d) -> bool:
    """Nefness of (a, b, d, ..., d) by the floor test, for rational d > 0.

    Only valid for r >= 8, where the required floor threshold is the least k
    with 2k^2 >= r.
    """
    if r < 8:
        raise ValueError(f"floor-based nef test needs r >= 8, got r={r}")
    if a <= 0 or b <= 0:
        raise ValueError("requires a, b > 0")
    d = Fraction(d)
    if d <= 0:
        raise ValueError("requires d > 0")
    k = min_k_for(r)
    return (a / d).__floor__() >= k and (b / d).__floor__() >= k
