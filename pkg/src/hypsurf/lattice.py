"""Numerical divisor classes on blow-ups of hyperelliptic surfaces.

A class on the r-point blow-up is written in the basis A/mu, mu*B/gamma,
E_1, ..., E_r as  a*(A/mu) + b*(mu*B/gamma) - sum_i d_i*E_i.  The same type
serves line bundles and curve classes.  All arithmetic is exact: integer
coefficients, ``fractions.Fraction`` ratios, and square roots compared by
cross-squaring rather than floating evaluation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .catalog import SurfaceData


@dataclass(frozen=True)
class DivisorClass:
    """A numerical class (a, b, d_1, ..., d_r); d_i are the subtracted
    exceptional coefficients.  r = 0 means the un-blown-up surface."""

    a: int
    b: int
    d: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))

    @property
    def r(self) -> int:
        return len(self.d)

    def pad(self, r: int) -> "DivisorClass":
        """Extend with zero exceptional coefficients up to ambient r."""
        if r < self.r:
            raise ValueError(f"cannot pad down from r={self.r} to r={r}")
        return DivisorClass(self.a, self.b, self.d + (0,) * (r - self.r))

    def scale(self, t: int) -> "DivisorClass":
        return DivisorClass(t * self.a, t * self.b, tuple(t * x for x in self.d))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self.r != other.r:
            raise ValueError("ambient blow-up dimensions differ")
        return DivisorClass(
            self.a + other.a,
            self.b + other.b,
            tuple(x + y for x, y in zip(self.d, other.d)),
        )


def unit_vector(i: int, r: int) -> tuple[int, ...]:
    if not 1 <= i <= r:
        raise ValueError(f"exceptional index {i} out of range 1..{r}")
    return tuple(1 if j == i - 1 else 0 for j in range(r))


def intersect(c1: DivisorClass, c2: DivisorClass) -> int:
    """Intersection number a*b' + a'*b - sum d_i*d'_i.

    Induced by (A/mu)^2 = (mu*B/gamma)^2 = 0, (A/mu).(mu*B/gamma) = 1 and
    E_i^2 = -1 with mixed products zero.
    """
    if c1.r != c2.r:
        raise ValueError(f"ambient blow-up dimensions differ: {c1.r} != {c2.r}")
    return c1.a * c2.b + c2.a * c1.b - sum(x * y for x, y in zip(c1.d, c2.d))


def self_intersection(c: DivisorClass) -> int:
    """c.c = 2ab - sum d_i^2."""
    return intersect(c, c)


class FibreKind(enum.Enum):
    FIBRE_A = "fibre-a"                       # smooth fibre of the first projection
    FIBRE_B = "fibre-b"                       # fibre of the second projection
    SINGULAR_A_REDUCED = "singular-a-reduced"  # highest-multiplicity fibre, reduced
    A_MINUS_E = "a-minus-e"                   # strict transform through blown-up point
    B_MINUS_E = "b-minus-e"


def fibre_class(s: SurfaceData, r: int, kind: FibreKind, index: int | None = None) -> DivisorClass:
    """Numerical class of a fibre, or of a strict transform through the
    ``index``-th blown-up point for the indexed kinds."""
    zeros = (0,) * r
    if kind is FibreKind.FIBRE_A:
        return DivisorClass(s.mu, 0, zeros)
    if kind is FibreKind.FIBRE_B:
        return DivisorClass(0, s.gamma_over_mu, zeros)
    if kind is FibreKind.SINGULAR_A_REDUCED:
        return DivisorClass(1, 0, zeros)
    if index is None:
        raise ValueError(f"{kind.value} requires an exceptional index")
    e = unit_vector(index, r)
    if kind is FibreKind.A_MINUS_E:
        return DivisorClass(s.mu, 0, e)
    return DivisorClass(0, s.gamma_over_mu, e)


def seshadri_ratio(L: DivisorClass, C: DivisorClass, m: int) -> Fraction:
    """Exact ratio (L.C)/m for a candidate curve class C of multiplicity m."""
    if m <= 0:
        raise ValueError(f"multiplicity must be positive, got {m}")
    return Fraction(intersect(L, C), m)


@dataclass(frozen=True)
class RationalBound:
    q: Fraction


@dataclass(frozen=True)
class SqrtBound:
    """The non-negative real sqrt(q)."""

    q: Fraction

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("square-root bound needs a non-negative radicand")


Bound = RationalBound | SqrtBound


def rational_bound(x) -> RationalBound:
    return RationalBound(Fraction(x))


def sqrt_bound(x) -> SqrtBound:
    return SqrtBound(Fraction(x))


def compare_bounds(x: Bound, y: Bound) -> int:
    """Exact trichotomy: -1, 0 or 1.  Never uses floating approximation."""
    if isinstance(x, RationalBound) and isinstance(y, RationalBound):
        return _sign(x.q - y.q)
    if isinstance(x, SqrtBound) and isinstance(y, SqrtBound):
        return _sign(x.q - y.q)
    if isinstance(x, RationalBound):
        # x vs sqrt(y.q): a negative rational is below any sqrt
        if x.q < 0:
            return -1
        return _sign(x.q * x.q - y.q)
    return -compare_bounds(y, x)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)
