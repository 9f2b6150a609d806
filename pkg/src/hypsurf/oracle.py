"""Brute-force verification of the closed forms and inequality chains.

Candidate curve classes (alpha, beta) range over a bounded box; the total
multiplicity m is maximised per cell subject to the Bezout-style caps, since
the Seshadri ratio is decreasing in m.  Everything is exact integer or
rational arithmetic; the enumeration itself is the oracle, independent of
the closed-form evaluators it checks.

The reports merge as a commutative monoid (sum of counts, union of
violations, min of gaps), so grids may be partitioned arbitrarily.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .catalog import SurfaceData
from .lattice import DivisorClass
from .positivity import min_k_for, necessary_checks


@dataclass(frozen=True)
class CapForm:
    """Linear form c(alpha, beta) = ca*alpha + cb*beta + offset bounding the
    total multiplicity from above; ca, cb >= 0 keeps it monotone."""

    ca: int
    cb: int
    offset: int = 0

    def __post_init__(self):
        if self.ca < 0 or self.cb < 0:
            raise ValueError("cap coefficients must be non-negative")

    def value(self, alpha: int, beta: int) -> int:
        return self.ca * alpha + self.cb * beta + self.offset


@dataclass(frozen=True)
class ConstraintSet:
    caps: tuple[CapForm, ...]
    description: str = ""


@dataclass(frozen=True)
class Violation:
    params: str
    alpha: int
    beta: int
    m: int
    found: Fraction
    claimed: Fraction


@dataclass
class OracleReport:
    grid: str
    instances_checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    min_gap: Fraction | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def record_gap(self, gap: Fraction) -> None:
        if self.min_gap is None or gap < self.min_gap:
            self.min_gap = gap

    def merge(self, other: "OracleReport") -> "OracleReport":
        gaps = [g for g in (self.min_gap, other.min_gap) if g is not None]
        return OracleReport(
            grid=self.grid if self.grid == other.grid else f"{self.grid} + {other.grid}",
            instances_checked=self.instances_checked + other.instances_checked,
            violations=self.violations + other.violations,
            min_gap=min(gaps) if gaps else None,
        )


def min_ratio_over_box(weights, cons: ConstraintSet, box: int) -> Fraction:
    """Exact minimum of (w_beta*beta + w_alpha*alpha)/m over the box, with
    m the largest multiplicity the caps allow.

    Cells where no positive multiplicity is feasible are skipped; an entirely
    infeasible box is an error.
    """
    return _argmin_ratio_over_box(weights, cons, box)[0]


def _argmin_ratio_over_box(weights, cons: ConstraintSet, box: int):
    """As min_ratio_over_box, but also reports the minimising cell
    (ratio, alpha, beta, m)."""
    if box < 1:
        raise ValueError("box size must be >= 1")
    w_alpha, w_beta = (Fraction(w) for w in weights)
    den = lcm(w_alpha.denominator, w_beta.denominator)
    wa = int(w_alpha * den)
    wb = int(w_beta * den)
    best = None  # (num, den, alpha, beta, m)
    for alpha in range(1, box + 1):
        for beta in range(1, box + 1):
            m = min(c.value(alpha, beta) for c in cons.caps)
            if m <= 0:
                continue
            num = wb * beta + wa * alpha
            d = den * m
            if best is None or num * best[1] < best[0] * d:
                best = (num, d, alpha, beta, m)
    if best is None:
        raise ValueError(f"no feasible multiplicity in box {box} for {cons.description!r}")
    num, d, alpha, beta, m = best
    return Fraction(num, d), alpha, beta, m


def _multipoint_patterns(s: SurfaceData):
    """(description, caps(t0, s0), closed-form lower, attained upper, t0 range)
    per surface type; even types fix t0 by their singular-fibre count."""
    mu = s.mu
    if s.is_odd_type:
        def caps(t0, s0):
            return ConstraintSet((CapForm(0, mu * t0), CapForm(s0, 0)), "odd-type fibre caps")

        def lower(a, b, t0, s0):
            return min(Fraction(a, t0), Fraction(b, s0))

        patterns = [("fibre-concentrated points", caps, lower, lower, range(1, 5))]
        if s.type_id == 1:
            def caps_relaxed(t0, s0):
                return ConstraintSet((CapForm(0, 2 * t0), CapForm(2 * s0, 0)),
                                     "type-1 relaxed covering caps")

            patterns.append(("relaxed covering (lB up to 2*s0)", caps_relaxed, lower, lower,
                             range(1, 5)))
        return patterns
    if s.type_id == 2:
        def caps2(t0, s0):
            return ConstraintSet((CapForm(0, 4), CapForm(2 * s0, 0)), "type-2 fibre caps")

        def lower2(a, b, t0, s0):
            return min(Fraction(a, 2), Fraction(b, s0))

        return [("four multiplicity-2 fibres", caps2, lower2, lower2, (4,))]
    if s.type_id == 4:
        def caps4(t0, s0):
            return ConstraintSet((CapForm(0, 2), CapForm(2 * s0, 0)), "type-4 fibre caps")

        def lower4(a, b, t0, s0):
            return min(Fraction(a), Fraction(b, s0))

        return [("two highest-multiplicity fibres", caps4, lower4, lower4, (2,))]
    # type 6

    def caps6(t0, s0):
        return ConstraintSet((CapForm(0, 3), CapForm(3 * s0, 0)), "type-6 fibre caps")

    def upper6(a, b, t0, s0):
        return min(Fraction(a), Fraction(b, s0))

    def lower6(a, b, t0, s0):
        return Fraction(2, 3) * upper6(a, b, t0, s0)

    return [("three multiplicity-3 fibres", caps6, lower6, upper6, (3,))]


def _multipoint_witness_ratios(s: SurfaceData, a: int, b: int, t0: int, s0: int) -> list[Fraction]:
    # reduced highest-multiplicity fibre through s0 points, and the
    # second-projection fibre through t0 points
    first = Fraction(b, s0)
    second_b = s.gamma_over_mu
    second = Fraction(second_b * a, t0)
    return [first, second]


def verify_multipoint_formula(
    s: SurfaceData, grid_max: int, box: int, a_values: Sequence[int] | None = None
) -> OracleReport:
    """Check the multi-point closed forms against the box infimum.

    For each (a, b, t0, s0) under the type's hypothesis pattern: (i) the
    enumerated minimum never falls below the closed-form lower bound, and
    (ii) the fibre witnesses attain the closed-form (upper) value exactly.
    """
    if grid_max < 1 or box < 1:
        raise ValueError("grid_max and box must be >= 1")
    a_range = list(a_values) if a_values is not None else list(range(1, grid_max + 1))
    report = OracleReport(
        grid=f"type {s.type_id}: a in {a_range[0]}..{a_range[-1]}, b in 1..{grid_max}, "
             f"s0 in 1..4, box {box}")
    for desc, caps, lower_fn, upper_fn, t0_range in _multipoint_patterns(s):
        for a in a_range:
            for b in range(1, grid_max + 1):
                for t0 in t0_range:
                    for s0 in range(1, 5):
                        cons = caps(t0, s0)
                        claimed = lower_fn(a, b, t0, s0)
                        found, alpha, beta, m = _argmin_ratio_over_box((b, a), cons, box)
                        report.instances_checked += 1
                        if found < claimed:
                            report.violations.append(Violation(
                                f"{desc}: a={a} b={b} t0={t0} s0={s0}",
                                alpha, beta, m, found, claimed))
                        else:
                            report.record_gap(found - claimed)
                        attained = min(_multipoint_witness_ratios(s, a, b, t0, s0))
                        target = upper_fn(a, b, t0, s0)
                        if attained != target:
                            report.violations.append(Violation(
                                f"{desc} witness: a={a} b={b} t0={t0} s0={s0}",
                                0, 0, 0, attained, target))
    return report


def verify_single_point_chain(
    s: SurfaceData, grid_max: int, box: int, a_values: Sequence[int] | None = None
) -> OracleReport:
    """Check the single-point proof chain on odd types.

    Over bundles with a, b >= 2kd and every (alpha, beta) in the box with
    caps mu*beta >= m, alpha >= m:  mu*a*beta + mu*b*alpha >= m*(a + mu*b)
    (the chain value a/(2mu) + b/2 scaled to integers), and the exact
    targets stay below the chain value under their slope conditions; the
    slope boundaries contribute zero-gap instances.
    """
    if not s.is_odd_type:
        raise ValueError(f"single-point chain is stated for odd types, got type {s.type_id}")
    mu = s.mu
    r = 8
    k = min_k_for(r)
    eq_a = eq_mub = 0
    pairs: set[tuple[int, int, int]] = set()
    a_range = list(a_values) if a_values is not None else list(range(1, grid_max + 1))
    for d in (1, 2):
        for a in a_range:
            for b in range(1, grid_max + 1):
                pairs.add((a, b, d))
        # boundary instances: mu*b = (2mu-1)a and a = mu*(2mu-1)b
        for t in range(1, grid_max + 1):
            pairs.add((mu * t, (2 * mu - 1) * t, d))
            pairs.add((mu * (2 * mu - 1) * t, t, d))
    pairs = {(a, b, d) for a, b, d in pairs if a >= 2 * k * d and b >= 2 * k * d}
    report = OracleReport(grid="")
    for a, b, d in sorted(pairs):
        report.instances_checked += 1
        chain_scaled = a + mu * b  # chain value times 2mu
        for alpha in range(1, box + 1):
            for beta in range(1, box + 1):
                m = min(mu * beta, alpha)
                lhs = mu * a * beta + mu * b * alpha  # 2mu * ((a/2)beta + (b/2)alpha)
                if lhs < m * chain_scaled:
                    report.violations.append(Violation(
                        f"chain: a={a} b={b} d={d}", alpha, beta, m,
                        Fraction(lhs, 2 * mu), Fraction(m * chain_scaled, 2 * mu)))
        if (2 * mu - 1) * a <= mu * b:
            gap = Fraction(chain_scaled, 2 * mu) - a
            if gap < 0:
                report.violations.append(Violation(
                    f"target a: a={a} b={b} d={d}", 0, 0, 0,
                    Fraction(chain_scaled, 2 * mu), Fraction(a)))
            else:
                report.record_gap(gap)
                if gap == 0:
                    eq_a += 1
        if a >= mu * (2 * mu - 1) * b:
            gap = Fraction(chain_scaled, 2 * mu) - mu * b
            if gap < 0:
                report.violations.append(Violation(
                    f"target mu*b: a={a} b={b} d={d}", 0, 0, 0,
                    Fraction(chain_scaled, 2 * mu), Fraction(mu * b)))
            else:
                report.record_gap(gap)
                if gap == 0:
                    eq_mub += 1
    report.grid = (f"type {s.type_id}: r={r}, d in 1..2, a,b up to {grid_max} plus slope "
                   f"boundaries, box {box}; eq_a={eq_a}, eq_mub={eq_mub}")
    return report


def verify_global_witness(
    s: SurfaceData, grid_max: int, a_values: Sequence[int] | None = None
) -> OracleReport:
    """Check that each rationality theorem's witness ratio stays strictly
    below sqrt(L^2) whenever its hypotheses (including the ampleness
    necessities) hold; the gap is the integer L^2 - witness^2."""
    report = OracleReport(
        grid=f"type {s.type_id}: a,b,r in 1..{grid_max}, d in 1..3")
    a_range = list(a_values) if a_values is not None else list(range(1, grid_max + 1))
    for a in a_range:
        for b in range(1, grid_max + 1):
            for d in range(1, 4):
                for r in range(1, grid_max + 1):
                    L = DivisorClass(a, b, (d,) * r)
                    if not _hypotheses_hold(s, a, b, d, r, L):
                        continue
                    witness = _witness_ratio(s, a, b, d)
                    sq = 2 * a * b - r * d * d
                    report.instances_checked += 1
                    if witness * witness >= sq:
                        report.violations.append(Violation(
                            f"a={a} b={b} d={d} r={r}", 0, 0, 0,
                            Fraction(witness), Fraction(sq)))
                    else:
                        report.record_gap(Fraction(sq - witness * witness))
    return report


def _hypotheses_hold(s: SurfaceData, a: int, b: int, d: int, r: int, L: DivisorClass) -> bool:
    if not all(ok for _, ok, _ in necessary_checks(L, s)):
        return False
    if s.is_odd_type:
        return a * a >= (r + 1) * d * d and (r * d <= b or (r + 1) * b * b > (r * d - b) ** 2)
    if s.type_id in (2, 4):
        return b > r * d
    return (r >= 3 and 2 * a > (r + 1) * d and b > r * d
            and (2 * b >= 9 * a - 4 * d or b <= 2 * (a - d)))


def _witness_ratio(s: SurfaceData, a: int, b: int, d: int) -> int:
    coeff = {1: 1, 3: 1, 5: 1, 7: 1, 2: 2, 4: 2, 6: 3}[s.type_id]
    return min(coeff * a - d, b)


_VERIFIERS = {
    "multipoint": verify_multipoint_formula,
    "single-chain": verify_single_point_chain,
    "global-witness": verify_global_witness,
}


def run_verifier(prop: str, s: SurfaceData, grid_max: int, box: int, jobs: int = 1) -> OracleReport:
    """Dispatch a named verification, optionally partitioning the a-grid
    across processes and merging the partial reports."""
    if prop not in _VERIFIERS:
        raise ValueError(f"unknown property {prop!r}; choose from {sorted(_VERIFIERS)}")
    a_values = list(range(1, grid_max + 1))
    if jobs <= 1:
        return _run_chunk(prop, s, grid_max, box, a_values)
    chunks = [a_values[i::jobs] for i in range(jobs) if a_values[i::jobs]]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(_run_chunk_star,
                              [(prop, s, grid_max, box, chunk) for chunk in chunks]))
    report = parts[0]
    for part in parts[1:]:
        report = report.merge(part)
    return report


def _run_chunk(prop: str, s: SurfaceData, grid_max: int, box: int,
               a_values: Sequence[int]) -> OracleReport:
    if prop == "global-witness":
        return verify_global_witness(s, grid_max, a_values=a_values)
    return _VERIFIERS[prop](s, grid_max, box, a_values=a_values)


def _run_chunk_star(args) -> OracleReport:
    return _run_chunk(*args)
