"""Walkthrough: deciding ampleness on a blown-up hyperelliptic surface.

A line bundle on the r-point blow-up is a triple (a, b, d_1..d_r) in the
standard basis.  Three sufficient criteria are combined with the necessary
fibre and exceptional checks into a tri-state verdict: Proven, Refuted
(with a witness curve), or Unknown.

Run:  python3 demos/demo_ampleness.py
"""

from hypsurf import (
    DivisorClass,
    Status,
    decide_ample,
    intersect,
    nef_for_d,
    surface_params,
)


def show(title, L, s):
    verdict = decide_ample(L, s)
    print(f"\n{title}")
    print(f"  bundle ({L.a}, {L.b}, {list(L.d)}) on type {s.type_id} ({s.group_label})")
    print(f"  verdict: {verdict.status.value}")
    for c in verdict.criteria_trace:
        if not c.name.startswith("necessary:") or c.outcome.value == "failed":
            print(f"    {c.name}: {c.outcome.value}" + (f"  [{c.detail}]" if c.detail else ""))
    if verdict.status is Status.REFUTED:
        w = verdict.witnesses[0]
        print(f"  witness curve ({w.a}, {w.b}, {list(w.d)}) meets the bundle in "
              f"{intersect(w, L)} <= 0")


s1 = surface_params(1)

# The floor criterion proves a class that the coefficient criterion misses:
# floor(3/1) = 3 and 2*3^2 = 18 > 10, while a + b = 6 is nowhere near 2*10.
show("A class only the floor criterion reaches", DivisorClass(3, 3, (1,) * 10), s1)

# The decomposability criterion: gcd(4, 6) = 2 and L^2 = 40 > 0.
show("A decomposable class with positive square", DivisorClass(4, 6, (1,) * 8), s1)

# Arbitrary non-uniform coefficients go through the coefficient criterion.
show("A non-homogeneous class", DivisorClass(12, 11, (2, 3, 4)), s1)

# A failing necessary check refutes outright and names the offending curve.
show("A refuted class", DivisorClass(1, 5, (2,)), surface_params(2))

# Outside every criterion's reach the verdict stays Unknown, never a guess.
show("A class no criterion settles", DivisorClass(2, 9, (1,) * 8), s1)

# The same floor test answers nef-threshold queries for rational d.
print("\nNef thresholds for (5, 5, d, ..., d) with r = 8:")
for d in ("2", "5/2", "13/5", "3"):
    from fractions import Fraction
    print(f"  d = {d:>4}: nef_for_d -> {nef_for_d(5, 5, 8, Fraction(d))}")
