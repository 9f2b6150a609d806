"""Walkthrough: Seshadri constants, from one point to the whole surface.

Everything is exact: values are ``fractions.Fraction``, irrational upper
bounds are carried symbolically as sqrt(q) and compared by cross-squaring.

Run:  python3 demos/demo_seshadri.py
"""

from fractions import Fraction

from hypsurf import (
    DivisorClass,
    Locus,
    PointConfig,
    RationalBound,
    ResultStatus,
    global_constant,
    multipoint_general,
    multipoint_special,
    point_on_locus,
    surface_params,
    very_general_point,
)


def describe(res):
    if res.status is ResultStatus.EXACT:
        print(f"  exact value {res.value}")
    elif res.status is ResultStatus.BOUNDS:
        up = res.upper
        up_str = str(up.q) if isinstance(up, RationalBound) else f"sqrt({up.q})"
        print(f"  bounds [{res.lower}, {up_str}]")
    else:
        print("  hypotheses not met:")
    for h in res.hypotheses:
        mark = "ok " if h.holds else "NOT"
        print(f"    [{mark}] {h.name}" + (f"  ({h.detail})" if h.detail else ""))
    for w in res.attaining:
        print(f"    candidate: {w.description}: ratio {w.ratio}")


s1 = surface_params(1)
L = DivisorClass(4, 6, (1,) * 8)

print("Single point on the blow-up, L = (4, 6, 1x8), type 1")
print("on the reduced singular fibre, meeting a second-projection transform:")
describe(point_on_locus(L, s1, Locus.SINGULAR_A, on_b_minus_e=True))
print("on a smooth fibre:")
describe(point_on_locus(L, s1, Locus.SMOOTH_A))

print("\nVery general point: the constant jumps to the maximum a = 4")
describe(very_general_point(L, s1))

print("\nGlobal constant (infimum over all points): the singular fibre wins")
res, cert = global_constant(L, s1)
describe(res)
print(f"  certificate kind {cert.kind}; independent re-check: {cert.verify()}")

print("\nMulti-point at 8 very general points of the bare surface")
describe(multipoint_general(DivisorClass(5, 5), 8))  # exact: r/2 is a perfect square
describe(multipoint_general(DivisorClass(4, 6), 8))  # only bracketed

print("\nMulti-point for fibre-concentrated configurations (type 5)")
cfg = PointConfig(r=6, s0=2, t0=3, lA=3, lB=2, s0_on_singular_A=True)
describe(multipoint_special(DivisorClass(6, 10), surface_params(5), cfg))

print("\nRationality certificate on an even type (type 6, r = 5)")
res, cert = global_constant(DivisorClass(4, 6, (1,) * 5), surface_params(6))
describe(res)
print(f"  witness ratio {cert.claimed} with {cert.claimed}^2 = {cert.claimed ** 2} "
      f"< L^2 = {cert.comparison.self_int}; re-check: {cert.verify()}")
assert cert.claimed ** 2 < Fraction(cert.comparison.self_int)
