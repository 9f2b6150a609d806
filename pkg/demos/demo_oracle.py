"""Walkthrough: brute-force verification of the closed forms.

The oracle enumerates candidate curve classes (alpha, beta) in a box,
maximises the allowed multiplicity under Bezout-style caps, and checks that
the closed-form values never undercut the enumerated infimum.  It is an
independent implementation: it never calls the evaluators it checks.

Run:  python3 demos/demo_oracle.py
"""

from hypsurf import (
    CapForm,
    ConstraintSet,
    min_ratio_over_box,
    run_verifier,
    surface_params,
)


print("The primitive: exact minimum of (b*beta + a*alpha)/m over a box.")
print("Caps m <= 3*beta and m <= 2*alpha mimic two transverse fibre families.")
cons = ConstraintSet((CapForm(0, 3), CapForm(2, 0)), "demo caps")
val = min_ratio_over_box((10, 6), cons, box=12)  # weights (w_alpha, w_beta) = (b, a)
print(f"  minimum ratio over the 12x12 box: {val}\n")

for prop, kwargs, types in (
    ("multipoint", dict(grid_max=6, box=12), range(1, 8)),
    ("single-chain", dict(grid_max=6, box=10), (1, 3, 5, 7)),
    ("global-witness", dict(grid_max=10, box=1), range(1, 8)),
):
    print(f"Property {prop!r}:")
    for t in types:
        rep = run_verifier(prop, surface_params(t), jobs=1, **kwargs)
        status = "OK " if rep.passed else "VIOLATED"
        print(f"  type {t}: {status} {rep.instances_checked:>6} instances, "
              f"min gap {rep.min_gap}")
    print()

print("Reports merge as a monoid, so the grid can be partitioned across")
print("processes; --jobs N on the CLI uses exactly this merge:")
serial = run_verifier("multipoint", surface_params(3), grid_max=6, box=12, jobs=1)
parallel = run_verifier("multipoint", surface_params(3), grid_max=6, box=12, jobs=2)
print(f"  serial:   {serial.instances_checked} instances, min gap {serial.min_gap}")
print(f"  parallel: {parallel.instances_checked} instances, min gap {parallel.min_gap}")
assert (serial.instances_checked, serial.min_gap) == (parallel.instances_checked, parallel.min_gap)
