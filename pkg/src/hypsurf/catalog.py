"""Classification data for the seven types of hyperelliptic surfaces.

Each surface is a quotient (A x B)/G of two elliptic curves by a finite
translation group G.  The numerical invariants that drive every computation
in this package -- the group order gamma, the multiplicities of the singular
fibres of the first projection, and mu = lcm of those multiplicities -- are
fixed classification data and are compiled in below.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

ODD_TYPES = frozenset({1, 3, 5, 7})


@dataclass(frozen=True)
class SurfaceData:
    """One row of the classification table.

    ``gamma_over_mu`` is stored precomputed so that fibre-class constructors
    never branch on the type.
    """

    type_id: int
    group_label: str
    gamma: int
    multiplicities: tuple[int, ...]
    mu: int
    gamma_over_mu: int

    @property
    def is_odd_type(self) -> bool:
        return self.type_id in ODD_TYPES


def _row(type_id: int, group_label: str, gamma: int, mults: tuple[int, ...]) -> SurfaceData:
    mu = lcm(*mults)
    assert gamma % mu == 0
    assert mu * mu >= gamma
    return SurfaceData(type_id, group_label, gamma, mults, mu, gamma // mu)


SURFACE_TABLE: tuple[SurfaceData, ...] = (
    _row(1, "Z2", 2, (2, 2, 2, 2)),
    _row(2, "Z2 x Z2", 4, (2, 2, 2, 2)),
    _row(3, "Z4", 4, (2, 4, 4)),
    _row(4, "Z4 x Z2", 8, (2, 4, 4)),
    _row(5, "Z3", 3, (3, 3, 3)),
    _row(6, "Z3 x Z3", 9, (3, 3, 3)),
    _row(7, "Z6", 6, (2, 3, 6)),
)


def surface_params(type_id: int) -> SurfaceData:
    """Return the immutable table row for a surface type.

    Raises ValueError for a type outside 1..7.
    """
    if not isinstance(type_id, int) or isinstance(type_id, bool) or not 1 <= type_id <= 7:
        raise ValueError(f"surface type must be an integer in 1..7, got {type_id!r}")
    return SURFACE_TABLE[type_id - 1]


def is_odd_type(type_id: int) -> bool:
    """True iff the surface type is 1, 3, 5 or 7 (equivalently gamma = mu)."""
    return surface_params(type_id).is_odd_type
