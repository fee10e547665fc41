"""Classification data of categorical extensions.

A monoidal-category extension of G by A is, skeletally, a degree-3
pentagon cocycle f; a monoidal-bicategory extension adds the degree-4
associahedron datum theta over a Picard-groupoid base. Classification
lands in H^3(G, A) and in the Picard-valued H^3(G, base) respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .groups import DEFAULT_ENUMERATION_CAP, FinAbGroup
from .picard import PicardGroupoid
from .cohomology import (
    Cochain,
    CohomologyGroup,
    PicardCochain,
    PicardCohomologyGroup,
    _PicardClassTable,
    bar_delta,
    cochain_positions,
    cohomology_group,
    is_cocycle,
    kappa_raw,
    picard_cohomology,
)


class ClassificationError(ValueError):
    """Raised when classification preconditions fail; names a witness."""


@dataclass(frozen=True)
class MonCatExtension:
    """Skeletal monoidal-category extension: associator cocycle f."""

    G: FinAbGroup
    A: FinAbGroup
    f: Cochain

    def __post_init__(self):
        if self.f.G != self.G or self.f.coeff != self.A or self.f.degree != 3:
            raise ValueError("f must be a degree-3 cochain on G valued in A")


@dataclass(frozen=True)
class MonBicatExtension:
    """Skeletal monoidal-bicategory extension: (f, theta) over a base."""

    base: PicardGroupoid
    G: FinAbGroup
    f: Cochain
    theta: Cochain

    def __post_init__(self):
        if self.f.G != self.G or self.f.coeff != self.base.B or self.f.degree != 3:
            raise ValueError("f must be a degree-3 cochain on G valued in base.B")
        if (
            self.theta.G != self.G
            or self.theta.coeff != self.base.A
            or self.theta.degree != 4
        ):
            raise ValueError("theta must be a degree-4 cochain on G valued in base.A")


def check_pentagon(e: MonCatExtension) -> bool:
    """Pentagon condition: the associator f is a 3-cocycle."""
    return is_cocycle(e.f)


def classify_moncat(
    e: MonCatExtension, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[CohomologyGroup, tuple[int, ...]]:
    """Class of f in H^3(G, A) as (cohomology group, coordinates)."""
    if not check_pentagon(e):
        wit = _first_nonzero_witness(bar_delta(e.f))
        raise ClassificationError(f"pentagon fails: delta f != 0 at {wit}")
    H = cohomology_group(e.G, e.A, 3, cap)
    coords = H.class_coordinates(e.f, cap)
    assert coords is not None
    return H, coords


def check_k5(e: MonBicatExtension) -> bool:
    """K5 (associahedron) condition: delta f = 0 in B and delta theta = 0.

    The theta equation written out: theta(x+y,z,t,w) + theta(x,y,z+t,w)
    + theta(x,y,z,t) - theta(x,y,z,t+w) - theta(x,y+z,t,w)
    - theta(y,z,t,w) = 0 for all inputs.
    """
    return is_cocycle(e.f) and bar_delta(e.theta).is_zero


def classify_bicat(
    e: MonBicatExtension, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[PicardCohomologyGroup, tuple[int, ...]]:
    """Class of (f, theta) in H^3(G, base).

    Requires check_k5; when the base symmetry is nonzero the morphism-level
    condition delta theta = kappa(f) must additionally hold, which under K5
    forces kappa(f) = 0 pointwise.
    """
    if not is_cocycle(e.f):
        wit = _first_nonzero_witness(bar_delta(e.f))
        raise ClassificationError(f"object-level cocycle fails: delta f != 0 at {wit}")
    dtheta = bar_delta(e.theta)
    if not dtheta.is_zero:
        wit = _first_nonzero_witness(dtheta)
        raise ClassificationError(f"K5 fails: delta theta != 0 at {wit}")
    if not e.base.is_symmetry_trivial:
        k = kappa_raw(e.f, e.base)
        residual = dtheta - k
        if not residual.is_zero:
            wit = _first_nonzero_witness(residual)
            raise ClassificationError(
                f"morphism-level condition fails: delta theta != kappa(f) at {wit}"
            )
    H = picard_cohomology(e.G, e.base, 3, cap)
    pc = PicardCochain(e.base, e.f, e.theta)
    coords = picard_class_coordinates(pc, H, cap)
    if coords is None:
        raise ClassificationError("pair is not a cocycle for the base groupoid")
    return H, coords


def picard_class_coordinates(
    pc: PicardCochain, H: PicardCohomologyGroup, cap: int = DEFAULT_ENUMERATION_CAP
) -> Optional[tuple[int, ...]]:
    """Coordinates of the class of (P, g) against H's generators."""
    base, G, n = H.base, H.G, H.degree
    if base.B.is_trivial:
        HA = cohomology_group(G, base.A, n + 1, cap)
        return HA.class_coordinates(pc.g, cap)
    if base.is_symmetry_trivial:
        HB = cohomology_group(G, base.B, n, cap)
        HA = cohomology_group(G, base.A, n + 1, cap)
        cb = HB.class_coordinates(pc.P, cap)
        ca = HA.class_coordinates(pc.g, cap)
        if cb is None or ca is None:
            return None
        return cb + ca
    table = _PicardClassTable(G, base, n, cap)
    target = table.class_of(pc)
    gen_ids = [table.class_of(g) for g in H.generators]
    import itertools as _it

    for combo in _it.product(*(range(d) for d in H.orders)):
        acc = table.zero_class()
        for cid, mult in zip(gen_ids, combo):
            for _ in range(mult):
                acc = table.class_sum(acc, cid)
        if acc == target:
            return combo
    return None


def baer_sum(e1, e2):
    """Pointwise sum of two extensions of the same shape and signature."""
    if isinstance(e1, MonCatExtension) and isinstance(e2, MonCatExtension):
        if (e1.G, e1.A) != (e2.G, e2.A):
            raise TypeError("extensions have mismatched groups")
        return MonCatExtension(e1.G, e1.A, e1.f + e2.f)
    if isinstance(e1, MonBicatExtension) and isinstance(e2, MonBicatExtension):
        if (e1.G, e1.base) != (e2.G, e2.base):
            raise TypeError("extensions have mismatched groups or bases")
        return MonBicatExtension(e1.base, e1.G, e1.f + e2.f, e1.theta + e2.theta)
    raise TypeError("cannot sum extensions of different kinds")


def _first_nonzero_witness(f: Cochain):
    for key, _ in f.values:
        return key
    return None
