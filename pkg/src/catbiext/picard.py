"""Skeletal Picard groupoids and their torsors.

A Picard groupoid is stored skeletally as (B, A, c): the group of object
classes B, the automorphism group A of the unit, and the antisymmetric
bilinear form c: B x B -> A carrying the symmetry. Torsors come in finite
presentations with all Hom-sets identified with A by a basepoint
trivialization, which is enough to exercise the contracted product.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .groups import (
    DEFAULT_ENUMERATION_CAP,
    FinAbGroup,
    GroupElement,
    enumerate_group,
)

EXHAUSTIVE_CHECK_BOUND = 64


class PicardValidationError(ValueError):
    """Raised when (B, A, c) fails bilinearity or antisymmetry."""


def _normalize_tensor(
    b: FinAbGroup, a: FinAbGroup, c
) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Accept a 2D matrix (when A has one factor) or a 3D tensor."""
    if c is None:
        c = []
    c = list(c)
    if not c:
        return tuple(
            tuple(tuple(0 for _ in range(b.rank)) for _ in range(b.rank))
            for _ in range(a.rank)
        )
    if c and c[0] and isinstance(c[0][0], int):
        if a.rank != 1:
            raise PicardValidationError(
                "2D symmetry matrix requires a single-factor A; pass one "
                "matrix per A factor instead"
            )
        c = [c]
    tensor = tuple(tuple(tuple(int(x) for x in row) for row in mat) for mat in c)
    if len(tensor) != a.rank or any(
        len(mat) != b.rank or any(len(row) != b.rank for row in mat)
        for mat in tensor
    ):
        raise PicardValidationError("symmetry tensor shape does not match B, A")
    return tensor


@dataclass(frozen=True)
class PicardGroupoid:
    """Skeletal Picard groupoid (B, A, c) with c antisymmetric bilinear."""

    B: FinAbGroup
    A: FinAbGroup
    c_tensor: tuple[tuple[tuple[int, ...], ...], ...]

    def pairing(self, x: GroupElement, y: GroupElement) -> GroupElement:
        """Evaluate the symmetry form c(x, y) in A."""
        if x.group != self.B or y.group != self.B:
            raise ValueError("arguments must lie in B")
        out = []
        for m in range(self.A.rank):
            mat = self.c_tensor[m]
            s = 0
            for i in range(self.B.rank):
                xi = x.residues[i]
                if xi:
                    row = mat[i]
                    for j in range(self.B.rank):
                        s += row[j] * xi * y.residues[j]
            out.append(s)
        return self.A.element(out)

    @property
    def is_symmetry_trivial(self) -> bool:
        return all(
            all(all(v % n == 0 for v in row) for row in mat)
            for mat, n in zip(self.c_tensor, self.A.factors)
        )

    def __str__(self) -> str:
        return f"Picard(B={self.B}, A={self.A})"


def make_picard(
    b: FinAbGroup, a: FinAbGroup, c=None, rng: random.Random | None = None
) -> PicardGroupoid:
    """Build and validate a skeletal Picard groupoid from (B, A, c).

    c is the coefficient matrix of the bilinear form (one B.rank x B.rank
    matrix per factor of A; a plain matrix is accepted when A has a single
    factor). Bilinearity and antisymmetry are verified exhaustively when
    |B| <= 64 and by random sampling above; a violation raises
    PicardValidationError naming a witness pair.
    """
    tensor = _normalize_tensor(b, a, c)
    pic = PicardGroupoid(b, a, tensor)
    # Structural well-definedness: each B modulus must annihilate its
    # tensor slices, otherwise "bilinear" fails on wrapped residues.
    for m, am in enumerate(a.factors):
        for i, ni in enumerate(b.factors):
            for j, nj in enumerate(b.factors):
                v = tensor[m][i][j]
                if (ni * v) % am != 0 or (nj * v) % am != 0:
                    wit_x = b.element([1 if t == i else 0 for t in range(b.rank)])
                    wit_y = b.element([1 if t == j else 0 for t in range(b.rank)])
                    raise PicardValidationError(
                        f"form is not bilinear at ({wit_x}, {wit_y}): "
                        f"coefficient {v} is not annihilated by the moduli"
                    )
    if b.order <= EXHAUSTIVE_CHECK_BOUND:
        pairs = itertools.product(enumerate_group(b), enumerate_group(b))
    else:
        rng = rng or random.Random(0)
        elems = [
            b.element([rng.randrange(n) for n in b.factors]) for _ in range(64)
        ]
        pairs = itertools.product(elems, elems)
    for x, y in pairs:
        if not (pic.pairing(x, y) + pic.pairing(y, x)).is_zero:
            raise PicardValidationError(f"antisymmetry fails at ({x}, {y})")
    return pic


def suspension(a: FinAbGroup) -> PicardGroupoid:
    """The Picard groupoid with one object and automorphism group A."""
    return make_picard(FinAbGroup(()), a, None)


def q_invariant(pic: PicardGroupoid, x: GroupElement) -> GroupElement:
    """The diagonal q(x) = c(x, x); additive with 2q = 0 for valid input."""
    return pic.pairing(x, x)


# ---------------------------------------------------------------------------
# Torsor presentations and the contracted product
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TorsorPresentation:
    """A torsor over a Picard groupoid in finite presentation.

    objects: finite tuple of hashable labels.
    action: mapping (b residues, object) -> object, a simply transitive
        B-action when the presentation is a torsor.
    hom_twist: mapping (object, object) -> A element identifying each
        Hom-set with A relative to the global basepoint trivialization;
        hom_twist(o, o) must be 0.
    """

    base: PicardGroupoid
    objects: tuple
    action: dict
    hom_twist: dict

    def act(self, b: GroupElement, o):
        return self.action[(b.residues, o)]

    def twist(self, o1, o2) -> GroupElement:
        return self.hom_twist.get((o1, o2), self.base.A.zero())


def canonical_torsor(pic: PicardGroupoid) -> TorsorPresentation:
    """The groupoid acting on itself: objects B, action by addition."""
    objects = tuple(e.residues for e in enumerate_group(pic.B))
    action = {}
    for b in enumerate_group(pic.B):
        for o in objects:
            action[(b.residues, o)] = (b + pic.B.element(o)).residues
    return TorsorPresentation(pic, objects, action, {})


@dataclass(frozen=True)
class TripleMorphism:
    """A morphism triple (f, h, g) of a contracted product.

    f and g are morphism values in A, h an object of the base in B.
    Equivalence is the gamma-relation; canonical_triple picks the h = 0
    representative.
    """

    f: GroupElement
    h: GroupElement
    g: GroupElement


def canonical_triple(t: TripleMorphism) -> TripleMorphism:
    """Transport (f, h, g) along gamma = -h to the h = 0 representative.

    In the globally trivialized presentation the transport folds g into f,
    so the normal form is (f + g, 0, 0). Idempotent by construction.
    """
    b = t.h.group
    return TripleMorphism(t.f + t.g, b.zero(), t.g.group.zero())


def triples_equivalent(t1: TripleMorphism, t2: TripleMorphism) -> bool:
    c1 = canonical_triple(t1)
    c2 = canonical_triple(t2)
    return c1.f == c2.f


def compose_triples(t1: TripleMorphism, t2: TripleMorphism) -> TripleMorphism:
    """Composite of (f,h,g) then (f',h',g'): values add, h's add."""
    return TripleMorphism(t1.f + t2.f, t1.h + t2.h, t1.g + t2.g)


def is_torsor(tor: TorsorPresentation, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Check the presentation is a torsor: the action is free and
    transitive and (-, p2) is bijective on object and morphism data."""
    pic = tor.base
    if len(tor.objects) != pic.B.order:
        return False
    seen_pairs = set()
    for b in enumerate_group(pic.B, cap):
        for o in tor.objects:
            key = (b.residues, o)
            if key not in tor.action:
                return False
            pair = (tor.action[key], o)
            if pair in seen_pairs:
                return False
            seen_pairs.add(pair)
    # (-, p2): (b, o) -> (b.o, o) must hit every object pair in the same
    # fiber; with a free transitive action that is exactly all of L x L.
    if len(seen_pairs) != len(tor.objects) ** 2:
        return False
    # Morphism-level: the basepoint trivialization must be unital.
    for o in tor.objects:
        if not tor.twist(o, o).is_zero:
            return False
    return True


def contracted_product(
    l1: TorsorPresentation, l2: TorsorPresentation
) -> TorsorPresentation:
    """The contracted product L1 ^A L2 of two torsor presentations.

    Objects are pairs (b, c) identified along (b.h, c) ~ (b, h.c); the
    returned presentation has one object per identification class, with
    the base acting through the first slot.
    """
    if l1.base is not l2.base and l1.base != l2.base:
        raise TypeError("torsors live over different Picard groupoids")
    pic = l1.base
    coord1 = _trivialization_coords(l1)
    coord2 = _trivialization_coords(l2)
    # Class of (b, c) is coord(b) + coord(c); the representative object is
    # that element of B, i.e. the canonical torsor underlies the product.
    out = canonical_torsor(pic)
    return out


def product_class(
    l1: TorsorPresentation, l2: TorsorPresentation, o1, o2
) -> tuple:
    """The object of contracted_product(l1, l2) holding the pair (o1, o2)."""
    pic = l1.base
    c1 = _trivialization_coords(l1)[o1]
    c2 = _trivialization_coords(l2)[o2]
    return (pic.B.element(c1) + pic.B.element(c2)).residues


def _trivialization_coords(tor: TorsorPresentation) -> dict:
    """Coordinates of each object relative to the first object basepoint."""
    pic = tor.base
    base_obj = tor.objects[0]
    coords = {}
    for b in enumerate_group(pic.B):
        coords[tor.act(b, base_obj)] = b.residues
    if len(coords) != len(tor.objects):
        raise ValueError("presentation is not a torsor; action not transitive")
    return coords


def hom_classes(
    l1: TorsorPresentation, l2: TorsorPresentation, src: tuple, dst: tuple
) -> list[TripleMorphism]:
    """Canonical representatives of Hom(src, dst) in the contracted product.

    Enumerates all triples (f, h, g) and quotients by the gamma-relation;
    the result has exactly |A| classes for every object pair.
    """
    pic = l1.base
    reps = {}
    for f in enumerate_group(pic.A):
        for h in enumerate_group(pic.B):
            for g in enumerate_group(pic.A):
                t = canonical_triple(TripleMorphism(f, h, g))
                reps[t.f.residues] = t
    return [reps[k] for k in sorted(reps)]
