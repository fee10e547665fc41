"""Cubical coherence layer: theta-matrix data on 2x2 blocks, the
(4,4)-coherence equation, the (4,2)/(2,4) equations tying theta to chi,
and their specializations down to the (3,2)/(2,3) equations.

All residuals are additive renderings evaluated as exact zero-tests.
Normalization is strict: a theta entry is zero whenever any matrix entry
(or the spectator argument) is zero, and chi is zero whenever any slot is
zero; these conventions make the specialization claims pointwise
identities rather than identities up to degenerate terms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import (
    DEFAULT_ENUMERATION_CAP,
    FinAbGroup,
    GroupElement,
    enumerate_group,
)
from .biextension import MultiMap
from .report import Report

Matrix2 = tuple  # ((x, y), (z, t)) of residue tuples


def _mat_key(G: FinAbGroup, m) -> Matrix2:
    (x, y), (z, t) = m
    return (
        (G.element(tuple(x)).residues, G.element(tuple(y)).residues),
        (G.element(tuple(z)).residues, G.element(tuple(t)).residues),
    )


def _mat_degenerate(m: Matrix2) -> bool:
    return any(all(r == 0 for r in entry) for row in m for entry in row)


@dataclass(frozen=True)
class ThetaMatrix:
    """Normalized map from 2x2 matrices of G-elements to A.

    Entries are zero whenever any matrix entry is zero; this subsumes the
    all-zero row/column degeneracies and pins the specializations exactly.
    """

    G: FinAbGroup
    A: FinAbGroup
    values: tuple

    @staticmethod
    def make(G, A, values: dict | None = None) -> "ThetaMatrix":
        items = []
        for m, v in (values or {}).items():
            key = _mat_key(G, m)
            if _mat_degenerate(key):
                raise ValueError(f"degenerate matrix position {m} must be zero")
            vv = A.element(v).residues
            if any(vv):
                items.append((key, vv))
        return ThetaMatrix(G, A, tuple(sorted(items)))

    @staticmethod
    def from_function(G, A, fn) -> "ThetaMatrix":
        vals = {}
        for m in matrix_positions(G):
            x, y, z, t = (G.element(e) for row in m for e in row)
            v = fn(x, y, z, t)
            if not v.is_zero:
                vals[m] = v.residues
        return ThetaMatrix.make(G, A, vals)

    def __call__(
        self, x: GroupElement, y: GroupElement, z: GroupElement, t: GroupElement
    ) -> GroupElement:
        key = ((x.residues, y.residues), (z.residues, t.residues))
        if _mat_degenerate(key):
            return self.A.zero()
        return self.A.element(dict(self.values).get(key, (0,) * self.A.rank))

    def flipped(self, m, delta) -> "ThetaMatrix":
        """Copy with the entry at matrix m shifted by delta."""
        key = _mat_key(self.G, m)
        vals = {k: v for k, v in self.values}
        cur = self.A.element(vals.get(key, (0,) * self.A.rank))
        new = cur + self.A.element(delta)
        vals[key] = new.residues
        if new.is_zero:
            del vals[key]
        return ThetaMatrix.make(self.G, self.A, {k: v for k, v in vals.items()})


def matrix_positions(G: FinAbGroup) -> list[Matrix2]:
    """All non-degenerate 2x2 matrix keys over G."""
    nz = [e.residues for e in enumerate_group(G) if not e.is_zero]
    out = []
    for x, y, z, t in itertools.product(nz, repeat=4):
        out.append(((x, y), (z, t)))
    return out


@dataclass(frozen=True)
class CDatum:
    """Edge labels c(x, y) of the cube construction, valued in V."""

    G: FinAbGroup
    V: FinAbGroup
    c: MultiMap

    @staticmethod
    def make(G, V, values: dict | None = None) -> "CDatum":
        return CDatum(G, V, MultiMap.make((G, G), V, values))

    @staticmethod
    def zero(G, V) -> "CDatum":
        return CDatum(G, V, MultiMap.zero((G, G), V))

    def __call__(self, x, y):
        return self.c(x, y)


@dataclass(frozen=True)
class BiQData:
    """Mixed cubical data (f, g, thetaRow, chi) over G x H valued in A.

    thetaRow(M; y) attaches an A-value to a 2x2 G-matrix with an H
    spectator; chi(x,x';y,y') is the interchange cell. Both are zero when
    any argument is zero.
    """

    G: FinAbGroup
    H: FinAbGroup
    A: FinAbGroup
    f: MultiMap
    g: MultiMap
    theta_row: dict
    chi: MultiMap

    @staticmethod
    def make(G, H, A, f=None, g=None, theta_row=None, chi=None) -> "BiQData":
        fm = f if isinstance(f, MultiMap) else MultiMap.make((G, G, H), A, f)
        gm = g if isinstance(g, MultiMap) else MultiMap.make((G, H, H), A, g)
        cm = chi if isinstance(chi, MultiMap) else MultiMap.make((G, G, H, H), A, chi)
        rows = {}
        for (m, y), v in (theta_row or {}).items():
            key = (_mat_key(G, m), H.element(tuple(y)).residues)
            if _mat_degenerate(key[0]) or all(r == 0 for r in key[1]):
                raise ValueError(f"degenerate thetaRow position {(m, y)}")
            vv = A.element(v).residues
            if any(vv):
                rows[key] = vv
        return BiQData(G, H, A, fm, gm, rows, cm)

    def theta(self, x, y, z, t, h) -> GroupElement:
        key = (((x.residues, y.residues), (z.residues, t.residues)), h.residues)
        if _mat_degenerate(key[0]) or h.is_zero:
            return self.A.zero()
        return self.A.element(self.theta_row.get(key, (0,) * self.A.rank))


# ---------------------------------------------------------------------------
# Residuals and checkers
# ---------------------------------------------------------------------------


def theta_44_residual(T: ThetaMatrix, x, y, z, t, a, b, c, d) -> GroupElement:
    """The nine-term (4,4) combination at one 8-tuple."""
    return (
        T(x + y, z + t, a + b, c + d)
        + T(x, y, a, b)
        + T(z, t, c, d)
        + T(x + a, y + b, z + c, t + d)
        - T(x, y, z, t)
        - T(a, b, c, d)
        - T(x + z, y + t, a + c, b + d)
        - T(x, z, a, c)
        - T(y, t, b, d)
    )


def theta_44_report(T: ThetaMatrix, cap: int = DEFAULT_ENUMERATION_CAP) -> Report:
    witnesses = []
    elems = list(enumerate_group(T.G, cap))
    for tup in itertools.product(elems, repeat=8):
        if not theta_44_residual(T, *tup).is_zero:
            witnesses.append(("coh-4-4", tuple(e.residues for e in tup)))
    return Report.passed() if not witnesses else Report.failed(witnesses)


def check_theta_44(T: ThetaMatrix, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    return theta_44_report(T, cap).ok


def face_coboundary(c: CDatum) -> ThetaMatrix:
    """The theta shift induced by relabeling the cube edges by c.

    theta_c(x y / z t) = c(x+y,z+t) + c(x,y) + c(z,t)
                         - c(x+z,y+t) - c(x,z) - c(y,t),
    truncated to zero on degenerate matrices. When c is symmetric and
    biadditive the raw formula already vanishes on degenerate matrices, so
    the result is (4,4)-closed and adding it to any theta preserves the
    check_theta_44 verdict; the same holds for every c on Z/2. For general
    c the truncation can break closedness.
    """
    return ThetaMatrix.from_function(
        c.G,
        c.V,
        lambda x, y, z, t: c(x + y, z + t)
        + c(x, y)
        + c(z, t)
        - c(x + z, y + t)
        - c(x, z)
        - c(y, t),
    )


def theta_specialize(
    T: ThetaMatrix, pattern: str, cap: int = DEFAULT_ENUMERATION_CAP
) -> Report:
    """Reduced cube relation after zeroing slots per the mask.

    "z=0": the z-slot of both matrices is zeroed; the surviving relation is
    the associativity-shaped identity relating s(x+y)+s(t) and s(x)+s(y+t).
    "x=t=0": the x- and t-slots are zeroed; the surviving relation is the
    commutativity-shaped identity s(y)+s(z) = s(z)+s(y).
    """
    G = T.G
    zero = G.zero()
    elems = list(enumerate_group(G, cap))
    witnesses = []
    if pattern == "z=0":
        identity = "s(x+y)+s(t) = s(x)+s(y+t)"
        for x, y, t, a, b, d in itertools.product(elems, repeat=6):
            r = theta_44_residual(T, x, y, zero, t, a, b, zero, d)
            if not r.is_zero:
                witnesses.append(
                    (
                        "assoc-reduction",
                        tuple(e.residues for e in (x, y, t, a, b, d)),
                    )
                )
    elif pattern == "x=t=0":
        identity = "s(y)+s(z) = s(z)+s(y)"
        for y, z, b, c in itertools.product(elems, repeat=4):
            r = theta_44_residual(T, zero, y, z, zero, zero, b, c, zero)
            if not r.is_zero:
                witnesses.append(
                    ("comm-reduction", tuple(e.residues for e in (y, z, b, c)))
                )
    else:
        raise ValueError(f"unknown mask pattern {pattern!r}")
    rep = Report.passed() if not witnesses else Report.failed(witnesses)
    rep.classification = {"identity": identity}
    return rep


def biq_42_residual(D: BiQData, x, xp, xpp, xppp, y, yp) -> GroupElement:
    chi, th = D.chi, D.theta
    return (
        chi(x + xp, xpp + xppp, y, yp)
        + chi(x, xp, y, yp)
        + chi(xpp, xppp, y, yp)
        + th(x, xp, xpp, xppp, y + yp)
        - th(x, xp, xpp, xppp, y)
        - th(x, xp, xpp, xppp, yp)
        - chi(x + xpp, xp + xppp, y, yp)
        - chi(x, xpp, y, yp)
        - chi(xp, xppp, y, yp)
    )


def check_42_report(D: BiQData, cap: int = DEFAULT_ENUMERATION_CAP) -> Report:
    witnesses = []
    gs = list(enumerate_group(D.G, cap))
    hs = list(enumerate_group(D.H, cap))
    for xs in itertools.product(gs, repeat=4):
        for ys in itertools.product(hs, repeat=2):
            if not biq_42_residual(D, *xs, *ys).is_zero:
                witnesses.append(
                    ("coh-4-2", tuple(e.residues for e in (*xs, *ys)))
                )
    return Report.passed() if not witnesses else Report.failed(witnesses)


def check_42(D: BiQData, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    return check_42_report(D, cap).ok


def chi_32_residual(D: BiQData, a, b, c, y, yp) -> GroupElement:
    """The (3,2) combination of chi in the first argument pair."""
    chi = D.chi
    return (
        chi(a, b + c, y, yp)
        + chi(b, c, y, yp)
        - chi(a + b, c, y, yp)
        - chi(a, b, y, yp)
    )


def chi_23_residual(D: BiQData, x, xp, a, b, c) -> GroupElement:
    """The (2,3) combination of chi in the second argument pair."""
    chi = D.chi
    return (
        chi(x, xp, a, b + c)
        + chi(x, xp, b, c)
        - chi(x, xp, a + b, c)
        - chi(x, xp, a, b)
    )


def specialize_42_to_32(D: BiQData, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """The (4,2) residual with the second x-slot zeroed equals the (3,2)
    residual of chi pointwise, for arbitrary data.

    The theta terms die on the zeroed slot by normalization and the six
    chi terms regroup into exactly the four (3,2) terms.
    """
    zero = D.G.zero()
    gs = list(enumerate_group(D.G, cap))
    hs = list(enumerate_group(D.H, cap))
    for a, b, c in itertools.product(gs, repeat=3):
        for y, yp in itertools.product(hs, repeat=2):
            if biq_42_residual(D, a, zero, b, c, y, yp) != chi_32_residual(
                D, a, b, c, y, yp
            ):
                return False
    return True


def mirror_biq(D: BiQData) -> BiQData:
    """Swap the roles of the two argument groups, turning (4,2) data into
    (2,4) data: chi slots cross over and f/g trade places."""
    fm = MultiMap.from_function(
        (D.H, D.H, D.G), D.A, lambda y, yp, x: D.g(x, y, yp)
    )
    gm = MultiMap.from_function(
        (D.H, D.G, D.G), D.A, lambda y, x, xp: D.f(x, xp, y)
    )
    cm = MultiMap.from_function(
        (D.H, D.H, D.G, D.G), D.A, lambda y, yp, x, xp: D.chi(x, xp, y, yp)
    )
    # The row data of the mirrored side is independent information; the
    # mirror starts with none of it.
    return BiQData(D.H, D.G, D.A, fm, gm, {}, cm)


def specialize_24_to_23(D: BiQData, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Mirror claim: the (2,4) residual with the second y-slot zeroed
    equals the (2,3) residual of chi pointwise."""
    M = mirror_biq(D)
    zero = M.G.zero()
    gs = list(enumerate_group(M.G, cap))
    hs = list(enumerate_group(M.H, cap))
    for a, b, c in itertools.product(gs, repeat=3):
        for x, xp in itertools.product(hs, repeat=2):
            lhs = biq_42_residual(M, a, zero, b, c, x, xp)
            rhs = chi_23_residual(D, x, xp, a, b, c)
            if lhs != rhs:
                return False
    return True


def build_q2_from_extension(
    c: CDatum, T: ThetaMatrix, cap: int = DEFAULT_ENUMERATION_CAP
) -> Report:
    """Assemble the labeled cube and test membership.

    theta(x y / z t) must be a morphism
    c(x+y,z+t)+c(x,y)+c(z,t) -> c(x+z,y+t)+c(x,z)+c(y,t); skeletally the
    two object values must be equal on every face, with theta supplying
    the A-level value. Mismatched faces are reported as witnesses.
    """
    witnesses = []
    elems = list(enumerate_group(c.G, cap))
    for x, y, z, t in itertools.product(elems, repeat=4):
        src = c(x + y, z + t) + c(x, y) + c(z, t)
        dst = c(x + z, y + t) + c(x, z) + c(y, t)
        if src != dst:
            witnesses.append(
                ("face-type", tuple(e.residues for e in (x, y, z, t)))
            )
    rep = Report.passed() if not witnesses else Report.failed(witnesses)
    rep.classification = {"member": rep.ok}
    return rep
