"""Bar-construction cohomology with abelian and Picard-groupoid coefficients.

Cochains are normalized maps G^n -> A stored sparsely (tuples containing
the zero element are implicitly sent to 0). The coboundary is the usual
alternating sum over bar faces. For Picard-groupoid coefficients the
cocycle condition couples an object-level cochain P with a morphism-level
cochain g through the canonical cancellation cell kappa, computed here by
a fixed stable sorting of the formal delta-delta term list with symmetry
costs accumulated per adjacent transposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    DEFAULT_ENUMERATION_CAP,
    CapExceededError,
    FinAbGroup,
    GroupElement,
    InvariantFactors,
    Matrix,
    enumerate_group,
    identity_matrix,
    invariant_factors_of_moduli,
    kernel_basis,
    lattice_quotient,
    nonzero_elements,
    smith_normal_form,
    snf_diagonal,
    solve_mod,
)
from .picard import PicardGroupoid

Key = tuple[tuple[int, ...], ...]


class NormalizationError(ValueError):
    """Raised when a cochain key contains the zero element."""


@dataclass(frozen=True)
class Cochain:
    """A normalized bar cochain G^degree -> coeff, stored sparsely.

    values maps tuples of residue vectors (all entries nonzero) to nonzero
    residue vectors in the coefficient group; everything else is 0.
    """

    G: FinAbGroup
    coeff: FinAbGroup
    degree: int
    values: tuple[tuple[Key, tuple[int, ...]], ...]

    @staticmethod
    def make(
        G: FinAbGroup, coeff: FinAbGroup, degree: int, values: dict | None = None
    ) -> "Cochain":
        """Build a cochain from a {key: residue-vector} dict.

        Keys with a zero entry are rejected; zero values are dropped.
        """
        items = []
        for key, val in (values or {}).items():
            key = tuple(tuple(int(r) for r in entry) for entry in key)
            if len(key) != degree:
                raise ValueError(f"key {key} has wrong arity for degree {degree}")
            reduced_key = tuple(G.element(entry).residues for entry in key)
            if any(all(r == 0 for r in entry) for entry in reduced_key):
                raise NormalizationError(
                    f"normalized cochain key may not contain 0: {key}"
                )
            v = coeff.element(val).residues
            if any(v):
                items.append((reduced_key, v))
        return Cochain(G, coeff, degree, tuple(sorted(items)))

    @staticmethod
    def zero(G: FinAbGroup, coeff: FinAbGroup, degree: int) -> "Cochain":
        return Cochain(G, coeff, degree, ())

    @staticmethod
    def from_function(G, coeff, degree, fn, cap=DEFAULT_ENUMERATION_CAP) -> "Cochain":
        """Tabulate fn over all zero-free argument tuples."""
        vals = {}
        for args in cochain_positions(G, degree, cap):
            v = fn(*args)
            if not v.is_zero:
                vals[tuple(a.residues for a in args)] = v.residues
        return Cochain.make(G, coeff, degree, vals)

    def _map(self) -> dict:
        return dict(self.values)

    def value_at(self, key: Key) -> GroupElement:
        if any(all(r == 0 for r in entry) for entry in key):
            return self.coeff.zero()
        return self.coeff.element(self._map().get(key, (0,) * self.coeff.rank))

    def __call__(self, *args: GroupElement) -> GroupElement:
        if len(args) != self.degree:
            raise ValueError(f"expected {self.degree} arguments, got {len(args)}")
        return self.value_at(tuple(a.residues for a in args))

    @property
    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        out = {}
        m1, m2 = self._map(), other._map()
        for key in set(m1) | set(m2):
            v = self.value_at(key) + other.value_at(key)
            if not v.is_zero:
                out[key] = v.residues
        return Cochain.make(self.G, self.coeff, self.degree, out)

    def __neg__(self) -> "Cochain":
        out = {k: (-self.coeff.element(v)).residues for k, v in self.values}
        return Cochain.make(self.G, self.coeff, self.degree, out)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __mul__(self, k: int) -> "Cochain":
        out = {key: (self.coeff.element(v) * k).residues for key, v in self.values}
        return Cochain.make(self.G, self.coeff, self.degree, out)

    __rmul__ = __mul__

    def _check(self, other: "Cochain") -> None:
        if (self.G, self.coeff, self.degree) != (other.G, other.coeff, other.degree):
            raise ValueError("cochains have mismatched group, coefficients or degree")


def cochain_positions(
    G: FinAbGroup, degree: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[tuple[GroupElement, ...]]:
    """All zero-free argument tuples of a normalized cochain, in lex order."""
    nz = nonzero_elements(G)
    count = len(nz) ** degree
    if count > cap:
        raise CapExceededError(
            f"{count} cochain positions exceed cap {cap} for {G}^{degree}"
        )
    return list(itertools.product(nz, repeat=degree))


def bar_delta(f: Cochain) -> Cochain:
    """Bar-construction coboundary; raises the degree by one.

    delta f(x0,...,xn) = f(x1..xn) + sum_i (-1)^i f(..,x_{i-1}+x_i,..)
    + (-1)^{n+1} f(x0..x_{n-1}); the output is again normalized.
    """
    n = f.degree
    out = {}
    for args in cochain_positions(f.G, n + 1):
        v = f(*args[1:])
        for i in range(1, n + 1):
            merged = args[: i - 1] + (args[i - 1] + args[i],) + args[i + 1 :]
            term = f(*merged)
            v = v + term if i % 2 == 0 else v - term
        last = f(*args[:-1])
        v = v + last if (n + 1) % 2 == 0 else v - last
        if not v.is_zero:
            out[tuple(a.residues for a in args)] = v.residues
    return Cochain.make(f.G, f.coeff, n + 1, out)


def is_cocycle(f: Cochain) -> bool:
    return bar_delta(f).is_zero


def _delta_matrix(G: FinAbGroup, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Matrix:
    """Integer matrix of bar_delta from degree n to n+1 in position bases.

    Acts identically on each coefficient factor, so the matrix is over Z:
    rows index degree-(n+1) positions, columns degree-n positions.
    """
    src = cochain_positions(G, n, cap)
    dst = cochain_positions(G, n + 1, cap)
    index = {tuple(a.residues for a in p): j for j, p in enumerate(src)}
    mat = [[0] * len(src) for _ in dst]
    for i, args in enumerate(dst):
        row = mat[i]

        def bump(args_n, sign):
            key = tuple(a.residues for a in args_n)
            j = index.get(key)
            if j is not None:
                row[j] += sign

        bump(args[1:], 1)
        for t in range(1, n + 1):
            merged = args[: t - 1] + (args[t - 1] + args[t],) + args[t + 1 :]
            bump(merged, 1 if t % 2 == 0 else -1)
        bump(args[:-1], 1 if (n + 1) % 2 == 0 else -1)
    return mat


def _cochain_vector(f: Cochain, positions, factor: int) -> list[int]:
    m = f._map()
    out = []
    for p in positions:
        key = tuple(a.residues for a in p)
        out.append(m.get(key, (0,) * f.coeff.rank)[factor])
    return out


def _vector_cochain(G, coeff, degree, positions, per_factor: list[list[int]]) -> Cochain:
    vals = {}
    for i, p in enumerate(positions):
        v = [per_factor[k][i] for k in range(coeff.rank)]
        if any(x % n for x, n in zip(v, coeff.factors)):
            vals[tuple(a.residues for a in p)] = v
    return Cochain.make(G, coeff, degree, vals)


def is_coboundary(f: Cochain, cap: int = DEFAULT_ENUMERATION_CAP) -> Cochain | None:
    """Return h with bar_delta(h) = f when solvable, else None.

    Solved factor by factor as a linear system over the residue moduli.
    """
    n = f.degree
    if n == 0:
        return Cochain.zero(f.G, f.coeff, 0) if f.is_zero else None
    if f.coeff.is_trivial:
        return Cochain.zero(f.G, f.coeff, n - 1)
    src = cochain_positions(f.G, n - 1, cap)
    dst = cochain_positions(f.G, n, cap)
    mat = _delta_matrix(f.G, n - 1, cap)
    per_factor = []
    for k, m in enumerate(f.coeff.factors):
        rhs = _cochain_vector(f, dst, k)
        sol = solve_mod(mat, rhs, [m] * len(dst))
        if sol is None:
            return None
        per_factor.append(sol)
    return _vector_cochain(f.G, f.coeff, n - 1, src, per_factor)


@dataclass(frozen=True)
class CohomologyGroup:
    """H^n(G, coeff) with explicit generating representatives.

    generators[i] is a cocycle whose class has order orders[i]; invariants
    is the canonical divisibility chain of the same group.
    """

    G: FinAbGroup
    coeff: FinAbGroup
    degree: int
    invariants: InvariantFactors
    orders: tuple[int, ...]
    generators: tuple[Cochain, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.orders:
            out *= d
        return out

    def class_coordinates(
        self, f: Cochain, cap: int = DEFAULT_ENUMERATION_CAP
    ) -> tuple[int, ...] | None:
        """Coordinates of [f] against the generators, or None if f is not
        cohomologous to any combination (i.e. not a cocycle)."""
        if not is_cocycle(f):
            return None
        n = self.degree
        dst = cochain_positions(self.G, n, cap)
        src = cochain_positions(self.G, n - 1, cap) if n > 0 else []
        dmat = _delta_matrix(self.G, n - 1, cap) if n > 0 else [[] for _ in dst]
        r = self.coeff.rank
        ngen = len(self.generators)
        nh = len(src) * r
        rows = []
        rhs = []
        moduli = []
        for qi, q in enumerate(dst):
            for k, m in enumerate(self.coeff.factors):
                row = [0] * (ngen + nh)
                for gi, gen in enumerate(self.generators):
                    row[gi] = _cochain_vector(gen, [q], k)[0]
                for j in range(len(src)):
                    row[ngen + j * r + k] = dmat[qi][j]
                rows.append(row)
                rhs.append(_cochain_vector(f, [q], k)[0])
                moduli.append(m)
        if not rows:
            return (0,) * ngen
        sol = solve_mod(rows, rhs, moduli)
        if sol is None:
            return None
        return tuple(sol[i] % self.orders[i] for i in range(ngen))

    def is_zero_class(self, f: Cochain) -> bool:
        coords = self.class_coordinates(f)
        return coords is not None and all(c == 0 for c in coords)


def cohomology_group(
    G: FinAbGroup, A: FinAbGroup, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> CohomologyGroup:
    """H^n(G, A) of normalized bar cochains, via Smith normal form.

    Computed one coefficient factor at a time: the cocycle lattice in the
    position basis is divided by the coboundary-plus-moduli lattice.
    """
    positions = cochain_positions(G, n, cap)
    N = len(positions)
    orders: list[int] = []
    gens: list[Cochain] = []
    if N == 0 or A.is_trivial:
        return CohomologyGroup(G, A, n, InvariantFactors(()), (), ())
    d_out = _delta_matrix(G, n, cap)
    d_in = _delta_matrix(G, n - 1, cap) if n > 0 else [[0] * 0 for _ in range(N)]
    n_in = len(d_in[0]) if d_in and d_in[0] else 0
    for k, m in enumerate(A.factors):
        # Cocycle lattice: {v in Z^N : d_out v = 0 mod m}.
        rows = len(d_out)
        if rows:
            aug = [list(d_out[i]) + [m if j == i else 0 for j in range(rows)] for i in range(rows)]
            kb = kernel_basis(aug)
            kcols = len(kb[0]) if kb and kb[0] else 0
            kernel = [[kb[i][j] for j in range(kcols)] for i in range(N)]
        else:
            kernel = identity_matrix(N)
        # Coboundary lattice: columns of d_in together with m*e_i.
        image = [
            [d_in[i][j] for j in range(n_in)] + [m if t == i else 0 for t in range(N)]
            for i in range(N)
        ]
        inv, amb_gens = lattice_quotient(kernel, image, N)
        gcols = len(amb_gens[0]) if amb_gens and amb_gens[0] else 0
        for j in range(gcols):
            per_factor = [[0] * N for _ in A.factors]
            per_factor[k] = [amb_gens[i][j] for i in range(N)]
            gens.append(_vector_cochain(G, A, n, positions, per_factor))
            orders.append(inv.factors[j])
    return CohomologyGroup(
        G, A, n, invariant_factors_of_moduli(orders), tuple(orders), tuple(gens)
    )


# ---------------------------------------------------------------------------
# The canonical cancellation cell kappa
# ---------------------------------------------------------------------------

Seg = tuple[int, ...]


def _face(segs: tuple[Seg, ...], i: int) -> tuple[Seg, ...]:
    """Bar face d_i on a tuple of symbol segments."""
    k = len(segs) - 1
    if i == 0:
        return segs[1:]
    if i == k + 1:
        return segs[:-1]
    return segs[: i - 1] + (segs[i - 1] + segs[i],) + segs[i + 1 :]


@lru_cache(maxsize=None)
def _kappa_swaps(n: int) -> tuple[tuple[int, tuple[Seg, ...], tuple[Seg, ...]], ...]:
    """Adjacent-transposition schedule canceling the formal delta-delta
    term list of a degree-n cochain.

    Terms are generated in face-index order (i, j), then stably bubble
    sorted by their argument segments; each swap of terms with signs s, s'
    and arguments a, a' is recorded as (s*s', a_moving, a_passed). After
    sorting, equal arguments carry canceling signs (delta delta = 0).
    """
    base = tuple((i,) for i in range(n + 2))
    terms: list[tuple[int, tuple[Seg, ...]]] = []
    for i in range(n + 3):
        outer = _face(base, i)
        for j in range(n + 2):
            inner = _face(outer, j)
            sign = 1 if (i + j) % 2 == 0 else -1
            terms.append((sign, inner))
    swaps: list[tuple[int, tuple[Seg, ...], tuple[Seg, ...]]] = []
    arr = list(terms)
    changed = True
    while changed:
        changed = False
        for t in range(len(arr) - 1):
            (s1, a1), (s2, a2) = arr[t], arr[t + 1]
            if a2 < a1:
                swaps.append((s1 * s2, a2, a1))
                arr[t], arr[t + 1] = arr[t + 1], arr[t]
                changed = True
    acc: dict[tuple[Seg, ...], int] = {}
    for s, a in arr:
        acc[a] = acc.get(a, 0) + s
    assert all(v == 0 for v in acc.values()), "delta delta terms failed to cancel"
    return tuple(swaps)


def _kappa_eval(
    f: Cochain, base: PicardGroupoid, out_degree_args: tuple[GroupElement, ...]
) -> GroupElement:
    total = base.A.zero()
    cache: dict[tuple[Seg, ...], GroupElement] = {}

    def val(segs: tuple[Seg, ...]) -> GroupElement:
        got = cache.get(segs)
        if got is None:
            args = []
            for seg in segs:
                e = out_degree_args[seg[0]]
                for idx in seg[1:]:
                    e = e + out_degree_args[idx]
                args.append(e)
            got = f(*args)
            cache[segs] = got
        return got

    for s, moving, passed in _kappa_swaps(f.degree):
        u = val(moving)
        v = val(passed)
        if u.is_zero or v.is_zero:
            continue
        term = base.pairing(u, v)
        total = total + term if s == 1 else total - term
    return total


def kappa_raw(f: Cochain, base: PicardGroupoid) -> Cochain:
    """The canonical trivialization cell of delta(delta(f)), as an A-valued
    (degree+2)-cochain; defined for arbitrary f, no cocycle condition."""
    if f.coeff != base.B:
        raise ValueError("cochain must take values in the object group of the base")
    return Cochain.from_function(
        f.G, base.A, f.degree + 2, lambda *args: _kappa_eval(f, base, args)
    )


def kappa(f: Cochain, base: PicardGroupoid) -> Cochain:
    """kappa of a cocycle: the obstruction class datum for lifting f.

    Precondition delta f = 0; the result is a (degree+2)-cochain whose
    class is the connecting-map image of [f].
    """
    if not is_cocycle(f):
        raise ValueError("kappa requires delta f = 0")
    return kappa_raw(f, base)


def gamma_mix(p1: Cochain, p2: Cochain, base: PicardGroupoid) -> Cochain:
    """Interleaving symmetry cost of merging the coboundary expansions of
    p1 and p2; the canonical correction term of the monoidal sum."""
    n = p1.degree

    def at(*args: GroupElement) -> GroupElement:
        faces = []
        for i in range(n + 2):
            if i == 0:
                fargs = args[1:]
            elif i == n + 1:
                fargs = args[:-1]
            else:
                fargs = args[: i - 1] + (args[i - 1] + args[i],) + args[i + 1 :]
            faces.append((1 if i % 2 == 0 else -1, fargs))
        total = base.A.zero()
        for a in range(len(faces)):
            sa, fa = faces[a]
            u = p2(*fa)
            if u.is_zero:
                continue
            for b in range(a + 1, len(faces)):
                sb, fb = faces[b]
                v = p1(*fb)
                if v.is_zero:
                    continue
                term = base.pairing(u, v)
                total = total + term if sa * sb == 1 else total - term
        return total

    return Cochain.from_function(p1.G, base.A, n + 1, at)


# ---------------------------------------------------------------------------
# Picard-groupoid valued cohomology
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PicardCochain:
    """A pair (P, g): object-level cochain P valued in base.B and a
    morphism-level cochain g of one degree higher valued in base.A."""

    base: PicardGroupoid
    P: Cochain
    g: Cochain

    def __post_init__(self):
        if self.P.coeff != self.base.B or self.g.coeff != self.base.A:
            raise ValueError("coefficients do not match the base groupoid")
        if self.P.G != self.g.G or self.g.degree != self.P.degree + 1:
            raise ValueError("P and g must share G with degree(g) = degree(P)+1")

    @property
    def degree(self) -> int:
        return self.P.degree

    @staticmethod
    def zero(G: FinAbGroup, base: PicardGroupoid, n: int) -> "PicardCochain":
        return PicardCochain(
            base, Cochain.zero(G, base.B, n), Cochain.zero(G, base.A, n + 1)
        )

    def monoidal_sum(self, other: "PicardCochain") -> "PicardCochain":
        """Sum of pseudococycles: object parts add; morphism parts add plus
        the canonical interleaving cost gamma_mix."""
        if self.base != other.base:
            raise ValueError("pairs live over different base groupoids")
        return PicardCochain(
            self.base,
            self.P + other.P,
            self.g + other.g + gamma_mix(self.P, other.P, self.base),
        )


def is_picard_cocycle(pc: PicardCochain) -> bool:
    """True iff delta P = 0 (object level) and delta g = kappa(P)."""
    if not is_cocycle(pc.P):
        return False
    return bar_delta(pc.g) == kappa_raw(pc.P, pc.base)


def coboundary_pair(Q: Cochain, base: PicardGroupoid) -> PicardCochain:
    """The coboundary pseudococycle (delta Q, kappa_raw(Q))."""
    return PicardCochain(base, bar_delta(Q), kappa_raw(Q, base))


@dataclass(frozen=True)
class PicardCohomologyGroup:
    """H^n(G, base) with representatives; mirrors CohomologyGroup."""

    G: FinAbGroup
    base: PicardGroupoid
    degree: int
    invariants: InvariantFactors
    orders: tuple[int, ...]
    generators: tuple[PicardCochain, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.orders:
            out *= d
        return out


class _PicardClassTable:
    """Enumerated cocycle pairs with their coboundary-orbit partition.

    Desk-scale backend: brute-force over all normalized value assignments,
    orbits generated by morphism shifts g -> g + delta h and monoidal
    translation by coboundary pairs (delta Q, kappa_raw(Q)).
    """

    def __init__(self, G: FinAbGroup, base: PicardGroupoid, n: int, cap: int):
        self.G, self.base, self.n = G, base, n
        self.pairs: list[PicardCochain] = []
        b_cochains = _all_cochains(G, base.B, n, cap)
        z_next = [
            z for z in _all_cochains(G, base.A, n + 1, cap) if is_cocycle(z)
        ]
        for P in b_cochains:
            if not is_cocycle(P):
                continue
            k = kappa_raw(P, base)
            g0 = _solve_delta(G, base.A, n, k, cap)
            if g0 is None:
                continue
            for z in z_next:
                self.pairs.append(PicardCochain(base, P, g0 + z))
        index = {(_ser(pc)): i for i, pc in enumerate(self.pairs)}
        parent = list(range(len(self.pairs)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i, j):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj

        shifts = [bar_delta(h) for h in _all_cochains(G, base.A, n, cap)]
        cob = [coboundary_pair(Q, base) for Q in _all_cochains(G, base.B, n - 1, cap)]
        for i, pc in enumerate(self.pairs):
            for dh in shifts:
                j = index.get(_ser(PicardCochain(base, pc.P, pc.g + dh)))
                if j is not None:
                    union(i, j)
            for cb in cob:
                moved = pc.monoidal_sum(cb)
                j = index.get(_ser(moved))
                if j is not None:
                    union(i, j)
        self._find = find
        self._index = index
        roots = sorted({find(i) for i in range(len(self.pairs))})
        self.class_ids = {r: t for t, r in enumerate(roots)}

    def class_of(self, pc: PicardCochain) -> int:
        i = self._index.get(_ser(pc))
        if i is None:
            raise ValueError("pair is not a cocycle in the enumerated table")
        return self.class_ids[self._find(i)]

    @property
    def num_classes(self) -> int:
        return len(self.class_ids)

    def class_members(self) -> dict[int, list[PicardCochain]]:
        cached = getattr(self, "_members", None)
        if cached is None:
            cached = {}
            for i, pc in enumerate(self.pairs):
                cached.setdefault(self.class_ids[self._find(i)], []).append(pc)
            self._members = cached
        return cached

    def class_sum(self, c1: int, c2: int) -> int:
        members = self.class_members()
        return self.class_of(members[c1][0].monoidal_sum(members[c2][0]))

    def zero_class(self) -> int:
        return self.class_of(PicardCochain.zero(self.G, self.base, self.n))


def _ser(pc: PicardCochain):
    return (pc.P.values, pc.g.values)


def _all_cochains(G, coeff, degree, cap) -> list[Cochain]:
    """Every normalized cochain of the given degree (brute force)."""
    if degree < 0:
        return []
    positions = cochain_positions(G, degree, cap)
    elems = list(enumerate_group(coeff))
    total = len(elems) ** len(positions)
    if total > cap:
        raise CapExceededError(f"{total} cochains exceed cap {cap}")
    out = []
    for combo in itertools.product(elems, repeat=len(positions)):
        vals = {
            tuple(a.residues for a in p): e.residues
            for p, e in zip(positions, combo)
            if not e.is_zero
        }
        out.append(Cochain.make(G, coeff, degree, vals))
    return out


def _solve_delta(G, coeff, degree, target: Cochain, cap) -> Cochain | None:
    """Find g of the given degree+1 with bar_delta(g) = target."""
    src = cochain_positions(G, degree + 1, cap)
    dst = cochain_positions(G, degree + 2, cap)
    mat = _delta_matrix(G, degree + 1, cap)
    per_factor = []
    for k, m in enumerate(coeff.factors):
        rhs = _cochain_vector(target, dst, k)
        sol = solve_mod(mat, rhs, [m] * len(dst))
        if sol is None:
            return None
        per_factor.append(sol)
    return _vector_cochain(G, coeff, degree + 1, src, per_factor)


def picard_cohomology(
    G: FinAbGroup, base: PicardGroupoid, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> PicardCohomologyGroup:
    """H^n(G, base) for a skeletal Picard groupoid base.

    Fast paths: suspension coefficients shift to H^{n+1}(G, A); a trivial
    symmetry form splits the answer as H^n(G,B) + H^{n+1}(G,A). Otherwise
    classes are enumerated and the group structure is read off from the
    monoidal sum of representatives.
    """
    if G.is_trivial and n >= 1:
        return PicardCohomologyGroup(G, base, n, InvariantFactors(()), (), ())
    if base.B.is_trivial:
        H = cohomology_group(G, base.A, n + 1, cap)
        gens = tuple(
            PicardCochain(base, Cochain.zero(G, base.B, n), g) for g in H.generators
        )
        return PicardCohomologyGroup(G, base, n, H.invariants, H.orders, gens)
    if base.is_symmetry_trivial:
        HB = cohomology_group(G, base.B, n, cap)
        HA = cohomology_group(G, base.A, n + 1, cap)
        gens = tuple(
            PicardCochain(base, P, Cochain.zero(G, base.A, n + 1))
            for P in HB.generators
        ) + tuple(
            PicardCochain(base, Cochain.zero(G, base.B, n), g) for g in HA.generators
        )
        orders = HB.orders + HA.orders
        return PicardCohomologyGroup(
            G, base, n, invariant_factors_of_moduli(orders), orders, gens
        )
    table = _PicardClassTable(G, base, n, cap)
    return _group_structure_from_table(G, base, n, table)


def _group_structure_from_table(G, base, n, table: _PicardClassTable):
    """Abelian group structure of the class set under the monoidal sum."""
    zero = table.zero_class()
    members = table.class_members()
    classes = sorted(members)
    # Greedy generating set.
    generated = {zero}
    gens: list[int] = []
    for c in classes:
        if c in generated:
            continue
        gens.append(c)
        acc, powers = zero, []
        while True:
            acc = table.class_sum(acc, c)
            powers.append(acc)
            if acc == zero:
                break
        generated = {table.class_sum(g0, p) for g0 in generated for p in powers} | generated
        if len(generated) == len(classes):
            break
    k = len(gens)
    # Relation lattice of Z^k -> classes.
    orders = []
    for c in gens:
        acc, o = zero, 0
        while True:
            acc = table.class_sum(acc, c)
            o += 1
            if acc == zero:
                break
        orders.append(o)
    relations = [[orders[i] if j == i else 0 for j in range(k)] for i in range(k)]
    rel_cols = [list(col) for col in zip(*relations)] if k else []
    extra = []
    for combo in itertools.product(*(range(o) for o in orders)):
        acc = zero
        for ci, mult in zip(gens, combo):
            for _ in range(mult):
                acc = table.class_sum(acc, ci)
        if acc == zero and any(combo):
            extra.append(list(combo))
    lat = [[relations[i][j] for j in range(k)] for i in range(k)]
    for v in extra:
        for i in range(k):
            lat[i].append(v[i])
    inv, amb = lattice_quotient(identity_matrix(k), lat, k) if k else (
        InvariantFactors(()),
        [],
    )
    out_gens = []
    out_orders = []
    gcols = len(amb[0]) if amb and amb[0] else 0
    for j in range(gcols):
        acc = zero
        for i in range(k):
            mult = amb[i][j] % orders[i]
            for _ in range(mult):
                acc = table.class_sum(acc, gens[i])
        out_gens.append(members[acc][0])
        out_orders.append(inv.factors[j])
    return PicardCohomologyGroup(
        G,
        base,
        n,
        invariant_factors_of_moduli(out_orders),
        tuple(out_orders),
        tuple(out_gens),
    )


# ---------------------------------------------------------------------------
# Long exact sequence
# ---------------------------------------------------------------------------


def les_connecting(
    P: Cochain, base: PicardGroupoid, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[CohomologyGroup, tuple[int, ...]]:
    """Connecting-map image [kappa(P)] in H^{degree+2}(G, A)."""
    k = kappa(P, base)
    H = cohomology_group(P.G, base.A, P.degree + 2, cap)
    coords = H.class_coordinates(k)
    if coords is None:
        raise ValueError("kappa(P) is not a cocycle; connecting map undefined")
    return H, coords


def les_check(
    G: FinAbGroup, base: PicardGroupoid, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> bool:
    """Exactness of H^{n+1}(G,A) -> H^n(G,base) -> H^n(G,B) -> H^{n+2}(G,A)
    at the two middle nodes, by enumeration of classes."""
    table = _PicardClassTable(G, base, n, cap)
    HB = cohomology_group(G, base.B, n, cap)
    HA2 = cohomology_group(G, base.A, n + 2, cap)

    members = table.class_members()
    # Node H^n(G, base): ker(p) vs im(i).
    ker_p = set()
    for c, pcs in members.items():
        verdicts = {HB.is_zero_class(pc.P) for pc in pcs}
        if len(verdicts) != 1:
            raise AssertionError("projection to H^n(G,B) not class-invariant")
        if verdicts.pop():
            ker_p.add(c)
    im_i = set()
    zeroP = Cochain.zero(G, base.B, n)
    for g in _all_cochains(G, base.A, n + 1, cap):
        if is_cocycle(g):
            im_i.add(table.class_of(PicardCochain(base, zeroP, g)))
    if ker_p != im_i:
        return False

    # Node H^n(G, B): im(p) vs ker(connecting).
    cocycles_b = [P for P in _all_cochains(G, base.B, n, cap) if is_cocycle(P)]
    by_class: dict[tuple[int, ...], list[Cochain]] = {}
    for P in cocycles_b:
        coords = HB.class_coordinates(P)
        by_class.setdefault(coords, []).append(P)
    im_p = set()
    for c, pcs in members.items():
        for pc in pcs:
            im_p.add(HB.class_coordinates(pc.P))
    ker_conn = set()
    for coords, ps in by_class.items():
        verdicts = {HA2.is_zero_class(kappa_raw(P, base)) for P in ps}
        if len(verdicts) != 1:
            raise AssertionError("connecting map not class-invariant")
        if verdicts.pop():
            ker_conn.add(coords)
    return im_p == ker_conn
