"""Exact arithmetic for finite abelian groups and integer matrices.

Groups are products of cyclic factors Z/n1 x ... x Z/nk, elements are
residue vectors, and all linear algebra is done over Z via Smith normal
form so that kernels, images and subquotients come out exactly.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import prod
from typing import Iterator, Sequence

DEFAULT_ENUMERATION_CAP = 10**6

Matrix = list[list[int]]


class GroupParseError(ValueError):
    """Raised for malformed or out-of-domain group descriptors."""


class CapExceededError(RuntimeError):
    """Raised when an enumeration would exceed the configured cap."""


class LatticeError(ValueError):
    """Raised when a subquotient is requested for non-nested lattices."""


@dataclass(frozen=True)
class FinAbGroup:
    """A finite abelian group Z/n1 x ... x Z/nk.

    The trivial group is canonicalized to the empty factor list; factors
    equal to 1 are dropped on construction.
    """

    factors: tuple[int, ...]

    def __init__(self, factors: Sequence[int]):
        for n in factors:
            if n < 1:
                raise GroupParseError(f"modulus must be >= 1, got {n}")
        object.__setattr__(self, "factors", tuple(n for n in factors if n > 1))

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def element(self, residues: Sequence[int]) -> "GroupElement":
        if len(residues) != len(self.factors):
            raise ValueError(
                f"expected {len(self.factors)} residues, got {len(residues)}"
            )
        reduced = tuple(r % n for r, n in zip(residues, self.factors))
        return GroupElement(self, reduced)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.factors))

    def descriptor(self) -> str:
        if not self.factors:
            return "Z/1"
        return "x".join(f"Z/{n}" for n in self.factors)

    def __mul__(self, other: "FinAbGroup") -> "FinAbGroup":
        return FinAbGroup(self.factors + other.factors)

    def __str__(self) -> str:
        return self.descriptor()


@dataclass(frozen=True)
class GroupElement:
    """An element of a FinAbGroup, stored as a reduced residue vector."""

    group: FinAbGroup
    residues: tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.group,
            tuple(
                (a + b) % n
                for a, b, n in zip(self.residues, other.residues, self.group.factors)
            ),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple((-a) % n for a, n in zip(self.residues, self.group.factors)),
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        return GroupElement(
            self.group,
            tuple((a * k) % n for a, n in zip(self.residues, self.group.factors)),
        )

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(r == 0 for r in self.residues)

    def _check(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise ValueError("elements belong to different groups")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.residues)) + ")"


_GROUP_RE = re.compile(r"^Z/(\d+)$")


def parse_group(text: str) -> FinAbGroup:
    """Parse a descriptor like ``Z/2xZ/4`` into a FinAbGroup.

    The grammar is ``Z/<n>`` terms joined by ``x`` with no spaces; n must
    be a positive decimal integer. Factors equal to 1 are dropped.
    """
    if not isinstance(text, str) or not text:
        raise GroupParseError(f"not a group descriptor: {text!r}")
    factors = []
    for part in text.split("x"):
        m = _GROUP_RE.match(part)
        if not m:
            raise GroupParseError(f"malformed factor {part!r} in {text!r}")
        n = int(m.group(1))
        if n == 0:
            raise GroupParseError("Z/0 (infinite cyclic) is not supported")
        factors.append(n)
    return FinAbGroup(factors)


def enumerate_group(
    g: FinAbGroup, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[GroupElement]:
    """Yield all elements of ``g`` in lexicographic residue order.

    The first element is always 0. Raises CapExceededError if |g| > cap.
    """
    if g.order > cap:
        raise CapExceededError(f"|{g}| = {g.order} exceeds cap {cap}")
    for residues in itertools.product(*(range(n) for n in g.factors)):
        yield GroupElement(g, residues)


def nonzero_elements(g: FinAbGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> list[GroupElement]:
    return [e for e in enumerate_group(g, cap) if not e.is_zero]


@dataclass(frozen=True)
class Homomorphism:
    """A homomorphism between finite abelian groups, given by an integer
    matrix acting on residue vectors (codomain factors x domain factors)."""

    domain: FinAbGroup
    codomain: FinAbGroup
    matrix: tuple[tuple[int, ...], ...]

    def __init__(self, domain: FinAbGroup, codomain: FinAbGroup, matrix: Sequence[Sequence[int]]):
        rows = tuple(tuple(row) for row in matrix)
        if len(rows) != codomain.rank or any(len(r) != domain.rank for r in rows):
            raise ValueError("matrix shape does not match domain/codomain factors")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "matrix", rows)

    def is_well_defined(self) -> bool:
        """True iff each domain modulus annihilates its matrix column."""
        for j, nj in enumerate(self.domain.factors):
            for i, mi in enumerate(self.codomain.factors):
                if (nj * self.matrix[i][j]) % mi != 0:
                    return False
        return True

    def __call__(self, x: GroupElement) -> GroupElement:
        if x.group != self.domain:
            raise ValueError("element not in the domain")
        out = [
            sum(self.matrix[i][j] * x.residues[j] for j in range(self.domain.rank))
            for i in range(self.codomain.rank)
        ]
        return self.codomain.element(out)


@dataclass(frozen=True)
class InvariantFactors:
    """Invariant factors d1 | d2 | ... | dm of a finite abelian group."""

    factors: tuple[int, ...]

    def __init__(self, factors: Sequence[int]):
        fs = tuple(int(d) for d in factors)
        for d in fs:
            if d <= 1:
                raise ValueError(f"invariant factor must be > 1, got {d}")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")
        object.__setattr__(self, "factors", fs)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def group(self) -> FinAbGroup:
        return FinAbGroup(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.factors)


# ---------------------------------------------------------------------------
# Integer matrices and Smith normal form
# ---------------------------------------------------------------------------


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    oi[j] += c * bt[j]
    return out


def mat_vec(a: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Compute U, D, V with U*M*V = D in Smith normal form.

    D is diagonal with d_i | d_{i+1} and d_i >= 0; U and V are unimodular.
    Works for any integer matrix, including empty ones.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [list(map(int, row)) for row in m]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row[dst] += k * row[src]
        for t in range(cols):
            d[dst][t] += k * d[src][t]
        for t in range(rows):
            u[dst][t] += k * u[src][t]

    def add_col(src, dst, k):
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def negate_row(i):
        for t in range(cols):
            d[i][t] = -d[i][t]
        for t in range(rows):
            u[i][t] = -u[i][t]

    t = 0
    while t < rows and t < cols:
        # Find a pivot of minimal absolute value in the trailing submatrix.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                a = d[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best = abs(a)
                    pivot = (i, j)
        if pivot is None:
            break
        while True:
            i, j = pivot
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            if d[t][t] < 0:
                negate_row(t)
            # Reduce column and row by the pivot.
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(t, i, -q)
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(t, j, -q)
                    if d[t][j]:
                        dirty = True
            if dirty:
                pivot = min(
                    (
                        (i, j)
                        for i in range(t, rows)
                        for j in range(t, cols)
                        if d[i][j]
                    ),
                    key=lambda ij: abs(d[ij[0]][ij[1]]),
                )
                continue
            # Pivot now divides its row and column remainders (all zero);
            # enforce divisibility of the full trailing submatrix.
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if d[i][j] % d[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
            pivot = (t, t)
        t += 1

    return u, d, v


def snf_diagonal(d: Matrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def kernel_basis(m: Matrix) -> Matrix:
    """Integer kernel of M as a matrix whose columns span {v : Mv = 0}."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return [[] for _ in range(0)]
    if rows == 0:
        return identity_matrix(cols)
    _, d, v = smith_normal_form(m)
    diag = snf_diagonal(d)
    rank = sum(1 for x in diag if x != 0)
    return [[v[i][j] for j in range(rank, cols)] for i in range(cols)]


def solve_integer(m: Matrix, rhs: Sequence[int]) -> list[int] | None:
    """Solve M x = rhs over Z; return one solution or None."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    u, d, v = smith_normal_form(m)
    b = mat_vec(u, list(rhs))
    diag = snf_diagonal(d)
    y = [0] * cols
    for i in range(rows):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if b[i] != 0:
                return None
        else:
            if b[i] % di != 0:
                return None
            if i < cols:
                y[i] = b[i] // di
    return mat_vec(v, y)


def solve_mod(m: Matrix, rhs: Sequence[int], moduli: Sequence[int]) -> list[int] | None:
    """Solve M x = rhs modulo per-row moduli; return one solution or None.

    Row i of the system is read in Z/moduli[i]. Implemented by adjoining
    slack columns moduli[i]*e_i and solving over Z.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    aug = [list(m[i]) + [moduli[i] if j == i else 0 for j in range(rows)] for i in range(rows)]
    sol = solve_integer(aug, rhs)
    if sol is None:
        return None
    return sol[:cols]


def lattice_quotient(
    kernel_gens: Matrix, image_gens: Matrix, ambient_dim: int
) -> tuple[InvariantFactors, Matrix]:
    """Invariant factors and generators of (kernel lattice)/(image lattice).

    Both matrices hold lattice generators as columns in Z^ambient_dim; the
    image lattice must be contained in the kernel lattice (LatticeError
    otherwise). Returns (invariants, gens) where column i of gens is an
    ambient representative of the i-th invariant-factor generator. A free
    quotient (infinite group) raises LatticeError.
    """
    a = len(kernel_gens[0]) if kernel_gens and kernel_gens[0] else 0
    if ambient_dim == 0 or a == 0:
        if image_gens and any(any(row) for row in image_gens):
            raise LatticeError("image lattice not contained in kernel lattice")
        return InvariantFactors(()), [[] for _ in range(ambient_dim)]
    b = len(image_gens[0]) if image_gens and image_gens[0] else 0
    # Express each image generator in kernel coordinates: K X = M.
    x_cols: list[list[int]] = []
    for j in range(b):
        col = [image_gens[i][j] for i in range(ambient_dim)]
        sol = solve_integer(kernel_gens, col)
        if sol is None:
            raise LatticeError("image lattice not contained in kernel lattice")
        x_cols.append(sol)
    x = [[x_cols[j][i] for j in range(b)] for i in range(a)]
    u, d, _ = smith_normal_form(x) if b else (identity_matrix(a), zero_matrix(a, 0), [])
    diag = snf_diagonal(d) if b else []
    orders = diag + [0] * (a - len(diag))
    uinv = _unimodular_inverse(u)
    invariants = []
    gens: list[list[int]] = []
    for i, order in enumerate(orders):
        if order == 1:
            continue
        if order == 0:
            raise LatticeError("quotient has a free part; expected a finite group")
        coeffs = [uinv[r][i] for r in range(a)]
        amb = [
            sum(kernel_gens[r][c] * coeffs[c] for c in range(a))
            for r in range(ambient_dim)
        ]
        invariants.append(order)
        gens.append(amb)
    inv = InvariantFactors(sorted(invariants, key=lambda d: d))
    # Re-sort generators to match the sorted chain (SNF already sorted).
    return inv, [[g[r] for g in gens] for r in range(ambient_dim)]


def _unimodular_inverse(u: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix, exactly."""
    n = len(u)
    uu, d, v = smith_normal_form(u)
    diag = snf_diagonal(d)
    if any(x != 1 for x in diag) or len(diag) != n:
        raise ValueError("matrix is not unimodular")
    # u^-1 = v * d^-1 * uu = v * uu since d = I.
    return mat_mul(v, uu)


def subquotient(kernel_gens: Matrix, image_gens: Matrix, ambient_dim: int) -> InvariantFactors:
    """Invariant factors of (kernel lattice)/(image lattice) in Z^ambient."""
    inv, _ = lattice_quotient(kernel_gens, image_gens, ambient_dim)
    return inv


def invariant_factors_of_moduli(moduli: Sequence[int]) -> InvariantFactors:
    """Invariant-factor form of Z/m1 x ... x Z/mk (drops factors of 1)."""
    ms = [m for m in moduli if m > 1]
    if not ms:
        return InvariantFactors(())
    d = [[ms[i] if i == j else 0 for j in range(len(ms))] for i in range(len(ms))]
    _, snf, _ = smith_normal_form(d)
    return InvariantFactors([x for x in snf_diagonal(snf) if x > 1])
