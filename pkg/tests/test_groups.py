import pytest

from catbiext import (
    CapExceededError,
    FinAbGroup,
    GroupParseError,
    enumerate_group,
    kernel_basis,
    lattice_quotient,
    parse_group,
    smith_normal_form,
    solve_mod,
    subquotient,
)


def mat_mul(A, B):
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def test_parse_group_grammar():
    G = parse_group("Z/2xZ/4")
    assert G.factors == (2, 4)
    assert parse_group("Z/1").order == 1
    assert str(parse_group("Z/6xZ/2")) == "Z/6xZ/2"


@pytest.mark.parametrize("bad", ["", "Z/0", "Z/-2", "Z2", "Z/2 x Z/2", "Z/2x", "Q/2"])
def test_parse_group_rejects(bad):
    with pytest.raises(GroupParseError):
        parse_group(bad)


def test_element_arithmetic():
    G = parse_group("Z/2xZ/3")
    a = G.element([1, 2])
    b = G.element([1, 1])
    assert (a + b).residues == (0, 0)
    assert (-a).residues == (1, 1)
    assert (a - b).residues == (0, 1)
    assert G.element([3, 5]).residues == (1, 2)


def test_enumerate_group_order_and_cap():
    G = parse_group("Z/3xZ/4")
    elems = list(enumerate_group(G))
    assert len(elems) == 12 == G.order
    assert len(set(e.residues for e in elems)) == 12
    with pytest.raises(CapExceededError):
        list(enumerate_group(parse_group("Z/1000xZ/1000xZ/1000"), cap=10))


@pytest.mark.parametrize(
    "M",
    [
        [[2, 4], [6, 8]],
        [[0, 0], [0, 0]],
        [[1]],
        [[6, 10, 15]],
        [[2, 0], [0, 3], [5, 7]],
    ],
)
def test_snf_exact(M):
    U, D, V = smith_normal_form(M)
    assert mat_mul(mat_mul(U, M), V) == D
    diag = [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]
    for a, b in zip(diag, diag[1:]):
        if a and b:
            assert b % a == 0


def test_kernel_basis():
    M = [[2, 4]]
    ker = kernel_basis(M)  # columns span the kernel
    ncols = len(ker[0])
    assert ncols == 1
    for j in range(ncols):
        v = [ker[i][j] for i in range(len(ker))]
        assert 2 * v[0] + 4 * v[1] == 0
        assert any(v)


def test_solve_mod():
    # 2x = 2 mod 4 has solution x = 1 or 3
    sol = solve_mod([[2]], [2], [4])
    assert sol is not None and (2 * sol[0]) % 4 == 2
    assert solve_mod([[2]], [1], [4]) is None


def test_lattice_quotient_z_mod_2z():
    inv, gens = lattice_quotient([[1]], [[2]], 1)
    assert inv.factors == (2,)


def test_subquotient_mixed():
    # Z^2 / <(2,0),(0,3)> = Z/2 x Z/3
    inv = subquotient([[1, 0], [0, 1]], [[2, 0], [0, 3]], 2)
    assert sorted(inv.factors) in ([2, 3], [6])
