import itertools

import pytest

from catbiext import (
    Cochain,
    FinAbGroup,
    MultiMap,
    bar_delta,
    enumerate_group,
    parse_group,
)


@pytest.fixture(scope="session")
def Z2():
    return parse_group("Z/2")


@pytest.fixture(scope="session")
def Z3():
    return parse_group("Z/3")


@pytest.fixture(scope="session")
def Z4():
    return parse_group("Z/4")


def all_cochains(G, coeff, degree):
    """Brute-force enumeration of all normalized cochains."""
    from catbiext.cohomology import cochain_positions

    positions = cochain_positions(G, degree)
    elems = list(enumerate_group(coeff))
    for combo in itertools.product(elems, repeat=len(positions)):
        vals = {}
        for key, v in zip(positions, combo):
            if not v.is_zero:
                vals[tuple(e.residues for e in key)] = v.residues
        yield Cochain.make(G, coeff, degree, vals)


def brute_cohomology_order(G, coeff, degree):
    """|H^n| by direct cocycle/coboundary counting."""
    cocycles = [f for f in all_cochains(G, coeff, degree) if bar_delta(f).is_zero]
    coboundaries = {
        bar_delta(g).values for g in all_cochains(G, coeff, degree - 1)
    }
    assert len(cocycles) % len(coboundaries) == 0
    return len(cocycles) // len(coboundaries)


def monomial_cochain(G, coeff, degree):
    """The product-of-first-coordinates cochain, e.g. xyz in degree 3."""

    def fn(*args):
        p = 1
        for a in args:
            p *= a.residues[0]
        return coeff.element([p] + [0] * (coeff.rank - 1))

    return Cochain.from_function(G, coeff, degree, fn)


def product_multimap(domains, coeff, fn):
    return MultiMap.from_function(domains, coeff, fn)
