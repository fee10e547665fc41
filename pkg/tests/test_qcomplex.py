import itertools
import random

import pytest

from catbiext import (
    BiQData,
    CDatum,
    MultiMap,
    ThetaMatrix,
    build_q2_from_extension,
    check_42,
    check_42_report,
    check_theta_44,
    enumerate_group,
    face_coboundary,
    mirror_biq,
    parse_group,
    specialize_24_to_23,
    specialize_42_to_32,
    theta_44_report,
    theta_44_residual,
    theta_specialize,
)
from catbiext.qcomplex import chi_23_residual, chi_32_residual, matrix_positions


def random_theta(G, A, rng, density=0.5):
    vals = {}
    nontrivial = [a.residues for a in enumerate_group(A) if not a.is_zero]
    for m in matrix_positions(G):
        if rng.random() < density:
            vals[m] = rng.choice(nontrivial)
    return ThetaMatrix.make(G, A, vals)


def random_biq(G, H, A, rng, density=0.5):
    nontrivial = [a.residues for a in enumerate_group(A) if not a.is_zero]
    def rmap(doms):
        vals = {}
        nz = [
            tuple(e.residues for e in tup)
            for tup in itertools.product(*(enumerate_group(D) for D in doms))
            if not any(e.is_zero for e in tup)
        ]
        for k in nz:
            if rng.random() < density:
                vals[k] = rng.choice(nontrivial)
        return MultiMap.make(doms, A, vals)

    rows = {}
    hs = [h.residues for h in enumerate_group(H) if not h.is_zero]
    for m in matrix_positions(G):
        for y in hs:
            if rng.random() < density:
                rows[(m, y)] = rng.choice(nontrivial)
    return BiQData.make(
        G, H, A,
        f=rmap((G, G, H)), g=rmap((G, H, H)),
        theta_row=rows, chi=rmap((G, G, H, H)),
    )


# ---------------------------------------------------------------------------
# ThetaMatrix basics
# ---------------------------------------------------------------------------


def test_theta_matrix_normalization(Z2):
    T = ThetaMatrix.make(Z2, Z2, {(((1,), (1,)), ((1,), (1,))): (1,)})
    one, zero = Z2.element([1]), Z2.zero()
    assert T(one, one, one, one).residues == (1,)
    assert T(one, zero, one, one).is_zero
    with pytest.raises(ValueError):
        ThetaMatrix.make(Z2, Z2, {(((0,), (1,)), ((1,), (1,))): (1,)})


def test_theta_flipped(Z2):
    T = ThetaMatrix.make(Z2, Z2, {})
    m = (((1,), (1,)), ((1,), (1,)))
    T2 = T.flipped(m, (1,))
    one = Z2.element([1])
    assert T2(one, one, one, one).residues == (1,)
    assert T2.flipped(m, (1,)).values == T.values


def test_zero_theta_passes_44(Z2, Z3):
    assert check_theta_44(ThetaMatrix.make(Z2, Z2, {}))
    assert check_theta_44(ThetaMatrix.make(Z3, Z3, {}))


def test_bilinear_seed_fails_44(Z2):
    # beta(x, t) = x*t placed at the (x, t) corners is not (4,4)-closed
    T = ThetaMatrix.from_function(
        Z2, Z2,
        lambda x, y, z, t: Z2.element([x.residues[0] * t.residues[0]]),
    )
    rep = theta_44_report(T)
    assert not rep.ok
    eq, tup = rep.witnesses[0]
    assert eq == "coh-4-4"
    args = [Z2.element(r) for r in tup]
    assert not theta_44_residual(T, *args).is_zero


def test_face_coboundary_is_closed(Z2):
    # every edge datum on Z/2 gives a closed shift (exhaustive: one free value)
    assert check_theta_44(face_coboundary(CDatum.zero(Z2, Z2)))
    assert check_theta_44(face_coboundary(CDatum.make(Z2, Z2, {((1,), (1,)): (1,)})))
    # symmetric biadditive edge data give closed shifts over any group
    for desc in ("Z/3", "Z/4"):
        G = parse_group(desc)
        c = CDatum(
            G, G,
            MultiMap.from_function(
                (G, G), G, lambda x, y: G.element([x.residues[0] * y.residues[0]])
            ),
        )
        assert check_theta_44(face_coboundary(c))


def test_face_coboundary_needs_biadditivity(Z3):
    # symmetric but non-biadditive edge data can fail to be closed
    c = CDatum.make(Z3, Z3, {((1,), (2,)): (1,), ((2,), (1,)): (1,)})
    assert not check_theta_44(face_coboundary(c))


def test_face_coboundary_preserves_verdict(Z2):
    c = CDatum.make(Z2, Z2, {((1,), (1,)): (1,)})
    shift = face_coboundary(c)
    # shifting a failing theta by a coboundary keeps it failing
    bad = ThetaMatrix.from_function(
        Z2, Z2,
        lambda x, y, z, t: Z2.element([x.residues[0] * t.residues[0]]),
    )
    combined = ThetaMatrix.from_function(
        Z2, Z2, lambda *a: bad(*a) + shift(*a)
    )
    assert not check_theta_44(combined)
    good = ThetaMatrix.make(Z2, Z2, {})
    combined2 = ThetaMatrix.from_function(
        Z2, Z2, lambda *a: good(*a) + shift(*a)
    )
    assert check_theta_44(combined2)


def test_theta_flip_detected_over_z4():
    Z4 = parse_group("Z/4")
    T = ThetaMatrix.make(Z4, Z4, {})
    m = (((1,), (1,)), ((1,), (1,)))
    assert not check_theta_44(T.flipped(m, (1,)))


def test_theta_specialize_masks(Z2):
    T = ThetaMatrix.make(Z2, Z2, {})
    rep = theta_specialize(T, "z=0")
    assert rep.ok and rep.classification["identity"] == "s(x+y)+s(t) = s(x)+s(y+t)"
    rep2 = theta_specialize(T, "x=t=0")
    assert rep2.ok and rep2.classification["identity"] == "s(y)+s(z) = s(z)+s(y)"
    with pytest.raises(ValueError):
        theta_specialize(T, "y=0")


def test_theta_specialize_witness(Z3):
    # a theta supported on a z=0-visible slice fails the mask with witnesses
    vals = {(((1,), (1,)), ((1,), (1,))): (1,)}
    T = ThetaMatrix.make(Z3, Z3, vals)
    rep = theta_specialize(T, "x=t=0")
    if not rep.ok:
        for eq, tup in rep.witnesses:
            assert eq == "comm-reduction"
            y, z, b, c = (Z3.element(r) for r in tup)
            zero = Z3.zero()
            assert not theta_44_residual(
                T, zero, y, z, zero, zero, b, c, zero
            ).is_zero


# ---------------------------------------------------------------------------
# (4,2) layer
# ---------------------------------------------------------------------------


def test_zero_biq_passes_42(Z2):
    D = BiQData.make(Z2, Z2, Z2)
    assert check_42(D)


def test_42_witnesses_are_violations(Z3, Z2):
    D = BiQData.make(
        Z3, Z2, Z3, chi={((1,), (1,), (1,), (1,)): (1,)}
    )
    rep = check_42_report(D)
    assert not rep.ok
    from catbiext.qcomplex import biq_42_residual

    for eq, tup in rep.witnesses[:10]:
        assert eq == "coh-4-2"
        xs = [Z3.element(r) for r in tup[:4]]
        ys = [Z2.element(r) for r in tup[4:]]
        assert not biq_42_residual(D, *xs, *ys).is_zero


def test_biadditive_chi_passes_42(Z2):
    # chi(x,x';y,y') = x x' y y' is additive in each matched pair
    chi = MultiMap.from_function(
        (Z2, Z2, Z2, Z2), Z2,
        lambda x, xp, y, yp: Z2.element(
            [x.residues[0] * xp.residues[0] * y.residues[0] * yp.residues[0]]
        ),
    )
    D = BiQData.make(Z2, Z2, Z2, chi=chi)
    assert check_42(D)


@pytest.mark.parametrize("seed", range(5))
def test_specialization_42_to_32_arbitrary_data(seed, Z2, Z3):
    Z4 = parse_group("Z/4")
    rng = random.Random(seed)
    for G, H, A in [(Z2, Z2, Z4), (Z3, Z3, Z3), (Z2, Z3, Z2)]:
        D = random_biq(G, H, A, rng)
        assert specialize_42_to_32(D)
        assert specialize_24_to_23(D)


def test_chi_32_residual_detects_nonadditivity(Z3):
    D = BiQData.make(Z3, Z3, Z3, chi={((1,), (1,), (1,), (1,)): (1,)})
    one, two = Z3.element([1]), Z3.element([2])
    assert not chi_32_residual(D, one, one, two, one, one).is_zero
    assert not chi_23_residual(D, one, one, one, one, two).is_zero


def test_mirror_swaps_slots(Z2, Z3):
    D = BiQData.make(
        Z2, Z3, Z3,
        f={((1,), (1,), (1,)): (1,)},
        chi={((1,), (1,), (2,), (1,)): (2,)},
    )
    M = mirror_biq(D)
    assert M.G == Z3 and M.H == Z2
    one2, one3, two3 = Z2.element([1]), Z3.element([1]), Z3.element([2])
    assert M.chi(two3, one3, one2, one2) == D.chi(one2, one2, two3, one3)
    assert M.g(one3, one2, one2) == D.f(one2, one2, one3)
    assert M.theta_row == {}


# ---------------------------------------------------------------------------
# cube membership
# ---------------------------------------------------------------------------


def test_build_q2_zero_member(Z2):
    rep = build_q2_from_extension(CDatum.zero(Z2, Z2), ThetaMatrix.make(Z2, Z2, {}))
    assert rep.ok and rep.classification == {"member": True}


def test_build_q2_symmetric_biadditive_member(Z3):
    c = CDatum(
        Z3, Z3,
        MultiMap.from_function(
            (Z3, Z3), Z3, lambda x, y: Z3.element([x.residues[0] * y.residues[0]])
        ),
    )
    rep = build_q2_from_extension(c, ThetaMatrix.make(Z3, Z3, {}))
    assert rep.ok


def test_build_q2_asymmetric_fails(Z3):
    c = CDatum.make(Z3, Z3, {((1,), (2,)): (1,)})
    rep = build_q2_from_extension(c, ThetaMatrix.make(Z3, Z3, {}))
    assert not rep.ok and rep.classification == {"member": False}
    for eq, tup in rep.witnesses:
        assert eq == "face-type"
        x, y, z, t = (Z3.element(r) for r in tup)
        src = c(x + y, z + t) + c(x, y) + c(z, t)
        dst = c(x + z, y + t) + c(x, z) + c(y, t)
        assert src != dst


def test_build_q2_from_monoidal_extension_data(Z2):
    # section values of an extension over a suspension give admissible edges
    from catbiext import Cochain, bar_delta

    g = Cochain.make(Z2, Z2, 1, {((1,),): (1,)})
    d = bar_delta(g)
    c = CDatum(
        Z2, Z2,
        MultiMap.from_function((Z2, Z2), Z2, lambda x, y: d(x, y)),
    )
    rep = build_q2_from_extension(c, face_coboundary(c))
    assert rep.ok
