"""Normalized chains, (co)homology and the cup product."""

import pytest

from kanforge import (
    Cochain,
    FGAbelianGroup,
    SimplexWord,
    SimplicialMap,
    SimplicialSetPresentation,
    boundary_delta,
    chain_complex,
    chain_homotopy_check,
    circle,
    coboundary,
    cohomology,
    compose,
    cup_product,
    cycle,
    delta,
    homology,
    homology_groups,
    identity_map,
    induced_chain_map,
    is_cocycle,
    klein_bottle,
    nondegenerate,
    torus,
    unit_cochain,
)
from kanforge.snf import identity_int, intmat, matmul, zeros_int

Z = FGAbelianGroup(1)
Z2 = FGAbelianGroup(2)
ZERO = FGAbelianGroup(0)


def test_sphere_two():
    S2 = boundary_delta(3)
    assert homology_groups(S2) == {0: Z, 1: ZERO, 2: Z}
    H = cohomology(S2)
    assert {n: g.group for n, g in H.items()} == {0: Z, 1: ZERO, 2: Z}


def test_torus_homology():
    assert homology_groups(torus()) == {0: Z, 1: Z2, 2: Z}


def test_klein_bottle_homology_and_mod_two():
    K = klein_bottle()
    assert homology_groups(K) == {
        0: Z,
        1: FGAbelianGroup(1, (2,)),
        2: ZERO,
    }
    mod2 = homology_groups(K, coefficients=2)
    assert mod2 == {
        0: FGAbelianGroup(0, (2,)),
        1: FGAbelianGroup(0, (2, 2)),
        2: FGAbelianGroup(0, (2,)),
    }


def test_circle_mod_p():
    mod5 = homology_groups(circle(), coefficients=5)
    assert mod5 == {0: FGAbelianGroup(0, (5,)), 1: FGAbelianGroup(0, (5,))}


def test_augmented_chains_of_a_point():
    H = homology(delta(0), augmented=True)
    assert H[0].group == ZERO


def test_class_membership_api():
    H1 = homology(circle())[1]
    assert H1.group == Z
    rep = H1.representatives()[0]
    assert H1.is_cycle(rep)
    assert not H1.is_trivial_class(rep)
    assert H1.coords(rep) == (1,)


def test_torus_cup_table():
    T = torus()
    H1 = cohomology(T)[1]
    H2 = cohomology(T)[2]
    assert H1.group == Z2
    assert H2.group == Z
    a, b = (Cochain(T, 1, v) for v in H1.representatives())
    table = [
        [H2.coords(cup_product(x, y).vector)[0] for y in (a, b)]
        for x in (a, b)
    ]
    assert table == [[0, 1], [-1, 0]]


def test_cup_unit_and_degree_zero():
    T = torus()
    one = unit_cochain(T)
    a = Cochain(T, 1, cohomology(T)[1].representatives()[0])
    assert cup_product(one, a) == a
    assert cup_product(a, one) == a


def test_cup_associativity_exact():
    T = torus()
    c0 = Cochain(T, 0, [3])
    c1 = Cochain(T, 1, [1, -2, 5])
    d1 = Cochain(T, 1, [0, 7, -1])
    lhs = cup_product(cup_product(c0, c1), d1)
    rhs = cup_product(c0, cup_product(c1, d1))
    assert lhs == rhs


def test_cup_requires_matching_data():
    T, K = torus(), klein_bottle()
    a = Cochain(T, 1, [1, 0, 0])
    with pytest.raises(ValueError):
        cup_product(a, Cochain(K, 1, [1, 0, 0]))
    with pytest.raises(ValueError):
        cup_product(a, Cochain(T, 1, [1, 0, 0], modulus=2))


def test_coboundary_squares_to_zero():
    K = klein_bottle()
    c = Cochain(K, 0, [4])
    dd = coboundary(coboundary(c))
    assert all(v == 0 for v in dd.vector)
    assert is_cocycle(coboundary(c))


def test_cohomology_representatives_are_cocycles():
    K = klein_bottle()
    for n, G in cohomology(K, coefficients=2).items():
        for rep in G.representatives():
            assert is_cocycle(Cochain(K, n, rep, modulus=2))


def test_induced_map_of_identity():
    C = cycle(3)
    mats = induced_chain_map(identity_map(C))
    assert mats[0].tolist() == identity_int(3).tolist()
    assert mats[1].tolist() == identity_int(3).tolist()


def test_induced_map_functoriality():
    from helpers import wrap_map

    f = wrap_map(4, 2)
    g = wrap_map(2, 1)
    g = SimplicialMap(f.target, g.target, g.assignment, name=g.name)
    gf = compose(g, f)
    mf, mg, mgf = induced_chain_map(f), induced_chain_map(g), induced_chain_map(gf)
    for n in mgf:
        assert matmul(mg[n], mf[n]).tolist() == mgf[n].tolist()


def test_degenerate_images_are_zero_columns():
    C2, S1 = cycle(2), circle()
    f = SimplicialMap(
        C2,
        S1,
        {
            "v0": nondegenerate("v", 0),
            "v1": nondegenerate("v", 0),
            "e0": nondegenerate("a", 1),
            "e1": SimplexWord("v", (0,), 1),
        },
    )
    assert f.validate() == []
    mats = induced_chain_map(f)
    cols = [tuple(int(v) for v in mats[1][:, j]) for j in range(2)]
    assert sorted(cols) == [(0,), (1,)]


def test_chain_homotopy_identity_vs_constant_on_interval():
    D = delta(1)
    ident = identity_map(D)
    const = SimplicialMap(
        D, D, {"0": nondegenerate("0", 0), "1": nondegenerate("0", 0), "01": SimplexWord("0", (0,), 1)}
    )
    assert const.validate() == []
    C = chain_complex(D)
    f_mats = induced_chain_map(ident)
    g_mats = induced_chain_map(const)
    h_mats = {0: intmat([[0, 1]]), 1: zeros_int(0, 1)}
    ok, msg = chain_homotopy_check(C, C, f_mats, g_mats, h_mats)
    assert ok, msg
    # dropping the homotopy data must break the identity
    bad, msg = chain_homotopy_check(C, C, f_mats, g_mats, {})
    assert not bad
    assert "degree" in msg


def test_truncation_is_flagged_unreliable():
    base = circle()
    T = SimplicialSetPresentation(
        "S1cut", dict(base.cells), dict(base.faces), basepoint="v", truncated_above=1
    )
    H = homology(T)
    assert H[0].reliable
    assert not H[1].reliable

    cut = homology(torus(), max_dim=1)
    assert not cut[1].reliable
    assert cut[0].reliable
