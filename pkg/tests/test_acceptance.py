"""Top-level acceptance checks with pinned tolerances and time budgets.

Each test states its wall-clock budget explicitly and measures it with
time.monotonic.  Tolerances are exact integer equality wherever the
computation is exact arithmetic, and the stated float bounds for the
numerical verifier.
"""

import random
import time

import numpy as np
import pytest

from helpers import (
    collapse_to_circle,
    random_one_complex,
    random_two_complex,
    rotation_map,
    sign_cocycle_s3,
    some_groups_up_to_6,
    wrap_map,
)
from kanforge import (
    Cochain,
    GroupCochain,
    GroupPresentation,
    SimplexWord,
    SimplicialMap,
    TwistingFunction,
    abelianized_pi1,
    boundary_delta,
    characteristic_class,
    circle,
    cohomology,
    compose,
    covering_check,
    cup_product,
    cycle,
    cyclic,
    delta,
    disjoint_union,
    find_filler,
    fibrant_approx_bounded,
    homology,
    induced_chain_map,
    kan_report,
    klein_bottle,
    naturality_check,
    nerve_truncated,
    nondegenerate,
    pi1_presentation,
    point,
    tcp_build,
    torus,
    unit_cochain,
    universal_check,
    w_truncated,
)
from kanforge import smooth
from kanforge.chains import chain_complex, chain_homotopy_check, is_cocycle
from kanforge.charclass import cyclic_identity_cocycle, group_cocycle_check
from kanforge.snf import identity_int, matmul, zeros_int


def test_torus_homology_is_an_exterior_algebra():
    t0 = time.monotonic()
    T = torus()
    H = homology(T)
    assert [str(H[n].group) for n in range(3)] == ["Z", "Z^2", "Z"]
    HC = cohomology(T)
    H1, H2 = HC[1], HC[2]
    a, b = H1.representatives()
    ca = Cochain(T, 1, a)
    cb = Cochain(T, 1, b)
    assert H2.coords(cup_product(ca, ca).vector) == (0,)
    assert H2.coords(cup_product(cb, cb).vector) == (0,)
    ab = H2.coords(cup_product(ca, cb).vector)
    ba = H2.coords(cup_product(cb, ca).vector)
    assert ab in ((1,), (-1,))
    assert ba == (-ab[0],)
    assert time.monotonic() - t0 < 1.0


def test_wrap_maps_multiply_first_homology_by_their_degree():
    t0 = time.monotonic()
    S1 = circle()
    H1_target = homology(S1)[1]
    for n in range(2, 13):
        f = collapse_to_circle(n)
        # rebuild over the shared circle instance so coords line up
        f = SimplicialMap(f.source, S1, f.assignment)
        M = induced_chain_map(f)
        rep = homology(f.source)[1].representatives()[0]
        image = matmul(M[1], rep.reshape(-1, 1))[:, 0]
        assert tuple(H1_target.coords(image)) in ((n,), (-n,))
    assert time.monotonic() - t0 < 1.0


def test_universal_bundles_are_contractible_kan_and_classify():
    t0 = time.monotonic()
    for n in (2, 3):
        W = w_truncated(cyclic(n), 4)
        ok, lines = universal_check(W, 4)
        assert ok, lines
        assert "components=1" in lines
        for k in (1, 2, 3):
            assert f"H{k}=0" in lines
        assert lines[-1] == "unfilled horns through dim 3: 0"
    nerve = nerve_truncated(cyclic(2), 4)
    HC = cohomology(nerve, coefficients=2)
    for k in range(4):
        assert str(HC[k].group) == "Z/2"
        assert HC[k].reliable
    assert time.monotonic() - t0 < 10.0


def test_double_cover_of_the_circle_and_its_class():
    t0 = time.monotonic()
    G = cyclic(2)
    twist = TwistingFunction(circle(), G, {"a": "g"})
    bundle = tcp_build(twist)

    # the total is the 2-cycle: exhibit the isomorphism explicitly
    to_c2 = {
        "(v|e)": nondegenerate("v0", 0),
        "(v|g)": nondegenerate("v1", 0),
        "(a|g)": nondegenerate("e0", 1),
        "(a|e)": nondegenerate("e1", 1),
    }
    iso = SimplicialMap(bundle.total, cycle(2), to_c2)
    assert iso.validate() == []
    assert sorted(w.base for w in iso.target.simplices(0)) == ["v0", "v1"]
    assert len(set(to_c2.values())) == len(to_c2)

    ok, problems = covering_check(bundle.projection, 2)
    assert ok, problems

    cls = characteristic_class(twist, cyclic_identity_cocycle(G))
    assert not cls.is_zero
    assert str(cls.cohomology.group) == "Z/2"
    assert cls.describe() == "H^1 class: nonzero (Z/2)"

    # same pipeline on the orientation double cover of the Klein bottle
    K = klein_bottle()
    G2 = cyclic(2)
    orient = TwistingFunction(K, G2, {"a": "e", "b": "g", "c": "g"})
    assert orient.validate() == []
    cover = tcp_build(orient)
    ok, problems = covering_check(cover.projection, 2)
    assert ok, problems
    kcls = characteristic_class(orient, cyclic_identity_cocycle(G2))
    assert not kcls.is_zero
    assert str(homology(K)[1].group) == "Z + Z/2"
    assert time.monotonic() - t0 < 5.0


def _random_cocycle(rng):
    """A genuine group cocycle of degree 1 or 2 over a group of order <= 6."""
    kind = rng.choice(["cyclic-id", "carry", "sign", "coboundary"])
    if kind == "cyclic-id":
        G = cyclic(rng.randint(2, 6))
        return cyclic_identity_cocycle(G)
    if kind == "carry":
        n = rng.randint(2, 4)
        G = cyclic(n)
        powers = {}
        x = G.identity
        for i in range(n):
            powers[x] = i
            x = G.mul(x, "g")
        values = {
            (a, b): 1
            for a in G.elements
            for b in G.elements
            if powers[a] + powers[b] >= n
        }
        return GroupCochain(G, 2, values, modulus=rng.choice([0, 2, n]))
    if kind == "sign":
        return sign_cocycle_s3()
    # the coboundary of a random normalized 1-cochain is always a 2-cocycle
    G = rng.choice(some_groups_up_to_6())
    m = rng.choice([2, 3, 4])
    b = {x: rng.randrange(m) for x in G.elements if x != G.identity}
    b[G.identity] = 0
    values = {}
    for g in G.elements:
        for h in G.elements:
            v = (b[h] - b[G.mul(g, h)] + b[g]) % m
            if v:
                values[(g, h)] = v
    return GroupCochain(G, 2, values, modulus=m)


def test_characteristic_classes_are_natural_under_pullback():
    t0 = time.monotonic()
    rng = random.Random(2024)
    checked = 0
    while checked < 20:
        c = _random_cocycle(rng)
        assert group_cocycle_check(c)
        G = c.group
        f = rng.choice(
            [
                wrap_map(4, 2),
                wrap_map(6, 3),
                wrap_map(6, 2),
                wrap_map(8, 4),
                rotation_map(5, 2),
                rotation_map(6, 1),
                collapse_to_circle(4),
                collapse_to_circle(5),
            ]
        )
        # bases here have no 2-cells, so any labeling is a twisting
        labels = {e: rng.choice(list(G.elements)) for e in f.target.cell_ids(1)}
        twist = TwistingFunction(f.target, G, labels)
        assert twist.validate() == []
        report = naturality_check(f, twist, c)
        assert report.ok, report.details
        checked += 1
    assert time.monotonic() - t0 < 30.0


def test_bounded_fibrant_approximation_of_the_circle():
    t0 = time.monotonic()
    K = circle()
    stage_start_horns = kan_report(K, 2)
    assert len(stage_start_horns) == 3
    result = fibrant_approx_bounded(K, max_dim=2, stages=2)
    L = result.complex

    # the vertex set is untouched
    assert [w.base for w in L.simplices(0)] == [w.base for w in K.simplices(0)]
    assert L.cell_ids(0) == K.cell_ids(0)

    # every 2-horn that existed at stage start has a filler afterwards
    for h in stage_start_horns:
        assert find_filler(L, h) is not None
    for h, _z, _u in result.attached_per_stage[0]:
        assert find_filler(L, h) is not None

    ab = abelianized_pi1(L)
    assert str(ab) == "Z"
    assert time.monotonic() - t0 < 10.0


def test_horn_reports_flag_the_circle_and_certify_the_classifying_complex():
    t0 = time.monotonic()
    missing = kan_report(circle(), 2)
    assert missing
    witnesses = {(h.p, h.k): h.faces for h in missing}
    assert (2, 1) in witnesses
    assert witnesses[(2, 1)][0] == nondegenerate("a", 1)
    assert witnesses[(2, 1)][2] == nondegenerate("a", 1)

    wbar = nerve_truncated(cyclic(2), 4)
    assert kan_report(wbar, 3) == []
    assert time.monotonic() - t0 < 5.0


def test_edge_path_groups_of_the_standard_complexes():
    t0 = time.monotonic()
    assert str(pi1_presentation(circle())) == "<a | >"
    assert str(abelianized_pi1(circle())) == "Z"

    wbar = nerve_truncated(cyclic(2), 3)
    assert str(pi1_presentation(wbar).abelianization()[0]) == "Z/2"

    assert pi1_presentation(delta(2)).is_trivial

    assert str(abelianized_pi1(torus())) == "Z^2"

    for K in (circle(), cycle(5), torus(), klein_bottle(), delta(2), boundary_delta(2)):
        H = homology(K)
        want = str(H[1].group) if 1 in H else "0"
        assert str(abelianized_pi1(K)) == want

    # discrete Heisenberg group from its standard presentation
    heis = GroupPresentation(
        ["x", "y", "z"],
        [
            (("x", 1), ("y", 1), ("x", -1), ("y", -1), ("z", -1)),
            (("x", 1), ("z", 1), ("x", -1), ("z", -1)),
            (("y", 1), ("z", 1), ("y", -1), ("z", -1)),
        ],
    )
    ab, coords = heis.abelianization()
    assert str(ab) == "Z^2"
    assert coords["z"] == (0, 0)
    assert sorted([coords["x"], coords["y"]]) == [(0, 1), (1, 0)]
    assert time.monotonic() - t0 < 5.0


def test_smooth_constructions_on_a_fine_grid():
    t0 = time.monotonic()
    eps0 = 0.2
    pts = smooth.barycentric_grid(200)

    # retraction onto the horn: lands exactly, idempotent to 1e-10
    image = smooth.retraction_r(pts, eps0)
    assert float(np.max(smooth.horn_membership_error(image))) == 0.0
    again = smooth.retraction_r(image, eps0)
    assert float(np.max(np.abs(again - image))) <= 1e-10

    # vertex collapse: exact on the sampled vertex zones, identity outside
    collapsed = smooth.psi2(pts, eps0)
    for i in range(3):
        zone = smooth.vertex_zone(pts, i, eps0 / 2.0)
        assert np.any(zone)
        vertex = np.zeros(3)
        vertex[i] = 1.0
        assert float(np.max(np.abs(collapsed[zone] - vertex))) == 0.0
    outside = smooth.outside_all_supports(pts, eps0)
    assert np.any(outside)
    assert float(np.max(np.abs(collapsed[outside] - pts[outside]))) <= 1e-12

    # F on the three faces: identity, reparametrization, identity
    t = np.linspace(0.0, 1.0, 201)
    for i in (0, 2):
        edge = smooth.coface(i, t)
        assert float(np.max(np.abs(smooth.map_F(edge) - edge))) <= 1e-12
    mid = smooth.map_F(smooth.coface(1, t))
    want = smooth.coface(1, smooth.bump_mu(t))
    assert float(np.max(np.abs(mid - want))) <= 1e-12

    # taming composite: first face constant, last face the original loop,
    # middle face tame near its endpoints
    def sigma(s):
        s = np.asarray(s, dtype=float)
        return np.stack([np.cos(2 * np.pi * s), np.sin(2 * np.pi * s)], axis=-1)

    comp = smooth.taming_composite(sigma)
    assert float(np.max(np.abs(comp(smooth.coface(0, t)) - sigma(1.0)))) <= 1e-12
    assert float(np.max(np.abs(comp(smooth.coface(2, t)) - sigma(t)))) <= 1e-12
    assert smooth.tameness_check(t, comp(smooth.coface(1, t)), smooth.MU_WINDOW[0])

    # extension beyond the triangle: frozen at vertices on the wedges,
    # constant along rays over the strips
    def collapsed_map(x):
        return smooth.psi2(np.asarray(x, dtype=float), eps0)

    ext = smooth.sigma_extension(collapsed_map, eps0=eps0)
    for i in range(3):
        vertex = np.zeros(3)
        vertex[i] = 1.0
        others = [m for m in range(3) if m != i]
        for a in (0.2, 0.8, 1.5):
            for b in (0.3, 1.1):
                z = np.array(vertex)
                z[others[0]] = -a
                z[others[1]] = -b
                z[i] = 1.0 + a + b
                assert float(np.max(np.abs(ext(z) - collapsed_map(vertex)))) <= 1e-12
        for frac in (0.25, 0.5, 0.8):
            q = np.zeros(3)
            q[others[0]] = frac
            q[others[1]] = 1.0 - frac
            ray_values = []
            for scale in (1.2, 1.7, 2.5):
                z = vertex + scale * (q - vertex)
                ray_values.append(ext(z))
            for v in ray_values:
                assert float(np.max(np.abs(v - collapsed_map(q)))) <= 1e-12
    assert time.monotonic() - t0 < 60.0


def _terminal_map(K, P):
    assignment = {}
    for d in K.dims():
        for x in K.cell_ids(d):
            degens = tuple(range(d - 1, -1, -1))
            assignment[x] = SimplexWord("*", degens, d)
    return SimplicialMap(K, P, assignment)


def test_structural_suite_over_fifty_random_presentations():
    t0 = time.monotonic()
    for seed in range(50):
        rng = random.Random(seed)
        A = random_two_complex(rng, prefix="a")
        B = random_one_complex(rng, prefix="b")
        assert A.validate() == []
        assert B.validate() == []

        C = chain_complex(A)
        for n in sorted(C.boundaries):
            if n + 1 in C.boundaries:
                assert not matmul(C.boundaries[n], C.boundaries[n + 1]).any()

        # functoriality through an inclusion and the terminal map; the
        # prefixes keep ids disjoint, so the union does not rename
        U = disjoint_union(A, B)
        incl = SimplicialMap(
            A,
            U,
            {x: nondegenerate(x, d) for d in A.dims() for x in A.cell_ids(d)},
        )
        P = point()
        term = _terminal_map(U, P)
        top = max(U.dims())
        Mi = induced_chain_map(incl)
        Mt = induced_chain_map(term, max_dim=top)
        Mc = induced_chain_map(compose(term, incl), max_dim=top)
        for d in A.dims():
            assert matmul(Mt[d], Mi[d]).tolist() == Mc[d].tolist()

        # cup product at class level: unital, associative
        HC = cohomology(A, coefficients=2)
        one = unit_cochain(A, modulus=2)
        assert is_cocycle(one)
        top = max(A.dims())
        if 1 in HC and top >= 1:
            for vec in HC[1].representatives():
                b = Cochain(A, 1, vec, modulus=2)
                assert HC[1].coords(cup_product(one, b).vector) == HC[1].coords(vec)
        if top >= 2:
            for avec in HC[0].representatives():
                ac = Cochain(A, 0, avec, modulus=2)
                for bvec in HC[1].representatives():
                    bc = Cochain(A, 1, bvec, modulus=2)
                    for cvec in HC[1].representatives():
                        cc = Cochain(A, 1, cvec, modulus=2)
                        lhs = cup_product(cup_product(ac, bc), cc).vector
                        rhs = cup_product(ac, cup_product(bc, cc)).vector
                        assert HC[2].coords(lhs) == HC[2].coords(rhs)

        # chain homotopy verifier: accepts the zero homotopy between equal
        # maps, rejects a corrupted one
        ident = {n: identity_int(C.size(n)) for n in range(C.top + 1)}
        h0 = {n: zeros_int(C.size(n + 1), C.size(n)) for n in range(C.top + 1)}
        ok, msg = chain_homotopy_check(C, C, ident, ident, h0)
        assert ok, msg
        if C.size(0):
            bad = {n: M.copy() for n, M in ident.items()}
            bad[0][0, 0] += 1
            ok, msg = chain_homotopy_check(C, C, bad, ident, h0)
            assert not ok
            assert "degree 0" in msg
    assert time.monotonic() - t0 < 60.0
