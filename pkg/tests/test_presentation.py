"""Presentation validation and simplicial maps."""

import pytest

from kanforge import (
    SimplexWord,
    SimplicialMap,
    SimplicialSetPresentation,
    boundary_delta,
    circle,
    compose,
    cycle,
    delta,
    identity_map,
    nondegenerate,
)


def test_standard_complexes_validate():
    for K in (delta(0), delta(1), delta(2), delta(3), boundary_delta(2), boundary_delta(3), circle(), cycle(5)):
        assert K.validate() == []


def test_duplicate_ids_rejected():
    with pytest.raises(ValueError):
        SimplicialSetPresentation("bad", {0: ["x"], 1: ["x"]}, {("x", 0): nondegenerate("x", 0), ("x", 1): nondegenerate("x", 0)})


def test_missing_face_reported():
    v = nondegenerate("v", 0)
    K = SimplicialSetPresentation("bad", {0: ["v"], 1: ["e"]}, {("e", 0): v})
    problems = K.validate()
    assert any("missing face" in p and "d_1" in p for p in problems)


def test_identity_violation_reported():
    # 2-cell whose faces do not satisfy d_0 d_2 = d_1 d_0
    v = nondegenerate("v", 0)
    w = nondegenerate("w", 0)
    faces = {
        ("e", 0): v, ("e", 1): v,
        ("f", 0): w, ("f", 1): v,
        ("T", 0): nondegenerate("e", 1),
        ("T", 1): nondegenerate("e", 1),
        ("T", 2): nondegenerate("f", 1),
    }
    K = SimplicialSetPresentation("bad", {0: ["v", "w"], 1: ["e", "f"], 2: ["T"]}, faces)
    problems = K.validate()
    assert any("identity failure" in p for p in problems)


def test_face_of_degenerate_word():
    K = circle()
    a = nondegenerate("a", 1)
    s0a = K.degeneracy_of_word(a, 0)
    assert K.face_of_word(s0a, 0) == a
    assert K.face_of_word(s0a, 1) == a
    # d_2 s_0 a = s_0 d_1 a = s_0 v
    assert K.face_of_word(s0a, 2) == SimplexWord("v", (0,), 1)


def test_vertices_of_edges():
    K = cycle(3)
    e1 = nondegenerate("e1", 1)
    assert K.vertex_of_word(e1, 0) == "v1"
    assert K.vertex_of_word(e1, 1) == "v2"


def test_simplices_enumeration_deterministic():
    K = circle()
    twice = [list(K.simplices(2)) for _ in range(2)]
    assert twice[0] == twice[1]
    # dimension 2 over (v, a): s1s0(v) plus s0(a), s1(a)
    assert len(twice[0]) == 3


def test_map_validation_catches_face_mismatch():
    C2 = cycle(2)
    S1 = circle()
    # send e0 to a but the vertices inconsistently
    assignment = {
        "v0": nondegenerate("v", 0),
        "v1": nondegenerate("v", 0),
        "e0": nondegenerate("a", 1),
        "e1": SimplexWord("v", (0,), 1),
    }
    f = SimplicialMap(C2, S1, assignment)
    assert f.validate() == []

    bad = SimplicialMap(
        cycle(3),
        cycle(3),
        {
            "v0": nondegenerate("v0", 0),
            "v1": nondegenerate("v1", 0),
            "v2": nondegenerate("v2", 0),
            "e0": nondegenerate("e1", 1),  # e0 runs v0->v1 but e1 runs v1->v2
            "e1": nondegenerate("e1", 1),
            "e2": nondegenerate("e2", 1),
        },
    )
    assert bad.validate() != []


def test_identity_and_composition():
    from helpers import wrap_map

    f = wrap_map(4, 2)
    C4 = f.source  # compose insists on shared instances, not equal copies
    ident = identity_map(C4)
    assert ident.validate() == []
    h = compose(f, ident)  # f after id
    assert h.validate() == []
    assert all(h.map_word(C4.word(c)) == f.map_word(C4.word(c)) for _, c in C4.all_cells())


def test_map_word_degenerate_images():
    from helpers import collapse_to_circle

    f = collapse_to_circle(3)
    w = f.source.word("e1")
    s0w = f.source.degeneracy_of_word(w, 0)
    image = f.map_word(s0w)
    assert image.dim == 2
    assert image.base == "a"
