"""Shared builders for the test suite: wrap maps between cycles, random
small presentations, random twistings, and standard group cocycles."""

import random

from kanforge import (
    GroupCochain,
    SimplexWord,
    SimplicialMap,
    SimplicialSetPresentation,
    TwistingFunction,
    circle,
    cycle,
    cyclic,
    klein_four,
    nondegenerate,
    symmetric3,
)


def wrap_map(n, m, name=None):
    """The map C_n -> C_m sending e_i to e_{i mod m}; requires m | n."""
    assert n % m == 0
    source, target = cycle(n), cycle(m)
    assignment = {}
    for i in range(n):
        assignment[f"v{i}"] = nondegenerate(f"v{i % m}", 0)
        assignment[f"e{i}"] = nondegenerate(f"e{i % m}", 1)
    return SimplicialMap(source, target, assignment, name=name or f"wrap{n}to{m}")


def collapse_to_circle(n, name=None):
    """C_n -> S^1: all vertices to v, all edges to a."""
    source, target = cycle(n), circle()
    assignment = {}
    for i in range(n):
        assignment[f"v{i}"] = nondegenerate("v", 0)
        assignment[f"e{i}"] = nondegenerate("a", 1)
    return SimplicialMap(source, target, assignment, name=name or f"collapse{n}")


def rotation_map(n, shift, name=None):
    """The rotation automorphism of C_n by ``shift`` steps."""
    C = cycle(n)
    assignment = {}
    for i in range(n):
        assignment[f"v{i}"] = nondegenerate(f"v{(i + shift) % n}", 0)
        assignment[f"e{i}"] = nondegenerate(f"e{(i + shift) % n}", 1)
    return SimplicialMap(C, C, assignment, name=name or f"rot{shift}")


def random_one_complex(rng, n_vertices=None, n_edges=None, prefix=""):
    """A random presentation with dimensions 0 and 1 only."""
    nv = n_vertices if n_vertices is not None else rng.randint(1, 4)
    ne = n_edges if n_edges is not None else rng.randint(0, 6)
    cells = {0: [f"{prefix}v{i}" for i in range(nv)]}
    faces = {}
    edge_ids = []
    for j in range(ne):
        eid = f"{prefix}e{j}"
        edge_ids.append(eid)
        faces[(eid, 0)] = nondegenerate(f"{prefix}v{rng.randrange(nv)}", 0)
        faces[(eid, 1)] = nondegenerate(f"{prefix}v{rng.randrange(nv)}", 0)
    if edge_ids:
        cells[1] = edge_ids
    return SimplicialSetPresentation(f"{prefix}rand1", cells, faces)


def random_two_complex(rng, prefix=""):
    """A random presentation with some triangles glued along matching edge
    endpoints; always satisfies the simplicial identities by construction."""
    K1 = random_one_complex(rng, n_vertices=rng.randint(1, 3), n_edges=rng.randint(2, 5), prefix=prefix)
    cells = {d: list(K1.cell_ids(d)) for d in K1.dims()}
    faces = dict(K1.faces)
    verts = cells[0]
    edges = cells.get(1, [])

    def edge_words_between(p, q):
        # nondegenerate edges p -> q, plus the degenerate edge when p == q
        out = []
        for e in edges:
            if faces[(e, 1)].base == p and faces[(e, 0)].base == q:
                out.append(nondegenerate(e, 1))
        if p == q:
            out.append(SimplexWord(p, (0,), 1))
        return out

    tri_ids = []
    for t in range(rng.randint(0, 4)):
        p, q, r = (rng.choice(verts) for _ in range(3))
        xs = [w for w in edge_words_between(p, q)]
        ys = [w for w in edge_words_between(q, r)]
        zs = [w for w in edge_words_between(p, r)]
        if not (xs and ys and zs):
            continue
        x, y, z = rng.choice(xs), rng.choice(ys), rng.choice(zs)
        tid = f"{prefix}t{t}"
        tri_ids.append(tid)
        faces[(tid, 0)] = y
        faces[(tid, 1)] = z
        faces[(tid, 2)] = x
    if tri_ids:
        cells[2] = tri_ids
    return SimplicialSetPresentation(f"{prefix}rand2", cells, faces)


def coboundary_twisting(K, group, rng):
    """A twisting from a random vertex potential: the label of an edge from
    p to q is psi(p)^-1 psi(q), which satisfies the 2-cell condition in any
    group."""
    psi = {v: rng.choice(list(group.elements)) for v in K.cell_ids(0)}
    labels = {}
    for e in K.cell_ids(1):
        p = K.face(e, 1).base
        q = K.face(e, 0).base
        labels[e] = group.mul(group.inv(psi[p]), psi[q])
    return TwistingFunction(K, group, labels)


def random_twisting(K, group, rng):
    """Arbitrary labels when the base has no 2-cells, else a coboundary."""
    if K.n_cells(2) == 0:
        labels = {e: rng.choice(list(group.elements)) for e in K.cell_ids(1)}
        return TwistingFunction(K, group, labels)
    return coboundary_twisting(K, group, rng)


def carry_cocycle(n, modulus=0):
    """The degree-2 cocycle of the extension Z/n^2 -> Z/n: c(g^i, g^j) = 1
    when i + j wraps, else 0."""
    G = cyclic(n)
    powers = {}
    g = "g"
    x = G.identity
    for i in range(n):
        powers[x] = i
        x = G.mul(x, g)
    values = {}
    for a in G.elements:
        for b in G.elements:
            if powers[a] + powers[b] >= n:
                values[(a, b)] = 1
    return GroupCochain(G, 2, values, modulus=modulus)


def sign_cocycle_s3(modulus=2):
    """Degree-1 cocycle on S_3 with values 1 on odd permutations."""
    G = symmetric3()
    values = {}
    for g in G.elements:
        # element names are one-line images of 012; parity by inversions
        img = g[1:]
        inv = sum(
            1
            for i in range(3)
            for j in range(i + 1, 3)
            if img[i] > img[j]
        )
        if inv % 2 == 1:
            values[(g,)] = 1
    return GroupCochain(G, 1, values, modulus=modulus)


def some_groups_up_to_6():
    return [cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6), klein_four(), symmetric3()]
