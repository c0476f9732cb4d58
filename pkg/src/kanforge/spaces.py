"""Standard complexes and constructions: simplices, horns, circles, products,
quotients, disjoint unions.

Products use the nondegenerate-pair description: an n-simplex of K x L is a
pair (u, v) of n-simplex words with no common degeneracy index.  Quotients
come in two flavors, collapse of a subcomplex to a point and quotient by a
free group action.
"""

from . import limits
from .presentation import SimplicialMap, SimplicialSetPresentation
from .words import SimplexWord, apply_degeneracy, nondegenerate, word_token


def _vertex_tuple_id(vertices):
    return "".join(str(v) for v in vertices)


def delta(p, name=None):
    """The standard p-simplex."""
    limits.check_dim(p, "delta")
    if p > 9:
        raise ValueError("delta identifiers use single digits; p <= 9 required")
    cells = {}
    faces = {}
    from itertools import combinations

    for d in range(p + 1):
        cells[d] = [_vertex_tuple_id(c) for c in combinations(range(p + 1), d + 1)]
    for d in range(1, p + 1):
        for c in combinations(range(p + 1), d + 1):
            cid = _vertex_tuple_id(c)
            for i in range(d + 1):
                sub = c[:i] + c[i + 1:]
                faces[(cid, i)] = nondegenerate(_vertex_tuple_id(sub), d - 1)
    return SimplicialSetPresentation(name or f"Delta{p}", cells, faces, basepoint="0")


def _full_subcomplex(K, keep, name):
    cells = {d: [x for x in ids if x in keep] for d, ids in K.cells.items()}
    faces = {key: w for key, w in K.faces.items() if key[0] in keep}
    return SimplicialSetPresentation(name, cells, faces, basepoint=K.basepoint if K.basepoint in keep else None)


def boundary_delta(p, name=None):
    """The boundary of the standard p-simplex."""
    if p < 1:
        raise ValueError("boundary needs p >= 1")
    D = delta(p)
    top = _vertex_tuple_id(range(p + 1))
    keep = {x for _, x in D.all_cells() if x != top}
    return _full_subcomplex(D, keep, name or f"dDelta{p}")


def horn(p, k, name=None):
    """The horn: all faces of Delta[p] except the k-th and the interior."""
    if p < 1:
        raise ValueError("horn needs p >= 1")
    if not 0 <= k <= p:
        raise ValueError(f"horn index {k} out of range for p={p}")
    D = delta(p)
    top = _vertex_tuple_id(range(p + 1))
    missing = _vertex_tuple_id([v for v in range(p + 1) if v != k])
    keep = {x for _, x in D.all_cells() if x not in (top, missing)}
    return _full_subcomplex(D, keep, name or f"Horn{p}_{k}")


def circle(name="S1"):
    """One vertex, one edge glued at both ends."""
    v = nondegenerate("v", 0)
    return SimplicialSetPresentation(
        name,
        {0: ["v"], 1: ["a"]},
        {("a", 0): v, ("a", 1): v},
        basepoint="v",
    )


def cycle(n, name=None):
    """An n-gon: vertices v0..v{n-1}, edge ei from vi to v{i+1 mod n}."""
    if n < 1:
        raise ValueError("cycle needs n >= 1")
    cells = {0: [f"v{i}" for i in range(n)], 1: [f"e{i}" for i in range(n)]}
    faces = {}
    for i in range(n):
        faces[(f"e{i}", 1)] = nondegenerate(f"v{i}", 0)
        faces[(f"e{i}", 0)] = nondegenerate(f"v{(i + 1) % n}", 0)
    return SimplicialSetPresentation(name or f"C{n}", cells, faces, basepoint="v0")


def interval(name="Delta1"):
    return delta(1, name=name)


def point(name="pt", vertex="*"):
    return SimplicialSetPresentation(name, {0: [vertex]}, {}, basepoint=vertex)


# -- products ---------------------------------------------------------------


def _pair_id(u, v):
    return f"({word_token(u)}|{word_token(v)})"


class ProductPresentation(SimplicialSetPresentation):
    """Product complex remembering its factors and pair decomposition."""

    def __init__(self, left, right, pairs, name, **kw):
        self.left = left
        self.right = right
        # pairs: cell id -> (left word, right word)
        self.pair_decomposition = dict(pairs)
        self._pair_ids = {(u, v): cid for cid, (u, v) in pairs.items()}
        cells, faces = kw.pop("cells"), kw.pop("faces")
        super().__init__(name, cells, faces, **kw)

    def pair_word(self, u, v):
        """Canonical word of the simplex (u, v); u, v words of equal dimension."""
        if u.dim != v.dim:
            raise ValueError("pair components must have equal dimension")
        u, v, extracted = _extract_common(self.left, self.right, u, v)
        key = (u, v)
        if key not in self._pair_ids:
            raise KeyError(f"pair {word_token(u)}|{word_token(v)} exceeds the stored product range")
        w = nondegenerate(self._pair_ids[key], u.dim)
        for j in reversed(extracted):
            w = self.degeneracy_of_word(w, j)
        return w

    def left_word(self, w):
        u, _ = self.pair_decomposition[w.base]
        for j in reversed(w.degens):
            u = self.left.degeneracy_of_word(u, j)
        return u

    def right_word(self, w):
        _, v = self.pair_decomposition[w.base]
        for j in reversed(w.degens):
            v = self.right.degeneracy_of_word(v, j)
        return v

    def projection_left(self):
        assignment = {cid: self.pair_decomposition[cid][0] for _, cid in self.all_cells()}
        return SimplicialMap(self, self.left, assignment, name=f"{self.name}->L")

    def projection_right(self):
        assignment = {cid: self.pair_decomposition[cid][1] for _, cid in self.all_cells()}
        return SimplicialMap(self, self.right, assignment, name=f"{self.name}->R")


def _extract_common(K, L, u, v):
    """Strip shared degeneracy indices: (u, v) = s_J (u', v') with J the
    extraction sequence, largest shared index first."""
    extracted = []
    while True:
        common = set(u.degens) & set(v.degens)
        if not common:
            return u, v, extracted
        j = max(common)
        u = K.face_of_word(u, j + 1)
        v = L.face_of_word(v, j + 1)
        extracted.append(j)


def product(K, L, max_dim=None, name=None):
    """The product simplicial set of two presentations."""
    from itertools import combinations

    full = K.top_dim + L.top_dim
    top = full if max_dim is None else min(max_dim, full)
    limits.check_dim(top, "product")
    name = name or f"{K.name}x{L.name}"

    pairs = {}
    cells = {}
    for n in range(top + 1):
        ids = []
        for p in sorted(K.cells):
            if p > n:
                break
            for q in sorted(L.cells):
                if q > n or (n - p) + (n - q) > n:
                    continue
                for x in K.cells[p]:
                    for y in L.cells[q]:
                        # disjoint degeneracy supports A, B inside {0..n-1}
                        for a_set in combinations(range(n), n - p):
                            rest = [i for i in range(n) if i not in a_set]
                            for b_set in combinations(rest, n - q):
                                u = SimplexWord(x, tuple(reversed(a_set)), n)
                                v = SimplexWord(y, tuple(sorted(b_set, reverse=True)), n)
                                cid = _pair_id(u, v)
                                pairs[cid] = (u, v)
                                ids.append(cid)
        if ids:
            cells[n] = ids
        limits.check_simplex_count(len(pairs), "product")

    faces = {}
    # face of a pair: componentwise, then re-extract shared degeneracies
    def pair_word_raw(u, v):
        u2, v2, extracted = _extract_common(K, L, u, v)
        w = nondegenerate(_pair_id(u2, v2), u2.dim)
        for j in reversed(extracted):
            w = apply_degeneracy(w, j)
        return w

    for cid, (u, v) in pairs.items():
        n = u.dim
        if n == 0:
            continue
        for i in range(n + 1):
            fu = K.face_of_word(u, i)
            fv = L.face_of_word(v, i)
            faces[(cid, i)] = pair_word_raw(fu, fv)

    basepoint = None
    if K.basepoint and L.basepoint:
        basepoint = _pair_id(nondegenerate(K.basepoint, 0), nondegenerate(L.basepoint, 0))
    truncated = top if top < full else None
    return ProductPresentation(
        K, L, pairs, name, cells=cells, faces=faces, basepoint=basepoint, truncated_above=truncated
    )


def torus(name="T2"):
    return product(circle(), circle(), name=name)


def klein_bottle(name="K"):
    """Two-triangle model on one vertex and edges a, b, c = a*b.

    The triangles read ab = c and ca = b along edge paths, so the loop b
    conjugates a to its inverse; H_1 is Z + Z/2.
    """
    v = nondegenerate("v", 0)

    def e(cid):
        return nondegenerate(cid, 1)

    faces = {}
    for edge in ("a", "b", "c"):
        faces[(edge, 0)] = v
        faces[(edge, 1)] = v
    for cell, (f0, f1, f2) in (("U", ("b", "c", "a")), ("V", ("a", "b", "c"))):
        faces[(cell, 0)] = e(f0)
        faces[(cell, 1)] = e(f1)
        faces[(cell, 2)] = e(f2)
    return SimplicialSetPresentation(
        name=name,
        cells={0: ("v",), 1: ("a", "b", "c"), 2: ("U", "V")},
        faces=faces,
        basepoint="v",
    )


# -- quotients ---------------------------------------------------------------


def _degenerate_point_word(vertex, dim):
    return SimplexWord(vertex, tuple(range(dim - 1, -1, -1)), dim)


def quotient_by_subcomplex(K, collapse_ids, name=None, basepoint_name="*"):
    """Collapse a subcomplex to a single vertex.

    Returns (quotient, projection).  ``collapse_ids`` must be closed under
    faces; the collapsed cells are replaced by a fresh basepoint vertex.
    """
    A = set(collapse_ids)
    for x in A:
        if not K.has_cell(x):
            raise ValueError(f"collapse set mentions unknown cell {x!r}")
    for x in A:
        dim = K.dim_of(x)
        for i in range(dim + 1) if dim >= 1 else ():
            w = K.face(x, i)
            if w.base not in A:
                raise ValueError(
                    f"collapse set is not a subcomplex: face d_{i} {x} = {word_token(w)} leaves it"
                )
    name = name or f"{K.name}/~"
    if not A:
        proj_src = K
        quotient = SimplicialSetPresentation(name, {d: list(ids) for d, ids in K.cells.items()},
                                             dict(K.faces), basepoint=K.basepoint,
                                             truncated_above=K.truncated_above)
        proj = SimplicialMap(K, quotient, {x: nondegenerate(x, d) for d, x in K.all_cells()})
        return quotient, proj

    bp = basepoint_name
    while K.has_cell(bp):
        bp += "*"

    def image_word(w):
        if w.base in A:
            return _degenerate_point_word(bp, w.dim) if w.dim else nondegenerate(bp, 0)
        return w

    cells = {0: [bp] + [x for x in K.cell_ids(0) if x not in A]}
    for d in K.dims():
        if d == 0:
            continue
        survivors = [x for x in K.cells[d] if x not in A]
        if survivors:
            cells[d] = survivors
    faces = {}
    for (x, i), w in K.faces.items():
        if x in A:
            continue
        faces[(x, i)] = image_word(w)
    quotient = SimplicialSetPresentation(name, cells, faces, basepoint=bp,
                                         truncated_above=K.truncated_above)
    assignment = {}
    for d, x in K.all_cells():
        assignment[x] = image_word(nondegenerate(x, d))
    proj = SimplicialMap(K, quotient, assignment, name=f"{K.name}->{name}")
    return quotient, proj


def quotient_by_free_action(K, group, action, name=None):
    """Quotient by a free action of a finite group.

    ``action[g][cell]`` gives the translated cell for every group element g
    (the identity may be omitted).  The action must be by simplicial
    automorphisms and free on nondegenerate cells; violations raise.
    Returns (quotient, projection).
    """
    e = group.identity
    table = {}
    ident = {x: x for _, x in K.all_cells()}
    for g in group.elements:
        if g == e:
            table[g] = ident
        else:
            if g not in action:
                raise ValueError(f"action missing for group element {g!r}")
            table[g] = dict(action[g])

    def act_word(g, w):
        moved = table[g].get(w.base)
        if moved is None:
            raise ValueError(f"action of {g!r} undefined on cell {w.base!r}")
        return SimplexWord(moved, w.degens, w.dim)

    for g in group.elements:
        if g == e:
            continue
        mapped = table[g]
        for d, x in K.all_cells():
            y = mapped.get(x)
            if y is None:
                raise ValueError(f"action of {g!r} undefined on cell {x!r}")
            if not K.has_cell(y) or K.dim_of(y) != d:
                raise ValueError(f"action of {g!r} sends {x!r} to invalid cell {y!r}")
            if y == x:
                raise ValueError(f"action is not free: {g!r} fixes {x!r}")
            if d >= 1:
                for i in range(d + 1):
                    if act_word(g, K.face(x, i)) != K.face(y, i):
                        raise ValueError(f"action of {g!r} does not commute with d_{i} at {x!r}")
    for g in group.elements:
        for h in group.elements:
            gh = group.mul(g, h)
            for _, x in K.all_cells():
                if table[h][table[g][x]] != table[gh][x]:
                    raise ValueError(f"action is not a homomorphism at ({g!r}, {h!r}, {x!r})")

    # orbit representative: the earliest cell in declaration order
    order_index = {}
    for d in K.dims():
        for pos, x in enumerate(K.cells[d]):
            order_index[x] = pos
    rep = {}
    for _, x in K.all_cells():
        orbit = [table[g][x] for g in group.elements]
        rep[x] = min(orbit, key=lambda c: order_index[c])

    name = name or f"{K.name}/{group.name}"
    cells = {}
    for d in K.dims():
        reps = [x for x in K.cells[d] if rep[x] == x]
        if reps:
            cells[d] = reps
    faces = {}
    for d in K.dims():
        if d == 0:
            continue
        for x in cells.get(d, []):
            for i in range(d + 1):
                w = K.face(x, i)
                faces[(x, i)] = SimplexWord(rep[w.base], w.degens, w.dim)
    bp = rep[K.basepoint] if K.basepoint else None
    quotient = SimplicialSetPresentation(name, cells, faces, basepoint=bp,
                                         truncated_above=K.truncated_above)
    assignment = {x: SimplexWord(rep[x], (), d) for d, x in K.all_cells()}
    proj = SimplicialMap(K, quotient, assignment, name=f"{K.name}->{name}")
    return quotient, proj


def disjoint_union(K, L, name=None):
    """Coproduct; identifiers are prefixed only if the two sets collide."""
    k_ids = set(x for _, x in K.all_cells())
    l_ids = set(x for _, x in L.all_cells())
    clash = bool(k_ids & l_ids)
    def kid(x):
        return f"A.{x}" if clash else x
    def lid(x):
        return f"B.{x}" if clash else x
    cells = {}
    for d in sorted(set(K.dims()) | set(L.dims())):
        ids = [kid(x) for x in K.cell_ids(d)] + [lid(x) for x in L.cell_ids(d)]
        if ids:
            cells[d] = ids
    faces = {}
    for (x, i), w in K.faces.items():
        faces[(kid(x), i)] = SimplexWord(kid(w.base), w.degens, w.dim)
    for (x, i), w in L.faces.items():
        faces[(lid(x), i)] = SimplexWord(lid(w.base), w.degens, w.dim)
    bp = kid(K.basepoint) if K.basepoint else None
    trunc = None
    pair = [t for t in (K.truncated_above, L.truncated_above) if t is not None]
    if pair:
        trunc = min(pair)
    return SimplicialSetPresentation(name or f"{K.name}+{L.name}", cells, faces,
                                     basepoint=bp, truncated_above=trunc)


def standard(kind, **params):
    """Dispatcher used by the command line."""
    if kind == "delta":
        return delta(params["p"])
    if kind == "boundary":
        return boundary_delta(params["p"])
    if kind == "horn":
        return horn(params["p"], params["k"])
    if kind == "circle":
        return circle()
    if kind == "cycle":
        return cycle(params["n"])
    if kind == "point":
        return point()
    raise ValueError(f"unknown standard complex kind {kind!r}")
