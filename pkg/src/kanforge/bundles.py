"""Twisting functions, classifying complexes, twisted cartesian products,
and covering checks for discrete structure groups.

For a discrete group the classifying complex is its nerve: n-cells are
n-tuples of non-identity elements, the inner faces multiply neighbours.  A
twisting function labels the edges of a base complex so that every
2-simplex satisfies label(d_1) = label(d_2) * label(d_0); the twisted
cartesian product then glues base x group with the last face deflected by
the label of the last edge, acting on the fiber coordinate from the left so
that the right translation action stays simplicial for non-abelian groups.
"""

from . import limits
from .chains import homology
from .homotopy import pi0
from .kan import kan_report
from .presentation import SimplicialMap, SimplicialSetPresentation, compose
from .words import SimplexWord, apply_degeneracy, nondegenerate, word_token


class TwistingFunction:
    """Edge labels in a group satisfying the 2-simplex cocycle condition."""

    def __init__(self, base, group, labels):
        self.base = base
        self.group = group
        self.labels = dict(labels)

    def label_of_cell(self, edge):
        try:
            return self.labels[edge]
        except KeyError:
            raise KeyError(f"no label on edge {edge!r}")

    def label_of_word(self, w):
        if w.dim != 1:
            raise ValueError("labels live on 1-simplices")
        if w.is_degenerate:
            return self.group.identity
        return self.label_of_cell(w.base)

    def validate(self):
        problems = []
        G = self.group
        for e in self.base.cell_ids(1):
            if e not in self.labels:
                problems.append(f"unlabeled edge {e}")
                continue
            g = self.labels[e]
            if G.is_finite and g not in set(G.elements):
                problems.append(f"label of {e} is not a group element: {g!r}")
        for e in self.labels:
            if not self.base.has_cell(e) or self.base.dim_of(e) != 1:
                problems.append(f"label on non-edge {e!r}")
        if problems:
            return problems
        for t in self.base.cell_ids(2):
            lhs = self.label_of_word(self.base.face(t, 1))
            rhs = G.mul(self.label_of_word(self.base.face(t, 2)),
                        self.label_of_word(self.base.face(t, 0)))
            if lhs != rhs:
                problems.append(
                    f"cocycle failure on 2-simplex {t}: label(d1) != label(d2)*label(d0)"
                )
        return problems

    def assert_valid(self):
        problems = self.validate()
        if problems:
            raise ValueError("invalid twisting function: " + "; ".join(problems))
        return self


# -- the nerve as classifying complex ----------------------------------------


def _tuple_id(tup):
    return "[" + ",".join(tup) + "]"


def nerve_truncated(group, max_dim, name=None):
    """The nerve of a discrete group through dimension max_dim.

    Nondegenerate n-cells are n-tuples of non-identity elements; the word
    of an arbitrary tuple reinserts identities as degeneracies.  The result
    is marked truncated (for a nontrivial group the nerve goes on forever).
    """
    if not group.is_finite:
        raise ValueError("only finite groups can be tabulated; label maps handle infinite ones")
    limits.check_dim(max_dim, "nerve")
    for g in group.elements:
        if "[" in g or "]" in g or "," in g:
            raise ValueError(f"element name {g!r} clashes with tuple identifier syntax")
    nontrivial = [g for g in group.elements if g != group.identity]
    cells = {}
    tuples = {}
    for n in range(max_dim + 1):
        ids = []
        for tup in _tuples_of(nontrivial, n):
            cid = _tuple_id(tup)
            tuples[cid] = tup
            ids.append(cid)
        if ids:
            cells[n] = ids
        limits.check_simplex_count(len(tuples), "nerve")

    def tuple_to_word(tup):
        idx = None
        for i in range(len(tup) - 1, -1, -1):
            if tup[i] == group.identity:
                idx = i
                break
        if idx is None:
            return nondegenerate(_tuple_id(tup), len(tup))
        inner = tuple_to_word(tup[:idx] + tup[idx + 1:])
        return apply_degeneracy(inner, idx)

    faces = {}
    for n in range(1, max_dim + 1):
        for cid in cells.get(n, []):
            tup = tuples[cid]
            for i in range(n + 1):
                if i == 0:
                    sub = tup[1:]
                elif i == n:
                    sub = tup[:-1]
                else:
                    sub = tup[: i - 1] + (group.mul(tup[i - 1], tup[i]),) + tup[i + 1:]
                faces[(cid, i)] = tuple_to_word(sub)

    K = SimplicialSetPresentation(
        name or f"B{group.name}",
        cells,
        faces,
        basepoint="[]",
        truncated_above=max_dim if nontrivial else None,
    )
    K.cell_tuples = tuples
    K.group = group
    K.tuple_word = tuple_to_word
    return K


def _tuples_of(pool, n):
    if n == 0:
        yield ()
        return
    for rest in _tuples_of(pool, n - 1):
        for g in pool:
            yield rest + (g,)


wbar_truncated = nerve_truncated


def universal_twisting(group, nerve):
    """The tautological twisting over the nerve: the edge (g) is labeled g."""
    labels = {cid: nerve.cell_tuples[cid][0] for cid in nerve.cell_ids(1)}
    return TwistingFunction(nerve, group, labels)


# -- twisted cartesian products ----------------------------------------------


class PrincipalBundle:
    """Total complex, projection, and the right translation action."""

    def __init__(self, twist, total, projection, action):
        self.twist = twist
        self.group = twist.group
        self.base = twist.base
        self.total = total
        self.projection = projection
        self.action = action

    def translate(self, g):
        """The action of g as a simplicial map on the total complex."""
        table = self.action[g]
        assignment = {
            x: nondegenerate(table[x], d) for d, x in self.total.all_cells()
        }
        return SimplicialMap(self.total, self.total, assignment, name=f"rho_{g}")

    def __repr__(self):
        return f"<PrincipalBundle {self.total.name!r} over {self.base.name!r} fiber {self.group.name}>"


def _pair_cell(x, g):
    return f"({x}|{g})"


def tcp_build(twist, name=None):
    """The twisted cartesian product of a base presentation with its group.

    Cells are (base cell, group element); d_i is untwisted except i = n,
    where the fiber coordinate is multiplied on the left by the label of
    the last edge of the base simplex.
    """
    base, G = twist.base, twist.group
    if not G.is_finite:
        raise ValueError("twisted products need an enumerable fiber; use a finite group")
    twist.assert_valid()
    name = name or f"{base.name}x~{G.name}"
    limits.check_simplex_count(
        sum(base.n_cells(d) for d in base.dims()) * G.order, "twisted product"
    )

    cells = {}
    for d in base.dims():
        cells[d] = [_pair_cell(x, g) for x in base.cells[d] for g in G.elements]

    def lift_word(w, g):
        lifted = nondegenerate(_pair_cell(w.base, g), w.base_dim)
        for j in reversed(w.degens):
            lifted = apply_degeneracy(lifted, j)
        return lifted

    faces = {}
    for d in base.dims():
        if d == 0:
            continue
        for x in base.cells[d]:
            last_edge = base.word(x)
            for _ in range(d - 1):
                last_edge = base.face_of_word(last_edge, 0)
            shift = twist.label_of_word(last_edge)
            for g in G.elements:
                cid = _pair_cell(x, g)
                for i in range(d):
                    faces[(cid, i)] = lift_word(base.face(x, i), g)
                faces[(cid, d)] = lift_word(base.face(x, d), G.mul(shift, g))

    basepoint = None
    if base.basepoint is not None:
        basepoint = _pair_cell(base.basepoint, G.identity)
    total = SimplicialSetPresentation(name, cells, faces, basepoint=basepoint,
                                      truncated_above=base.truncated_above)

    projection = SimplicialMap(
        total, base,
        {_pair_cell(x, g): nondegenerate(x, d) for d, x in base.all_cells() for g in G.elements},
        name=f"{name}->{base.name}",
    )
    action = {}
    for h in G.elements:
        action[h] = {
            _pair_cell(x, g): _pair_cell(x, G.mul(g, h))
            for _, x in base.all_cells()
            for g in G.elements
        }
    return PrincipalBundle(twist, total, projection, action)


def w_truncated(group, max_dim, name=None):
    """The universal bundle: the twisted product of the tautological
    twisting over the truncated nerve."""
    nerve = nerve_truncated(group, max_dim)
    bundle = tcp_build(universal_twisting(group, nerve), name=name or f"W{group.name}")
    return bundle


def principal_check(bundle):
    """Diagnostics for principality; an empty list means all checks pass."""
    problems = []
    total, base, G = bundle.total, bundle.base, bundle.group
    problems.extend(f"total: {p}" for p in total.validate())
    problems.extend(f"projection: {p}" for p in bundle.projection.validate())
    if problems:
        return problems
    for h in G.elements:
        rho = bundle.translate(h)
        bad = rho.validate()
        problems.extend(f"action of {h}: {p}" for p in bad)
        if not bad:
            behind = compose(bundle.projection, rho)
            for _, x in total.all_cells():
                if behind.assignment[x] != bundle.projection.assignment[x]:
                    problems.append(f"action of {h} does not commute with the projection at {x}")
                    break
    if problems:
        return problems
    for h in G.elements:
        if G.is_identity(h):
            continue
        for _, x in total.all_cells():
            if bundle.action[h][x] == x:
                problems.append(f"action of {h} fixes {x}: not free")
                break
    for g in G.elements:
        for h in G.elements:
            gh = G.mul(g, h)
            for _, x in total.all_cells():
                if bundle.action[h][bundle.action[g][x]] != bundle.action[gh][x]:
                    problems.append(f"action composition fails at ({g}, {h}, {x})")
                    break
    # fibers = orbits: every base cell must have exactly |G| nondegenerate
    # preimages forming one orbit
    for d, x in base.all_cells():
        pre = [c for c in total.cell_ids(d)
               if bundle.projection.assignment[c] == nondegenerate(x, d)]
        if len(pre) != G.order:
            problems.append(f"fiber over {x} has {len(pre)} cells, expected {G.order}")
            continue
        orbit = {bundle.action[h][pre[0]] for h in G.elements}
        if orbit != set(pre):
            problems.append(f"fiber over {x} is not a single orbit")
    return problems


def covering_check(f, sheets):
    """Check that a simplicial map is an m-sheeted covering.

    Conditions: valid map, nondegenerate cells map to nondegenerate cells,
    every cell of the target has exactly ``sheets`` nondegenerate
    preimages, and lifts are unique once the initial vertex is fixed.
    Returns (ok, problems).
    """
    problems = list(f.validate())
    if problems:
        return False, problems
    src, tgt = f.source, f.target
    for d, x in src.all_cells():
        if f.assignment[x].is_degenerate:
            problems.append(f"image of {x} is degenerate: discrete fibers are impossible")
    if problems:
        return False, problems
    preimages = {}
    for d, x in src.all_cells():
        preimages.setdefault(f.assignment[x].base, []).append(x)
    for d, y in tgt.all_cells():
        pre = preimages.get(y, [])
        if len(pre) != sheets:
            problems.append(f"cell {y} has {len(pre)} preimages, expected {sheets}")
    if problems:
        return False, problems
    for d, y in tgt.all_cells():
        if d == 0:
            continue
        start = tgt.vertex_of_word(tgt.word(y), 0)
        for v in preimages[start]:
            lifts = [x for x in preimages[y] if src.vertex_of_word(src.word(x), 0) == v]
            if len(lifts) != 1:
                problems.append(
                    f"cell {y} has {len(lifts)} lifts starting at {v}, expected exactly 1"
                )
    return not problems, problems


def classifying_map(twist, nerve=None):
    """The map to the nerve sending a simplex to its tuple of edge labels."""
    base, G = twist.base, twist.group
    if nerve is None:
        nerve = nerve_truncated(G, max(base.top_dim, 1))
    assignment = {}
    for d, x in base.all_cells():
        labels = []
        for i in range(1, d + 1):
            edge = base.word(x)
            for j in range(d, i, -1):
                edge = base.face_of_word(edge, j)
            for _ in range(i - 1):
                edge = base.face_of_word(edge, 0)
            labels.append(twist.label_of_word(edge))
        assignment[x] = nerve.tuple_word(tuple(labels))
    return SimplicialMap(base, nerve, assignment, name=f"classify({base.name})")


def pullback_twisting(f, twist):
    """Twisting on the source of f with labels pulled back along f."""
    labels = {}
    for e in f.source.cell_ids(1):
        labels[e] = twist.label_of_word(f.map_word(f.source.word(e)))
    pulled = TwistingFunction(f.source, twist.group, labels)
    pulled.assert_valid()
    return pulled


def classifying_naturality(f, twist, nerve=None):
    """classify(pullback of twist) must equal classify(twist) after f."""
    base = twist.base
    if nerve is None:
        nerve = nerve_truncated(twist.group, max(base.top_dim, f.source.top_dim, 1))
    lhs = classifying_map(pullback_twisting(f, twist), nerve)
    rhs = compose(classifying_map(twist, nerve), f)
    problems = []
    for _, x in f.source.all_cells():
        if lhs.assignment[x] != rhs.assignment[x]:
            problems.append(
                f"classifying maps disagree at {x}: "
                f"{word_token(lhs.assignment[x])} vs {word_token(rhs.assignment[x])}"
            )
    return not problems, problems


def universal_check(bundle, max_dim):
    """Evidence that a bundle's total complex is universal through a range:
    connected, acyclic in degrees 1..max_dim-1, and Kan as far as horn
    reports are complete."""
    lines = []
    ok = True
    total = bundle.total
    components = pi0(total)
    if len(components) != 1:
        ok = False
    lines.append(f"components={len(components)}")
    hom = homology(total, max_dim=max_dim)
    for n in range(1, max_dim):
        h = hom[n]
        trivial = h.group.is_trivial
        if not h.reliable:
            lines.append(f"H{n}: unreliable (truncated)")
            ok = False
            continue
        lines.append(f"H{n}={h.group}")
        if not trivial:
            ok = False
    horn_dim = min(max_dim - 1, 3)
    missing = kan_report(total, horn_dim)
    lines.append(f"unfilled horns through dim {horn_dim}: {len(missing)}")
    if missing:
        ok = False
    return ok, lines
