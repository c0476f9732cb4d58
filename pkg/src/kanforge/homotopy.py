"""Path components and edge-path fundamental groups.

The fundamental group of a connected presentation is generated by the
nondegenerate edges, with one relator per spanning-tree edge and one per
nondegenerate 2-simplex ((d_2)(d_0) = d_1, degenerate faces contributing
nothing).  Simplification is deliberately conservative: only empty relators
and single-letter relators are eliminated, so the output stays predictable.
"""

from collections import deque

from .snf import QuotientLattice, identity_int, zeros_int


def pi0(K):
    """Path components as sorted lists of vertices, in basepoint-then-id order."""
    parent = {v: v for v in K.cell_ids(0)}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in K.cell_ids(1):
        a = find(K.face(e, 1).base)
        b = find(K.face(e, 0).base)
        if a != b:
            parent[b] = a
    groups = {}
    for v in K.cell_ids(0):
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(c) for c in groups.values()), key=lambda c: c[0])


def is_connected(K):
    return len(pi0(K)) == 1


def _reduce_word(letters):
    """Free reduction of a list of (generator, +-1) letters."""
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return out


class GroupPresentation:
    """Finite group presentation with word-level relators.

    Relators are stored as freely reduced tuples of (generator, +-1).
    """

    def __init__(self, generators, relators):
        self.generators = list(generators)
        gens = set(self.generators)
        cleaned = []
        for rel in relators:
            word = _reduce_word([(g, s) for g, s in rel])
            for g, _ in word:
                if g not in gens:
                    raise ValueError(f"relator mentions unknown generator {g!r}")
            cleaned.append(tuple(word))
        self.relators = cleaned

    def simplified(self):
        """Tietze simplification: drop empty relators, kill single-letter ones."""
        gens = list(self.generators)
        rels = [list(r) for r in self.relators]
        changed = True
        while changed:
            changed = False
            rels = [r for r in rels if r]
            trivial = None
            for r in rels:
                if len(r) == 1:
                    trivial = r[0][0]
                    break
            if trivial is not None:
                gens = [g for g in gens if g != trivial]
                rels = [_reduce_word([(g, s) for g, s in r if g != trivial]) for r in rels]
                changed = True
        seen = set()
        unique = []
        for r in rels:
            key = tuple(r)
            inv = tuple((g, -s) for g, s in reversed(r))
            if key in seen or inv in seen:
                continue
            seen.add(key)
            unique.append(key)
        return GroupPresentation(gens, unique)

    @property
    def is_trivial(self):
        return not self.simplified().generators

    def exponent_matrix(self):
        """Generators x relators matrix of exponent sums."""
        index = {g: i for i, g in enumerate(self.generators)}
        M = zeros_int(len(self.generators), len(self.relators))
        for c, rel in enumerate(self.relators):
            for g, s in rel:
                M[index[g], c] += s
        return M

    def abelianization(self):
        """(group, coordinate map on generators) of the abelianized group."""
        n = len(self.generators)
        lattice = QuotientLattice(identity_int(n), self.exponent_matrix())
        coords = {}
        for i, g in enumerate(self.generators):
            e = zeros_int(n, 1)[:, 0]
            e[i] = 1
            coords[g] = lattice.coords(e)
        return lattice.group(), coords

    def __repr__(self):
        def fmt(rel):
            if not rel:
                return "1"
            return "".join(g if s == 1 else f"{g}^-1" for g, s in rel)

        return "<" + ", ".join(self.generators) + " | " + ", ".join(fmt(r) for r in self.relators) + ">"


def _edge_word_letters(K, w):
    """A 1-simplex word as a letter list: empty when degenerate."""
    return [] if w.is_degenerate else [(w.base, 1)]


def pi1_presentation(K, basepoint=None, simplify=True):
    """Edge-path presentation of the fundamental group.

    The complex must be connected.  Spanning tree edges (breadth first from
    the basepoint, declaration order) become relators, as does the boundary
    word of every nondegenerate 2-simplex.
    """
    vertices = K.cell_ids(0)
    if not vertices:
        raise ValueError(f"presentation {K.name!r} has no vertices")
    basepoint = basepoint or K.basepoint or vertices[0]
    if not K.has_cell(basepoint) or K.dim_of(basepoint) != 0:
        raise ValueError(f"basepoint {basepoint!r} is not a vertex of {K.name!r}")
    components = pi0(K)
    if len(components) != 1:
        raise ValueError(
            f"fundamental group needs a connected complex; {K.name!r} has {len(components)} components"
        )

    edges = K.cell_ids(1)
    endpoints = {e: (K.face(e, 1).base, K.face(e, 0).base) for e in edges}
    adjacency = {v: [] for v in vertices}
    for e in edges:
        src, tgt = endpoints[e]
        adjacency[src].append((tgt, e))
        adjacency[tgt].append((src, e))

    tree_edges = []
    seen = {basepoint}
    queue = deque([basepoint])
    while queue:
        v = queue.popleft()
        for w, e in adjacency[v]:
            if w not in seen:
                seen.add(w)
                tree_edges.append(e)
                queue.append(w)

    relators = [[(e, 1)] for e in tree_edges]
    for t in K.cell_ids(2):
        word = []
        word += _edge_word_letters(K, K.face(t, 2))
        word += _edge_word_letters(K, K.face(t, 0))
        word += [(g, -s) for g, s in reversed(_edge_word_letters(K, K.face(t, 1)))]
        relators.append(word)
    pres = GroupPresentation(edges, relators)
    return pres.simplified() if simplify else pres


def abelianized_pi1(K, basepoint=None):
    group, _ = pi1_presentation(K, basepoint, simplify=True).abelianization()
    return group
