"""Simplex words: canonical degeneracy forms over named base simplices.

Every simplex of a presented simplicial set is an iterated degeneracy
``s_{j_t} ... s_{j_1} x`` of a unique nondegenerate simplex ``x`` with
strictly decreasing indices ``j_t > ... > j_1``.  A :class:`SimplexWord`
stores that canonical form together with the dimension of the simplex it
denotes.  The functions below push face and degeneracy operators through
a word, rewriting with the simplicial identities

    d_i d_j = d_{j-1} d_i            (i < j)
    s_i s_j = s_{j+1} s_i            (i <= j)
    d_i s_j = s_{j-1} d_i            (i < j)
    d_i s_j = id                     (i = j, j+1)
    d_i s_j = s_j d_{i-1}            (i > j+1)

so that the result is again canonical.
"""

from itertools import combinations


class SimplexWord:
    """Canonical form ``s_{degens} base`` in dimension ``dim``.

    Parameters
    ----------
    base : str
        Identifier of the nondegenerate base simplex.
    degens : tuple of int
        Strictly decreasing degeneracy indices, outermost first.  The
        rightmost index is applied first.
    dim : int
        Dimension of the simplex the word denotes; the base then has
        dimension ``dim - len(degens)``.
    """

    __slots__ = ("base", "degens", "dim")

    def __init__(self, base, degens=(), dim=0):
        degens = tuple(degens)
        base_dim = dim - len(degens)
        if base_dim < 0:
            raise ValueError(f"word of dimension {dim} cannot carry {len(degens)} degeneracies")
        # validity: applied innermost-first, the i-th operator s_j needs j <= base_dim + i
        for pos, j in enumerate(reversed(degens)):
            if j < 0 or j > base_dim + pos:
                raise ValueError(f"degeneracy index {j} invalid at position {pos} over a {base_dim}-simplex")
        for a, b in zip(degens, degens[1:]):
            if a <= b:
                raise ValueError(f"degeneracy indices must strictly decrease, got {degens}")
        self.base = base
        self.degens = degens
        self.dim = dim

    @property
    def base_dim(self):
        return self.dim - len(self.degens)

    @property
    def is_degenerate(self):
        return bool(self.degens)

    def __eq__(self, other):
        return (
            isinstance(other, SimplexWord)
            and self.base == other.base
            and self.degens == other.degens
            and self.dim == other.dim
        )

    def __hash__(self):
        return hash((self.base, self.degens, self.dim))

    def __repr__(self):
        return f"SimplexWord({self.base!r}, {self.degens!r}, dim={self.dim})"

    def __str__(self):
        return word_token(self)


def word_token(w):
    """Stable text form, used in identifiers and reports."""
    if not w.degens:
        return w.base
    ops = "s" + "s".join(str(j) for j in w.degens)
    return f"{ops}({w.base})"


def nondegenerate(base, dim):
    return SimplexWord(base, (), dim)


def _insert_degeneracy(degens, j):
    # Rewrite s_j s_{degens} into canonical order: while j <= leading index a,
    # swap using s_j s_a = s_{a+1} s_j.
    out = []
    k = 0
    n = len(degens)
    while k < n and j <= degens[k]:
        out.append(degens[k] + 1)
        k += 1
    out.append(j)
    out.extend(degens[k:])
    return tuple(out)


def apply_degeneracy(w, j):
    """Canonical form of ``s_j w``."""
    if j < 0 or j > w.dim:
        raise ValueError(f"s_{j} undefined on a {w.dim}-simplex")
    return SimplexWord(w.base, _insert_degeneracy(w.degens, j), w.dim + 1)


def apply_face(w, i, base_face):
    """Canonical form of ``d_i w``.

    ``base_face(x, i)`` must return the i-th face of the nondegenerate
    simplex ``x`` as a SimplexWord; it is consulted only when the face
    operator survives all the way down to the base.
    """
    if w.dim == 0:
        raise ValueError("a 0-simplex has no faces")
    if i < 0 or i > w.dim:
        raise ValueError(f"d_{i} undefined on a {w.dim}-simplex")
    passed = []  # degeneracy indices left of the migrating face operator
    degens = w.degens
    for pos, a in enumerate(degens):
        if i == a or i == a + 1:
            # d_i s_a = id; the remaining inner degeneracies survive untouched
            remaining = passed + list(degens[pos + 1:])
            return SimplexWord(w.base, tuple(remaining), w.dim - 1)
        if i < a:
            passed.append(a - 1)
        else:  # i > a + 1
            passed.append(a)
            i -= 1
    result = base_face(w.base, i)
    for j in reversed(passed):
        result = apply_degeneracy(result, j)
    return result


def normalize(base, base_dim, ops, base_face):
    """Canonical form of an operator string applied to a base simplex.

    ``ops`` lists (kind, index) pairs in mathematical order, leftmost
    outermost; so the last pair acts first.  kind is "d" or "s".
    """
    w = nondegenerate(base, base_dim)
    for kind, idx in reversed(ops):
        if kind == "s":
            w = apply_degeneracy(w, idx)
        elif kind == "d":
            w = apply_face(w, idx, base_face)
        else:
            raise ValueError(f"unknown operator kind {kind!r}")
    return w


def degeneracy_words(base, base_dim, dim):
    """All degeneracy words of dimension ``dim`` over one base simplex.

    There is exactly one word per size-(dim - base_dim) subset of
    {0, ..., dim-1}; subsets are emitted in lexicographic order.
    """
    extra = dim - base_dim
    if extra < 0:
        return
    for subset in combinations(range(dim), extra):
        yield SimplexWord(base, tuple(reversed(subset)), dim)
