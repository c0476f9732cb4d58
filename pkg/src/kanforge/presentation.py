"""Finite presentations of simplicial sets and maps between them.

A presentation lists the nondegenerate simplices in each dimension and, for
every nondegenerate simplex, the canonical word of each of its faces.  All
simplices of the presented simplicial set are then degeneracy words over
these cells, and every face/degeneracy computation reduces to word rewriting
plus the stored face table.
"""

from . import limits
from .words import (
    SimplexWord,
    apply_degeneracy,
    apply_face,
    degeneracy_words,
    nondegenerate,
    word_token,
)


class SimplicialSetPresentation:
    """Nondegenerate cells plus a face table.

    Parameters
    ----------
    name : str
    cells : dict int -> sequence of str
        Nondegenerate simplex identifiers per dimension.  Declaration
        order is meaningful: it fixes chain bases and tie-breaking.
        Identifiers must be globally unique across dimensions.
    faces : dict (id, int) -> SimplexWord
        The i-th face of each cell of dimension >= 1.
    basepoint : str, optional
        A distinguished vertex.
    truncated_above : int, optional
        Marks the presentation as the truncation of a larger object:
        cells above this dimension were deliberately omitted, so degree
        ``truncated_above`` boundaries out of the missing cells are
        unknown.  Consumers use this to flag unreliable top degrees.
    """

    def __init__(self, name, cells, faces, basepoint=None, truncated_above=None):
        self.name = name
        self.cells = {}
        for dim in sorted(cells):
            ids = list(cells[dim])
            if dim < 0:
                raise ValueError(f"negative dimension {dim}")
            if ids:
                self.cells[dim] = ids
        self.faces = dict(faces)
        self.basepoint = basepoint
        self.truncated_above = truncated_above
        self._dims = {}
        for dim, ids in self.cells.items():
            for x in ids:
                if x in self._dims:
                    raise ValueError(f"duplicate cell identifier {x!r}")
                self._dims[x] = dim
        limits.check_simplex_count(len(self._dims), f"presentation {name!r}")

    # -- basic queries -------------------------------------------------

    @property
    def top_dim(self):
        return max(self.cells) if self.cells else 0

    def dims(self):
        return sorted(self.cells)

    def cell_ids(self, dim):
        return list(self.cells.get(dim, []))

    def all_cells(self):
        for dim in sorted(self.cells):
            for x in self.cells[dim]:
                yield dim, x

    def n_cells(self, dim):
        return len(self.cells.get(dim, []))

    def dim_of(self, cell):
        try:
            return self._dims[cell]
        except KeyError:
            raise KeyError(f"unknown cell {cell!r} in {self.name!r}")

    def has_cell(self, cell):
        return cell in self._dims

    def word(self, cell):
        """The nondegenerate word standing for a cell."""
        return nondegenerate(cell, self.dim_of(cell))

    # -- face/degeneracy calculus ---------------------------------------

    def face(self, cell, i):
        """The i-th face word of a nondegenerate cell."""
        dim = self.dim_of(cell)
        if dim == 0:
            raise ValueError(f"vertex {cell!r} has no faces")
        if not 0 <= i <= dim:
            raise ValueError(f"face index {i} out of range for {cell!r} of dimension {dim}")
        try:
            return self.faces[(cell, i)]
        except KeyError:
            raise KeyError(f"missing face ({cell!r}, {i}) in {self.name!r}")

    def face_of_word(self, w, i):
        return apply_face(w, i, self.face)

    def degeneracy_of_word(self, w, j):
        return apply_degeneracy(w, j)

    def vertex_of_word(self, w, which):
        """The which-th vertex of a simplex, as a cell identifier."""
        if not 0 <= which <= w.dim:
            raise ValueError(f"vertex index {which} out of range on a {w.dim}-simplex")
        for i in range(w.dim, which, -1):
            w = self.face_of_word(w, i)
        for _ in range(which):
            w = self.face_of_word(w, 0)
        return w.base

    def simplices(self, dim):
        """All simplices (words) of one dimension, degenerate included.

        Deterministic order: base dimension ascending, then declaration
        order, then lexicographic degeneracy subsets.
        """
        for q in sorted(self.cells):
            if q > dim:
                break
            for x in self.cells[q]:
                yield from degeneracy_words(x, q, dim)

    # -- validation ------------------------------------------------------

    def validate(self):
        """Return a list of violation messages; empty means valid."""
        problems = []
        for dim, ids in self.cells.items():
            if dim == 0:
                continue
            for x in ids:
                for i in range(dim + 1):
                    w = self.faces.get((x, i))
                    if w is None:
                        problems.append(f"missing face: d_{i} {x}")
                        continue
                    if w.dim != dim - 1:
                        problems.append(f"face d_{i} {x} has dimension {w.dim}, expected {dim - 1}")
                        continue
                    base_dim = self._dims.get(w.base)
                    if base_dim is None:
                        problems.append(f"face d_{i} {x} refers to unknown cell {w.base!r}")
                    elif base_dim != w.base_dim:
                        problems.append(
                            f"face d_{i} {x}: word claims base dimension {w.base_dim}, "
                            f"cell {w.base!r} has dimension {base_dim}"
                        )
        for key in self.faces:
            x, i = key
            dim = self._dims.get(x)
            if dim is None:
                problems.append(f"face table mentions unknown cell {x!r}")
            elif not 1 <= dim or not 0 <= i <= dim:
                problems.append(f"face table key d_{i} {x} out of range")
        if self.basepoint is not None:
            if self._dims.get(self.basepoint) != 0:
                problems.append(f"basepoint {self.basepoint!r} is not a vertex")
        if problems:
            return problems
        # simplicial identity d_i d_j = d_{j-1} d_i for i < j, checkable only
        # once the face table itself is well formed
        for dim, ids in self.cells.items():
            if dim < 2:
                continue
            for x in ids:
                for j in range(1, dim + 1):
                    for i in range(j):
                        left = self.face_of_word(self.face(x, j), i)
                        right = self.face_of_word(self.face(x, i), j - 1)
                        if left != right:
                            problems.append(
                                f"identity failure on {x}: d_{i} d_{j} = {word_token(left)} "
                                f"but d_{j - 1} d_{i} = {word_token(right)}"
                            )
        return problems

    def assert_valid(self):
        problems = self.validate()
        if problems:
            raise ValueError(f"invalid presentation {self.name!r}: " + "; ".join(problems))
        return self

    def __repr__(self):
        counts = ", ".join(f"{d}:{len(ids)}" for d, ids in sorted(self.cells.items()))
        return f"<SimplicialSetPresentation {self.name!r} cells {{{counts}}}>"


class SimplicialMap:
    """A simplicial map given on nondegenerate cells.

    ``assignment`` sends each nondegenerate cell of the source to a word of
    the same dimension in the target; the extension to all simplices is
    forced by commuting with degeneracies.
    """

    def __init__(self, source, target, assignment, name=None):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)
        self.name = name or f"{source.name}->{target.name}"

    def map_word(self, w):
        image = self.assignment.get(w.base)
        if image is None:
            raise KeyError(f"map {self.name!r} has no value on cell {w.base!r}")
        for j in reversed(w.degens):
            image = apply_degeneracy(image, j)
        return image

    def validate(self):
        problems = []
        for dim, x in self.source.all_cells():
            image = self.assignment.get(x)
            if image is None:
                problems.append(f"no image for cell {x}")
                continue
            if image.dim != dim:
                problems.append(f"image of {x} has dimension {image.dim}, expected {dim}")
                continue
            if not self.target.has_cell(image.base):
                problems.append(f"image of {x} uses unknown target cell {image.base!r}")
        if problems:
            return problems
        for dim, x in self.source.all_cells():
            if dim == 0:
                continue
            for i in range(dim + 1):
                left = self.map_word(self.source.face(x, i))
                right = self.target.face_of_word(self.assignment[x], i)
                if left != right:
                    problems.append(
                        f"face compatibility failure at d_{i} {x}: "
                        f"f(d_i x) = {word_token(left)}, d_i f(x) = {word_token(right)}"
                    )
        return problems

    def assert_valid(self):
        problems = self.validate()
        if problems:
            raise ValueError(f"invalid simplicial map {self.name!r}: " + "; ".join(problems))
        return self

    def __repr__(self):
        return f"<SimplicialMap {self.name!r}>"


def identity_map(K):
    return SimplicialMap(K, K, {x: nondegenerate(x, d) for d, x in K.all_cells()}, name=f"id_{K.name}")


def compose(g, f):
    """g after f."""
    if f.target is not g.source:
        raise ValueError("composition mismatch: f.target must be g.source")
    assignment = {x: g.map_word(f.assignment[x]) for _, x in f.source.all_cells()}
    return SimplicialMap(f.source, g.target, assignment, name=f"{g.name}*{f.name}")


def is_isomorphism(f):
    """True when f is a bijection on nondegenerate cells commuting with faces."""
    if f.validate():
        return False
    for dim in set(f.source.dims()) | set(f.target.dims()):
        images = []
        for x in f.source.cell_ids(dim):
            w = f.assignment[x]
            if w.is_degenerate:
                return False
            images.append(w.base)
        if sorted(images) != sorted(f.target.cell_ids(dim)):
            return False
    return True
