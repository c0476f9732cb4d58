"""Normalized chain complexes and their (co)homology, over Z or Z/m.

The normalized complex has one generator per nondegenerate simplex and
boundary sum((-1)^i d_i) with degenerate faces dropped.  Homology in each
degree is computed as a quotient of integer lattices, which yields not only
the isomorphism type but representative cycles and a coordinate map for
deciding when two cycles are homologous.  Mod-m groups are computed exactly
from the lattices (no universal-coefficient shortcut), so they double as an
independent cross-check of the integral answers.
"""

from math import gcd

import numpy as np

from .presentation import SimplicialSetPresentation
from .snf import (
    FGAbelianGroup,
    QuotientLattice,
    identity_int,
    intmat,
    kernel_basis,
    matmul,
    zeros_int,
)


class ChainComplexZ:
    """Bases and boundary matrices of a normalized chain complex.

    ``unreliable_from`` marks the lowest degree whose homology would need
    boundaries that the underlying presentation does not store (because it
    was truncated or the complex was cut below the top cells).
    """

    def __init__(self, name, bases, boundaries, unreliable_from=None, augmented=False):
        self.name = name
        self.bases = {n: list(b) for n, b in bases.items()}
        self.boundaries = dict(boundaries)
        self.unreliable_from = unreliable_from
        self.augmented = augmented
        self.top = max(self.bases) if self.bases else 0
        for n, M in self.boundaries.items():
            rows = len(self.bases.get(n - 1, [])) if n >= 1 else (1 if augmented else 0)
            cols = len(self.bases.get(n, []))
            if M.shape != (rows, cols):
                raise ValueError(f"boundary {n} has shape {M.shape}, expected {(rows, cols)}")
        for n in sorted(self.boundaries):
            if n - 1 in self.boundaries and n >= 1:
                prod = matmul(self.boundaries[n - 1], self.boundaries[n])
                if any(v != 0 for v in prod.flat):
                    raise ValueError(f"boundary squared is nonzero in degree {n}")

    def size(self, n):
        return len(self.bases.get(n, []))

    def boundary(self, n):
        """The boundary matrix out of degree n (zero-shaped if absent)."""
        if n in self.boundaries:
            return self.boundaries[n]
        rows = self.size(n - 1) if n >= 1 else (1 if self.augmented else 0)
        return zeros_int(rows, self.size(n))

    def index(self, n, cell):
        return self.bases[n].index(cell)

    def reliable(self, n):
        return self.unreliable_from is None or n < self.unreliable_from


def chain_complex(K, max_dim=None, augmented=False):
    """Normalized chains of a presentation, through degree ``max_dim``."""
    top = K.top_dim if max_dim is None else min(max_dim, K.top_dim)
    bases = {n: K.cell_ids(n) for n in range(top + 1)}
    index = {n: {x: i for i, x in enumerate(bases[n])} for n in bases}
    boundaries = {}
    for n in range(1, top + 1):
        M = zeros_int(len(bases[n - 1]), len(bases[n]))
        for c, x in enumerate(bases[n]):
            for i in range(n + 1):
                w = K.face(x, i)
                if w.is_degenerate:
                    continue
                M[index[n - 1][w.base], c] += (-1) ** i
        boundaries[n] = M
    if augmented and bases.get(0):
        A = zeros_int(1, len(bases[0]))
        A[0, :] = 1
        boundaries[0] = A
    unreliable = None
    if top < K.top_dim:
        unreliable = top
    elif K.truncated_above is not None and top >= K.truncated_above:
        unreliable = K.truncated_above
    return ChainComplexZ(K.name, bases, boundaries, unreliable_from=unreliable, augmented=augmented)


def _cycle_lattice(boundary_out, modulus):
    """Basis of {x : boundary_out x = 0 (mod modulus)} as columns."""
    a = boundary_out.shape[1]
    if modulus == 0:
        return kernel_basis(boundary_out)
    from .snf import snf_with_transforms

    _, D, V, _, _ = snf_with_transforms(boundary_out)
    scale = identity_int(a)
    r = min(boundary_out.shape)
    for i in range(a):
        d = D[i, i] if i < r else 0
        if d != 0:
            scale[i, i] = modulus // gcd(int(d), modulus)
    return matmul(V, scale)


class HomologyClassGroup:
    """One degree of (co)homology: isomorphism type plus class arithmetic."""

    def __init__(self, degree, basis_ids, lattice, modulus, reliable):
        self.degree = degree
        self.basis_ids = list(basis_ids)
        self.lattice = lattice
        self.modulus = modulus
        self.reliable = reliable
        self.group = lattice.group()

    def representatives(self):
        return self.lattice.representatives()

    def coords(self, vector):
        return self.lattice.coords(vector)

    def is_trivial_class(self, vector):
        return self.lattice.is_zero(vector)

    def is_cycle(self, vector):
        return self.lattice.contains(vector)

    def __repr__(self):
        tag = "" if self.reliable else " (unreliable: truncation)"
        return f"<degree {self.degree}: {self.group}{tag}>"


def _quotient_in_degree(C, n, modulus, transpose=False):
    if transpose:
        out_map = C.boundary(n + 1).T  # delta^n, kills cocycles
        in_map = C.boundary(n).T       # delta^(n-1), produces coboundaries
    else:
        out_map = C.boundary(n)
        in_map = C.boundary(n + 1)
    a = C.size(n)
    L = _cycle_lattice(out_map, modulus)
    gens = in_map
    if modulus:
        gens = np.concatenate([in_map, modulus * identity_int(a)], axis=1) if a else zeros_int(0, 0)
    lattice = QuotientLattice(L, gens)
    return lattice


def homology(source, coefficients=0, max_dim=None, augmented=False):
    """Graded homology of a presentation or chain complex.

    ``coefficients``: 0 for Z, m > 0 for Z/m.  Returns a dict
    degree -> HomologyClassGroup.
    """
    C = source if isinstance(source, ChainComplexZ) else chain_complex(source, max_dim, augmented)
    # above the top there are no nondegenerate simplices, so the groups are
    # zero; report them when the caller asks past the top
    limit = C.top if max_dim is None else max(C.top, max_dim)
    out = {}
    for n in range(limit + 1):
        lattice = _quotient_in_degree(C, n, coefficients, transpose=False)
        # homology needs the boundary INTO degree n as well; at the top of a
        # truncated complex that boundary is unknown
        reliable = C.reliable(n)
        out[n] = HomologyClassGroup(n, C.bases.get(n, []), lattice, coefficients, reliable)
    return out


def cohomology(source, coefficients=0, max_dim=None):
    """Graded cohomology; same calling convention as homology."""
    C = source if isinstance(source, ChainComplexZ) else chain_complex(source, max_dim)
    limit = C.top if max_dim is None else max(C.top, max_dim)
    out = {}
    for n in range(limit + 1):
        lattice = _quotient_in_degree(C, n, coefficients, transpose=True)
        out[n] = HomologyClassGroup(n, C.bases.get(n, []), lattice, coefficients, reliable=C.reliable(n))
    return out


def homology_groups(source, coefficients=0, max_dim=None):
    """Convenience: dict degree -> FGAbelianGroup."""
    return {n: h.group for n, h in homology(source, coefficients, max_dim).items()}


class Cochain:
    """A cochain on the nondegenerate n-cells of a presentation.

    Values live in Z (modulus 0) or Z/m; evaluation on a degenerate word is
    zero, which is exactly normalization.
    """

    def __init__(self, K, degree, vector, modulus=0):
        self.K = K
        self.degree = degree
        self.modulus = modulus
        ids = K.cell_ids(degree)
        vec = [int(v) for v in vector]
        if len(vec) != len(ids):
            raise ValueError(f"cochain vector length {len(vec)} != {len(ids)} cells in degree {degree}")
        if modulus:
            vec = [v % modulus for v in vec]
        self.vector = np.array(vec, dtype=object) if vec else zeros_int(0, 1)[:, 0]
        self._index = {x: i for i, x in enumerate(ids)}

    def evaluate(self, w):
        if w.dim != self.degree:
            raise ValueError(f"cochain of degree {self.degree} evaluated on a {w.dim}-simplex")
        if w.is_degenerate:
            return 0
        return int(self.vector[self._index[w.base]])

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.K is other.K
            and self.degree == other.degree
            and self.modulus == other.modulus
            and list(self.vector) == list(other.vector)
        )

    def __repr__(self):
        return f"<Cochain deg {self.degree} mod {self.modulus} on {self.K.name}: {list(self.vector)}>"


def coboundary(c):
    """The coboundary cochain (delta c)(x) = sum (-1)^i c(d_i x)."""
    K, n = c.K, c.degree
    values = []
    for x in K.cell_ids(n + 1):
        total = sum((-1) ** i * c.evaluate(K.face(x, i)) for i in range(n + 2))
        values.append(total)
    return Cochain(K, n + 1, values, c.modulus)


def is_cocycle(c):
    if c.degree >= c.K.top_dim:
        return True  # nothing to test against; caller should check reliability
    d = coboundary(c)
    m = c.modulus
    return all((v % m if m else v) == 0 for v in d.vector)


def cup_product(a, b):
    """Alexander-Whitney cup product of two cochains on the same complex.

    (a cup b)(x) = a(front p-face of x) * b(back q-face of x).
    """
    if a.K is not b.K:
        raise ValueError("cup product needs cochains on the same presentation")
    if a.modulus != b.modulus:
        raise ValueError("cup product needs matching coefficient moduli")
    K, p, q = a.K, a.degree, b.degree
    n = p + q
    values = []
    for x in K.cell_ids(n):
        w = K.word(x)
        front = w
        for i in range(n, p, -1):
            front = K.face_of_word(front, i)
        back = w
        for _ in range(p):
            back = K.face_of_word(back, 0)
        values.append(a.evaluate(front) * b.evaluate(back))
    return Cochain(K, n, values, a.modulus)


def unit_cochain(K, modulus=0):
    """The 0-cochain with value 1 on every vertex; a cocycle, the cup unit."""
    return Cochain(K, 0, [1] * K.n_cells(0), modulus)


def induced_chain_map(f, max_dim=None):
    """Matrices of the induced map on normalized chains, degree by degree.

    Degenerate images contribute zero columns.  The chain-map identity
    (boundary commutes) is verified and violations raise.
    """
    src = chain_complex(f.source, max_dim)
    tgt = chain_complex(f.target, max_dim)
    top = min(src.top, tgt.top) if max_dim is None else min(src.top, max_dim)
    mats = {}
    for n in range(top + 1):
        M = zeros_int(tgt.size(n), src.size(n))
        tindex = {x: i for i, x in enumerate(tgt.bases.get(n, []))}
        for c, x in enumerate(src.bases.get(n, [])):
            w = f.map_word(f.source.word(x))
            if w.is_degenerate:
                continue
            M[tindex[w.base], c] += 1
        mats[n] = M
    for n in range(1, top + 1):
        left = matmul(mats[n - 1], src.boundary(n))
        right = matmul(tgt.boundary(n), mats[n])
        if any(v != 0 for v in (left - right).flat):
            raise ValueError(f"induced map fails to commute with the boundary in degree {n}")
    return mats


def chain_homotopy_check(source_complex, target_complex, f_mats, g_mats, h_mats, top=None):
    """Verify f - g = boundary h + h boundary degree by degree.

    ``h_mats[n]`` maps degree n of the source to degree n+1 of the target.
    Returns (ok, first_failure_message).
    """
    degrees = sorted(set(f_mats) & set(g_mats))
    if top is not None:
        degrees = [n for n in degrees if n <= top]
    for n in degrees:
        expect = f_mats[n] - g_mats[n]
        got = zeros_int(*expect.shape)
        if n in h_mats:
            got = got + matmul(target_complex.boundary(n + 1), h_mats[n])
        if n - 1 in h_mats:
            got = got + matmul(h_mats[n - 1], source_complex.boundary(n))
        if any(v != 0 for v in (expect - got).flat):
            return False, f"homotopy identity fails in degree {n}"
    return True, ""
