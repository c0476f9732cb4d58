"""Exact integer linear algebra: Smith normal form, kernels, linear solving,
and finitely generated quotients of integer lattices.

Matrices are numpy arrays of dtype=object holding Python ints, so nothing
ever overflows.  Row/column operations are unimodular throughout; the
transform accumulators therefore stay invertible over the integers.
"""

import numpy as np


def intmat(rows, shape=None):
    """Object-dtype integer matrix from nested lists; shape fixes empties."""
    if shape is not None and (not rows or not rows[0]):
        return zeros_int(*shape)
    A = np.array([[int(v) for v in row] for row in rows], dtype=object)
    if A.ndim != 2:
        raise ValueError("matrix data must be rectangular")
    return A


def zeros_int(m, n):
    A = np.empty((m, n), dtype=object)
    A[:] = 0
    return A


def identity_int(n):
    A = zeros_int(n, n)
    for i in range(n):
        A[i, i] = 1
    return A


def matmul(A, B):
    """Exact product; np.dot mishandles empty object arrays, so guard them."""
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    if A.shape[0] == 0 or B.shape[1] == 0 or A.shape[1] == 0:
        return zeros_int(A.shape[0], B.shape[1])
    return A.dot(B)


def matvec(A, x):
    return matmul(A, np.asarray(x, dtype=object).reshape(-1, 1))[:, 0]


def is_zero_matrix(A):
    return all(v == 0 for v in A.flat)


def snf_with_transforms(A):
    """Return (U, D, V, Uinv, Vinv) with U A V = D in Smith normal form.

    D is diagonal with nonnegative entries d_1 | d_2 | ... ; U, V are
    unimodular and Uinv, Vinv are their exact inverses.
    """
    D = A.copy()
    m, n = D.shape
    U, Ui = identity_int(m), identity_int(m)
    V, Vi = identity_int(n), identity_int(n)

    def row_swap(i, j):
        if i == j:
            return
        D[[i, j], :] = D[[j, i], :]
        U[[i, j], :] = U[[j, i], :]
        Ui[:, [i, j]] = Ui[:, [j, i]]

    def row_add(i, j, c):
        # row i += c * row j
        D[i, :] += c * D[j, :]
        U[i, :] += c * U[j, :]
        Ui[:, j] -= c * Ui[:, i]

    def row_neg(i):
        D[i, :] = -D[i, :]
        U[i, :] = -U[i, :]
        Ui[:, i] = -Ui[:, i]

    def col_swap(i, j):
        if i == j:
            return
        D[:, [i, j]] = D[:, [j, i]]
        V[:, [i, j]] = V[:, [j, i]]
        Vi[[i, j], :] = Vi[[j, i], :]

    def col_add(i, j, c):
        # column i += c * column j
        D[:, i] += c * D[:, j]
        V[:, i] += c * V[:, j]
        Vi[j, :] -= c * Vi[i, :]

    t = 0
    while t < min(m, n):
        # smallest nonzero magnitude in the open submatrix, earliest position wins
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(D[i, j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        row_swap(t, best[1])
        col_swap(t, best[2])
        if D[t, t] < 0:
            row_neg(t)

        while True:
            # clear below the pivot; a nonzero remainder becomes the new pivot
            restart = False
            i = t + 1
            while i < m:
                if D[i, t] != 0:
                    q = D[i, t] // D[t, t]
                    row_add(i, t, -q)
                    if D[i, t] != 0:
                        row_swap(t, i)
                        restart = True
                        break
                i += 1
            if restart:
                continue
            j = t + 1
            while j < n:
                if D[t, j] != 0:
                    q = D[t, j] // D[t, t]
                    col_add(j, t, -q)
                    if D[t, j] != 0:
                        col_swap(t, j)
                        restart = True
                        break
                j += 1
            if restart:
                continue
            # divisibility: the pivot must divide the rest of the submatrix
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i, j] % D[t, t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        t += 1
    return U, D, V, Ui, Vi


def smith_normal_form(A):
    """(U, D, V) with U A V = D diagonal, d_1 | d_2 | ..."""
    U, D, V, _, _ = snf_with_transforms(A)
    return U, D, V


def diagonal_entries(D):
    return [D[i, i] for i in range(min(D.shape))]


def rank_of(A):
    _, D, _, _, _ = snf_with_transforms(A)
    return sum(1 for d in diagonal_entries(D) if d != 0)


def kernel_basis(A):
    """Columns form a basis of the integer kernel lattice of A."""
    m, n = A.shape
    _, D, V, _, _ = snf_with_transforms(A)
    cols = []
    for j in range(n):
        d = D[j, j] if j < min(m, n) else 0
        if d == 0:
            cols.append(V[:, j])
    if not cols:
        return zeros_int(n, 0)
    return np.stack(cols, axis=1)


def solve_int(A, B):
    """Exact solution X of A X = B, or None when unsolvable over the integers."""
    m, n = A.shape
    B = B if B.ndim == 2 else B.reshape(-1, 1)
    if B.shape[0] != m:
        raise ValueError("right hand side has wrong length")
    U, D, V, _, _ = snf_with_transforms(A)
    Y = matmul(U, B)
    W = zeros_int(n, B.shape[1])
    r = min(m, n)
    for i in range(m):
        d = D[i, i] if i < r else 0
        for c in range(B.shape[1]):
            y = Y[i, c]
            if d == 0:
                if y != 0:
                    return None
            else:
                if y % d != 0:
                    return None
                if i < n:
                    W[i, c] = y // d
    return matmul(V, W)


def det_int(A):
    """Determinant by fraction-free Gaussian elimination (Bareiss)."""
    m, n = A.shape
    if m != n:
        raise ValueError("determinant of a non-square matrix")
    if m == 0:
        return 1
    M = A.copy()
    sign = 1
    prev = 1
    for k in range(m - 1):
        if M[k, k] == 0:
            pivot_row = next((i for i in range(k + 1, m) if M[i, k] != 0), None)
            if pivot_row is None:
                return 0
            M[[k, pivot_row], :] = M[[pivot_row, k], :]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                M[i, j] = (M[i, j] * M[k, k] - M[i, k] * M[k, j]) // prev
            M[i, k] = 0
        prev = M[k, k]
    return sign * M[m - 1, m - 1]


class FGAbelianGroup:
    """Isomorphism type of a finitely generated abelian group."""

    __slots__ = ("rank", "torsion")

    def __init__(self, rank=0, torsion=()):
        self.rank = int(rank)
        self.torsion = tuple(int(t) for t in torsion if int(t) > 1)

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    @property
    def is_finite(self):
        return self.rank == 0

    def order(self):
        if self.rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def __eq__(self, other):
        return (
            isinstance(other, FGAbelianGroup)
            and self.rank == other.rank
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FGAbelianGroup(rank={self.rank}, torsion={self.torsion})"


class QuotientLattice:
    """The quotient of a sublattice L of Z^a by a subgroup of L.

    ``basis``: an (a, k) matrix whose columns freely span L.
    ``gens``: an (a, l) matrix of elements of L generating the subgroup M.

    Provides the isomorphism type of L/M, representative vectors for its
    generators, and coordinates of arbitrary elements of L in the
    decomposition; this is what homology classes and their membership
    tests are made of.
    """

    def __init__(self, basis, gens):
        self.basis = basis
        a, k = basis.shape
        X = solve_int(basis, gens) if gens.shape[1] else zeros_int(k, 0)
        if X is None:
            raise ValueError("relation generators do not lie in the lattice")
        UX, DX, _, UXi, _ = snf_with_transforms(X)
        l = X.shape[1]
        self.invariants = tuple(
            (DX[i, i] if i < min(k, l) else 0) for i in range(k)
        )
        self._U = UX
        # columns of basis * UX^{-1} generate L adapted to the invariants
        self._adapted = matmul(basis, UXi)
        self._kept = [i for i, d in enumerate(self.invariants) if d != 1]

    def group(self):
        rank = sum(1 for d in self.invariants if d == 0)
        torsion = tuple(d for d in self.invariants if d > 1)
        return FGAbelianGroup(rank, torsion)

    def representatives(self):
        """Vectors in Z^a representing the generators of L/M (torsion first,
        free last, matching coords order)."""
        return [self._adapted[:, i] for i in self._kept]

    def coords(self, z):
        """Coordinates of the class of z in L/M, or raise if z is not in L."""
        z = np.asarray(z, dtype=object).reshape(-1, 1)
        y = solve_int(self.basis, z)
        if y is None:
            raise ValueError("vector does not lie in the lattice")
        w = matmul(self._U, y)[:, 0]
        out = []
        for i in self._kept:
            d = self.invariants[i]
            out.append(int(w[i]) % d if d > 1 else int(w[i]))
        return tuple(out)

    def contains(self, z):
        z = np.asarray(z, dtype=object).reshape(-1, 1)
        return solve_int(self.basis, z) is not None

    def is_zero(self, z):
        return all(c == 0 for c in self.coords(z))
