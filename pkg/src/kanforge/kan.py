"""Horn enumeration, filler search, and bounded fibrant approximation.

A horn instance is a compatible family of candidate faces (all but one) of a
would-be p-simplex.  Enumeration walks candidate faces with incremental
compatibility pruning, counting work against a budget; filler search always
ranges over every p-simplex, degenerate words included, so a reported
missing filler is a genuine certificate.

Fibrant approximation fills, stage by stage, every horn present when the
stage starts, preferring existing fillers and otherwise attaching a free
filler (one new p-cell and its new k-th face).  Horns of dimension 1 are
always filled by a degenerate edge, so the vertex set never grows.
"""

from . import limits
from .presentation import SimplicialMap, SimplicialSetPresentation
from .words import SimplexWord, nondegenerate, word_token


class HornInstance:
    """Faces i != k of a hoped-for p-simplex, satisfying the matching
    condition d_i x_j = d_{j-1} x_i for i < j."""

    __slots__ = ("p", "k", "faces")

    def __init__(self, p, k, faces):
        self.p = p
        self.k = k
        self.faces = dict(faces)
        expected = [i for i in range(p + 1) if i != k]
        if sorted(self.faces) != expected:
            raise ValueError(f"horn (p={p}, k={k}) needs faces exactly at {expected}")

    def sort_key(self):
        return (self.p, self.k, tuple(word_token(self.faces[i]) for i in sorted(self.faces)))

    def __eq__(self, other):
        return (
            isinstance(other, HornInstance)
            and self.p == other.p
            and self.k == other.k
            and self.faces == other.faces
        )

    def __hash__(self):
        return hash((self.p, self.k, tuple(sorted((i, w) for i, w in self.faces.items()))))

    def describe(self):
        faces = ", ".join(f"d{i}={word_token(self.faces[i])}" for i in sorted(self.faces))
        return f"horn p={self.p} k={self.k} [{faces}]"

    def __repr__(self):
        return f"<{self.describe()}>"


def faces_compatible(K, x_lo, lo, x_hi, hi):
    """Matching condition for face indices lo < hi."""
    return K.face_of_word(x_hi, lo) == K.face_of_word(x_lo, hi - 1)


def horn_is_compatible(K, p, k, faces):
    idx = sorted(faces)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            lo, hi = idx[a], idx[b]
            if not faces_compatible(K, faces[lo], lo, faces[hi], hi):
                return False
    return True


def all_simplices(K, dim, include_degenerate=True):
    if include_degenerate:
        return list(K.simplices(dim))
    return [K.word(x) for x in K.cell_ids(dim)]


DEGENERATE_FACE_DEFAULT_DIM = 3


def _include_degenerate_default(p):
    # degenerate candidate faces multiply the search space; on by default
    # only in the dimensions where reports are expected to be complete
    return p <= DEGENERATE_FACE_DEFAULT_DIM


class _Budget:
    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def spend(self, amount=1):
        self.used += amount
        if self.used > self.cap:
            raise limits.BudgetError(
                f"horn enumeration budget exceeded ({self.used} > {self.cap} states)"
            )


def enumerate_horns(K, p, k=None, include_degenerate=None, budget=None):
    """All horn instances of shape (p, k); all k when k is None.

    ``include_degenerate`` controls whether degenerate words may appear as
    candidate faces (defaults to True for p <= 3).  Deterministic order:
    k ascending, then face words in enumeration order.
    """
    if p < 1:
        raise ValueError("horns need p >= 1")
    if include_degenerate is None:
        include_degenerate = _include_degenerate_default(p)
    tally = budget if isinstance(budget, _Budget) else _Budget(budget or limits.MAX_HORNS)
    ks = [k] if k is not None else list(range(p + 1))
    candidates = all_simplices(K, p - 1, include_degenerate)
    out = []
    for kk in ks:
        if not 0 <= kk <= p:
            raise ValueError(f"horn index {kk} out of range for p={p}")
        positions = [i for i in range(p + 1) if i != kk]
        assignment = {}

        def extend(pos_index):
            tally.spend()
            if pos_index == len(positions):
                out.append(HornInstance(p, kk, dict(assignment)))
                return
            i = positions[pos_index]
            for cand in candidates:
                ok = True
                for j in positions[:pos_index]:
                    if not faces_compatible(K, assignment[j], j, cand, i):
                        ok = False
                        break
                if ok:
                    assignment[i] = cand
                    extend(pos_index + 1)
                    del assignment[i]

        extend(0)
    return out


def find_filler(K, horn):
    """A p-simplex word matching every stated face, or None.

    The search covers all p-simplices, degenerate words included, so None
    certifies that no filler exists in the presented complex.
    """
    for cand in K.simplices(horn.p):
        if all(K.face_of_word(cand, i) == w for i, w in horn.faces.items()):
            return cand
    return None


def kan_report(K, max_dim, include_degenerate=None, budget=None):
    """Unfilled horn instances of dimension p <= max_dim, in sorted order."""
    tally = _Budget(budget or limits.MAX_HORNS)
    missing = []
    for p in range(1, max_dim + 1):
        for horn in enumerate_horns(K, p, include_degenerate=include_degenerate, budget=tally):
            if find_filler(K, horn) is None:
                missing.append(horn)
    missing.sort(key=lambda h: h.sort_key())
    return missing


def is_kan_through(K, max_dim, include_degenerate=None):
    return not kan_report(K, max_dim, include_degenerate)


class FibrantResult:
    def __init__(self, complex, inclusion, attached_per_stage, residual, stages_run):
        self.complex = complex
        self.inclusion = inclusion
        self.attached_per_stage = attached_per_stage
        self.residual = residual
        self.stages_run = stages_run

    @property
    def total_attached(self):
        return sum(len(s) for s in self.attached_per_stage)

    def __repr__(self):
        per = ", ".join(str(len(s)) for s in self.attached_per_stage)
        return (
            f"<FibrantResult {self.complex.name!r} attached [{per}] "
            f"residual {len(self.residual)}>"
        )


def _fresh_id(K, stem):
    if not K.has_cell(stem):
        return stem
    n = 1
    while K.has_cell(f"{stem}_{n}"):
        n += 1
    return f"{stem}_{n}"


def fibrant_approx_bounded(K, max_dim, stages, include_degenerate=None):
    """Fill horns stage by stage up to the given dimension.

    Every horn instance present at the start of a stage has a filler when
    the stage ends; attachments can create new horns, which later stages
    (or the residual report) pick up.  The vertex set is preserved: a
    1-horn always has the degenerate filler s_0 at its vertex, so free
    fillers are only ever attached in dimensions >= 2.
    """
    current = SimplicialSetPresentation(
        f"{K.name}^fib",
        {d: list(ids) for d, ids in K.cells.items()},
        dict(K.faces),
        basepoint=K.basepoint,
        truncated_above=K.truncated_above,
    )
    attached_per_stage = []
    counter = 0
    for _ in range(stages):
        horns = []
        for p in range(1, max_dim + 1):
            horns.extend(enumerate_horns(current, p, include_degenerate=include_degenerate))
        horns.sort(key=lambda h: h.sort_key())
        attached = []
        for horn in horns:
            if find_filler(current, horn) is not None:
                continue
            p, k = horn.p, horn.k
            z = _fresh_id(current, f"fill{counter}")
            u = _fresh_id(current, f"fill{counter}cap")
            counter += 1
            cells = {d: list(ids) for d, ids in current.cells.items()}
            faces = dict(current.faces)
            cells.setdefault(p, []).append(z)
            cells.setdefault(p - 1, []).append(u)
            for i, w in horn.faces.items():
                faces[(z, i)] = w
            faces[(z, k)] = nondegenerate(u, p - 1)
            # faces of the new cap are forced by d_j (d_k z) identities
            for j in range(p):
                if j < k:
                    faces[(u, j)] = current.face_of_word(horn.faces[j], k - 1)
                else:
                    faces[(u, j)] = current.face_of_word(horn.faces[j + 1], k)
            current = SimplicialSetPresentation(
                current.name, cells, faces,
                basepoint=current.basepoint,
                truncated_above=current.truncated_above,
            )
            attached.append((horn, z, u))
        attached_per_stage.append(attached)
    inclusion = SimplicialMap(
        K, current, {x: nondegenerate(x, d) for d, x in K.all_cells()}, name=f"{K.name}->fib"
    )
    residual = kan_report(current, max_dim, include_degenerate=include_degenerate)
    return FibrantResult(current, inclusion, attached_per_stage, residual, stages)


def moore_filler(G, p, k, faces):
    """Filler for a horn in a simplicial group, by the classical recursion.

    ``G`` provides identity/mul/inv/face/degen per level; ``faces`` maps
    each index i != k to an element of level p-1 satisfying the matching
    condition.  Returns an element y of level p with face(p, i, y) equal to
    the stated face for every i != k.
    """
    expected = [i for i in range(p + 1) if i != k]
    if sorted(faces) != expected:
        raise ValueError(f"need faces exactly at {expected}")
    for a in range(len(expected)):
        for b in range(a + 1, len(expected)):
            lo, hi = expected[a], expected[b]
            left = G.face(p - 1, lo, faces[hi])
            right = G.face(p - 1, hi - 1, faces[lo])
            if left != right:
                raise ValueError(f"faces {lo} and {hi} are not compatible")

    w = G.identity(p)
    for r in range(k):
        c = G.mul(p - 1, G.inv(p - 1, G.face(p, r, w)), faces[r])
        w = G.mul(p, w, G.degen(p - 1, r, c))
    for r in range(p, k, -1):
        c = G.mul(p - 1, G.inv(p - 1, G.face(p, r, w)), faces[r])
        w = G.mul(p, w, G.degen(p - 1, r - 1, c))
    return w
