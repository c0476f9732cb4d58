"""Discrete groups for twisting functions and simplicial groups for filler
algorithms.

Finite groups are multiplication tables over string element names; the free
abelian groups carry integer-vector elements and exist so that twisting
labels and degree-1 cocycle data can use an infinite group without ever
enumerating it.
"""

from itertools import permutations


class FiniteGroup:
    """A finite group given by element names and a multiplication table."""

    def __init__(self, name, elements, table):
        self.name = name
        self.elements = list(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate element names")
        self.table = {(a, b): table[(a, b)] for a in self.elements for b in self.elements}
        for value in self.table.values():
            if value not in set(self.elements):
                raise ValueError(f"table value {value!r} is not an element")
        self.identity = self._find_identity()
        self._inverse = {}
        for a in self.elements:
            inv = next((b for b in self.elements if self.mul(a, b) == self.identity), None)
            if inv is None or self.mul(inv, a) != self.identity:
                raise ValueError(f"element {a!r} has no two-sided inverse")
            self._inverse[a] = inv
        self._check_associativity()

    def _find_identity(self):
        for e in self.elements:
            if all(self.table[(e, x)] == x and self.table[(x, e)] == x for x in self.elements):
                return e
        raise ValueError("no identity element")

    def _check_associativity(self):
        els = self.elements
        for a in els:
            for b in els:
                ab = self.mul(a, b)
                for c in els:
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)):
                        raise ValueError(f"associativity fails at ({a!r}, {b!r}, {c!r})")

    @property
    def order(self):
        return len(self.elements)

    @property
    def is_finite(self):
        return True

    def mul(self, a, b):
        return self.table[(a, b)]

    def inv(self, a):
        return self._inverse[a]

    def is_identity(self, a):
        return a == self.identity

    def is_abelian(self):
        return all(self.mul(a, b) == self.mul(b, a) for a in self.elements for b in self.elements)

    def element_order(self, a):
        n, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n

    def __repr__(self):
        return f"<FiniteGroup {self.name} order {self.order}>"


def cyclic(n):
    """Cyclic group of order n with elements e, g, g2, ..."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    names = ["e"] + ["g" if i == 1 else f"g{i}" for i in range(1, n)]
    table = {}
    for i in range(n):
        for j in range(n):
            table[(names[i], names[j])] = names[(i + j) % n]
    return FiniteGroup(f"Z{n}", names, table)


def klein_four():
    names = ["e", "a", "b", "c"]
    idx = {x: i for i, x in enumerate(names)}
    table = {}
    for x in names:
        for y in names:
            table[(x, y)] = names[idx[x] ^ idx[y]]
    return FiniteGroup("V4", names, table)


def symmetric3():
    """The symmetric group on 3 letters, elements named by one-line notation."""
    perms = sorted(permutations(range(3)))
    name_of = {p: "p" + "".join(map(str, p)) for p in perms}
    table = {}
    for p in perms:
        for q in perms:
            comp = tuple(p[q[i]] for i in range(3))
            table[(name_of[p], name_of[q])] = name_of[comp]
    return FiniteGroup("S3", [name_of[p] for p in perms], table)


class FreeAbelianGroup:
    """Z^rank with tuple elements; infinite, so never enumerated."""

    def __init__(self, rank, name=None):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        self.name = name or f"Z^{rank}"
        self.identity = (0,) * rank

    @property
    def is_finite(self):
        return False

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        return tuple(-x for x in a)

    def is_identity(self, a):
        return all(x == 0 for x in a)

    def is_abelian(self):
        return True

    def element(self, *coeffs):
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients")
        return tuple(int(c) for c in coeffs)

    def format_element(self, a):
        if self.is_identity(a):
            return "0"
        return "(" + ",".join(str(x) for x in a) + ")"

    def parse_element(self, text):
        if text.strip() in ("0", "e"):
            return self.identity
        body = text.strip().strip("()")
        parts = [int(p) for p in body.split(",")]
        return self.element(*parts)

    def __repr__(self):
        return f"<FreeAbelianGroup rank {self.rank}>"


class ConstantSimplicialGroup:
    """The constant simplicial group on a discrete group: all face and
    degeneracy operators are the identity."""

    def __init__(self, group):
        self.group = group
        self.name = f"const({group.name})"

    def identity(self, n):
        return self.group.identity

    def mul(self, n, a, b):
        return self.group.mul(a, b)

    def inv(self, n, a):
        return self.group.inv(a)

    def face(self, n, i, a):
        if not 0 <= i <= n or n < 1:
            raise ValueError(f"d_{i} undefined at level {n}")
        return a

    def degen(self, n, i, a):
        if not 0 <= i <= n:
            raise ValueError(f"s_{i} undefined at level {n}")
        return a

    def level_elements(self, n):
        return list(self.group.elements)


class NerveSimplicialGroup:
    """The nerve of a finite abelian group as a simplicial group.

    Level n consists of n-tuples of elements with pointwise multiplication
    (a homomorphism only because the group is abelian); faces multiply
    adjacent entries or drop the ends, degeneracies insert the identity.
    Unlike the constant simplicial group this has genuinely different
    faces, so it exercises filler algorithms for real.
    """

    def __init__(self, group):
        if not group.is_abelian():
            raise ValueError("nerve multiplication is levelwise only for abelian groups")
        self.group = group
        self.name = f"nerve({group.name})"

    def identity(self, n):
        return (self.group.identity,) * n

    def mul(self, n, a, b):
        return tuple(self.group.mul(x, y) for x, y in zip(a, b))

    def inv(self, n, a):
        return tuple(self.group.inv(x) for x in a)

    def face(self, n, i, a):
        if len(a) != n or not 0 <= i <= n or n < 1:
            raise ValueError(f"d_{i} undefined at level {n}")
        if i == 0:
            return a[1:]
        if i == n:
            return a[:-1]
        return a[: i - 1] + (self.group.mul(a[i - 1], a[i]),) + a[i + 1:]

    def degen(self, n, i, a):
        if len(a) != n or not 0 <= i <= n:
            raise ValueError(f"s_{i} undefined at level {n}")
        return a[:i] + (self.group.identity,) + a[i:]

    def level_elements(self, n):
        from itertools import product as iproduct

        return [tuple(t) for t in iproduct(self.group.elements, repeat=n)]
