"""Characteristic classes of twisted products from group cocycles.

A normalized group k-cochain assigns a coefficient to each k-tuple of group
elements, vanishing when any entry is the identity.  Pulling such a cocycle
back along the classifying map of a twisting function gives a simplicial
cocycle on the base; its cohomology class is the characteristic class, and
naturality under base change is a checkable identity.
"""

from itertools import product as iproduct

from .bundles import pullback_twisting
from .chains import Cochain, cohomology


class GroupCochain:
    """Normalized group cochain with Z or Z/m values.

    For a finite group, ``values`` maps k-tuples of element names to ints;
    missing tuples mean zero, and tuples containing the identity must be
    zero.  For a free abelian group only degree 1 is supported, with
    ``values`` a coefficient vector: the cochain is the homomorphism
    z -> sum(z_i * values_i).
    """

    def __init__(self, group, degree, values, modulus=0, linear=False):
        self.group = group
        self.degree = degree
        self.modulus = modulus
        self.linear = linear
        if linear:
            if degree != 1:
                raise ValueError("linear cochains only exist in degree 1")
            self.coeffs = tuple(int(c) for c in values)
            if len(self.coeffs) != group.rank:
                raise ValueError("coefficient vector does not match the group rank")
        else:
            self.values = {}
            for key, v in values.items():
                key = tuple(key)
                if len(key) != degree:
                    raise ValueError(f"key {key!r} has length {len(key)}, expected {degree}")
                if any(group.is_identity(g) for g in key):
                    if int(v) != 0:
                        raise ValueError(f"normalized cochain must vanish on {key!r}")
                    continue
                self.values[key] = int(v) % modulus if modulus else int(v)

    def evaluate(self, args):
        args = tuple(args)
        if len(args) != self.degree:
            raise ValueError(f"expected {self.degree} arguments")
        if self.linear:
            z = args[0]
            total = sum(int(zi) * c for zi, c in zip(z, self.coeffs))
            return total % self.modulus if self.modulus else total
        if any(self.group.is_identity(g) for g in args):
            return 0
        return self.values.get(args, 0)


def coboundary_value(c, args):
    """The bar coboundary of a group cochain at a (k+1)-tuple."""
    G, k = c.group, c.degree
    total = c.evaluate(args[1:])
    for i in range(1, k + 1):
        merged = args[: i - 1] + (G.mul(args[i - 1], args[i]),) + args[i + 1:]
        total += (-1) ** i * c.evaluate(merged)
    total += (-1) ** (k + 1) * c.evaluate(args[:-1])
    return total % c.modulus if c.modulus else total


def group_cocycle_check(c):
    """Exhaustive cocycle test for finite groups; linear degree-1 cochains
    are homomorphisms into an abelian group, hence always cocycles."""
    if c.linear:
        return True
    for args in iproduct(c.group.elements, repeat=c.degree + 1):
        if coboundary_value(c, args) != 0:
            return False
    return True


def to_nerve_cochain(c, nerve):
    """The simplicial cochain on the nerve with the same values."""
    values = [c.evaluate(nerve.cell_tuples[cid]) for cid in nerve.cell_ids(c.degree)]
    return Cochain(nerve, c.degree, values, c.modulus)


def _edge_labels_of_cell(twist, x):
    base = twist.base
    d = base.dim_of(x)
    labels = []
    for i in range(1, d + 1):
        edge = base.word(x)
        for j in range(d, i, -1):
            edge = base.face_of_word(edge, j)
        for _ in range(i - 1):
            edge = base.face_of_word(edge, 0)
        labels.append(twist.label_of_word(edge))
    return tuple(labels)


class CharacteristicClass:
    """A cocycle on the base plus its position in cohomology."""

    def __init__(self, twist, group_cochain, cochain, degree_group):
        self.twist = twist
        self.group_cochain = group_cochain
        self.cochain = cochain
        self.degree = group_cochain.degree
        self.modulus = group_cochain.modulus
        self.cohomology = degree_group
        self.coords = degree_group.coords(cochain.vector)

    @property
    def is_zero(self):
        return all(v == 0 for v in self.coords)

    def describe(self):
        kind = "zero" if self.is_zero else "nonzero"
        return f"H^{self.degree} class: {kind} ({self.cohomology.group})"

    def __repr__(self):
        return f"<CharacteristicClass {self.describe()}>"


def characteristic_cochain(twist, c):
    """The base cochain x -> c(edge labels of x): the classifying pullback."""
    K = twist.base
    if not c.linear and c.group is not twist.group:
        raise ValueError("cochain and twisting use different groups")
    values = [c.evaluate(_edge_labels_of_cell(twist, x)) for x in K.cell_ids(c.degree)]
    return Cochain(K, c.degree, values, c.modulus)


def characteristic_class(twist, c):
    """The class of the pulled-back cocycle in H^k(base; coefficients).

    The group cochain must be a cocycle; for infinite (free abelian) label
    groups only the linear degree-1 form is available.
    """
    if not c.linear and not c.group.is_finite:
        raise ValueError("infinite groups support only linear degree-1 cochains")
    if not group_cocycle_check(c):
        raise ValueError("the group cochain is not a cocycle")
    K = twist.base
    cochain = characteristic_cochain(twist, c)
    degree_group = cohomology(K, coefficients=c.modulus, max_dim=max(c.degree, K.top_dim))[c.degree]
    if not degree_group.reliable:
        raise ValueError(f"degree {c.degree} cohomology of {K.name!r} is unreliable: truncated")
    if not degree_group.is_cycle(cochain.vector):
        raise AssertionError("pullback of a group cocycle failed to be a cocycle")
    return CharacteristicClass(twist, c, cochain, degree_group)


def pullback_cochain(f, cochain):
    """f^* of a simplicial cochain: evaluate on the image word."""
    values = []
    for y in f.source.cell_ids(cochain.degree):
        values.append(cochain.evaluate(f.map_word(f.source.word(y))))
    return Cochain(f.source, cochain.degree, values, cochain.modulus)


class NaturalityReport:
    def __init__(self, ok, details):
        self.ok = ok
        self.details = details

    def __bool__(self):
        return self.ok


def naturality_check(f, twist, c):
    """Verify class(pullback twisting) = pullback(class) in H^k(source).

    Both sides are computed as honest cocycles on the source of f; they
    are compared in cohomology, i.e. their difference must be a
    coboundary.  Returns a NaturalityReport.
    """
    details = []
    pulled = pullback_twisting(f, twist)
    lhs = characteristic_cochain(pulled, c)
    rhs = pullback_cochain(f, characteristic_cochain(twist, c))
    source_top = f.source.top_dim
    degree_group = cohomology(
        f.source, coefficients=c.modulus, max_dim=max(c.degree, source_top)
    )[c.degree]
    for side, vec in (("left", lhs.vector), ("right", rhs.vector)):
        if not degree_group.is_cycle(vec):
            details.append(f"{side} side is not a cocycle")
    if details:
        return NaturalityReport(False, details)
    ok = degree_group.is_trivial_class(lhs.vector - rhs.vector)
    details.append(f"lhs coords {degree_group.coords(lhs.vector)}")
    details.append(f"rhs coords {degree_group.coords(rhs.vector)}")
    if not ok:
        details.append("classes differ in cohomology")
    return NaturalityReport(ok, details)


def cyclic_identity_cocycle(group, modulus=None):
    """For a cyclic group of order n: the 1-cocycle g^i -> i mod n."""
    n = group.order
    if modulus is None:
        modulus = n
    generator = next(x for x in group.elements if group.element_order(x) == n)
    power, acc = {group.identity: 0}, group.identity
    for i in range(1, n):
        acc = group.mul(acc, generator)
        power[acc] = i
    values = {(x,): power[x] for x in group.elements if x != group.identity}
    return GroupCochain(group, 1, values, modulus)
