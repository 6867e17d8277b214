"""
Table-backed finite groups: Q8, SL2(F_3), extra-special p-groups, direct
products and the swap extension (Q8 x Q8) : Z/2.

Elements are the integers 0..n-1 with 0 the identity; each group keeps the
labels of the objects it was built from.
"""

import itertools
import logging
import re
from functools import cached_property

from sympy import factorint
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from .exceptions import GroupError

logger = logging.getLogger("wild_monodromy.groups")


class FiniteGroup:
    def __init__(self, name, labels, table):
        self.name = name
        self.labels = labels
        self.table = table
        self.order = len(labels)

    def __repr__(self):
        return f"<FiniteGroup {self.name} of order {self.order}>"

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    @classmethod
    def from_function(cls, name, elements, mul, identity):
        """Build the multiplication table of elements under mul."""
        elements = list(elements)
        elements.remove(identity)
        elements.insert(0, identity)
        index = {x: i for i, x in enumerate(elements)}
        table = []
        for x in elements:
            row = []
            for y in elements:
                try:
                    row.append(index[mul(x, y)])
                except KeyError:
                    raise GroupError(f"{name} is not closed under multiplication.") from None
            table.append(row)
        return cls(name, elements, table)

    def verify(self):
        """Check the group axioms on the full table."""
        n = self.order
        t = self.table
        for a in range(n):
            if t[0][a] != a or t[a][0] != a:
                raise GroupError(f"{self.name}: 0 is not an identity.")
            if sorted(t[a]) != list(range(n)):
                raise GroupError(f"{self.name}: row {a} is not a permutation.")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError(f"{self.name}: multiplication is not associative.")
        return True

    def index(self, label):
        return self.labels.index(label)

    def mul(self, a, b):
        return self.table[a][b]

    @cached_property
    def inverses(self):
        inverses = [0] * self.order
        for a in range(self.order):
            inverses[a] = self.table[a].index(0)
        return inverses

    def inverse(self, a):
        return self.inverses[a]

    def power(self, a, n):
        result = 0
        if n < 0:
            a, n = self.inverse(a), -n
        for _ in range(n):
            result = self.table[result][a]
        return result

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def order_profile(self):
        """Sorted element orders: a cheap isomorphism invariant."""
        return sorted(self.element_order(a) for a in range(self.order))

    def commutator(self, a, b):
        t, inv = self.table, self.inverses
        return t[t[t[inv[a]][inv[b]]][a]][b]

    def conjugate(self, a, g):
        """g a g^-1."""
        return self.table[self.table[g][a]][self.inverses[g]]

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    @cached_property
    def prime(self):
        """p if the group is a nontrivial p-group, else None."""
        factors = factorint(self.order)
        if len(factors) == 1:
            return next(iter(factors))
        return None

    def is_p_group(self):
        return self.prime is not None

    # Subgroups

    def generated(self, generators):
        elements = {0}
        frontier = [0]
        generators = list(set(generators))
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = self.table[x][g]
                if y not in elements:
                    elements.add(y)
                    frontier.append(y)
        return Subgroup(self, elements)

    def subgroup(self, elements, label=None):
        elements = set(elements)
        handle = Subgroup(self, elements, label)
        if self.generated(elements).elements != handle.elements:
            raise GroupError(f"{sorted(elements)} is not a subgroup of {self.name}.")
        return handle

    @property
    def whole(self):
        return Subgroup(self, set(range(self.order)), self.name)

    @property
    def trivial(self):
        return Subgroup(self, {0}, "1")

    def center(self):
        t = self.table
        elements = {a for a in range(self.order) if all(t[a][b] == t[b][a] for b in self)}
        return Subgroup(self, elements, f"Z({self.name})")

    def derived(self):
        commutators = {self.commutator(a, b) for a in self for b in self}
        return self.generated(commutators).labelled(f"D({self.name})")

    @cached_property
    def permutation_group(self):
        """The right regular representation as a sympy PermutationGroup."""
        return PermutationGroup(
            [Permutation([self.table[x][g] for x in self]) for g in self]
        )

    def is_nilpotent(self):
        return self.permutation_group.is_nilpotent

    def sylow(self, p):
        """Sylow p-subgroup of a nilpotent group: its elements of p-power order."""
        elements = {a for a in self if set(factorint(self.element_order(a))) <= {p}}
        return self.subgroup(elements, f"Syl{p}({self.name})")

    def frattini(self):
        if self.order == 1:
            return self.trivial
        if self.is_nilpotent():
            # Phi(G) is the product of Phi(P) = D(P) P^p over the Sylow subgroups.
            generators = set()
            for p in factorint(self.order):
                sylow = self.sylow(p).elements
                generators |= {self.commutator(a, b) for a in sylow for b in sylow}
                generators |= {self.power(a, p) for a in sylow}
            return self.generated(generators).labelled(f"Phi({self.name})")
        elements = set(range(self.order))
        for m in self.maximal_subgroups():
            elements &= m.elements
        return Subgroup(self, elements, f"Phi({self.name})")

    def subgroups(self):
        """Every subgroup, each one a join of cyclic subgroups."""
        cyclic = {frozenset(self.generated([a]).elements) for a in self}
        found = set(cyclic)
        frontier = list(cyclic)
        while frontier:
            current = frontier.pop()
            for c in cyclic:
                if c <= current:
                    continue
                joined = frozenset(self.generated(current | c).elements)
                if joined not in found:
                    found.add(joined)
                    frontier.append(joined)
        return [Subgroup(self, elements) for elements in sorted(found, key=sorted)]

    def maximal_subgroups(self):
        proper = [h for h in self.subgroups() if h.order < self.order]
        return [h for h in proper if not any(h.elements < k.elements for k in proper)]

    def subgroups_of_order(self, n):
        return [h for h in self.subgroups() if h.order == n]

    def quotient(self, normal, name=None):
        if not normal.is_normal():
            raise GroupError(f"{normal.label} is not normal in {self.name}.")
        cosets = []
        coset_of = {}
        for a in self:
            if a in coset_of:
                continue
            coset = frozenset(self.table[a][n] for n in normal.elements)
            for x in coset:
                coset_of[x] = len(cosets)
            cosets.append(coset)
        representatives = [min(c) for c in cosets]
        table = [
            [coset_of[self.table[a][b]] for b in representatives] for a in representatives
        ]
        labels = [self.labels[a] for a in representatives]
        return FiniteGroup(name or f"{self.name}/{normal.label}", labels, table)

    def is_extraspecial(self):
        """
        Non-abelian p-group with D(G) = Z(G) = Phi(G) of order p; such a
        group has order p^(2n+1).
        """
        p = self.prime
        if p is None:
            raise GroupError(f"{self.name} is not a p-group.")
        if self.is_abelian():
            return False
        center = self.center()
        if center.order != p:
            return False
        if self.derived().elements != center.elements:
            return False
        if self.frattini().elements != center.elements:
            return False
        exponent = factorint(self.order)[p]
        if exponent % 2 != 1:
            raise GroupError(f"Extra-special {self.name} has even exponent {exponent}.")
        return True


class Subgroup:
    def __init__(self, group, elements, label=None):
        self.group = group
        self.elements = frozenset(elements)
        self.label = label or f"<{len(self.elements)} elements of {group.name}>"

    def __repr__(self):
        return f"<Subgroup {self.label} of order {self.order}>"

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.group is other.group
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash(self.elements)

    def __contains__(self, a):
        return a in self.elements

    def __le__(self, other):
        return self.elements <= other.elements

    def __lt__(self, other):
        return self.elements < other.elements

    @property
    def order(self):
        return len(self.elements)

    def labelled(self, label):
        return Subgroup(self.group, self.elements, label)

    def is_normal(self):
        g = self.group
        return all(g.conjugate(a, x) in self.elements for a in self.elements for x in g)

    def as_group(self, name=None):
        members = sorted(self.elements)
        position = {a: i for i, a in enumerate(members)}
        table = [[position[self.group.table[a][b]] for b in members] for a in members]
        labels = [self.group.labels[a] for a in members]
        return FiniteGroup(name or self.label, labels, table)


# Constructors

QUATERNION_UNITS = {
    ("1", "1"): (1, "1"),
    ("1", "i"): (1, "i"),
    ("1", "j"): (1, "j"),
    ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"),
    ("i", "i"): (-1, "1"),
    ("i", "j"): (1, "k"),
    ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"),
    ("j", "i"): (-1, "k"),
    ("j", "j"): (-1, "1"),
    ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"),
    ("k", "i"): (1, "j"),
    ("k", "j"): (-1, "i"),
    ("k", "k"): (-1, "1"),
}


def quaternion_group():
    def mul(x, y):
        sign, unit = QUATERNION_UNITS[(x[1], y[1])]
        return (x[0] * y[0] * sign, unit)

    elements = [(s, u) for s in (1, -1) for u in "1ijk"]
    group = FiniteGroup.from_function("Q8", elements, mul, (1, "1"))
    group.labels = [("" if s == 1 else "-") + u for s, u in group.labels]
    return group


def dihedral_group(n=4):
    """Symmetries of an n-gon; order 2n. Elements (k, e) mean r^k s^e."""

    def mul(x, y):
        return ((x[0] + (-1) ** x[1] * y[0]) % n, (x[1] + y[1]) % 2)

    elements = [(k, e) for e in (0, 1) for k in range(n)]
    return FiniteGroup.from_function(f"D{2 * n}", elements, mul, (0, 0))


def cyclic_group(n):
    return FiniteGroup.from_function(
        f"C{n}", range(n), lambda x, y: (x + y) % n, 0
    )


def sl2(p=3):
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            (a * e + b * g) % p,
            (a * f + b * h) % p,
            (c * e + d * g) % p,
            (c * f + d * h) % p,
        )

    elements = [
        m for m in itertools.product(range(p), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % p == 1
    ]
    return FiniteGroup.from_function(f"SL2(F{p})", elements, mul, (1, 0, 0, 1))


def heisenberg_group(p, n):
    """
    Extra-special group of order p^(2n+1) and exponent p (p odd): triples
    (a, b, c) with a, b in F_p^n, c in F_p and
    (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a.b').
    """
    if p == 2:
        raise GroupError("The Heisenberg construction needs an odd prime.")

    def mul(x, y):
        a, b, c = x
        a2, b2, c2 = y
        dot = sum(u * v for u, v in zip(a, b2, strict=True))
        return (
            tuple((u + v) % p for u, v in zip(a, a2, strict=True)),
            tuple((u + v) % p for u, v in zip(b, b2, strict=True)),
            (c + c2 + dot) % p,
        )

    vectors = list(itertools.product(range(p), repeat=n))
    elements = [(a, b, c) for a in vectors for b in vectors for c in range(p)]
    zero = (0,) * n
    return FiniteGroup.from_function(
        f"extraspecial({p},{n})", elements, mul, (zero, zero, 0)
    )


def direct_product(*groups, name=None):
    def mul(x, y):
        return tuple(g.table[a][b] for g, a, b in zip(groups, x, y, strict=True))

    elements = list(itertools.product(*(range(g.order) for g in groups)))
    group = FiniteGroup.from_function(
        name or "x".join(g.name for g in groups), elements, mul, (0,) * len(groups)
    )
    return group


def central_product_2(factors, name):
    """
    Central product of 2-groups with centers of order 2: the direct product
    modulo the pairs of central involutions.
    """
    product = direct_product(*factors)
    involutions = []
    for g in factors:
        (z,) = g.center().elements - {0}
        involutions.append(z)
    central = []
    for bits in itertools.product((0, 1), repeat=len(factors)):
        if sum(bits) % 2 == 0:
            element = tuple(z if bit else 0 for z, bit in zip(involutions, bits, strict=True))
            central.append(product.index(element))
    return product.quotient(product.subgroup(central), name=name)


def extraspecial_group(p, n, kind=None):
    """
    Extra-special group of order p^(2n+1). For odd p this is the Heisenberg
    group of exponent p. For p = 2, kind "minus" (the default) is the central
    product of Q8 with n - 1 copies of D8, and "plus" is n copies of D8.
    """
    if n < 1:
        raise GroupError("extraspecial() needs n >= 1.")
    if p != 2:
        if kind not in (None, "exponent-p"):
            raise GroupError(f"Unsupported extra-special type {kind!r} for p = {p}.")
        return heisenberg_group(p, n)
    kind = kind or "minus"
    if kind == "minus":
        factors = [quaternion_group()] + [dihedral_group(4) for _ in range(n - 1)]
    elif kind == "plus":
        factors = [dihedral_group(4) for _ in range(n)]
    else:
        raise GroupError(f"Unsupported extra-special type {kind!r} for p = 2.")
    if n == 1:
        group = factors[0]
        group.name = f"extraspecial(2,1,{kind})"
        return group
    return central_product_2(factors, f"extraspecial(2,{n},{kind})")


def swap_extension(base, name=None):
    """(base x base) : Z/2, the generator of Z/2 swapping the factors."""
    n = base.order

    def mul(x, y):
        (a, b, s), (c, d, t) = x, y
        if s:
            c, d = d, c
        return (base.table[a][c], base.table[b][d], (s + t) % 2)

    elements = [(a, b, s) for a in range(n) for b in range(n) for s in (0, 1)]
    return FiniteGroup.from_function(
        name or f"({base.name}x{base.name}):2", elements, mul, (0, 0, 0)
    )


EXTRASPECIAL_RE = re.compile(r"^extraspecial\((\d+),(\d+)(?:,([a-z-]+))?\)$")


def make_named(name):
    """
    Build a group from its name: Q8, D8, SL2F3, C<n>, 1,
    extraspecial(p,n[,kind]), products "AxB" and "(AxA):2".
    """
    key = name.replace(" ", "")
    if key.startswith("(") and key.endswith("):2"):
        inner = key[1:-3]
        parts = inner.split("x")
        if len(parts) != 2 or parts[0] != parts[1]:
            raise GroupError(f"Unsupported group {name!r}.")
        return swap_extension(make_named(parts[0]), name=key)
    match = EXTRASPECIAL_RE.match(key)
    if match:
        p, n, kind = match.groups()
        return extraspecial_group(int(p), int(n), kind)
    if "x" in key:
        return direct_product(*(make_named(part) for part in key.split("x")), name=key)
    if key == "Q8":
        return quaternion_group()
    if key == "D8":
        return dihedral_group(4)
    if key in {"SL2F3", "SL2(F3)"}:
        return sl2(3)
    if key == "1":
        return cyclic_group(1)
    if key.startswith("C") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    raise GroupError(f"Unsupported group {name!r}.")


def center(group):
    return group.center()


def derived(group):
    return group.derived()


def frattini(group):
    return group.frattini()


def is_extraspecial(group):
    return group.is_extraspecial()


def frattini_closure_surjective(group, images):
    """
    True when images together with Phi(G) generate G, that is, when the
    images generate G/Phi(G); a subgroup with this property is G itself.
    """
    phi = group.frattini()
    closure = group.generated(set(images) | set(phi.elements))
    return closure.order == group.order


def frattini_images(group, vectors):
    """
    Elements of G for vectors over F_p, additive modulo Phi(G): a basis of
    their span goes to elements whose classes are independent in G/Phi(G).
    Return (images, dimension of the span).
    """
    p = group.prime
    if p is None:
        raise GroupError(f"{group.name} is not a p-group.")
    domain = GF(p)
    rows = [[domain(x) for x in vector] for vector in vectors]
    width = len(rows[0]) if rows else 0
    basis = []
    for row in rows:
        candidate = DomainMatrix([*basis, row], (len(basis) + 1, width), domain)
        if candidate.rank() > len(basis):
            basis.append(row)
    phi = set(group.frattini().elements)
    generators = []
    for a in group:
        if len(generators) == len(basis):
            break
        if a not in group.generated(phi | set(generators)):
            generators.append(a)
    if len(generators) < len(basis):
        raise GroupError(
            f"The vectors span dimension {len(basis)}, more than G/Phi(G) of {group.name}."
        )
    if not basis:
        return [0] * len(rows), 0
    columns = DomainMatrix(basis, (len(basis), width), domain).transpose()
    images = []
    for row in rows:
        target = DomainMatrix([[x] for x in row], (width, 1), domain)
        reduced, _ = columns.hstack(target).rref()
        image = 0
        for generator, coordinate in zip(generators, reduced.to_list(), strict=False):
            image = group.mul(image, group.power(generator, int(coordinate[-1]) % p))
        images.append(image)
    logger.debug(
        "Frattini images of %s vectors",
        len(rows),
        extra={"group": group.name, "dimension": len(basis)},
    )
    return images, len(basis)


def extraspecial_sequence(group):
    """
    Verify 0 -> Z(G) -> G -> (Z/p)^2n -> 0: the quotient by the center is
    elementary abelian of order p^2n. Return 2n.
    """
    p = group.prime
    center_ = group.center()
    quotient = group.quotient(center_)
    if not quotient.is_abelian() or any(
        quotient.element_order(a) not in (1, p) for a in quotient
    ):
        raise GroupError(f"{group.name}/Z is not elementary abelian.")
    return factorint(quotient.order).get(p, 0)
