"""
Swan conductor and conductor exponent of an abelian variety from the lower
ramification filtration of its monodromy group:

    sw = sum over i >= 1 of |G_i| / |G_0| * (2g - dim A[l]^{G_i})
    eps = 2g - dim A[l]^{G_0}
    f = eps + sw

The prime l never enters the computation.
"""

import logging
from fractions import Fraction

from .exceptions import ConductorError
from .filtration import LOWER, lower_profile, tame_base_change
from .oracles import load_frozen_dims

logger = logging.getLogger("wild_monodromy.conductor")


class FixedDimTable:
    def __init__(self, dims, genus, ell=None):
        self.dims = dict(dims)
        self.genus = genus
        self.ell = ell
        for label, dim in self.dims.items():
            if not 0 <= dim <= 2 * genus:
                raise ConductorError(f"dim for {label} = {dim} is outside [0, {2 * genus}].")
        if self.dims.setdefault("1", 2 * genus) != 2 * genus:
            raise ConductorError("The trivial subgroup must fix all of A[l].")

    def __repr__(self):
        return f"FixedDimTable(g={self.genus}, {self.dims})"

    def __getitem__(self, label):
        try:
            return self.dims[label]
        except KeyError:
            raise ConductorError(f"No fixed dimension for subgroup {label}.") from None

    def __contains__(self, label):
        return label in self.dims

    def check_monotone(self, profile):
        """Along the filtration, smaller subgroups fix at least as much."""
        previous = None
        for label, _ in profile.subgroup_chain():
            dim = self[label]
            if previous is not None and dim < previous:
                raise ConductorError(f"{label} fixes less than a larger subgroup.")
            previous = dim
        return True


class ConductorReport:
    def __init__(self, epsilon, sw, ledger, base=None):
        self.epsilon = epsilon
        self.sw = sw
        self.ledger = ledger
        self.base = base

    def __repr__(self):
        return f"ConductorReport(eps={self.epsilon}, sw={self.sw}, f={self.f})"

    @property
    def f(self):
        return self.epsilon + self.sw

    def as_dict(self):
        return {
            "epsilon": self.epsilon,
            "sw": self.sw,
            "f": self.f,
            "base": self.base,
            "ledger": self.ledger,
        }


def swan(profile, dims, base=None):
    if profile.mode != LOWER:
        profile = lower_profile(profile)
    two_g = 2 * dims.genus
    g0 = profile.inertia_order
    epsilon = two_g - dims[profile.label_at(0)] if g0 > 1 else 0
    ledger = []
    total = Fraction(0)
    previous = Fraction(0)
    for b, label, order in profile.breaks:
        if b < 1:
            previous = max(previous, b)
            continue
        length = b - max(previous, Fraction(0))
        contribution = length * Fraction(order, g0) * (two_g - dims[label])
        ledger.append(
            {
                "range": [max(previous, Fraction(0)) + 1, b],
                "label": label,
                "order": order,
                "length": length,
                "dim": dims[label],
                "contribution": contribution,
            }
        )
        total += contribution
        previous = b
    if total.denominator != 1:
        raise ConductorError(f"Swan conductor {total} is not an integer.", ledger)
    logger.debug(
        "sw = %s over %s",
        total,
        base or profile.group_name,
        extra={"ledger": ledger},
    )
    return ConductorReport(epsilon, int(total), ledger, base)


def swan_after_base_change(profile, dims, tame_degree, base=None):
    changed = tame_base_change(profile, tame_degree)
    if tame_degree == 1:
        return swan(changed, dims, base)
    inertia_label = changed.label_at(0)
    if inertia_label not in dims:
        original = dims[profile.label_at(0)]
        if original:
            raise ConductorError(f"No fixed dimension for {inertia_label}.")
        # A larger group fixes a subspace of what G_0 fixes.
        dims = FixedDimTable({**dims.dims, inertia_label: 0}, dims.genus, dims.ell)
    return swan(changed, dims, base)


def fixed_dims_good_reduction(p, n, labels=("G", "Z(G)")):
    """The quotient by Z(G) is P^1, so every subgroup containing Z(G) fixes 0."""
    q = p**n
    genus = Fraction(q * (p - 1), 2)
    if genus.denominator != 1:
        raise ConductorError(f"g = {genus} is not an integer.")
    return FixedDimTable({label: 0 for label in labels}, int(genus))


def fixed_dims_elliptic_q8(label):
    """2 g(E/H) for H in {1, Z(Q8), Q8} acting on E: w^2 - w = t^3."""
    dims = load_frozen_dims()["dims"]
    aliases = {"Z": "Z(Q8)", "G": "Q8"}
    try:
        return dims[aliases.get(label, label)]
    except KeyError:
        raise ConductorError(f"Unsupported subgroup {label!r} of Q8.") from None


def product_fixed_dims(labels):
    """
    Fixed dimensions on Jac = E1 x E2 for subgroups H1 x H2 labelled "H1xH2":
    the fixed space is the product of the fixed spaces.
    """
    dims = {}
    for label in labels:
        parts = label.split("x")
        if len(parts) != 2:
            raise ConductorError(f"Label {label} is not a product H1xH2.")
        dims[label] = sum(fixed_dims_elliptic_q8(part) for part in parts)
    return FixedDimTable(dims, 2)
