"""
Ramification filtrations of finite Galois extensions of local fields.

A profile lists breaks [(b_0, label_0, order_0), (b_1, label_1, order_1), ...]
with b_0 < b_1 < ...: the filtration subgroup at index i is subgroup k for
b_(k-1) < i <= b_k (b_(-1) = -1), and trivial past the last break. Lower
breaks are integers, upper breaks exact rationals.
"""

import logging
import math
from fractions import Fraction

from sympy import factorint

from .exceptions import FiltrationError, HyodoRangeError

logger = logging.getLogger("wild_monodromy.filtration")

LOWER = "lower"
UPPER = "upper"


class FiltrationProfile:
    def __init__(self, breaks, mode=LOWER, group=None, group_name=None, p=None):
        if mode not in {LOWER, UPPER}:
            raise FiltrationError(f"Unknown filtration mode {mode!r}.")
        self.mode = mode
        self.breaks = [(Fraction(b), str(label), int(order)) for b, label, order in breaks]
        self.group = group
        self.group_name = group_name or (group.name if group is not None else None)
        if self.group_name is None:
            self.group_name = self.breaks[0][1] if self.breaks else "1"
        self.p = p or _prime_of(self.breaks)
        self.validate()

    def __repr__(self):
        breaks = ", ".join(f"{b}:{label}({order})" for b, label, order in self.breaks)
        return f"<FiltrationProfile {self.mode} {self.group_name} [{breaks}]>"

    def __eq__(self, other):
        return (
            isinstance(other, FiltrationProfile)
            and self.mode == other.mode
            and self.breaks == other.breaks
        )

    def validate(self):
        previous_break, previous_order = None, None
        for b, label, order in self.breaks:
            if b < -1:
                raise FiltrationError(f"Break {b} is below -1.")
            if self.mode == LOWER and b.denominator != 1:
                raise FiltrationError(f"Lower break {b} is not an integer.")
            if previous_break is not None and b <= previous_break:
                raise FiltrationError("Breaks must increase strictly.")
            if previous_order is not None:
                if order >= previous_order or previous_order % order:
                    raise FiltrationError(
                        f"Order {order} of {label} does not strictly divide {previous_order}."
                    )
            if order < 2:
                raise FiltrationError(f"{label}: subgroups listed at breaks must be nontrivial.")
            previous_break, previous_order = b, order
        if self.p is not None:
            wild = self.wild_order
            if set(factorint(wild)) - {self.p}:
                raise FiltrationError(f"G_1 of order {wild} is not a {self.p}-group.")
            tame = self.inertia_order // wild
            if tame % self.p == 0:
                raise FiltrationError(f"G_0/G_1 of order {tame} is divisible by p.")

    @classmethod
    def trivial(cls, mode=LOWER):
        return cls([], mode)

    @property
    def ramified_breaks(self):
        return [entry for entry in self.breaks if entry[0] >= 0]

    def order_at(self, i):
        """Order of G_i (lower mode) or G^i (upper mode)."""
        i = Fraction(i)
        for b, _, order in self.breaks:
            if i <= b:
                return order
        return 1

    def order_after(self, i):
        """Order of the subgroup just past i: at the midpoint to the next break."""
        i = Fraction(i)
        following = [b for b, _, _ in self.breaks if b > i]
        return self.order_at((i + following[0]) / 2 if following else i + 1)

    def label_at(self, i):
        i = Fraction(i)
        for b, label, _ in self.breaks:
            if i <= b:
                return label
        return "1"

    @property
    def inertia_order(self):
        return self.order_at(0)

    @property
    def wild_order(self):
        return self.order_at(1) if self.mode == LOWER else self.order_after(0)

    @property
    def tame_order(self):
        return self.inertia_order // self.wild_order

    def subgroup_chain(self):
        return [(label, order) for _, label, order in self.breaks] + [("1", 1)]

    def as_dict(self):
        return {
            "group": self.group_name,
            "mode": self.mode,
            "breaks": [[b, label, order] for b, label, order in self.breaks],
        }

    @classmethod
    def from_dict(cls, data, p=None):
        breaks = [(Fraction(str(b)), label, order) for b, label, order in data["breaks"]]
        return cls(breaks, data.get("mode", LOWER), group_name=data.get("group"), p=p)


def _prime_of(breaks):
    wild = [order for b, _, order in breaks if b >= 1]
    if not wild:
        return None
    primes = factorint(wild[0])
    return next(iter(primes)) if len(primes) == 1 else None


class HerbrandFn:
    """
    Continuous piecewise-linear function on [-1, inf) that is the identity on
    [-1, 0]: vertices [(x_0, y_0) = (0, 0), (x_1, y_1), ...] and the slope
    after the last vertex.
    """

    def __init__(self, vertices, final_slope):
        self.vertices = [(Fraction(x), Fraction(y)) for x, y in vertices]
        self.final_slope = Fraction(final_slope)

    def __repr__(self):
        return f"HerbrandFn({self.vertices}, final_slope={self.final_slope})"

    def __call__(self, x):
        x = Fraction(x)
        if x <= 0:
            return x
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:], strict=False):
            if x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        x0, y0 = self.vertices[-1]
        return y0 + self.final_slope * (x - x0)

    def slopes(self):
        slopes = [
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:], strict=False)
        ]
        return [*slopes, self.final_slope]

    def inverse(self):
        return HerbrandFn([(y, x) for x, y in self.vertices], 1 / self.final_slope)

    def compose(self, inner):
        """self o inner."""
        points = {x for x, _ in inner.vertices}
        points |= {inner.inverse()(x) for x, _ in self.vertices}
        points = sorted(p for p in points if p >= 0)
        vertices = [(x, self(inner(x))) for x in points]
        return HerbrandFn(vertices, self.final_slope * inner.final_slope)

    def is_concave(self):
        slopes = self.slopes()
        return all(a >= b for a, b in zip(slopes, slopes[1:], strict=False))

    def is_convex(self):
        slopes = self.slopes()
        return all(a <= b for a, b in zip(slopes, slopes[1:], strict=False))


def phi(profile):
    """phi(u) = integral over [0, u] of |G_t| / |G_0| dt for a lower profile."""
    if profile.mode != LOWER:
        raise FiltrationError("phi() needs a lower profile.")
    g0 = profile.inertia_order
    vertices = [(Fraction(0), Fraction(0))]
    x, y = Fraction(0), Fraction(0)
    for b, _, order in profile.ramified_breaks:
        if b <= 0:
            continue
        y += (b - x) * Fraction(order, g0)
        x = b
        vertices.append((x, y))
    return HerbrandFn(vertices, Fraction(1, g0))


def psi(fn):
    return fn.inverse()


def upper_profile(lower):
    if lower.mode == UPPER:
        return lower
    fn = phi(lower)
    breaks = [(fn(b), label, order) for b, label, order in lower.breaks]
    return FiltrationProfile(
        breaks, UPPER, group=lower.group, group_name=lower.group_name, p=lower.p
    )


def lower_profile(upper):
    """Lower numbering from upper: psi(v) = integral of [G^0 : G^w] dw."""
    if upper.mode == LOWER:
        return upper
    g0 = upper.inertia_order
    breaks = []
    x, y = Fraction(0), Fraction(0)
    for b, label, order in upper.breaks:
        if b > 0:
            y += (b - x) * Fraction(g0, order)
            x = b
            breaks.append((y, label, order))
        else:
            breaks.append((b, label, order))
    for b, label, _ in breaks:
        if Fraction(b).denominator != 1:
            raise FiltrationError(f"Upper data give the non-integral lower break {b} for {label}.")
    return FiltrationProfile(
        breaks, LOWER, group=upper.group, group_name=upper.group_name, p=upper.p
    )


def serre_different(profile):
    """v_L of the different: sum over i >= 0 of (|G_i| - 1)."""
    if profile.mode != LOWER:
        profile = lower_profile(profile)
    total = 0
    previous = Fraction(-1)
    for b, _, order in profile.breaks:
        if b >= 0:
            total += (b - max(previous, Fraction(-1))) * (order - 1)
        previous = b
    return total


def compose_tower(sub, quot, labels=None, group_name=None):
    """
    Lower filtration of G = Gal(M/K) from H = Gal(M/L) (sub) and G/H =
    Gal(L/K) (quot): |G_i| = |H_i| * |(G/H)_phi_{M/L}(i)|.

    labels maps (sub label, quotient label) to the composite subgroup label;
    the pair naming "sub label.quotient label" is used when it is missing.
    """
    if sub.mode != LOWER or quot.mode != LOWER:
        raise FiltrationError("compose_tower() needs lower profiles.")
    labels = labels or {}
    phi_sub = phi(sub)
    psi_sub = psi(phi_sub)
    candidates = {b for b, _, _ in sub.ramified_breaks}
    for b, _, _ in quot.ramified_breaks:
        x = psi_sub(b)
        if x.denominator != 1:
            raise FiltrationError(
                f"Quotient break {b} does not come from an integral composite break ({x})."
            )
        candidates.add(x)

    def order_at(i):
        return sub.order_at(i) * quot.order_at(phi_sub(i))

    def label_at(i):
        key = (sub.label_at(i), quot.label_at(phi_sub(i)))
        return labels.get(key, f"{key[0]}.{key[1]}")

    breaks = []
    for x in sorted(candidates):
        if order_at(x) != order_at(x + Fraction(1, 2)):
            breaks.append((x, label_at(x), order_at(x)))
    composite = FiltrationProfile(
        breaks, LOWER, group_name=group_name or (breaks[0][1] if breaks else "1"), p=sub.p
    )
    if sub.inertia_order * quot.inertia_order != composite.inertia_order:
        raise FiltrationError("Inertia orders of the tower are not multiplicative.")
    herbrand_quotient_check(composite, sub, quot)
    return composite


def herbrand_quotient_check(composite, sub, quot):
    """phi_{M/K} = phi_{L/K} o phi_{M/L} at every break."""
    outer = phi(composite)
    inner = phi(quot).compose(phi(sub))
    points = {b for b, _, _ in composite.ramified_breaks} | {Fraction(0), Fraction(1)}
    points |= {b + 1 for b in points}
    for x in sorted(points):
        if outer(x) != inner(x):
            raise FiltrationError(
                f"Herbrand transitivity fails at {x}: {outer(x)} != {inner(x)}."
            )
    return True


def product_arith_disjoint(a, b, group_name=None):
    """
    Filtration of Gal(M/K) ~ G1 x G2 for arithmetically disjoint K1, K2:
    upper filtrations multiply pointwise. Returns the lower profile.
    """
    a, b = upper_profile(a), upper_profile(b)
    candidates = sorted({x for x, _, _ in a.breaks} | {x for x, _, _ in b.breaks})
    breaks = []
    for x in candidates:
        order = a.order_at(x) * b.order_at(x)
        after = a.order_after(x) * b.order_after(x)
        if order != after:
            breaks.append((x, f"{a.label_at(x)}x{b.label_at(x)}", order))
    name = group_name or f"{a.group_name}x{b.group_name}"
    upper = FiltrationProfile(breaks, UPPER, group_name=name, p=a.p or b.p)
    logger.debug("Product upper breaks %s", [x for x, _, _ in breaks], extra={"group": name})
    return lower_profile(upper)


def project(profile, factor):
    """Upper profile of factor 0 or 1 of a product profile with "AxB" labels."""
    upper = upper_profile(profile)
    breaks = []
    for x, label, _ in upper.breaks:
        parts = label.split("x")
        if len(parts) != 2:
            raise FiltrationError(f"Label {label} is not a product label.")
        breaks.append((x, parts[factor]))
    result = []
    for index, (x, label) in enumerate(breaks):
        following = breaks[index + 1][1] if index + 1 < len(breaks) else "1"
        if label != following and label != "1":
            result.append((x, label))
    return result


def arithmetically_disjoint(a, b):
    """
    Advisory check: the upper breaks of the two extensions are disjoint.
    This is one sufficient criterion only.
    """
    a, b = upper_profile(a), upper_profile(b)
    breaks_a = {x for x, _, _ in a.breaks if x > 0}
    breaks_b = {x for x, _, _ in b.breaks if x > 0}
    return not breaks_a & breaks_b


def tame_base_change(profile, tame_degree, label=None):
    """
    Lower filtration over a base K0 with K/K0 tamely ramified of degree d:
    G'_0 has order d |G_0| and G'_i = G_i for i >= 1.
    """
    if tame_degree < 1:
        raise FiltrationError("The tame degree must be positive.")
    if profile.mode != LOWER:
        profile = lower_profile(profile)
    if profile.p is not None and tame_degree % profile.p == 0:
        raise FiltrationError(f"Degree {tame_degree} is divisible by p = {profile.p}.")
    if tame_degree == 1:
        return profile
    wild = [entry for entry in profile.breaks if entry[0] >= 1]
    g0 = tame_degree * profile.inertia_order
    breaks = [(Fraction(0), label or f"G0(d={tame_degree})", g0), *wild]
    return FiltrationProfile(
        breaks, LOWER, group_name=label or f"{profile.group_name}:tame{tame_degree}", p=profile.p
    )


class KummerDatum:
    """
    L = K(x), x^p = 1 + w pi_K^s with w a unit; v_K_p is v_K(p) in
    uniformizer units of K.
    """

    def __init__(self, p, s, v_K_p, w=None):
        self.p = p
        self.s = s
        self.v_K_p = Fraction(v_K_p)
        self.w = w
        upper = self.p * self.v_K_p / (self.p - 1)
        if not 0 < s < upper:
            raise HyodoRangeError(f"s = {s} is not in the range (0, {upper}).")
        if math.gcd(s, p) != 1:
            raise HyodoRangeError(f"s = {s} is divisible by p = {p}.")

    def __repr__(self):
        return f"KummerDatum(p={self.p}, s={self.s}, v_K(p)={self.v_K_p})"


def different_from_kummer(datum):
    """Return (v_K(D_L/K), v_L(D_L/K))."""
    v_K = datum.v_K_p + Fraction(datum.p - 1, datum.p) * (1 - datum.s)
    return v_K, datum.p * v_K


def break_from_different(vL_diff, p):
    """Single break t of a totally ramified degree-p extension: v_L(D) = (p-1)(t+1)."""
    vL_diff = Fraction(vL_diff)
    t = vL_diff / (p - 1) - 1
    if t.denominator != 1:
        raise FiltrationError(f"v_L(D) = {vL_diff} is not divisible by p - 1 = {p - 1}.")
    return int(t)


def filtration_from_roots(roots, field, uniformizer, labels=None, polynomial=None):
    """
    Lower filtration of L/K from the conjugates sigma(pi_L) of the generator
    pi_L of the top step of the tower L, K being the field one level down:
    i_G(sigma) = v_L(sigma(pi_L) - pi_L).

    The conjugates must be distinct roots of the minimal polynomial of pi_L
    (the top Eisenstein polynomial unless polynomial is given) and closed
    under composition; a closed subset gives the filtration of a subgroup.
    """
    if not uniformizer.equals(field.uniformizer):
        raise FiltrationError("The uniformizer must be the generator of the top step.")
    if not any(root.equals(uniformizer) for root in roots):
        raise FiltrationError("The uniformizer itself is not among the conjugates.")
    check_conjugates(roots, field, polynomial)
    n = len(roots)
    indices = []
    for root in roots:
        if root.equals(uniformizer):
            continue
        difference = root - uniformizer
        i_G = difference.valuation() * field.e
        if i_G.denominator != 1 or i_G < 1:
            raise FiltrationError(f"i_G = {i_G} is not a positive integer.")
        indices.append(int(i_G))
    counts = {}
    for i_G in indices:
        counts[i_G] = counts.get(i_G, 0) + 1
    breaks = []
    for value in sorted(counts):
        order = 1 + sum(c for v, c in counts.items() if v >= value)
        if n % order:
            raise FiltrationError(f"|G_{value - 1}| = {order} does not divide |G| = {n}.")
        label = (labels or {}).get(value - 1, f"G_{value - 1}")
        breaks.append((value - 1, label, order))
    return FiltrationProfile(breaks, LOWER, group_name=f"Gal(deg {n})", p=field.p)


def check_conjugates(roots, field, polynomial=None):
    """Distinct roots of the minimal polynomial of pi_L, closed under composition."""
    if polynomial is None:
        coefficients = field.top_relation()
    else:
        coefficients = list(polynomial.coefficients)
    for i, root in enumerate(roots):
        if any(root.equals(other) for other in roots[i + 1 :]):
            raise FiltrationError("The conjugates are not pairwise distinct.")
        value = field.zero
        for c in reversed(coefficients):
            value = value * root + c
        if not value.is_zero():
            raise FiltrationError(f"Conjugate {i} is not a root of the minimal polynomial.")
    for tau in roots:
        expansion = field.top_coefficients(tau)
        for sigma in roots:
            image = field.zero
            for c in reversed(expansion):
                image = image * sigma + c
            if not any(image.equals(root) for root in roots):
                raise FiltrationError("The conjugates are not closed under composition.")
    logger.debug("Checked %s conjugates", len(roots), extra={"field": repr(field)})
