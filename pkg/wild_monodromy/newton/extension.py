import logging
from fractions import Fraction

from ..exceptions import ConstructionError, PrecisionError
from ..tower import RamifiedStep, TowerSpec, build_tower
from .factor import _normalize_at, valuation_at_root
from .poly import DensePoly, determinant, solve
from .polygon import newton_polygon

logger = logging.getLogger("wild_monodromy.newton")


class SimpleExtension:
    """
    The algebra K[X]/(F) for a polynomial F whose roots all have the same
    valuation. When F is irreducible this is the field K(y), y a root of F,
    and valuations of its elements are exact.

    Elements are DensePolys of degree < deg F in the class of y.
    """

    def __init__(self, modulus, irreducible=True, name="y"):
        self.base = modulus.field
        self.modulus = modulus.monic()
        self.name = name
        self.irreducible = irreducible
        polygon = newton_polygon(self.modulus)
        if not polygon.is_single_segment():
            raise ValueError("The roots of the modulus must share one valuation.")
        self.root_valuation = polygon.segments[0].root_valuation
        self._generator = self.reduce(DensePoly.x(self.base))

    def __repr__(self):
        return f"<SimpleExtension degree {self.degree} over {self.base!r}>"

    @property
    def degree(self):
        return self.modulus.degree

    @property
    def e(self):
        """Ramification index over Q_p, when F is irreducible and totally ramified."""
        return self.base.e * self.degree

    @property
    def generator(self):
        return self._generator

    def element(self, value):
        if isinstance(value, DensePoly):
            return self.reduce(value)
        return DensePoly(self.base, [value])

    def reduce(self, poly):
        if poly.degree < self.degree:
            return poly
        return poly % self.modulus

    def mul(self, a, b):
        return self.reduce(a * b)

    def pow(self, a, n):
        result = DensePoly(self.base, [1])
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def unit_inverse(self, a):
        """
        Inverse of a unit whose constant term dominates at the root, by the
        iteration x <- x (2 - a x).
        """
        a = self.reduce(a)
        one = DensePoly(self.base, [1])
        x = DensePoly(self.base, [a[0].inverse()])
        bound, _ = valuation_at_root(one - self.mul(a, x), self.root_valuation)
        if bound <= 0:
            raise ValueError("unit_inverse() needs a unit with a dominant constant term.")
        limit = (self.base.precision * self.base.e).bit_length() + 4
        for _ in range(limit):
            error = one - self.mul(a, x)
            if error.is_zero():
                return x
            if valuation_at_root(error, self.root_valuation)[0] >= self.base.precision:
                return x
            x = x + self.mul(x, error)
        raise PrecisionError("Unit inversion did not converge", self.base.precision)

    def evaluate(self, poly):
        """poly(y) for a polynomial over the base field."""
        return self.reduce(poly)

    def valuation_bound(self, a):
        """(bound, exact) from the term of least valuation."""
        return valuation_at_root(self.reduce(a), self.root_valuation)

    def valuation(self, a):
        """
        Exact valuation of a(y), the same at every root of an irreducible
        modulus: from the unique least term when there is one, and otherwise
        from the norm.
        """
        a = self.reduce(a)
        if a.is_zero():
            raise PrecisionError("Valuation of an element that is zero at precision")
        bound, exact = valuation_at_root(a, self.root_valuation)
        if exact:
            return bound
        if not self.irreducible:
            raise PrecisionError(
                "Valuation is only bounded below without an irreducible modulus", bound
            )
        value = self.norm(a).valuation() / self.degree
        logger.debug(
            "Valuation %s from the norm (term bound %s)",
            value,
            bound,
            extra={"degree": self.degree},
        )
        return value

    def valuation_in_pi_units(self, a):
        return self.valuation(a) * self.e

    def norm(self, a):
        """Determinant of multiplication by a on the basis 1, y, ..., y^(n-1)."""
        a = self.reduce(a)
        columns = []
        current = a
        for _ in range(self.degree):
            columns.append([current[i] for i in range(self.degree)])
            current = self.mul(current, self._generator)
        matrix = [[columns[j][i] for j in range(self.degree)] for i in range(self.degree)]
        return determinant(matrix, self.base)

    def power_valuation(self, a, n):
        """v(a) computed as v(a^n) / n; exact when a^n has a unique least term."""
        return Fraction(self.valuation(self.pow(self.reduce(a), n)), n)

    def is_zero(self, a):
        return self.reduce(a).is_zero()


def recenter(modulus):
    """
    (c, g) with g(Y) = modulus(Y + c) for some c in K, such that the roots of
    g have a valuation whose denominator in uniformizer units of K is deg g.
    """
    field, n = modulus.field, modulus.degree
    center, g = field.zero, modulus
    for _ in range(n * field.precision * field.e):
        polygon = newton_polygon(g)
        if polygon.zero_order or not polygon.is_single_segment():
            raise ConstructionError("The roots of the polynomial do not share one valuation.")
        value = polygon.segments[0].root_valuation
        units = value * field.e
        if units.denominator == n:
            return center, g
        if units.denominator != 1:
            raise ConstructionError(
                f"A root does not generate a totally ramified extension of degree {n} "
                f"(root valuation {units} in uniformizer units)."
            )
        normalized, m = _normalize_at(g, value)
        factors = field.residue_polynomials.factor(normalized.residue())
        if len(factors) != 1 or len(factors[0][0]) != 2:
            raise ConstructionError("The residual polynomial is not a power of a linear factor.")
        root = field.residue_field.neg(factors[0][0][0])
        step = field.lift(root) * field.uniformizer_power(m)
        center, g = center + step, g.taylor_shift(step)
    raise PrecisionError("Recentering did not reach a ramified valuation", field.precision)


def adjoin_root(poly, name="Pi", element=None):
    """
    K(y) for a root y of poly when K(y)/K is totally ramified of degree
    n = deg poly, built as one more Eisenstein step on the tower of K.
    Return (L, y) with y an element of L.

    The step is generated by Pi = x^a pi^b of valuation 1/n, where x has
    valuation s/n in uniformizer units of K with gcd(s, n) = 1 and
    a s + b n = 1. x is element (a polynomial in y) when given, and y - c
    after recentering otherwise. The relation of Pi is Pi^n written in the
    basis 1, Pi, ..., Pi^(n-1).
    """
    field = poly.field
    modulus = poly.monic()
    n = modulus.degree
    if n < 2:
        raise ConstructionError("Only a polynomial of degree at least 2 has a root to adjoin.")
    if element is None:
        center, centered = recenter(modulus)
        extension = SimpleExtension(centered, name=name)
        x = extension.generator
    else:
        center, centered = field.zero, modulus
        extension = SimpleExtension(centered, name=name)
        x = extension.reduce(element)
    units = extension.valuation(x) * field.e
    if units.denominator != n:
        raise ConstructionError(
            f"The element has valuation {units} in uniformizer units; "
            f"the denominator must be {n}."
        )
    a = pow(units.numerator, -1, n)
    b = (1 - a * units.numerator) // n
    generator = extension.pow(x, a).scale(field.uniformizer_power(b))
    powers = [extension.element(1)]
    for _ in range(n):
        powers.append(extension.mul(powers[-1], generator))
    matrix = [[powers[j][i] for j in range(n)] for i in range(n)]
    relation = solve(matrix, [powers[n][i] for i in range(n)], field)
    coordinates = solve(matrix, [field.one if i == 1 else field.zero for i in range(n)], field)
    step = RamifiedStep("eisenstein", name=name, coefficients=[-r for r in relation])
    spec = TowerSpec(field.p, field.f, [*field.spec.steps, step], proxy=field.spec.proxy)
    extended = build_tower(spec, field.precision)
    y = extended.embed(center)
    for j, coordinate in enumerate(coordinates):
        if not coordinate.is_zero():
            y = y + extended.embed(coordinate) * extended.uniformizer**j
    logger.info(
        "Adjoined a root of degree %s",
        n,
        extra={"degree": n, "e": extended.e, "exponents": (a, b)},
    )
    return extended, y
