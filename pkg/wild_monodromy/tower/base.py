"""
Finite extensions of Q_p presented as an unramified base followed by
Eisenstein steps.

Every element is stored as an integral "raw" tensor together with a power of
p. A raw tensor of level 0 is a tuple of f_ur integers modulo p^D: an element
of Z_p[g]/(G(g)) where G lifts the residue field's modulus. A raw tensor of
level j is a tuple of m_j raw tensors of level j - 1: the coefficients of
1, pi_j, ..., pi_j^(m_j - 1). Because each step is Eisenstein, the basis
monomials have pairwise distinct valuations modulo 1, so the valuation of a
raw tensor is the minimum over its monomials.
"""

import logging
import math
from fractions import Fraction

from sympy import isprime, multiplicity

from ..exceptions import ConstructionError, PrecisionError
from .element import TowerElement
from .expressions import parse_expression
from .residue import ResidueField, ResiduePolynomials

logger = logging.getLogger("wild_monodromy.tower")


class RamifiedStep:
    """
    One totally ramified step. kind is "eisenstein" (coefficients of a monic
    polynomial, lowest degree first, leading 1 omitted or included) or
    "radical" (X^m = radicand).
    """

    def __init__(self, kind, *, name=None, coefficients=None, m=None, radicand=None):
        if kind not in {"eisenstein", "radical"}:
            raise ConstructionError(f"Unknown step kind {kind!r}.")
        self.kind = kind
        self.name = name
        self.coefficients = list(coefficients or [])
        self.radicand = radicand
        if kind == "radical":
            if m is None or m < 2:
                raise ConstructionError("A radical step needs a degree m >= 2.")
            self.m = m
        else:
            coefficients = self.coefficients
            if coefficients and str(coefficients[-1]).strip() == "1" and len(coefficients) > 2:
                coefficients = coefficients[:-1]
            self.coefficients = coefficients
            self.m = len(coefficients)
            if self.m < 2:
                raise ConstructionError("An Eisenstein step needs degree >= 2.")

    def __repr__(self):
        if self.kind == "radical":
            return f"RamifiedStep(radical, X^{self.m} = {self.radicand})"
        return f"RamifiedStep(eisenstein, degree {self.m})"

    @property
    def degree(self):
        return self.m

    @property
    def adjoined(self):
        """True when the coefficients are elements of the field below."""
        return any(isinstance(c, TowerElement) for c in self.coefficients)

    @classmethod
    def from_config(cls, data, index):
        if not isinstance(data, dict) or len(data) != 1:
            raise ConstructionError("expected {'radical': ...} or {'eisenstein': ...}", index)
        ((kind, options),) = data.items()
        options = dict(options)
        if kind == "radical":
            return cls(
                "radical",
                name=options.get("name"),
                m=int(options["m"]),
                radicand=str(options.get("radicand", "p")),
            )
        return cls("eisenstein", name=options.get("name"), coefficients=options["coefficients"])

    def as_config(self):
        if self.kind == "radical":
            data = {"m": self.m, "radicand": self.radicand}
        else:
            data = {"coefficients": [_coefficient_config(c) for c in self.coefficients]}
        if self.name:
            data["name"] = self.name
        return {self.kind: data}


class TowerSpec:
    """Declarative description of a tower: p, residue degree and steps."""

    def __init__(self, p, f_ur=1, steps=(), *, proxy=True):
        self.p = int(p)
        self.f_ur = int(f_ur)
        self.steps = list(steps)
        # A proxy base stands in for Q_p^ur, whose residue field is
        # algebraically closed; residual irreducibility then proves nothing.
        self.proxy = proxy
        if not isprime(self.p):
            raise ConstructionError(f"p = {self.p} is not prime.")
        if self.f_ur < 1:
            raise ConstructionError("f_ur must be at least 1.")

    def __repr__(self):
        return f"TowerSpec(p={self.p}, f_ur={self.f_ur}, steps={self.steps!r})"

    @property
    def e(self):
        return math.prod(step.degree for step in self.steps)

    @classmethod
    def from_config(cls, data):
        steps = [
            RamifiedStep.from_config(step, index)
            for index, step in enumerate(data.get("steps", []), start=1)
        ]
        return cls(data["p"], data.get("f_ur", 1), steps, proxy=data.get("proxy", True))

    def as_config(self):
        return {
            "p": self.p,
            "f_ur": self.f_ur,
            "steps": [step.as_config() for step in self.steps],
            "proxy": self.proxy,
        }

    def with_residue_degree(self, f_ur):
        if f_ur != self.f_ur and any(step.adjoined for step in self.steps):
            raise ConstructionError(
                "A tower with an adjoined root cannot change its residue degree."
            )
        return TowerSpec(self.p, f_ur, self.steps, proxy=self.proxy)


class TowerField:
    """
    A field handle. Build it with build_tower(); fields are immutable apart
    from internally memoized constants.
    """

    def __init__(self, spec, precision):
        self.spec = spec
        self.p = spec.p
        self.f = spec.f_ur
        self.precision = int(precision)
        if self.precision < 2:
            raise ConstructionError("precision must be at least 2")
        self.modulus = self.p**self.precision
        self.residue_field = ResidueField(self.p, self.f)
        self.residue_polynomials = ResiduePolynomials(self.residue_field)
        # Monic integer lift of the residue field's modulus.
        self.unramified_modulus = list(self.residue_field.modulus)
        self.degrees = []
        self.eisenstein = []
        self.names = {}
        self.radicands = []
        for index, step in enumerate(spec.steps, start=1):
            self._add_step(index, step)

    def __repr__(self):
        return f"TowerField(p={self.p}, f={self.f}, e={self.e}, N={self.precision})"

    def __eq__(self, other):
        return (
            isinstance(other, TowerField)
            and self.spec.as_config() == other.spec.as_config()
            and self.precision == other.precision
        )

    def __hash__(self):
        return hash((self.p, self.f, tuple(self.degrees), self.precision))

    # Structure

    @property
    def levels(self):
        return len(self.degrees)

    @property
    def e(self):
        return math.prod(self.degrees)

    @property
    def degree(self):
        return self.e * self.f

    def ramification_below(self, level):
        return math.prod(self.degrees[:level])

    def _add_step(self, index, step):
        e_prev = self.e
        if step.kind == "radical":
            radicand = parse_expression(step.radicand, self)
            coefficients = [-radicand] + [self.zero] * (step.m - 1)
        else:
            coefficients = [self._step_coefficient(c, index) for c in step.coefficients]
        try:
            v0 = coefficients[0].valuation()
        except PrecisionError:
            raise ConstructionError("constant coefficient is zero", index) from None
        j = v0 * e_prev
        if step.kind == "radical":
            if j.denominator != 1 or math.gcd(int(j), step.m) != 1:
                raise ConstructionError(
                    f"X^{step.m} = {step.radicand} is not totally ramified of degree "
                    f"{step.m} (radicand valuation {j} in uniformizer units)",
                    index,
                )
            if j != 1:
                raise ConstructionError(
                    f"radicand {step.radicand} has valuation {j} in uniformizer units; "
                    "only uniformizer radicands are supported, rewrite with rational "
                    "powers such as p^(a/b)",
                    index,
                )
        elif j != 1:
            raise ConstructionError(
                f"not Eisenstein: constant coefficient has valuation {j} "
                "in uniformizer units (expected 1)",
                index,
            )
        for i, coefficient in enumerate(coefficients[1:], start=1):
            if coefficient.is_zero():
                continue
            if coefficient.valuation() <= 0:
                raise ConstructionError(
                    f"not Eisenstein: coefficient of X^{i} is not divisible by the "
                    "uniformizer",
                    index,
                )
        level = self.levels
        raws = [c.integral_raw(level) for c in coefficients]
        self.degrees.append(step.m)
        self.eisenstein.append(raws)
        name = step.name or f"pi{index}"
        if name in self.names or name in {"p", "lambda", "zeta"}:
            raise ConstructionError(f"duplicate generator name {name!r}", index)
        self.names[name] = len(self.degrees)
        if step.kind == "radical":
            self.radicands.append((step.radicand, step.m, name))
        logger.debug(
            "Built step %s: %r over e=%s",
            index,
            step,
            e_prev,
            extra={"step": index, "degree": step.m},
        )

    def _step_coefficient(self, c, index):
        if not isinstance(c, TowerElement):
            return parse_expression(str(c), self)
        below = c.field
        if (below.levels, below.f, below.precision) != (self.levels, self.f, self.precision):
            raise ConstructionError("coefficient is not an element of the field below", index)
        return TowerElement(self, c.raw, c.shift, c.prec)

    # Raw tensors

    def raw_zero(self, level=None):
        level = self.levels if level is None else level
        if level == 0:
            return (0,) * self.f
        return (self.raw_zero(level - 1),) * self.degrees[level - 1]

    def raw_from_int(self, n, level=None):
        level = self.levels if level is None else level
        if level == 0:
            return (n % self.modulus,) + (0,) * (self.f - 1)
        inner = self.raw_from_int(n, level - 1)
        return (inner,) + (self.raw_zero(level - 1),) * (self.degrees[level - 1] - 1)

    def raw_from_residue(self, residue, level=None):
        level = self.levels if level is None else level
        if level == 0:
            return tuple(residue)
        inner = self.raw_from_residue(residue, level - 1)
        return (inner,) + (self.raw_zero(level - 1),) * (self.degrees[level - 1] - 1)

    def raw_embed(self, raw, level_from, level_to=None):
        level_to = self.levels if level_to is None else level_to
        while level_from < level_to:
            raw = (raw,) + (self.raw_zero(level_from),) * (self.degrees[level_from] - 1)
            level_from += 1
        return raw

    def raw_generator(self, level):
        """pi_level as a raw tensor of the top level."""
        inner = self.raw_from_int(1, level - 1)
        zero = self.raw_zero(level - 1)
        raw = (zero, inner) + (zero,) * (self.degrees[level - 1] - 2)
        return self.raw_embed(raw, level)

    def raw_is_zero(self, a, level=None):
        level = self.levels if level is None else level
        if level == 0:
            return not any(a)
        return all(self.raw_is_zero(c, level - 1) for c in a)

    def raw_add(self, a, b, level=None):
        level = self.levels if level is None else level
        if level == 0:
            m = self.modulus
            return tuple((x + y) % m for x, y in zip(a, b, strict=True))
        return tuple(self.raw_add(x, y, level - 1) for x, y in zip(a, b, strict=True))

    def raw_neg(self, a, level=None):
        level = self.levels if level is None else level
        if level == 0:
            m = self.modulus
            return tuple(-x % m for x in a)
        return tuple(self.raw_neg(x, level - 1) for x in a)

    def raw_sub(self, a, b, level=None):
        return self.raw_add(a, self.raw_neg(b, level), level)

    def raw_scale(self, a, n, level=None):
        level = self.levels if level is None else level
        if level == 0:
            m = self.modulus
            return tuple(x * n % m for x in a)
        return tuple(self.raw_scale(x, n, level - 1) for x in a)

    def raw_divide_p(self, a, k=1, level=None):
        """Exact division by p^k of a raw tensor of valuation >= k."""
        level = self.levels if level is None else level
        if level == 0:
            d = self.p**k
            return tuple(x // d for x in a)
        return tuple(self.raw_divide_p(x, k, level - 1) for x in a)

    def raw_mul(self, a, b, level=None):
        level = self.levels if level is None else level
        if level == 0:
            return self._unramified_mul(a, b)
        m = self.degrees[level - 1]
        zero = self.raw_zero(level - 1)
        product = [zero] * (2 * m - 1)
        for i, x in enumerate(a):
            if self.raw_is_zero(x, level - 1):
                continue
            for j, y in enumerate(b):
                if self.raw_is_zero(y, level - 1):
                    continue
                product[i + j] = self.raw_add(
                    product[i + j], self.raw_mul(x, y, level - 1), level - 1
                )
        # pi^m = -(a_0 + a_1 pi + ... + a_{m-1} pi^(m-1))
        relation = self.eisenstein[level - 1]
        for d in range(2 * m - 2, m - 1, -1):
            c = product[d]
            if self.raw_is_zero(c, level - 1):
                continue
            product[d] = zero
            for i, r in enumerate(relation):
                product[d - m + i] = self.raw_sub(
                    product[d - m + i], self.raw_mul(c, r, level - 1), level - 1
                )
        return tuple(product[:m])

    def _unramified_mul(self, a, b):
        f = self.f
        mod = self.modulus
        if f == 1:
            return (a[0] * b[0] % mod,)
        product = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[i + j] += x * y
        g = self.unramified_modulus
        for d in range(2 * f - 2, f - 1, -1):
            c = product[d]
            if c:
                product[d] = 0
                for i in range(f):
                    if g[i]:
                        product[d - f + i] -= c * g[i]
        return tuple(x % mod for x in product[:f])

    def raw_pow(self, a, n, level=None):
        result = self.raw_from_int(1, self.levels if level is None else level)
        while n:
            if n & 1:
                result = self.raw_mul(result, a, level)
            a = self.raw_mul(a, a, level)
            n >>= 1
        return result

    def raw_valuation(self, a, level=None):
        """Valuation (v(p) = 1) of a raw tensor, or None if it is zero."""
        level = self.levels if level is None else level
        if level == 0:
            values = [multiplicity(self.p, x) for x in a if x]
            return Fraction(min(values)) if values else None
        e_level = self.ramification_below(level)
        best = None
        for i, c in enumerate(a):
            value = self.raw_valuation(c, level - 1)
            if value is None:
                continue
            value += Fraction(i, e_level)
            if best is None or value < best:
                best = value
        return best

    def raw_residue(self, a, level=None):
        """Residue of a raw tensor of valuation >= 0."""
        level = self.levels if level is None else level
        while level > 0:
            a = a[0]
            level -= 1
        return self.residue_field.element(a)

    def raw_unit_inverse(self, u):
        """Inverse of a raw unit by Newton iteration."""
        residue = self.raw_residue(u)
        if self.residue_field.is_zero(residue):
            raise PrecisionError("not a unit at the current precision")
        x = self.raw_from_residue(self.residue_field.inv(residue))
        one = self.raw_from_int(1)
        limit = (self.precision * self.e).bit_length() + 2
        for _ in range(limit + 1):
            error = self.raw_sub(one, self.raw_mul(u, x))
            if self.raw_is_zero(error):
                return x
            x = self.raw_add(x, self.raw_mul(x, error))
        return x

    # Elements

    def element(self, value):
        if isinstance(value, TowerElement):
            if value.field is not self:
                raise ValueError("element belongs to another field")
            return value
        return TowerElement.from_rational(self, Fraction(value))

    def __call__(self, value):
        return self.element(value)

    @property
    def zero(self):
        return TowerElement(self, self.raw_zero(), 0, math.inf)

    @property
    def one(self):
        return self.element(1)

    @property
    def uniformizer(self):
        if not self.levels:
            return self.element(self.p)
        return TowerElement(self, self.raw_generator(self.levels), 0, self.precision)

    def uniformizer_power(self, k):
        return self.uniformizer**k

    def generator(self, name):
        if name == "p":
            return self.element(self.p)
        if name in {"lambda", "zeta"}:
            value = self.lambda_
            return value + self.one if name == "zeta" else value
        try:
            level = self.names[name]
        except KeyError:
            raise ConstructionError(f"unknown generator {name!r}") from None
        return TowerElement(self, self.raw_generator(level), 0, self.precision)

    @property
    def lambda_(self):
        """zeta_p - 1; for p = 2 this is -2."""
        if self.p == 2:
            return self.element(-2)
        for name, level in self.names.items():
            step = self.spec.steps[level - 1]
            if step.kind == "eisenstein" and self._is_cyclotomic(step):
                return self.generator(name)
        raise ConstructionError(
            f"lambda is not available: add the Eisenstein step of zeta_{self.p} - 1"
        )

    def _is_cyclotomic(self, step):
        expected = [math.comb(self.p, k) for k in range(1, self.p)]
        return [str(c).strip() for c in step.coefficients] == [str(c) for c in expected]

    def lift(self, residue):
        residue = self.residue_field.element(residue)
        if self.residue_field.is_zero(residue):
            return self.zero
        return TowerElement(self, self.raw_from_residue(residue), 0, self.precision)

    def residue_image(self, a):
        return self.element(a).residue()

    def rational_power(self, base, exponent):
        """
        base^exponent for a rational exponent, resolved through the radical
        steps of the tower (base^(1/m) is the generator of a step X^m = base).
        """
        exponent = Fraction(exponent)
        if exponent.denominator == 1:
            return base ** int(exponent)
        current, total = base, 1
        for radicand, m, name in self.radicands:
            if parse_expression(radicand, self).equals(current):
                current, total = self.generator(name), total * m
                if total % exponent.denominator == 0:
                    return current ** (exponent.numerator * total // exponent.denominator)
        raise ConstructionError(
            f"{exponent.denominator}-th root of {base!r} is not available in the tower"
        )

    def top_relation(self):
        """a_0, ..., a_(m-1), 1 with pi^m + sum a_i pi^i = 0 for the top step."""
        if not self.levels:
            raise ConstructionError("The unramified base has no Eisenstein step.")
        level = self.levels - 1
        coefficients = [
            TowerElement.normalized(self, self.raw_embed(raw, level), 0, self.precision)
            for raw in self.eisenstein[-1]
        ]
        return [*coefficients, self.one]

    def top_coefficients(self, a):
        """The coordinates of a in the basis 1, pi, ..., pi^(m-1) of the top step."""
        level = self.levels - 1
        return [
            TowerElement.normalized(self, self.raw_embed(raw, level), a.shift, a.prec)
            for raw in a.raw
        ]

    def embed(self, a):
        """The image in this field of an element of a field lower in the tower."""
        below = a.field
        if below is self:
            return a
        steps = self.spec.as_config()["steps"]
        if (
            (below.p, below.f, below.precision) != (self.p, self.f, self.precision)
            or below.levels > self.levels
            or below.spec.as_config()["steps"] != steps[: below.levels]
        ):
            raise ConstructionError(f"{below!r} is not a subfield of {self!r}.")
        return TowerElement(self, self.raw_embed(a.raw, below.levels), a.shift, a.prec)

    def with_precision(self, precision):
        if precision != self.precision and any(step.adjoined for step in self.spec.steps):
            raise ConstructionError("A tower with an adjoined root cannot change its precision.")
        return build_tower(self.spec, precision)

    def with_residue_degree(self, f_ur):
        return build_tower(self.spec.with_residue_degree(f_ur), self.precision)


def _coefficient_config(c):
    if isinstance(c, TowerElement):
        return {"raw": c.integral_raw()}
    return str(c)


_towers = {}


def build_tower(spec, precision=None):
    """Return the (memoized) field described by spec."""
    from ..conf import get_setting

    if precision is None:
        precision = get_setting("PRECISION")
    key = (repr(spec.as_config()), int(precision))
    field = _towers.get(key)
    if field is None:
        field = _towers[key] = TowerField(spec, precision)
    return field


def zeta_tower(p, q, f_ur=None, precision=None, extra_steps=()):
    """K = Q_p^ur(lambda^(1/(1+q))) with lambda = zeta_p - 1."""
    from ..conf import get_setting

    f_ur = get_setting("RESIDUE_DEGREE") if f_ur is None else f_ur
    steps = []
    if p == 2:
        # lambda = -2 is already a uniformizer of Q_2.
        radicand = "lambda"
    else:
        coefficients = [str(math.comb(p, k)) for k in range(1, p)]
        steps.append(RamifiedStep("eisenstein", name="lambda_", coefficients=coefficients))
        radicand = "lambda_"
    steps.append(RamifiedStep("radical", name="varpi", m=q + 1, radicand=radicand))
    steps.extend(extra_steps)
    return build_tower(TowerSpec(p, f_ur, steps), precision)
