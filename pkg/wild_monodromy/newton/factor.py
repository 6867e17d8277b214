import logging
import math
from fractions import Fraction

from ..exceptions import CannotSplit, InconclusiveRootSearch, PrecisionError
from .poly import DensePoly
from .polygon import newton_polygon

logger = logging.getLogger("wild_monodromy.newton")

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
INCONCLUSIVE = "inconclusive"


class IrreducibilityCertificate:
    def __init__(self, verdict, reason="none", witness=None):
        self.verdict = verdict
        self.reason = reason
        self.witness = witness or {}

    def __repr__(self):
        return f"IrreducibilityCertificate({self.verdict}, {self.reason})"

    def __bool__(self):
        return self.verdict == IRREDUCIBLE

    def as_dict(self):
        return {"verdict": self.verdict, "reason": self.reason, "witness": self.witness}


def valuation_at_root(poly, root_valuation):
    """
    Return (bound, exact) for P(y) where y is any root of valuation
    root_valuation: v(P(y)) >= bound = min_i v(c_i) + i * root_valuation,
    with equality (exact is True) when the minimum is attained once.
    """
    root_valuation = Fraction(root_valuation)
    terms = []
    for i, c in enumerate(poly.coefficients):
        if c.is_zero():
            if c.prec != math.inf:
                terms.append((c.prec + i * root_valuation, False))
            continue
        terms.append((c.valuation() + i * root_valuation, True))
    if not terms:
        raise PrecisionError("valuation_at_root() of the zero polynomial")
    bound = min(value for value, _ in terms)
    attained = [known for value, known in terms if value == bound]
    return bound, len(attained) == 1 and attained[0]


def _normalize_at(f, root_valuation):
    """
    g(Y) = f(pi^m Y) / pi^c with m = e * root_valuation, scaled so the
    minimum coefficient valuation is 0. Return (g, m).
    """
    field = f.field
    m = root_valuation * field.e
    if m.denominator != 1:
        raise CannotSplit(f"Root valuation {root_valuation} is not attained in {field!r}.")
    m = int(m)
    g = f.substitute_scale(field.uniformizer_power(m)) if m else f
    content = g.content_valuation() * field.e
    return g.scale(field.uniformizer_power(-int(content))), m


def _denormalize(g, m):
    """The monic polynomial whose roots are pi^m times those of monic g."""
    if not m:
        return g
    field = g.field
    h = g.substitute_scale(field.uniformizer_power(-m))
    return h.scale(field.uniformizer_power(m * g.degree))


def _coprime_residual_split(residual, polys):
    """Split a residue polynomial into (A, B) coprime of positive degree."""
    split = polys.coprime_split(residual)
    if split is None:
        raise CannotSplit("The reduction is a power of one irreducible polynomial.")
    return split


def _hensel_lift(f, g, h, field):
    """Quadratic Hensel lifting of monic f = g h with coprime reductions."""
    polys = field.residue_polynomials
    d, s_bar, t_bar = polys.xgcd(g.residue(), h.residue())
    if len(d) != 1:
        raise CannotSplit("Residual factors are not coprime.")
    s = DensePoly.from_residue(field, s_bar)
    t = DensePoly.from_residue(field, t_bar)
    deg_g, deg_h = g.degree, h.degree
    limit = (field.precision * field.e).bit_length() + 3
    for iteration in range(limit):
        error = f - g * h
        if error.is_zero():
            logger.debug(
                "Hensel lift converged after %s iterations",
                iteration,
                extra={"degrees": [deg_g, deg_h]},
            )
            return g, h
        quotient, remainder = (s * error).divmod(h)
        g = _monic_truncate(g + t * error + quotient * g, deg_g)
        h = _monic_truncate(h + remainder, deg_h)
        b = s * g + t * h - DensePoly(field, [1])
        c, d = (s * b).divmod(h)
        s = s - d
        t = t - t * b - c * g
    if not (f - g * h).is_zero():
        raise PrecisionError("Hensel lifting did not converge", field.precision)
    return g, h


def _monic_truncate(g, degree):
    coefficients = list(g.coefficients[:degree]) + [g.field.one]
    while len(coefficients) < degree + 1:
        coefficients.insert(len(coefficients) - 1, g.field.zero)
    return DensePoly(g.field, coefficients)


def _weights(f, t):
    return {i: c.valuation() + i * t for i, c in enumerate(f.coefficients) if not c.is_zero()}


def _split_at_vertex(f, k, t):
    """
    Factor monic f = g h at the polygon vertex k, with g monic of degree k
    holding the roots of valuation > t and h those of valuation < t.

    Linear lifting in the Gauss norm weighted by t: the line of slope -t
    touches the polygon of f only at k, so each step gains at least the
    gap between the weight of a_k and the weights of the other terms.
    """
    field = f.field
    weights = _weights(f, t)
    vertex = weights[k]
    gap = min(w - vertex for i, w in weights.items() if i != k)
    if gap <= 0:
        raise CannotSplit(f"Degree {k} is not a vertex of the polygon at {t}.")
    span = max(weights.values()) - vertex + 2 * (field.precision + f.degree * abs(t))
    limit = math.ceil(span / gap) + 5
    inverse = f[k].inverse()
    g = DensePoly.monomial(field, k)
    h = DensePoly(field, f.coefficients[k:])
    for iteration in range(limit):
        error = f - g * h
        if error.is_zero():
            logger.debug(
                "Slope split converged after %s iterations",
                iteration,
                extra={"degrees": [k, f.degree - k], "separator": t},
            )
            return g, h
        g = g + DensePoly(field, error.coefficients[:k]).scale(inverse)
        h = h + DensePoly(field, error.coefficients[k:])
    raise PrecisionError("Slope splitting did not converge", field.precision)


def slope_factors(f):
    """
    One monic factor of monic f per segment of its Newton polygon, in
    decreasing order of root valuation; f(0) must be nonzero.
    """
    polygon = newton_polygon(f)
    if polygon.is_single_segment():
        return [f]
    first, second = polygon.segments[:2]
    separator = (first.root_valuation + second.root_valuation) / 2
    g, h = _split_at_vertex(f, first.end[0], separator)
    return [g, *slope_factors(h)]


def hensel_split(f):
    """
    Factor f into monic factors with f = lc(f) * product(factors) to the
    working precision.

    Roots at 0 come off first as X^z. The rest splits along the segments of
    the Newton polygon; a segment whose root valuation is integral in
    uniformizer units is split further along the coprime factors of the
    reduction of its normalized polynomial.
    """
    field = f.field
    if f.degree < 2:
        raise CannotSplit("Nothing to split in degree < 2.")
    monic = f.monic()
    factors = []
    zeros = monic.zero_order()
    if zeros:
        factors.append(DensePoly.monomial(field, zeros))
        monic = DensePoly(field, monic.coefficients[zeros:])
    if monic.degree >= 1:
        for piece in slope_factors(monic):
            factors.extend(_split_segment(piece))
    logger.debug(
        "Split degree %s into degrees %s",
        f.degree,
        [factor.degree for factor in factors],
        extra={"field": repr(field)},
    )
    return factors


def _split_segment(piece):
    field = piece.field
    if piece.degree < 2:
        return [piece]
    value = newton_polygon(piece).segments[0].root_valuation
    if (value * field.e).denominator != 1:
        return [piece]
    g, m = _normalize_at(piece, value)
    return [_denormalize(q, m) for q in _split_all(g.monic(), field)]


def _split_all(g, field):
    polys = field.residue_polynomials
    residual = polys.monic(g.residue())
    if len(residual) - 1 != g.degree:
        raise CannotSplit("The normalized polynomial is not monic modulo the maximal ideal.")
    try:
        a_bar, b_bar = _coprime_residual_split(residual, polys)
    except CannotSplit:
        return [g]
    a0 = DensePoly.from_residue(field, a_bar)
    b0 = DensePoly.from_residue(field, b_bar)
    a, b = _hensel_lift(g, a0, b0, field)
    return [*_split_all(a, field), *_split_all(b, field)]


def roots_in_field(f, field=None):
    """
    All roots of f in its field. For each segment of the Newton polygon the
    residual roots of the normalized polynomial are lifted: a simple one by
    Newton iteration, a multiple one by expanding around it one uniformizer
    at a time until the roots above it separate.
    """
    field = field or f.field
    roots = []
    if f.zero_order():
        roots.append(field.zero)
        f = DensePoly(field, f.coefficients[f.zero_order() :])
    if f.degree < 1:
        return roots
    polygon = newton_polygon(f)
    depth = field.precision * field.e
    for value, _ in polygon.root_valuations():
        m = value * field.e
        if m.denominator != 1:
            continue
        g, m = _normalize_at(f, value)
        scale = field.uniformizer_power(m)
        roots.extend(y * scale for y in _integral_roots(g, depth, units_only=True))
    return roots


def _integral_roots(g, depth, units_only=False):
    """Roots of g of valuation >= 0; g has content valuation 0."""
    field = g.field
    residue_field = field.residue_field
    polys = field.residue_polynomials
    residual = g.residue()
    derivative = polys.derivative(residual)
    roots = []
    for root in polys.roots(residual):
        if units_only and residue_field.is_zero(root):
            continue
        a = field.lift(root)
        if not residue_field.is_zero(polys.evaluate(derivative, root)):
            roots.append(_newton_lift(g, a))
            continue
        if depth <= 0:
            raise InconclusiveRootSearch(
                f"Residual root {residue_field.format(root)} does not separate."
            )
        shifted = g.taylor_shift(a).substitute_scale(field.uniformizer)
        if shifted.is_zero():
            raise PrecisionError("The expansion around a root vanished", field.precision)
        if shifted.zero_order():
            roots.append(a)
            shifted = DensePoly(field, shifted.coefficients[shifted.zero_order() :])
            if shifted.degree < 1:
                continue
        content = shifted.content_valuation() * field.e
        shifted = shifted.scale(field.uniformizer_power(-int(content)))
        roots.extend(a + field.uniformizer * y for y in _integral_roots(shifted, depth - 1))
    return roots


def _newton_lift(g, y):
    derivative = g.derivative()
    limit = (g.field.precision * g.field.e).bit_length() + 3
    for _ in range(limit):
        value = g(y)
        if value.is_zero():
            return y
        y = y - value / derivative(y)
    if not g(y).is_zero():
        raise PrecisionError("Newton iteration did not converge", g.field.precision)
    return y


def certify_irreducible(f, witness=None):
    """
    witness, when given, is the exact valuation (v(p) = 1) of an element of
    K(y) that is the same for every root y of f; if its denominator in
    uniformizer units equals deg f, the ramification index of K(y)/K is
    deg f and f is irreducible.
    """
    field = f.field
    n = f.degree
    if n < 1:
        return IrreducibilityCertificate(INCONCLUSIVE)
    if n == 1:
        return IrreducibilityCertificate(IRREDUCIBLE, "single-slope-denominator", {"degree": 1})
    if f.zero_order():
        return IrreducibilityCertificate(REDUCIBLE, "hensel-split", {"root": 0})
    polygon = newton_polygon(f)
    if polygon.is_single_segment():
        value = polygon.segments[0].root_valuation
        denominator = (value * field.e).denominator
        if denominator == n:
            return IrreducibilityCertificate(
                IRREDUCIBLE,
                "single-slope-denominator",
                {"root_valuation": value, "pi_units": value * field.e, "denominator": n},
            )
    if witness is not None:
        denominator = (Fraction(witness) * field.e).denominator
        if denominator == n:
            return IrreducibilityCertificate(
                IRREDUCIBLE,
                "element-denominator",
                {"valuation": Fraction(witness), "denominator": denominator},
            )
    if polygon.is_single_segment() and not field.spec.proxy:
        segment = polygon.segments[0]
        denominator = (segment.root_valuation * field.e).denominator
        residual = segment.residual
        if (
            residual
            and denominator * (len(residual) - 1) == n
            and field.residue_polynomials.is_irreducible(residual)
        ):
            return IrreducibilityCertificate(
                IRREDUCIBLE,
                "residual-irreducible",
                {"denominator": denominator, "residual_degree": len(residual) - 1},
            )
    if len(polygon.segments) > 1:
        return IrreducibilityCertificate(
            REDUCIBLE,
            "hensel-split",
            {"root_valuations": polygon.root_valuations()},
        )
    try:
        factors = hensel_split(f)
    except (CannotSplit, PrecisionError):
        factors = [f]
    if len(factors) > 1:
        return IrreducibilityCertificate(
            REDUCIBLE, "hensel-split", {"degrees": [g.degree for g in factors]}
        )
    return IrreducibilityCertificate(INCONCLUSIVE)
