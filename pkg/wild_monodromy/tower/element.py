import math
from fractions import Fraction
from functools import total_ordering

from sympy import multiplicity

from ..exceptions import PrecisionError


@total_ordering
class Valuation:
    """
    An exact valuation. value is normalized by v(p) = 1; field, when given,
    names the field whose uniformizer units are wanted for display.
    """

    __slots__ = ("value", "field")

    def __init__(self, value, field=None):
        self.value = Fraction(value)
        self.field = field

    def __repr__(self):
        if self.field is None:
            return f"Valuation({self.value})"
        return f"Valuation({self.value}, pi-units={self.in_pi_units()})"

    def __str__(self):
        return str(self.value)

    def __eq__(self, other):
        if isinstance(other, Valuation):
            return self.value == other.value
        return self.value == other

    def __lt__(self, other):
        if isinstance(other, Valuation):
            return self.value < other.value
        return self.value < other

    def __hash__(self):
        return hash(self.value)

    def in_pi_units(self, field=None):
        field = field or self.field
        if field is None:
            raise ValueError("in_pi_units() needs a field.")
        return self.value * field.e

    def in_p_units(self):
        return self.value

    @classmethod
    def from_pi_units(cls, value, field):
        return cls(Fraction(value) / field.e, field)


class TowerElement:
    """
    p^shift * raw, known to absolute precision prec (v(p) = 1 units).

    raw is an integral tensor (see tower.base) whose valuation lies in [0, 1)
    unless raw is zero. A zero raw with finite prec is an element that is
    indistinguishable from 0; exact zero has prec = inf.
    """

    __slots__ = ("field", "raw", "shift", "prec", "_valuation")

    def __init__(self, field, raw, shift, prec):
        self.field = field
        self.raw = raw
        self.shift = shift
        self.prec = prec
        self._valuation = None

    @classmethod
    def from_rational(cls, field, value):
        if value == 0:
            return field.zero
        p = field.p
        num, den = value.numerator, value.denominator
        a, b = multiplicity(p, abs(num)), multiplicity(p, den)
        num //= p**a
        den //= p**b
        unit = num * pow(den, -1, field.modulus) % field.modulus
        shift = a - b
        return cls(field, field.raw_from_int(unit), shift, shift + field.precision)

    @classmethod
    def normalized(cls, field, raw, shift, prec):
        v = field.raw_valuation(raw)
        if v is None or shift + v >= prec:
            return cls(field, field.raw_zero(), 0, prec)
        k = math.floor(v)
        if k:
            raw = field.raw_divide_p(raw, k)
            shift += k
        return cls(field, raw, shift, prec)

    def __repr__(self):
        if self.is_zero():
            return f"<TowerElement 0 + O(p^{self.prec})>"
        return f"<TowerElement v={self.valuation()} + O(p^{self.prec})>"

    def _coerce(self, other):
        if isinstance(other, TowerElement):
            if other.field is not self.field:
                raise ValueError("Elements belong to different fields.")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    # Predicates

    def is_zero(self):
        """True when the element is exactly zero or zero at its precision."""
        return self.field.raw_is_zero(self.raw)

    def is_exact_zero(self):
        return self.is_zero() and self.prec == math.inf

    def valuation(self):
        if self._valuation is None:
            if self.is_zero():
                if self.prec == math.inf:
                    raise PrecisionError("Valuation of exact zero is infinite.")
                raise PrecisionError(
                    "Element is indistinguishable from 0 at the current precision", self.prec
                )
            self._valuation = self.shift + self.field.raw_valuation(self.raw)
        return self._valuation

    v = property(valuation)

    def valuation_in(self, field=None):
        return Valuation(self.valuation(), field or self.field)

    def relative_precision(self):
        return self.prec - self.valuation()

    def equals(self, other):
        """Equality up to the smaller of the two precisions."""
        return (self - other).is_zero()

    # Arithmetic

    def __neg__(self):
        return TowerElement(self.field, self.field.raw_neg(self.raw), self.shift, self.prec)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        if self.is_zero():
            return TowerElement.normalized(
                field, other.raw, other.shift, min(self.prec, other.prec)
            )
        if other.is_zero():
            return TowerElement.normalized(field, self.raw, self.shift, min(self.prec, other.prec))
        shift = min(self.shift, other.shift)
        p = field.p
        a = self.raw
        if self.shift > shift:
            a = field.raw_scale(a, p ** (self.shift - shift))
        b = other.raw
        if other.shift > shift:
            b = field.raw_scale(b, p ** (other.shift - shift))
        prec = min(self.prec, other.prec, shift + field.precision)
        return TowerElement.normalized(field, field.raw_add(a, b), shift, prec)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        if self.is_zero() or other.is_zero():
            if self.is_exact_zero() or other.is_exact_zero():
                return field.zero
            if self.is_zero() and other.is_zero():
                prec = self.prec + other.prec
            elif self.is_zero():
                prec = self.prec + other.valuation()
            else:
                prec = other.prec + self.valuation()
            return TowerElement(field, field.raw_zero(), 0, prec)
        shift = self.shift + other.shift
        prec = min(
            self.prec + other.valuation(),
            other.prec + self.valuation(),
            shift + field.precision,
        )
        return TowerElement.normalized(field, field.raw_mul(self.raw, other.raw), shift, prec)

    __rmul__ = __mul__

    def inverse(self):
        field = self.field
        if self.is_zero():
            raise PrecisionError("Division by an element indistinguishable from 0", self.prec)
        v = self.valuation()
        t = (v - self.shift) * field.e
        if t == 0:
            raw = field.raw_unit_inverse(self.raw)
            shift = -self.shift
        else:
            # raw * pi^(e - t) has valuation 1; strip the p to reach a unit.
            complement = field.raw_pow(field.raw_generator(field.levels), field.e - int(t))
            unit = field.raw_divide_p(field.raw_mul(self.raw, complement))
            raw = field.raw_mul(complement, field.raw_unit_inverse(unit))
            shift = -self.shift - 1
        prec = min(self.prec - 2 * v, -v + field.precision - 1)
        return TowerElement.normalized(field, raw, shift, prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # Residue field

    def residue(self):
        field = self.field
        if self.is_zero():
            if self.prec <= 0:
                raise PrecisionError("Residue of an element known only to precision", self.prec)
            return field.residue_field.zero
        v = self.valuation()
        if v < 0:
            raise ValueError(f"Residue of an element of negative valuation {v}.")
        if v > 0:
            return field.residue_field.zero
        return field.raw_residue(self.raw)

    def integral_raw(self, level=None):
        """The raw tensor of an integral element with the power of p folded in."""
        if self.is_zero():
            return self.field.raw_zero(level)
        if self.shift < 0:
            raise ValueError("integral_raw() needs an integral element.")
        return self.field.raw_scale(self.raw, self.field.p**self.shift, level)
