"""Dense univariate polynomials over a TowerField."""

from fractions import Fraction

from ..exceptions import PrecisionError
from ..tower.expressions import parse_expression


class DensePoly:
    """
    Coefficients are TowerElements, lowest degree first. Trailing
    coefficients that are zero at their precision are dropped.
    """

    __slots__ = ("field", "coefficients")

    def __init__(self, field, coefficients=()):
        self.field = field
        coefficients = [field.element(c) for c in coefficients]
        while coefficients and coefficients[-1].is_zero():
            coefficients.pop()
        self.coefficients = coefficients

    @classmethod
    def from_expressions(cls, field, expressions):
        return cls(field, [parse_expression(e, field) for e in expressions])

    @classmethod
    def monomial(cls, field, degree, coefficient=1):
        return cls(field, [field.zero] * degree + [field.element(coefficient)])

    @classmethod
    def x(cls, field):
        return cls.monomial(field, 1)

    def __repr__(self):
        return f"<DensePoly degree {self.degree} over {self.field!r}>"

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return self.field.zero

    def __iter__(self):
        return iter(self.coefficients)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else self.field.zero

    def is_zero(self):
        return not self.coefficients

    def is_monic(self):
        return bool(self.coefficients) and self.leading.equals(self.field.one)

    def valuations(self):
        """Coefficient valuations; None for coefficients that are zero."""
        return [None if c.is_zero() else c.valuation() for c in self.coefficients]

    def _coerce(self, other):
        if isinstance(other, DensePoly):
            return other
        return DensePoly(self.field, [other])

    # Arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self), len(other))
        return DensePoly(self.field, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DensePoly(self.field, [-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, DensePoly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return DensePoly(self.field)
        out = [self.field.zero] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coefficients):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return DensePoly(self.field, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = self.field.element(c)
        return DensePoly(self.field, [a * c for a in self.coefficients])

    def __pow__(self, n):
        result = DensePoly(self.field, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def over(self, field):
        """The same polynomial with coefficients embedded in an extension field."""
        return DensePoly(field, [field.embed(c) for c in self.coefficients])

    def shift_degree(self, k):
        """X^k * self."""
        return DensePoly(self.field, [self.field.zero] * k + self.coefficients)

    def evaluate(self, x):
        result = self.field.zero
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    __call__ = evaluate

    def derivative(self):
        return DensePoly(self.field, [c * i for i, c in enumerate(self.coefficients)][1:])

    def taylor_shift(self, a):
        """self(X + a), by repeated synthetic division."""
        a = self.field.element(a)
        coefficients = list(self.coefficients)
        n = len(coefficients)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                coefficients[j] = coefficients[j] + a * coefficients[j + 1]
        return DensePoly(self.field, coefficients)

    def substitute_scale(self, s):
        """self(s X)."""
        s = self.field.element(s)
        out, power = [], self.field.one
        for c in self.coefficients:
            out.append(c * power)
            power = power * s
        return DensePoly(self.field, out)

    def taylor_coefficients(self, x):
        """[s_0(x), s_1(x), ...] with self(X + x) = sum s_i(x) X^i."""
        return self.taylor_shift(x).coefficients

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coefficients)
        inverse = other.leading.inverse()
        m = other.degree
        quotient = [self.field.zero] * max(len(remainder) - m, 0)
        for d in range(len(remainder) - 1, m - 1, -1):
            c = remainder[d]
            if c.is_zero():
                continue
            q = c * inverse
            quotient[d - m] = q
            for i, b in enumerate(other.coefficients):
                remainder[d - m + i] = remainder[d - m + i] - q * b
            remainder[d] = self.field.zero
        return DensePoly(self.field, quotient), DensePoly(self.field, remainder[:m])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        return self.scale(self.leading.inverse())

    def content_valuation(self):
        return min(v for v in self.valuations() if v is not None)

    def zero_order(self):
        """Multiplicity of X as a factor."""
        for i, c in enumerate(self.coefficients):
            if not c.is_zero():
                return i
        return 0

    def residue(self):
        """Reduction modulo the maximal ideal, over the residue field."""
        polys = self.field.residue_polynomials
        return polys.strip([c.residue() for c in self.coefficients])

    @classmethod
    def from_residue(cls, field, residue_poly):
        return cls(field, [field.lift(c) for c in residue_poly])

    def equals(self, other):
        return (self - other).is_zero()

    def format(self, variable="X"):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            terms.append(f"[v={c.valuation()}]{variable}^{i}")
        return " + ".join(reversed(terms)) or "0"


def determinant(matrix, field):
    """
    Determinant by Gaussian elimination, pivoting on the entry of least
    valuation in each column.
    """
    rows = [list(row) for row in matrix]
    n = len(rows)
    result = field.one
    for col in range(n):
        pivot, best = None, None
        for r in range(col, n):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            v = entry.valuation()
            if best is None or v < best:
                pivot, best = r, v
        if pivot is None:
            return field.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            result = -result
        inverse = rows[col][col].inverse()
        result = result * rows[col][col]
        for r in range(col + 1, n):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            factor = entry * inverse
            rows[r] = [
                x if y.is_zero() else x - factor * y
                for x, y in zip(rows[r], rows[col], strict=True)
            ]
    return result


def solve(matrix, rhs, field):
    """
    The solution x of matrix x = rhs by Gauss-Jordan elimination, pivoting
    on the entry of least valuation in each column.
    """
    n = len(matrix)
    rows = [[*row, value] for row, value in zip(matrix, rhs, strict=True)]
    for col in range(n):
        pivot, best = None, None
        for r in range(col, n):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            v = entry.valuation()
            if best is None or v < best:
                pivot, best = r, v
        if pivot is None:
            raise PrecisionError("Singular linear system at the working precision", field.precision)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inverse = rows[col][col].inverse()
        for r in range(n):
            entry = rows[r][col]
            if r == col or entry.is_zero():
                continue
            factor = entry * inverse
            rows[r] = [
                x if y.is_zero() else x - factor * y
                for x, y in zip(rows[r], rows[col], strict=True)
            ]
    return [rows[i][n] * rows[i][i].inverse() for i in range(n)]


def sylvester_matrix)(f, g):
    field = f.field
    m, n = f.degree, g.degree
    size = m + n
    matrix = []
    for i in range(n):
        row = [field.zero] * size
        for j, c in enumerate(reversed(f.coefficients)):
            row[i + j] = c
        matrix.append(row)
    for i in range(m):
        row = [field.zero] * size
        for j, c in enumerate(reversed(g.coefficients)):
            row[i + j] = c
        matrix.append(row)
    return matrix


def resultant(f, g):
    if f.is_zero() or g.is_zero():
        raise PrecisionError("Resultant with a polynomial that is zero at precision")
    if f.degree == 0:
        return f.leading**g.degree
    if g.degree == 0:
        return g.leading**f.degree
    return determinant(sylvester_matrix(f, g), f.field)


def discriminant(f):
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    value = resultant(f, f.derivative()) / f.leading
    if (n * (n - 1) // 2) % 2:
        value = -value
    return value


def companion_matrix(f):
    """Multiplication-by-X matrix on the basis 1, X, ..., X^(n-1) of K[X]/(f)."""
    field = f.field
    monic = f.monic()
    n = monic.degree
    matrix = [[field.zero] * n for _ in range(n)]
    for i in range(n - 1):
        matrix[i + 1][i] = field.one
    for i in range(n):
        matrix[i][n - 1] = -monic[i]
    return matrix


def element_of_valuation(field, value):
    """A power of p and of the uniformizer with the given valuation."""
    value = Fraction(value)
    units = value * field.e
    if units.denominator != 1:
        raise ValueError(f"No element of valuation {value} in {field!r}.")
    return field.uniformizer_power(int(units))
