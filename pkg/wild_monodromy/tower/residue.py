"""
Finite residue fields F_{p^f} standing in for the algebraically closed
residue field of Q_p^ur, and dense polynomials over them.

Elements are tuples of f integers in [0, p): coefficients of a polynomial in
the generator modulo the field's defining polynomial. Polynomials over the
residue field are lists of elements, lowest degree first, without trailing
zeros. Arithmetic in F_p[x] goes through sympy's galoistools, whose dense
polynomials list the leading coefficient first.
"""

import itertools
from functools import cached_property

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem, gf_strip

from ..exceptions import ConstructionError


def to_gf(a, p):
    """Convert a low-first coefficient list to galoistools' dense form."""
    return gf_strip([ZZ(int(c) % p) for c in reversed(a)])


def from_gf(a, length):
    low = [int(c) for c in reversed(a)]
    return low + [0] * (length - len(low))


def conway_like_modulus(p, f):
    """
    Return the first monic irreducible polynomial of degree f over F_p in
    lexicographic order of its low coefficients.
    """
    if f == 1:
        return [0, 1]
    for digits in itertools.product(range(p), repeat=f):
        if digits[-1] == 0:
            continue
        if gf_irreducible_p([ZZ(1), *(ZZ(d) for d in digits)], p, ZZ):
            return [*reversed(digits), 1]
    raise ConstructionError(f"no irreducible polynomial of degree {f} over F_{p}")


class ResidueField:
    """The finite field F_{p^f}."""

    def __init__(self, p, degree):
        if not isprime(p):
            raise ConstructionError(f"{p} is not prime.")
        if degree < 1:
            raise ConstructionError("The residue degree must be at least 1.")
        self.p = p
        self.degree = degree
        self.modulus = conway_like_modulus(p, degree)

    def __repr__(self):
        return f"ResidueField(F_{self.p}^{self.degree})"

    def __eq__(self, other):
        return (
            isinstance(other, ResidueField)
            and self.p == other.p
            and self.degree == other.degree
        )

    def __hash__(self):
        return hash((self.p, self.degree))

    @property
    def order(self):
        return self.p**self.degree

    @cached_property
    def gf_modulus(self):
        return to_gf(self.modulus, self.p)

    def _reduce(self, gf_poly):
        return tuple(from_gf(gf_rem(gf_poly, self.gf_modulus, self.p, ZZ), self.degree))

    @cached_property
    def zero(self):
        return (0,) * self.degree

    @cached_property
    def one(self):
        return self(1)

    @cached_property
    def generator(self):
        if self.degree == 1:
            # F_p is generated by any primitive root; the polynomial
            # generator of F_p[x]/(x) is 0, so expose a primitive root.
            for g in range(2, self.p + 1):
                if all(pow(g, (self.p - 1) // r, self.p) != 1 for r in factorint(self.p - 1)):
                    return self(g % self.p)
            return self.one
        return self.element([0, 1])

    def __call__(self, value):
        return self.element([value])

    def element(self, coefficients):
        coefficients = [c % self.p for c in coefficients]
        if len(coefficients) > self.degree:
            return self._reduce(to_gf(coefficients, self.p))
        coefficients = list(coefficients) + [0] * (self.degree - len(coefficients))
        return tuple(coefficients)

    def is_zero(self, a):
        return not any(a)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b, strict=True))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b, strict=True))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        product = gf_mul(to_gf(a, self.p), to_gf(b, self.p), self.p, ZZ)
        return self._reduce(product)

    def pow(self, a, exponent):
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        result = self.one
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of 0 in the residue field")
        return self.pow(a, self.order - 2)

    def frobenius(self, a, times=1):
        return self.pow(a, self.p ** (times % self.degree))

    def root_of_frobenius(self, a, times=1):
        """The unique b with b^(p^times) = a."""
        return self.frobenius(a, -times % self.degree)

    def elements(self):
        for digits in itertools.product(range(self.p), repeat=self.degree):
            yield tuple(reversed(digits))

    def format(self, a):
        terms = []
        for i, c in enumerate(a):
            if c:
                monomial = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
                if not monomial:
                    terms.append(str(c))
                elif c == 1:
                    terms.append(monomial)
                else:
                    terms.append(f"{c}*{monomial}")
        return " + ".join(reversed(terms)) or "0"


class ResiduePolynomials:
    """Dense polynomial arithmetic over a ResidueField."""

    def __init__(self, field):
        self.field = field

    def strip(self, a):
        a = list(a)
        while a and self.field.is_zero(a[-1]):
            a.pop()
        return a

    def from_ints(self, coefficients):
        return self.strip([self.field(c) for c in coefficients])

    def add(self, a, b):
        n = max(len(a), len(b))
        zero = self.field.zero
        a = list(a) + [zero] * (n - len(a))
        b = list(b) + [zero] * (n - len(b))
        return self.strip([self.field.add(x, y) for x, y in zip(a, b, strict=True)])

    def sub(self, a, b):
        return self.add(a, [self.field.neg(y) for y in b])

    def mul(self, a, b):
        if not a or not b:
            return []
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if self.field.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = self.field.add(out[i + j], self.field.mul(x, y))
        return self.strip(out)

    def scale(self, a, c):
        return self.strip([self.field.mul(x, c) for x in a])

    def divmod(self, a, b):
        a = self.strip(a)
        b = self.strip(b)
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        inv = self.field.inv(b[-1])
        quotient = [self.field.zero] * max(len(a) - len(b) + 1, 0)
        while len(a) >= len(b):
            coef = self.field.mul(a[-1], inv)
            shift = len(a) - len(b)
            quotient[shift] = coef
            for i, y in enumerate(b):
                a[i + shift] = self.field.sub(a[i + shift], self.field.mul(coef, y))
            a = self.strip(a)
        return self.strip(quotient), a

    def monic(self, a):
        a = self.strip(a)
        if not a:
            return a
        return self.scale(a, self.field.inv(a[-1]))

    def gcd(self, a, b):
        a, b = self.strip(a), self.strip(b)
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.monic(a)

    def xgcd(self, a, b):
        """Return (g, s, t) with s*a + t*b = g monic."""
        r0, r1 = self.strip(a), self.strip(b)
        s0, s1 = [self.field.one], []
        t0, t1 = [], [self.field.one]
        while r1:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        if not r0:
            return r0, s0, t0
        inv = self.field.inv(r0[-1])
        return self.scale(r0, inv), self.scale(s0, inv), self.scale(t0, inv)

    def evaluate(self, a, x):
        result = self.field.zero
        for c in reversed(a):
            result = self.field.add(self.field.mul(result, x), c)
        return result

    def derivative(self, a):
        return self.strip(
            [self.field.mul(self.field(i), c) for i, c in enumerate(a)][1:]
        )

    def powmod(self, base, exponent, modulus):
        result = [self.field.one]
        base = self.divmod(base, modulus)[1]
        while exponent:
            if exponent & 1:
                result = self.divmod(self.mul(result, base), modulus)[1]
            base = self.divmod(self.mul(base, base), modulus)[1]
            exponent >>= 1
        return result

    def is_irreducible(self, a):
        """Rabin's test over the residue field."""
        a = self.monic(a)
        n = len(a) - 1
        if n < 1:
            return False
        if n == 1:
            return True
        q = self.field.order
        x = [self.field.zero, self.field.one]
        if self.sub(self.powmod(x, q**n, a), x):
            return False
        for r in factorint(n):
            h = self.sub(self.powmod(x, q ** (n // r), a), x)
            if len(self.gcd(h, a)) != 1:
                return False
        return True

    def roots(self, a):
        """All roots in the residue field, with multiplicity 1 each."""
        a = self.strip(a)
        if not a:
            raise ValueError("the zero polynomial has every element as a root")
        return [x for x in self.field.elements() if self.field.is_zero(self.evaluate(a, x))]

    def is_squarefree(self, a):
        return len(self.gcd(a, self.derivative(a))) == 1

    def _pth_root(self, a):
        p = self.field.p
        return self.strip([self.field.root_of_frobenius(c) for c in a[::p]])

    def squarefree_decomposition(self, a):
        """[(s, m)] with a monic equal to the product of s^m, each s squarefree."""
        a = self.monic(a)
        if len(a) < 2:
            return []
        p = self.field.p
        derivative = self.derivative(a)
        if not derivative:
            return [(s, m * p) for s, m in self.squarefree_decomposition(self._pth_root(a))]
        result = []
        c = self.gcd(a, derivative)
        w = self.divmod(a, c)[0]
        i = 1
        while len(w) > 1:
            y = self.gcd(w, c)
            z = self.divmod(w, y)[0]
            if len(z) > 1:
                result.append((self.monic(z), i))
            w, c, i = y, self.divmod(c, y)[0], i + 1
        if len(c) > 1:
            rest = self.squarefree_decomposition(self._pth_root(c))
            result.extend((s, m * p) for s, m in rest)
        return result

    def distinct_degree(self, a):
        """[(g, d)]: g is the product of the degree-d irreducible factors of squarefree a."""
        q = self.field.order
        x = [self.field.zero, self.field.one]
        rest, h, d, result = self.monic(a), x, 1, []
        while len(rest) - 1 >= 2 * d:
            h = self.powmod(h, q, rest)
            g = self.gcd(rest, self.sub(h, x))
            if len(g) > 1:
                result.append((g, d))
                rest = self.divmod(rest, g)[0]
                h = self.divmod(h, rest)[1]
            d += 1
        if len(rest) > 1:
            result.append((rest, len(rest) - 1))
        return result

    def _splitting_candidates(self, longest):
        elements = list(self.field.elements())
        for length in range(1, longest + 1):
            for digits in itertools.product(elements, repeat=length):
                if not self.field.is_zero(digits[-1]):
                    yield list(digits)

    def equal_degree(self, a, d):
        """Irreducible factors of squarefree a whose factors all have degree d."""
        a = self.monic(a)
        n = len(a) - 1
        if n <= d:
            return [a]
        q = self.field.order
        for b in self._splitting_candidates(n):
            if q % 2:
                t = self.sub(self.powmod(b, (q**d - 1) // 2, a), [self.field.one])
            else:
                t, power = [], self.divmod(b, a)[1]
                for _ in range(self.field.degree * d):
                    t = self.add(t, power)
                    power = self.divmod(self.mul(power, power), a)[1]
            g = self.gcd(a, t)
            if 1 < len(g) < len(a):
                return self.equal_degree(g, d) + self.equal_degree(self.divmod(a, g)[0], d)
        raise ConstructionError(f"No splitting element for {self.format(a)}.")

    def factor(self, a):
        """[(irreducible monic, multiplicity)], ordered by degree then coefficients."""
        factors = []
        for s, m in self.squarefree_decomposition(a):
            for g, d in self.distinct_degree(s):
                factors.extend((h, m) for h in self.equal_degree(g, d))
        return sorted(factors, key=lambda item: (len(item[0]), [tuple(c) for c in item[0]]))

    def coprime_split(self, a):
        """(A, B) coprime of positive degree with A B = monic(a), or None."""
        factors = self.factor(a)
        if len(factors) < 2:
            return None
        g, m = factors[0]
        first = [self.field.one]
        for _ in range(m):
            first = self.mul(first, g)
        return first, self.divmod(self.monic(a), first)[0]

    def format(self, a, variable="Y"):
        terms = []
        for i, c in enumerate(a):
            if self.field.is_zero(c):
                continue
            coefficient = self.field.format(c)
            if " + " in coefficient:
                coefficient = f"({coefficient})"
            monomial = "" if i == 0 else (variable if i == 1 else f"{variable}^{i}")
            if not monomial:
                terms.append(coefficient)
            elif coefficient == "1":
                terms.append(monomial)
            else:
                terms.append(f"{coefficient}*{monomial}")
        return " + ".join(reversed(terms)) or "0"
