"""
Coefficient expressions over a tower.

    expr     := term (("+" | "-") term)*
    term     := factor (("*" | "/") factor)*
    factor   := "-" factor | power
    power    := atom [("^" | "**") exponent]
    exponent := ["-"] INT | "(" ["-"] INT ["/" INT] ")"
    atom     := INT | NAME | "(" expr ")"

NAME is p, lambda (zeta_p - 1, which is -2 for p = 2), zeta, or the name of
a tower step's generator. A rational exponent is resolved through the
tower's radical steps: with pi^15 = 2, "2^(3/5)" is pi^9.
"""

import re
from fractions import Fraction

from ..exceptions import ConstructionError

TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def tokenize(text):
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if match is None:
            raise ConstructionError(f"Cannot parse {text!r}: unexpected {text[position:]!r}.")
        number, name, operator = match.groups()
        if number is not None:
            tokens.append(("int", int(number)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if operator == "**" else operator))
        position = match.end()
    return tokens


class ExpressionParser:
    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.tokens = tokenize(text)
        self.position = 0

    def error(self, message):
        return ConstructionError(f"Cannot parse {self.text!r}: {message}.")

    def peek(self):
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return (None, None)

    def take(self, kind=None, value=None):
        token = self.peek()
        if token[0] is None or (kind and token[0] != kind) or (value and token[1] != value):
            expected = value or kind or "a token"
            raise self.error(f"expected {expected}")
        self.position += 1
        return token

    def accept(self, value):
        if self.peek() == ("op", value):
            self.position += 1
            return True
        return False

    def parse(self):
        if not self.tokens:
            raise self.error("empty expression")
        value = self.expr()
        if self.position != len(self.tokens):
            raise self.error(f"trailing input at {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            if self.accept("*"):
                value = value * self.factor()
            elif self.accept("/"):
                value = value / self.factor()
            else:
                return value

    def factor(self):
        if self.accept("-"):
            return -self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            exponent = self.exponent()
            return self.field.rational_power(base, exponent)
        return base

    def exponent(self):
        if self.accept("("):
            sign = -1 if self.accept("-") else 1
            numerator = self.take("int")[1]
            denominator = self.take("int")[1] if self.accept("/") else 1
            self.take("op", ")")
            if denominator == 0:
                raise self.error("zero denominator in exponent")
            return Fraction(sign * numerator, denominator)
        sign = -1 if self.accept("-") else 1
        return Fraction(sign * self.take("int")[1])

    def atom(self):
        kind, value = self.peek()
        if kind == "int":
            self.position += 1
            return self.field.element(value)
        if kind == "name":
            self.position += 1
            return self.field.generator(value)
        if self.accept("("):
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise self.error("expected a number, a name or '('")


def parse_expression(text, field):
    """Evaluate a coefficient expression as an element of field."""
    if isinstance(text, (int, Fraction)):
        return field.element(text)
    return ExpressionParser(str(text), field).parse()
