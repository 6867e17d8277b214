import random
from fractions import Fraction

from django.test import SimpleTestCase

from wild_monodromy.exceptions import CannotSplit
from wild_monodromy.newton import (
    DensePoly,
    certify_irreducible,
    hensel_split,
    roots_in_field,
    slope_factors,
)
from wild_monodromy.newton.factor import INCONCLUSIVE, IRREDUCIBLE, REDUCIBLE
from wild_monodromy.tower import RamifiedStep, TowerSpec, build_tower


class FactorTests(SimpleTestCase):
    def setUp(self):
        self.field = build_tower(TowerSpec(2, 1), 30)

    def poly(self, *coefficients, field=None):
        return DensePoly(field or self.field, coefficients)

    def test_roots(self):
        # (X - 4)(X - 2)(X - 1)
        roots = roots_in_field(self.poly(-8, 14, -7, 1))
        self.assertEqual([root.valuation() for root in roots], [2, 1, 0])
        for root, expected in zip(roots, (4, 2, 1), strict=True):
            self.assertIs(root.equals(self.field(expected)), True)

    def test_zero_root(self):
        roots = roots_in_field(self.poly(0, -1, 1))
        self.assertIs(roots[0].is_exact_zero(), True)
        self.assertIs(roots[1].equals(self.field.one), True)

    def test_no_roots(self):
        self.assertEqual(roots_in_field(self.poly(-2, 0, 1)), [])

    def test_roots_above_a_multiple_residual_root(self):
        # The residual polynomial of X^2 - 2 over Q_2(2^(1/2)) is (Y + 1)^2.
        step = RamifiedStep("radical", name="pi", m=2, radicand="2")
        field = build_tower(TowerSpec(2, 1, [step]), 20)
        pi = field.generator("pi")
        roots = roots_in_field(self.poly(-2, 0, 1, field=field))
        self.assertEqual(len(roots), 2)
        self.assertIs(roots[0].equals(pi), True)
        self.assertIs(roots[1].equals(-pi), True)

    def test_double_root_is_found_once(self):
        roots = roots_in_field(self.poly(1, -2, 1))
        self.assertEqual(len(roots), 1)
        self.assertIs(roots[0].equals(self.field.one), True)

    def test_hensel_split(self):
        f = self.poly(-8, 14, -7, 1)
        factors = hensel_split(f)
        self.assertEqual([g.degree for g in factors], [1, 1, 1])
        for factor, root in zip(factors, (4, 2, 1), strict=True):
            self.assertIs(factor.equals(self.poly(-root, 1)), True)
        self.assertIs((factors[0] * factors[1] * factors[2]).equals(f), True)

    def test_split_along_slopes(self):
        # (X - 4)(X^2 - 2): root valuations 2 and 1/2.
        f = self.poly(8, -2, -4, 1)
        factors = hensel_split(f)
        self.assertEqual([g.degree for g in factors], [1, 2])
        self.assertIs(factors[0].equals(self.poly(-4, 1)), True)
        self.assertIs(factors[1].equals(self.poly(-2, 0, 1)), True)

    def test_split_segments_of_lengths_four_and_three(self):
        # (X^4 - 8)(X^3 - 2): root valuations 3/4 and 1/3 stay whole.
        f = self.poly(16, 0, 0, -8, -2, 0, 0, 1)
        factors = slope_factors(f)
        self.assertEqual([g.degree for g in factors], [4, 3])
        self.assertIs(factors[0].equals(self.poly(-8, 0, 0, 0, 1)), True)
        self.assertIs(factors[1].equals(self.poly(-2, 0, 0, 1)), True)
        self.assertEqual([g.degree for g in hensel_split(f)], [4, 3])

    def test_zero_roots_come_off_first(self):
        # X^2 (X - 2)(X - 1)
        f = self.poly(0, 0, 2, -3, 1)
        factors = hensel_split(f)
        self.assertEqual([g.degree for g in factors], [2, 1, 1])
        self.assertIs(factors[0].equals(DensePoly.monomial(self.field, 2)), True)
        self.assertIs(factors[1].equals(self.poly(-2, 1)), True)

    def test_negative_root_valuations(self):
        # (X - 1/2)(X - 3)
        f = self.poly(Fraction(3, 2), Fraction(-7, 2), 1)
        factors = hensel_split(f)
        self.assertIs(factors[0].equals(self.poly(-3, 1)), True)
        self.assertIs(factors[1].equals(self.poly(Fraction(-1, 2), 1)), True)

    def test_product_of_factors(self):
        rng = random.Random(20)
        for _ in range(100):
            roots = rng.sample(range(-40, 41), rng.randint(2, 5))
            f = self.poly(1)
            for root in roots:
                f = f * self.poly(-root, 1)
            with self.subTest(roots=roots):
                factors = hensel_split(f)
                self.assertEqual(sum(g.degree for g in factors), len(roots))
                product = self.poly(1)
                for g in factors:
                    self.assertIs(g.is_monic(), True)
                    product = product * g
                self.assertIs(product.equals(f), True)

    def test_nothing_to_split(self):
        with self.assertRaisesMessage(CannotSplit, "Nothing to split in degree < 2."):
            hensel_split(self.poly(-1, 1))


class CertifyIrreducibleTests(SimpleTestCase):
    def setUp(self):
        self.field = build_tower(TowerSpec(2, 1), 30)

    def poly(self, *coefficients, field=None):
        return DensePoly(field or self.field, coefficients)

    def test_single_slope_denominator(self):
        certificate = certify_irreducible(self.poly(-2, 0, 0, 1))
        self.assertIs(bool(certificate), True)
        self.assertEqual(
            certificate.as_dict(),
            {
                "verdict": IRREDUCIBLE,
                "reason": "single-slope-denominator",
                "witness": {
                    "root_valuation": Fraction(1, 3),
                    "pi_units": Fraction(1, 3),
                    "denominator": 3,
                },
            },
        )

    def test_several_slopes(self):
        certificate = certify_irreducible(self.poly(-8, 14, -7, 1))
        self.assertEqual(certificate.verdict, REDUCIBLE)
        self.assertEqual(certificate.reason, "hensel-split")

    def test_zero_root(self):
        certificate = certify_irreducible(self.poly(0, 2, 1))
        self.assertEqual((certificate.verdict, certificate.witness), (REDUCIBLE, {"root": 0}))

    def test_element_denominator(self):
        certificate = certify_irreducible(self.poly(1, 1, 1), witness=Fraction(1, 2))
        self.assertEqual(certificate.reason, "element-denominator")
        self.assertEqual(certificate.witness, {"valuation": Fraction(1, 2), "denominator": 2})

    def test_residual_irreducible_needs_a_finite_residue_field(self):
        self.assertEqual(certify_irreducible(self.poly(1, 1, 1)).verdict, INCONCLUSIVE)
        exact = build_tower(TowerSpec(2, 1, proxy=False), 30)
        certificate = certify_irreducible(self.poly(1, 1, 1, field=exact))
        self.assertEqual(certificate.verdict, IRREDUCIBLE)
        self.assertEqual(certificate.reason, "residual-irreducible")

    def test_residual_split(self):
        # X^3 - 1 = (X - 1)(X^2 + X + 1) has a single slope.
        certificate = certify_irreducible(self.poly(-1, 0, 0, 1))
        self.assertEqual(certificate.verdict, REDUCIBLE)
        self.assertEqual(certificate.witness, {"degrees": [1, 2]})

    def test_linear(self):
        self.assertIs(bool(certify_irreducible(self.poly(1, 1))), True)
