from fractions import Fraction

from django.test import SimpleTestCase

from wild_monodromy.exceptions import ConstructionError
from wild_monodromy.tower import (
    RamifiedStep,
    TowerField,
    TowerSpec,
    build_tower,
    zeta_tower,
)


def radical(m, radicand="2", name="pi"):
    return RamifiedStep("radical", name=name, m=m, radicand=radicand)


class TowerSpecTests(SimpleTestCase):
    def test_prime(self):
        with self.assertRaisesMessage(ConstructionError, "p = 4 is not prime."):
            TowerSpec(4)

    def test_residue_degree(self):
        with self.assertRaisesMessage(ConstructionError, "f_ur must be at least 1."):
            TowerSpec(2, 0)

    def test_config(self):
        data = {
            "p": 2,
            "f_ur": 3,
            "steps": [{"radical": {"m": 15, "radicand": "2", "name": "pi"}}],
            "proxy": True,
        }
        spec = TowerSpec.from_config(data)
        self.assertEqual(spec.e, 15)
        self.assertEqual(spec.as_config(), data)
        self.assertEqual(spec.with_residue_degree(1).f_ur, 1)

    def test_step_config(self):
        step = RamifiedStep.from_config({"radical": {"m": 3}}, 1)
        self.assertEqual(step.as_config(), {"radical": {"m": 3, "radicand": "p"}})
        step = RamifiedStep.from_config({"eisenstein": {"coefficients": [2, 2, 1]}}, 1)
        self.assertEqual(step.degree, 2)
        self.assertEqual(step.as_config(), {"eisenstein": {"coefficients": ["2", "2"]}})

    def test_step_shape(self):
        msg = "Step 2: expected {'radical': ...} or {'eisenstein': ...}"
        with self.assertRaisesMessage(ConstructionError, msg):
            RamifiedStep.from_config({"radical": {}, "eisenstein": {}}, 2)

    def test_unknown_kind(self):
        with self.assertRaisesMessage(ConstructionError, "Unknown step kind 'cubic'."):
            RamifiedStep("cubic")

    def test_radical_degree(self):
        with self.assertRaisesMessage(ConstructionError, "A radical step needs a degree m >= 2."):
            RamifiedStep("radical", m=1, radicand="2")

    def test_eisenstein_degree(self):
        with self.assertRaisesMessage(ConstructionError, "An Eisenstein step needs degree >= 2."):
            RamifiedStep("eisenstein", coefficients=["2"])


class TowerFieldTests(SimpleTestCase):
    def test_radical_step(self):
        field = build_tower(TowerSpec(2, 2, [radical(3)]), 20)
        self.assertEqual((field.e, field.f, field.degree), (3, 2, 6))
        pi = field.generator("pi")
        self.assertEqual(pi.valuation(), Fraction(1, 3))
        self.assertEqual(field.uniformizer.valuation(), Fraction(1, 3))
        self.assertIs((pi**3).equals(field(2)), True)

    def test_memoized(self):
        spec = TowerSpec(2, 2, [radical(3)])
        self.assertIs(build_tower(spec, 20), build_tower(spec, 20))
        self.assertIsNot(build_tower(spec, 20), build_tower(spec, 24))
        self.assertEqual(build_tower(spec, 20).with_precision(24), build_tower(spec, 24))

    def test_two_steps(self):
        spec = TowerSpec(2, 1, [radical(3), radical(5, radicand="pi", name="rho")])
        field = build_tower(spec, 20)
        self.assertEqual(field.e, 15)
        self.assertEqual(field.ramification_below(1), 3)
        self.assertEqual(field.generator("rho").valuation(), Fraction(1, 15))

    def test_eisenstein_step(self):
        step = RamifiedStep("eisenstein", name="t", coefficients=["2", "2"])
        field = build_tower(TowerSpec(2, 1, [step]), 20)
        t = field.generator("t")
        self.assertIs((t * t + 2 * t + 2).is_zero(), True)

    def test_precision(self):
        with self.assertRaisesMessage(ConstructionError, "precision must be at least 2"):
            TowerField(TowerSpec(2), 1)

    def test_not_eisenstein(self):
        step = RamifiedStep("eisenstein", coefficients=["4", "2"])
        msg = "Step 1: not Eisenstein: constant coefficient has valuation 2"
        with self.assertRaisesMessage(ConstructionError, msg):
            TowerField(TowerSpec(2, 1, [step]), 20)

    def test_coefficient_not_divisible(self):
        step = RamifiedStep("eisenstein", coefficients=["2", "1"])
        msg = "coefficient of X^1 is not divisible by the uniformizer"
        with self.assertRaisesMessage(ConstructionError, msg):
            TowerField(TowerSpec(2, 1, [step]), 20)

    def test_radical_not_totally_ramified(self):
        msg = "Step 1: X^2 = 4 is not totally ramified of degree 2"
        with self.assertRaisesMessage(ConstructionError, msg):
            TowerField(TowerSpec(2, 1, [radical(2, radicand="4")]), 20)

    def test_radicand_not_a_uniformizer(self):
        msg = "radicand 4 has valuation 2 in uniformizer units"
        with self.assertRaisesMessage(ConstructionError, msg):
            TowerField(TowerSpec(2, 1, [radical(3, radicand="4")]), 20)

    def test_zero_radicand(self):
        with self.assertRaisesMessage(ConstructionError, "Step 1: constant coefficient is zero"):
            TowerField(TowerSpec(2, 1, [radical(3, radicand="0")]), 20)

    def test_duplicate_name(self):
        spec = TowerSpec(2, 1, [radical(3), radical(5, radicand="pi", name="pi")])
        with self.assertRaisesMessage(ConstructionError, "Step 2: duplicate generator name 'pi'"):
            TowerField(spec, 20)

    def test_reserved_name(self):
        with self.assertRaisesMessage(ConstructionError, "duplicate generator name 'p'"):
            TowerField(TowerSpec(2, 1, [radical(3, name="p")]), 20)


class ZetaTowerTests(SimpleTestCase):
    def test_p2(self):
        field = zeta_tower(2, 3, f_ur=1, precision=20)
        self.assertEqual(field.e, 4)
        self.assertIs(field.lambda_.equals(field(-2)), True)
        self.assertEqual(field.generator("varpi").valuation(), Fraction(1, 4))

    def test_p3(self):
        field = zeta_tower(3, 3, f_ur=1, precision=20)
        self.assertEqual(field.e, 8)
        lam = field.lambda_
        self.assertEqual(lam.valuation(), Fraction(1, 2))
        zeta = field.generator("zeta")
        self.assertIs((zeta**3).equals(field.one), True)
        self.assertIs((field.generator("varpi") ** 4).equals(lam), True)

    def test_lambda_unavailable(self):
        field = build_tower(TowerSpec(3, 1, []), 20)
        with self.assertRaisesMessage(ConstructionError, "lambda is not available"):
            field.generator("lambda")
