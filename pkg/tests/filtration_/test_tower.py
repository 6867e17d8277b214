from fractions import Fraction

from django.test import SimpleTestCase

from wild_monodromy.exceptions import FiltrationError, HyodoRangeError
from wild_monodromy.filtration import (
    FiltrationProfile,
    KummerDatum,
    arithmetically_disjoint,
    break_from_different,
    compose_tower,
    different_from_kummer,
    filtration_from_roots,
    product_arith_disjoint,
    project,
    serre_different,
    upper_profile,
)
from wild_monodromy.monodromy import Q8_PROFILES
from wild_monodromy.newton import DensePoly, roots_in_field
from wild_monodromy.tower import RamifiedStep, TowerSpec, build_tower


def q8(name):
    return FiltrationProfile.from_dict(Q8_PROFILES[name])


class ComposeTowerTests(SimpleTestCase):
    sub = FiltrationProfile([(3, "Z", 2)])
    quot = FiltrationProfile([(1, "V4", 4)])

    def test_compose(self):
        composite = compose_tower(
            self.sub, self.quot, {("Z", "V4"): "G", ("Z", "1"): "Z(G)"}, group_name="G"
        )
        self.assertEqual(composite.breaks, [(1, "G", 8), (3, "Z(G)", 2)])
        self.assertEqual(composite.group_name, "G")

    def test_default_labels(self):
        composite = compose_tower(self.sub, self.quot)
        self.assertEqual([label for _, label, _ in composite.breaks], ["Z.V4", "Z.1"])

    def test_different_is_additive(self):
        # v_M(D_M/K) = v_M(D_M/L) + e_M/L v_L(D_L/K)
        composite = compose_tower(self.sub, self.quot)
        self.assertEqual(
            serre_different(composite),
            serre_different(self.sub) + 2 * serre_different(self.quot),
        )

    def test_needs_lower_profiles(self):
        with self.assertRaisesMessage(FiltrationError, "compose_tower() needs lower profiles."):
            compose_tower(upper_profile(self.sub), self.quot)


class ProductTests(SimpleTestCase):
    def test_q8_product(self):
        product = product_arith_disjoint(q8("q8-1-3"), q8("q8-5-69"))
        self.assertEqual([b for b, _, _ in product.breaks], [1, 3, 31, 543])
        self.assertEqual([order for _, _, order in product.breaks], [64, 16, 8, 2])
        self.assertEqual(
            [label for _, label, _ in product.breaks],
            ["Q8xQ8", "Z(Q8)xQ8", "1xQ8", "1xZ(Q8)"],
        )
        upper = upper_profile(product)
        self.assertEqual(
            [b for b, _, _ in upper.breaks], [1, Fraction(3, 2), 5, 21]
        )
        self.assertEqual(serre_different(product), 864)

    def test_project(self):
        product = product_arith_disjoint(q8("q8-1-3"), q8("q8-5-69"))
        self.assertEqual(project(product, 0), [(1, "Q8"), (Fraction(3, 2), "Z(Q8)")])
        self.assertEqual(project(product, 1), [(5, "Q8"), (21, "Z(Q8)")])

    def test_arithmetically_disjoint(self):
        self.assertIs(arithmetically_disjoint(q8("q8-1-3"), q8("q8-5-69")), True)
        self.assertIs(arithmetically_disjoint(q8("q8-1-3"), q8("q8-1-3")), False)


class KummerTests(SimpleTestCase):
    def test_different_and_break(self):
        datum = KummerDatum(2, 21, 12)
        v_K, v_L = different_from_kummer(datum)
        self.assertEqual(v_K, 2)
        self.assertEqual(v_L, 4)
        self.assertEqual(break_from_different(v_L, 2), 3)

    def test_s_in_range(self):
        with self.assertRaisesMessage(HyodoRangeError, "s = 24 is not in the range (0, 24)."):
            KummerDatum(2, 24, 12)

    def test_s_prime_to_p(self):
        with self.assertRaisesMessage(HyodoRangeError, "s = 22 is divisible by p = 2."):
            KummerDatum(2, 22, 12)

    def test_break_integral(self):
        msg = "v_L(D) = 5 is not divisible by p - 1 = 2."
        with self.assertRaisesMessage(FiltrationError, msg):
            break_from_different(5, 3)


class RootFiltrationTests(SimpleTestCase):
    def setUp(self):
        step = RamifiedStep("radical", name="pi", m=2, radicand="2")
        self.field = build_tower(TowerSpec(2, 1, [step]), 20)
        self.pi = self.field.generator("pi")

    def test_quadratic(self):
        # sigma(pi) - pi = -2 pi has valuation 3 in pi-units.
        profile = filtration_from_roots([self.pi, -self.pi], self.field, self.pi)
        self.assertEqual(profile.breaks, [(2, "G_2", 2)])
        self.assertEqual(serre_different(profile), 3)
        self.assertEqual(break_from_different(3, 2), 2)

    def test_labels(self):
        profile = filtration_from_roots(
            [-self.pi, self.pi], self.field, self.pi, labels={2: "C2"}
        )
        self.assertEqual(profile.subgroup_chain(), [("C2", 2), ("1", 1)])

    def test_uniformizer_missing(self):
        msg = "The uniformizer itself is not among the conjugates."
        with self.assertRaisesMessage(FiltrationError, msg):
            filtration_from_roots([-self.pi], self.field, self.pi)

    def test_uniformizer_of_the_top_step(self):
        msg = "The uniformizer must be the generator of the top step."
        with self.assertRaisesMessage(FiltrationError, msg):
            filtration_from_roots([self.pi, -self.pi], self.field, -self.pi)


class ConjugateCheckTests(SimpleTestCase):
    """Q_5(5^(1/4)): the conjugates of pi are i^k pi, all in the field."""

    def setUp(self):
        step = RamifiedStep("radical", name="pi", m=4, radicand="5")
        self.field = build_tower(TowerSpec(5, 1, [step]), 20)
        self.pi = self.field.generator("pi")
        self.roots = roots_in_field(DensePoly(self.field, [-5, 0, 0, 0, 1]))
        self.others = [root for root in self.roots if not root.equals(self.pi)]

    def test_tame_quartic(self):
        self.assertEqual(len(self.roots), 4)
        profile = filtration_from_roots(self.roots, self.field, self.pi)
        self.assertEqual(profile.breaks, [(0, "G_0", 4)])
        self.assertEqual(serre_different(profile), 3)

    def test_different_is_the_sum_of_indices(self):
        profile = filtration_from_roots(self.roots, self.field, self.pi)
        indices = sum((root - self.pi).valuation() * self.field.e for root in self.others)
        self.assertEqual(serre_different(profile), indices)

    def test_subgroup(self):
        profile = filtration_from_roots([self.pi, -self.pi], self.field, self.pi)
        self.assertEqual(profile.breaks, [(0, "G_0", 2)])

    def test_not_closed(self):
        msg = "The conjugates are not closed under composition."
        with self.assertRaisesMessage(FiltrationError, msg):
            filtration_from_roots([self.pi, *self.others[:2]], self.field, self.pi)

    def test_not_distinct(self):
        msg = "The conjugates are not pairwise distinct."
        with self.assertRaisesMessage(FiltrationError, msg):
            filtration_from_roots([self.pi, self.pi], self.field, self.pi)

    def test_not_a_root(self):
        msg = "Conjugate 1 is not a root of the minimal polynomial."
        with self.assertRaisesMessage(FiltrationError, msg):
            filtration_from_roots([self.pi, 2 * self.pi], self.field, self.pi)

    def test_explicit_polynomial(self):
        polynomial = DensePoly(self.field, [-5, 0, 0, 0, 1])
        profile = filtration_from_roots(
            [self.pi, -self.pi], self.field, self.pi, polynomial=polynomial
        )
        self.assertEqual(serre_different(profile), 1)
