from django.test import SimpleTestCase

from wild_monodromy.exceptions import GroupError
from wild_monodromy.groups import (
    cyclic_group,
    dihedral_group,
    direct_product,
    extraspecial_group,
    extraspecial_sequence,
    frattini_closure_surjective,
    frattini_images,
    make_named,
    quaternion_group,
    sl2,
    swap_extension,
)


class QuaternionTests(SimpleTestCase):
    def setUp(self):
        self.q8 = quaternion_group()

    def test_order(self):
        self.assertEqual(self.q8.order, 8)
        self.assertEqual(self.q8.order_profile(), [1, 2, 4, 4, 4, 4, 4, 4])

    def test_center_derived_frattini_coincide(self):
        center = self.q8.center()
        self.assertEqual(center.order, 2)
        self.assertEqual(self.q8.derived().elements, center.elements)
        self.assertEqual(self.q8.frattini().elements, center.elements)

    def test_extraspecial(self):
        self.assertIs(self.q8.is_extraspecial(), True)
        self.assertEqual(extraspecial_sequence(self.q8), 2)

    def test_not_abelian(self):
        self.assertIs(self.q8.is_abelian(), False)

    def test_quotient_by_center(self):
        quotient = self.q8.quotient(self.q8.center())
        self.assertEqual(quotient.order, 4)
        self.assertIs(quotient.is_abelian(), True)

    def test_maximal_subgroups(self):
        maximal = self.q8.maximal_subgroups()
        self.assertEqual(sorted(h.order for h in maximal), [4, 4, 4])


class ExtraspecialTests(SimpleTestCase):
    def test_minus_type(self):
        group = extraspecial_group(2, 2)
        self.assertEqual(group.order, 32)
        self.assertIs(group.is_extraspecial(), True)
        self.assertEqual(extraspecial_sequence(group), 4)

    def test_plus_type(self):
        group = extraspecial_group(2, 1, "plus")
        self.assertEqual(group.order, 8)
        self.assertIs(group.is_extraspecial(), True)
        self.assertNotEqual(group.order_profile(), quaternion_group().order_profile())

    def test_odd_prime(self):
        group = extraspecial_group(3, 1)
        self.assertEqual(group.order, 27)
        self.assertIs(group.is_extraspecial(), True)
        self.assertEqual(max(group.order_profile()), 3)

    def test_invalid_rank(self):
        with self.assertRaisesMessage(GroupError, "extraspecial() needs n >= 1."):
            extraspecial_group(2, 0)

    def test_unsupported_kind(self):
        msg = "Unsupported extra-special type 'odd' for p = 2."
        with self.assertRaisesMessage(GroupError, msg):
            extraspecial_group(2, 1, "odd")

    def test_abelian_is_not_extraspecial(self):
        self.assertIs(cyclic_group(8).is_extraspecial(), False)

    def test_not_a_p_group(self):
        with self.assertRaisesMessage(GroupError, "is not a p-group."):
            sl2(3).is_extraspecial()

    def test_product_is_not_extraspecial(self):
        product = direct_product(quaternion_group(), quaternion_group())
        self.assertIs(product.is_extraspecial(), False)


class SwapExtensionTests(SimpleTestCase):
    def test_order(self):
        group = swap_extension(quaternion_group())
        self.assertEqual(group.order, 128)
        self.assertIs(group.is_p_group(), True)
        self.assertEqual(group.prime, 2)

    def test_surjectivity_from_frattini_quotient(self):
        q8 = quaternion_group()
        i, j = q8.index("i"), q8.index("j")
        group = make_named("(Q8xQ8):2")
        first = [group.index((i, 0, 0)), group.index((j, 0, 0))]
        swap = group.index((0, 0, 1))
        self.assertIs(frattini_closure_surjective(group, [*first, swap]), True)
        self.assertIs(frattini_closure_surjective(group, first), False)


class MakeNamedTests(SimpleTestCase):
    def test_names(self):
        cases = {
            "Q8": 8,
            "D8": 8,
            "SL2F3": 24,
            "C5": 5,
            "1": 1,
            "Q8xC2": 16,
            "extraspecial(2,2,plus)": 32,
            "(Q8xQ8):2": 128,
        }
        for name, order in cases.items():
            with self.subTest(name=name):
                self.assertEqual(make_named(name).order, order)

    def test_unsupported(self):
        with self.assertRaisesMessage(GroupError, "Unsupported group 'S3'."):
            make_named("S3")

    def test_swap_needs_equal_factors(self):
        with self.assertRaisesMessage(GroupError, "Unsupported group '(Q8xD8):2'."):
            make_named("(Q8xD8):2")

    def test_dihedral_profile(self):
        self.assertEqual(dihedral_group(4).order_profile(), [1, 2, 2, 2, 2, 2, 4, 4])


class FrattiniTests(SimpleTestCase):
    def test_nilpotent_products(self):
        cases = {"C2xC2xC2xC3": 1, "C4xC3": 2, "Q8xC3": 2, "C8": 4, "Q8xQ8": 4}
        for name, order in cases.items():
            with self.subTest(name=name):
                group = make_named(name)
                self.assertIs(group.is_nilpotent(), True)
                self.assertEqual(group.frattini().order, order)

    def test_sylow_subgroups_of_a_nilpotent_group(self):
        group = make_named("Q8xC3")
        self.assertEqual(group.sylow(2).order, 8)
        self.assertEqual(group.sylow(3).order, 3)

    def test_not_nilpotent(self):
        group = sl2(3)
        self.assertIs(group.is_nilpotent(), False)
        self.assertEqual(sorted(h.order for h in group.maximal_subgroups()), [6, 6, 6, 6, 8])
        self.assertEqual(group.frattini().elements, group.center().elements)

    def test_maximal_subgroups_need_three_generators(self):
        # Every maximal subgroup of (C2)^4 has 8 elements and 3 generators.
        group = make_named("C2xC2xC2xC2")
        maximal = group.maximal_subgroups()
        self.assertEqual(len(maximal), 15)
        self.assertEqual({h.order for h in maximal}, {8})
        self.assertEqual(group.frattini().order, 1)

    def test_subgroups_of_order(self):
        self.assertEqual(len(quaternion_group().subgroups_of_order(4)), 3)
        self.assertEqual(len(sl2(3).subgroups_of_order(3)), 4)


class FrattiniImagesTests(SimpleTestCase):
    def setUp(self):
        self.q8 = quaternion_group()

    def test_plane_covers_the_quotient(self):
        images, dimension = frattini_images(self.q8, [(0, 0), (1, 0), (0, 1), (1, 1)])
        self.assertEqual(dimension, 2)
        self.assertEqual(images[0], 0)
        self.assertIs(frattini_closure_surjective(self.q8, images), True)
        phi = self.q8.frattini()
        product = self.q8.mul(images[1], images[2])
        self.assertIn(self.q8.mul(product, self.q8.inverse(images[3])), phi)
        cosets = {frozenset(self.q8.mul(a, z) for z in phi.elements) for a in images}
        self.assertEqual(len(cosets), 4)

    def test_line_does_not_cover(self):
        images, dimension = frattini_images(self.q8, [(0, 0, 0), (1, 1, 0)])
        self.assertEqual(dimension, 1)
        self.assertIs(frattini_closure_surjective(self.q8, images), False)

    def test_odd_prime(self):
        group = extraspecial_group(3, 1)
        vectors = [(a, b) for a in range(3) for b in range(3)]
        images, dimension = frattini_images(group, vectors)
        self.assertEqual(dimension, 2)
        self.assertIs(frattini_closure_surjective(group, images), True)

    def test_span_too_large(self):
        msg = "The vectors span dimension 3, more than G/Phi(G) of Q8."
        with self.assertRaisesMessage(GroupError, msg):
            frattini_images(self.q8, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
