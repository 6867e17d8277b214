from fractions import Fraction

from django.test import SimpleTestCase

from wild_monodromy.exceptions import PrecisionError
from wild_monodromy.newton import DensePoly, NewtonPolygon, newton_polygon, valuation_at_root
from wild_monodromy.tower import TowerSpec, build_tower


class NewtonPolygonTests(SimpleTestCase):
    def setUp(self):
        self.field = build_tower(TowerSpec(2, 1), 30)

    def test_three_slopes(self):
        # (X - 4)(X - 2)(X - 1)
        polygon = newton_polygon(DensePoly(self.field, [-8, 14, -7, 1]))
        self.assertEqual(polygon.root_valuations(), [(2, 1), (1, 1), (0, 1)])
        self.assertEqual(polygon.root_valuation_multiset(), [2, 1, 0])
        self.assertEqual(polygon.degree, 3)
        self.assertIs(polygon.is_single_segment(), False)

    def test_single_segment(self):
        polygon = newton_polygon(DensePoly(self.field, [-2, 0, 0, 1]))
        self.assertIs(polygon.is_single_segment(), True)
        self.assertEqual(polygon.segments[0].root_valuation, Fraction(1, 3))
        self.assertEqual(polygon.height_at(1), Fraction(2, 3))
        self.assertEqual(
            polygon.as_dict(),
            {
                "vertices": [[0, 1], [3, 0]],
                "segments": [{"root_valuation": Fraction(1, 3), "length": 3}],
                "zero_order": 0,
            },
        )

    def test_residual(self):
        polygon = newton_polygon(DensePoly(self.field, [1, 1, 1]))
        polys = self.field.residue_polynomials
        self.assertEqual(polygon.segments[0].residual, polys.from_ints([1, 1, 1]))

    def test_zero_order(self):
        polygon = NewtonPolygon.from_points([(2, 1), (4, 0)])
        self.assertEqual(polygon.zero_order, 2)

    def test_undetermined_hull(self):
        msg = "Coefficient 1 is zero only to precision 0, below the hull (precision bound 0)"
        with self.assertRaisesMessage(PrecisionError, msg):
            NewtonPolygon.from_points([(0, 2), (2, 0)], bounds=[(1, 0)])

    def test_empty(self):
        with self.assertRaisesMessage(PrecisionError, "Newton polygon of a polynomial"):
            NewtonPolygon.from_points([])

    def test_outside(self):
        polygon = NewtonPolygon.from_points([(0, 1), (2, 0)])
        with self.assertRaisesMessage(ValueError, "3 lies outside the polygon."):
            polygon.height_at(3)


class ValuationAtRootTests(SimpleTestCase):
    def setUp(self):
        self.field = build_tower(TowerSpec(2, 1), 30)

    def test_unique_least_term(self):
        poly = DensePoly(self.field, [2, 1])
        self.assertEqual(valuation_at_root(poly, Fraction(1, 2)), (Fraction(1, 2), True))

    def test_tie(self):
        poly = DensePoly(self.field, [2, 2])
        self.assertEqual(valuation_at_root(poly, 0), (1, False))

    def test_zero_polynomial(self):
        with self.assertRaisesMessage(PrecisionError, "valuation_at_root() of the zero polynomial"):
            valuation_at_root(DensePoly(self.field), 0)
