import random
from fractions import Fraction

from django.test import SimpleTestCase

from wild_monodromy.exceptions import FiltrationError
from wild_monodromy.filtration import (
    FiltrationProfile,
    HerbrandFn,
    lower_profile,
    phi,
    psi,
    upper_profile,
)


def random_profile(rng, p=2):
    """A lower profile of a p-group with a tame part prime to p."""
    depth = rng.randint(1, 4)
    orders = [p ** (depth - k) for k in range(depth)]
    breaks, b = [], 0
    for order in orders:
        b += rng.randint(1, 9)
        breaks.append((b, f"G{b}", order))
    tame = rng.choice([1, 3, 5]) if p == 2 else rng.choice([1, 2, 4])
    if tame > 1:
        breaks.insert(0, (0, "G0", tame * orders[0]))
    return FiltrationProfile(breaks, p=p)


class HerbrandFnTests(SimpleTestCase):
    def test_identity_below_zero(self):
        fn = HerbrandFn([(0, 0), (1, 1)], Fraction(1, 8))
        self.assertEqual(fn(-1), -1)
        self.assertEqual(fn(Fraction(-1, 2)), Fraction(-1, 2))
        self.assertEqual(fn(3), Fraction(5, 4))

    def test_phi_vertices(self):
        fn = phi(FiltrationProfile([(1, "Q8", 8), (3, "Z(Q8)", 2)]))
        self.assertEqual(fn.vertices, [(0, 0), (1, 1), (3, Fraction(3, 2))])
        self.assertEqual(fn.final_slope, Fraction(1, 8))
        self.assertEqual(fn.slopes(), [1, Fraction(1, 4), Fraction(1, 8)])

    def test_phi_needs_lower_profile(self):
        upper = upper_profile(FiltrationProfile([(1, "C2", 2)]))
        with self.assertRaisesMessage(FiltrationError, "phi() needs a lower profile."):
            phi(upper)

    def test_compose(self):
        inner = HerbrandFn([(0, 0), (3, 3)], Fraction(1, 2))
        outer = HerbrandFn([(0, 0), (1, 1)], Fraction(1, 4))
        composite = outer.compose(inner)
        self.assertEqual(composite(3), Fraction(3, 2))
        self.assertEqual(composite(4), Fraction(13, 8))
        self.assertEqual(composite.final_slope, Fraction(1, 8))


class RandomProfileTests(SimpleTestCase):
    """psi o phi = id, phi concave, psi convex, on seeded random profiles."""

    def test_properties(self):
        rng = random.Random(20240611)  # noqa: S311
        for trial in range(200):
            p = rng.choice([2, 3])
            profile = random_profile(rng, p)
            fn = phi(profile)
            inverse = psi(fn)
            with self.subTest(trial=trial, profile=profile):
                self.assertIs(fn.is_concave(), True)
                self.assertIs(inverse.is_convex(), True)
                points = [Fraction(rng.randint(-4, 400), rng.randint(1, 7)) for _ in range(20)]
                points += [b for b, _, _ in profile.breaks]
                for x in points:
                    self.assertEqual(inverse(fn(x)), x)
                    self.assertEqual(fn(inverse(x)), x)
                self.assertEqual(lower_profile(upper_profile(profile)), profile)

    def test_monotone(self):
        rng = random.Random(7)  # noqa: S311
        for _ in range(20):
            fn = phi(random_profile(rng))
            points = sorted({Fraction(rng.randint(0, 300), 3) for _ in range(30)})
            values = [fn(x) for x in points]
            self.assertEqual(values, sorted(values))
            self.assertEqual(len(set(values)), len(values))
