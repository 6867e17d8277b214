from fractions import Fraction

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from wild_monodromy.reports import MATCH
from wild_monodromy.runner import run

Q8_DIMS = {"Q8": 0, "Z(Q8)": 0}


class GroupRunTests(SimpleTestCase):
    def test_q8(self):
        report = run({"kind": "group", "group": "Q8"})
        self.assertEqual(report.kind, "group")
        self.assertEqual(report.value("order"), 8)
        self.assertEqual(report.value("center"), 2)
        self.assertEqual(report.value("derived"), 2)
        self.assertEqual(report.value("frattini"), 2)
        self.assertEqual(report.value("orders"), [1, 2, 4, 4, 4, 4, 4, 4])
        self.assertIs(report.value("extraspecial"), True)
        self.assertEqual(report.value("extraspecial.rank"), 2)

    def test_abelian(self):
        report = run({"kind": "group", "group": "C4"})
        self.assertIs(report.value("extraspecial"), False)
        self.assertNotIn("extraspecial.rank", report)
        self.assertEqual(report.notes, [])

    def test_not_a_p_group(self):
        report = run({"kind": "group", "group": "SL2F3"})
        self.assertEqual(report.value("order"), 24)
        self.assertIs(report.value("extraspecial"), False)
        self.assertEqual(len(report.notes), 1)
        self.assertIn("is not a p-group", report.notes[0])

    def test_invalid_config(self):
        with self.assertRaises(ValidationError):
            run({"kind": "group"})


class FiltrationRunTests(SimpleTestCase):
    def test_phi(self):
        report = run(
            {"kind": "filtration-algebra", "operation": "phi", "profile": "q8-1-3", "at": "3"}
        )
        self.assertEqual(report.value("phi.value"), Fraction(3, 2))
        self.assertEqual(report.value("profile.different"), 16)
        upper = report.value("profile.upper")
        self.assertEqual([b for b, _, _ in upper["breaks"]], [1, Fraction(3, 2)])

    def test_psi(self):
        report = run(
            {"kind": "filtration-algebra", "operation": "psi", "profile": "q8-1-3", "at": "3/2"}
        )
        self.assertEqual(report.value("psi.value"), 3)

    def test_product(self):
        report = run(
            {"kind": "filtration-algebra", "operation": "product", "a": "q8-1-3", "b": "q8-5-69"}
        )
        lower = report.value("product.lower")
        self.assertEqual([b for b, _, _ in lower["breaks"]], [1, 3, 31, 543])
        self.assertEqual([order for _, _, order in lower["breaks"]], [64, 16, 8, 2])
        self.assertEqual(report.value("product.different"), 864)

    def test_compose(self):
        report = run(
            {
                "kind": "filtration-algebra",
                "operation": "compose",
                "a": {"group": "Z", "mode": "lower", "breaks": [[3, "Z", 2]]},
                "b": {"group": "G/Z", "mode": "lower", "breaks": [[1, "G/Z", 4]]},
                "labels": {"Z/G/Z": "G", "Z/1": "Z"},
            }
        )
        lower = report.value("composite.lower")
        self.assertEqual(lower["breaks"], [[1, "G", 8], [3, "Z", 2]])
        self.assertIs(report.value("composite.herbrand"), True)
        self.assertTrue(all(claim.status == MATCH for claim in report.claims))

    def test_tame(self):
        report = run(
            {
                "kind": "filtration-algebra",
                "operation": "tame",
                "profile": "q8-1-3",
                "tame_degree": 3,
            }
        )
        lower = report.value("tame.lower")
        self.assertEqual(lower["breaks"][0][2], 24)
        self.assertEqual(lower["breaks"][-1][2], 2)


class ConductorRunTests(SimpleTestCase):
    def test_swan(self):
        report = run(
            {"kind": "conductor", "profile": "q8-1-3", "dims": Q8_DIMS, "genus": 1}
        )
        conductor = report.value("conductor")
        self.assertEqual(
            (conductor["epsilon"], conductor["sw"], conductor["f"]), (2, 3, 5)
        )
        self.assertNotIn("conductor.base", report)

    def test_base_change(self):
        report = run(
            {
                "kind": "conductor",
                "profile": "q8-1-3",
                "dims": Q8_DIMS,
                "genus": 1,
                "tame_degree": 3,
            }
        )
        changed = report.value("conductor.base")
        self.assertEqual((changed["epsilon"], changed["sw"]), (2, 1))


class GoodReductionRunTests(SimpleTestCase):
    def test_unramified_scenario(self):
        report = run(
            {"kind": "good-reduction", "p": 2, "n": 1, "c": "0", "f_ur": 1, "precision": 12}
        )
        self.assertEqual(report.kind, "good-reduction")
        self.assertEqual(report.scenario["c"], "0")
        self.assertEqual(report.value("reduction")["equation"], "w^2 - w = 0 t^2 + t^3")
        self.assertIs(report.has_mismatch, False)
