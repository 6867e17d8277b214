import json
from fractions import Fraction

from django.test import SimpleTestCase

from wild_monodromy.filtration import FiltrationProfile, upper_profile
from wild_monodromy.reports import (
    ADVISORY,
    MATCH,
    MISMATCH,
    Claim,
    Report,
    render_filtration_table,
    render_text,
)
from wild_monodromy.tower import Valuation


class ReportTests(SimpleTestCase):
    def test_check_compares_canonical_values(self):
        report = Report("demo")
        self.assertEqual(report.check("a", "a", Fraction(4), 4).status, MATCH)
        self.assertEqual(report.check("b", "b", Fraction(1, 2), "1/2").status, MATCH)
        self.assertEqual(report.check("c", "c", (1, Fraction(3, 2)), [1, "3/2"]).status, MATCH)
        self.assertEqual(report.check("d", "d", Valuation(Fraction(7, 24)), "7/24").status, MATCH)
        self.assertIs(report.has_mismatch, False)
        self.assertEqual(report.check("e", "e", 45, 44).status, MISMATCH)
        self.assertIs(report.has_mismatch, True)

    def test_statuses(self):
        report = Report("demo")
        report.record("computed", "anchor", 1)
        report.advisory("pinned", "anchor", 2, expected=2)
        report.mismatch("failed", "anchor", ValueError("boom"))
        self.assertEqual(
            [claim.status for claim in report.claims], [MATCH, ADVISORY, MISMATCH]
        )
        self.assertEqual(report.value("failed"), {"error": "boom"})
        self.assertIn("pinned", report)
        self.assertNotIn("missing", report)
        with self.assertRaises(KeyError):
            report["missing"]

    def test_unknown_status(self):
        with self.assertRaisesMessage(ValueError, "Unknown claim status 'ok'."):
            Claim("a", "a", 1, status="ok")

    def test_as_dict(self):
        report = Report("demo", {"p": 2, "c": Fraction(1, 3)})
        report.record("sep", "anchor", Fraction(2, 3))
        report.note("a note")
        report.timings.append({"step": "run", "time": "0.001"})
        self.assertEqual(
            report.as_dict(),
            {
                "version": 1,
                "kind": "demo",
                "scenario": {"p": 2, "c": "1/3"},
                "claims": [
                    {
                        "id": "sep",
                        "anchor": "anchor",
                        "computed": "2/3",
                        "expected": None,
                        "status": MATCH,
                    }
                ],
                "notes": ["a note"],
                "status": MATCH,
            },
        )
        self.assertEqual(report.as_dict(timings=True)["timings"], report.timings)

    def test_json(self):
        report = Report("demo", {"p": 2})
        report.check("sw", "anchor", 45, 45)
        data = json.loads(report.to_json())
        self.assertEqual(data["claims"][0]["computed"], 45)
        restored = Report.from_json(report.to_json())
        self.assertEqual(restored.as_dict(), report.as_dict())

    def test_unsupported_version(self):
        with self.assertRaisesMessage(ValueError, "Unsupported report version 2."):
            Report.from_dict({"version": 2, "kind": "demo", "claims": []})


class RenderTests(SimpleTestCase):
    profile = FiltrationProfile([(1, "Q8", 8), (3, "Z(Q8)", 2)])

    def test_lower_table(self):
        table = render_filtration_table(self.profile.mode, self.profile.breaks)
        lines = table.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertIn("G_i = Q8", lines[0])
        self.assertTrue(lines[0].endswith("for -1 <= i <= 1"))
        self.assertTrue(lines[1].endswith("for 1 < i <= 3"))
        self.assertTrue(lines[2].endswith("for 3 < i"))

    def test_upper_table(self):
        upper = upper_profile(self.profile)
        table = render_filtration_table(upper.mode, upper.breaks)
        self.assertIn("G^u = Z(Q8)", table)
        self.assertIn("for 1 < u <= 3/2", table)

    def test_render_text(self):
        report = Report("demo", {"p": 2})
        report.record("filtration.lower", "lower filtration", self.profile.as_dict())
        report.check("sw", "sw from the ledger", 3, 4)
        text = render_text(report)
        self.assertIn("demo report (version 1)", text)
        self.assertIn("scenario: p=2", text)
        self.assertIn("for 1 < i <= 3", text)
        self.assertIn("(expected 4)", text)
        self.assertTrue(text.endswith("status: mismatch"))
