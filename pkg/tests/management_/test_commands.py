import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase


def run_command(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class GroupCommandTests(SimpleTestCase):
    def test_text(self):
        output = run_command("group", "info", "Q8")
        self.assertIn("group report (version 1)", output)
        self.assertIn("scenario: group=Q8", output)
        self.assertIn("extraspecial.rank", output)
        self.assertTrue(output.rstrip().endswith("status: match"))

    def test_json(self):
        data = json.loads(run_command("group", "info", "Q8xQ8", "--format", "json"))
        self.assertEqual(data["kind"], "group")
        claims = {claim["id"]: claim for claim in data["claims"]}
        self.assertEqual(claims["order"]["computed"], 64)
        self.assertEqual(claims["center"]["computed"], 4)
        self.assertIs(claims["extraspecial"]["computed"], False)
        self.assertNotIn("timings", data)

    def test_unknown_group(self):
        with self.assertRaisesMessage(CommandError, "Invalid scenario: group:"):
            run_command("group", "info", "Foo")


class FiltrationCommandTests(SimpleTestCase):
    def test_phi_table(self):
        output = run_command("filtration", "phi", "--profile", "q8-1-3", "--at", "3")
        self.assertIn("phi.value", output)
        self.assertIn("3/2", output)
        self.assertIn("G_i = Q8", output)
        self.assertIn("for -1 <= i <= 1", output)
        self.assertIn("G^u = Z(Q8)", output)

    def test_missing_profile(self):
        with self.assertRaisesMessage(
            CommandError, "Invalid scenario: profile: This field is required."
        ):
            run_command("filtration", "phi")

    def test_unknown_profile(self):
        with self.assertRaisesMessage(CommandError, "unknown profile 'q8-2-2'"):
            run_command("filtration", "phi", "--profile", "q8-2-2")

    def test_product_json(self):
        data = json.loads(
            run_command(
                "filtration", "product", "--a", "q8-1-3", "--b", "q8-5-69", "--format", "json"
            )
        )
        claims = {claim["id"]: claim for claim in data["claims"]}
        self.assertEqual(claims["product.different"]["computed"], 864)
        upper = claims["product.upper"]["computed"]["breaks"]
        self.assertEqual([b for b, _, _ in upper], [1, "3/2", 5, 21])


class ConductorCommandTests(SimpleTestCase):
    def test_swan(self):
        data = json.loads(
            run_command(
                "conductor",
                "swan",
                "--profile",
                "q8-1-3",
                "--dims",
                '{"Q8": 0, "Z(Q8)": 0}',
                "--genus",
                "1",
                "--tame-degree",
                "3",
                "--format",
                "json",
            )
        )
        claims = {claim["id"]: claim["computed"] for claim in data["claims"]}
        self.assertEqual(claims["conductor"]["f"], 5)
        self.assertEqual(claims["conductor.base"]["sw"], 1)

    def test_dims_out_of_range(self):
        with self.assertRaisesMessage(CommandError, "dim for Q8 = 3 is outside [0, 2]."):
            run_command(
                "conductor", "swan", "--profile", "q8-1-3", "--dims", '{"Q8": 3}', "--genus", "1"
            )


class ConfigFileTests(SimpleTestCase):
    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.directory = Path(directory.name)

    def write(self, name, text):
        path = self.directory / name
        path.write_text(text)
        return str(path)

    def test_options_override_file(self):
        path = self.write("group.json", json.dumps({"group": "C4", "format": "json"}))
        data = json.loads(run_command("group", "info", "Q8", "--config", path))
        self.assertEqual(data["scenario"], {"group": "Q8"})

    def test_unreadable(self):
        path = self.write("broken.json", "{")
        with self.assertRaisesMessage(CommandError, f"Cannot read {path}:"):
            run_command("group", "info", "Q8", "--config", path)

    def test_not_an_object(self):
        path = self.write("list.json", "[1, 2]")
        with self.assertRaisesMessage(CommandError, f"{path} must contain a JSON object."):
            run_command("group", "info", "Q8", "--config", path)


class AnalyzeCommandTests(SimpleTestCase):
    def test_unramified_good_reduction(self):
        output = run_command(
            "analyze",
            "good-reduction",
            "--p",
            "2",
            "--n",
            "1",
            "--c",
            "0",
            "--residue-degree",
            "1",
            "--precision",
            "12",
        )
        self.assertIn("w^2 - w = 0 t^2 + t^3", output)
        self.assertIn("note: v(c) >= v(lambda^(p/(1+q))): good reduction over K.", output)

    def test_preset_kind(self):
        with self.assertRaisesMessage(CommandError, "Preset type-I-example is a genus2 scenario."):
            run_command("analyze", "good-reduction", "--preset", "type-I-example")
