import json
from pathlib import Path

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from ..exceptions import Error, PrecisionError
from ..forms import ScenarioConfig
from ..reports import render_text
from ..runner import run


class ScenarioCommand(BaseCommand):
    """
    Base class for commands that build a ScenarioConfig from their options
    (and an optional JSON file), run it, and print the report.
    """

    kind = None

    def add_arguments(self, parser):
        parser.add_argument(
            "--config",
            help="JSON scenario file; command-line options override its values.",
        )
        parser.add_argument(
            "--format",
            choices=["text", "json"],
            default=None,
            help='Output format. Defaults to "text".',
        )
        parser.add_argument(
            "--precision",
            type=int,
            help="Working precision in units of v(p). Defaults to WILD_MONODROMY['PRECISION'].",
        )
        parser.add_argument(
            "--residue-degree",
            type=int,
            dest="f_ur",
            help="Degree of the residue field standing in for the algebraic closure.",
        )
        parser.add_argument(
            "--timings",
            action="store_true",
            help="Include step durations in the JSON output.",
        )

    def scenario_data(self, options):
        """Scenario values from the command's own options."""
        return {}

    def load_config(self, path):
        try:
            with Path(path).open() as fp:
                data = json.load(fp)
        except (OSError, json.JSONDecodeError) as exc:
            raise CommandError(f"Cannot read {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise CommandError(f"{path} must contain a JSON object.")
        return data

    def handle(self, *args, **options):
        data = self.load_config(options["config"]) if options["config"] else {}
        if self.kind:
            data.setdefault("kind", self.kind)
        for key in ("format", "precision", "f_ur"):
            if options[key] is not None:
                data[key] = options[key]
        data.update(
            {key: value for key, value in self.scenario_data(options).items() if value is not None}
        )
        try:
            config = ScenarioConfig.from_dict(data)
        except ValidationError as exc:
            if hasattr(exc, "error_dict"):
                messages = "; ".join(
                    f"{field}: {' '.join(errors)}" for field, errors in exc.message_dict.items()
                )
            else:
                messages = " ".join(exc.messages)
            raise CommandError(f"Invalid scenario: {messages}") from exc
        try:
            report = run(config)
        except PrecisionError as exc:
            raise CommandError(f"{exc}. {exc.hint}") from exc
        except Error as exc:
            raise CommandError(str(exc)) from exc
        if (config["format"] or "text") == "json":
            self.stdout.write(report.to_json(timings=options["timings"]))
        else:
            self.stdout.write(render_text(report))
        if report.has_mismatch:
            raise CommandError("The report contains mismatches.")
