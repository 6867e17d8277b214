from ..base import ScenarioCommand


class Command(ScenarioCommand):
    help = "Converts, composes and multiplies ramification filtrations."
    kind = "filtration-algebra"

    def add_arguments(self, parser):
        parser.add_argument("operation", choices=["phi", "psi", "compose", "product", "tame"])
        parser.add_argument("--profile", help="Profile name or JSON.")
        parser.add_argument("--a", help="First profile (the subgroup, for compose).")
        parser.add_argument("--b", help="Second profile (the quotient, for compose).")
        parser.add_argument(
            "--labels",
            help='JSON mapping "sub/quotient" label pairs to composite labels.',
        )
        parser.add_argument("--tame-degree", type=int, dest="tame_degree")
        parser.add_argument("--at", help="Evaluate phi or psi at this point.")
        super().add_arguments(parser)

    def scenario_data(self, options):
        return {
            "operation": options["operation"],
            "profile": options["profile"],
            "a": options["a"],
            "b": options["b"],
            "labels": options["labels"],
            "tame_degree": options["tame_degree"],
            "at": options["at"],
        }
