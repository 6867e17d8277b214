from ..base import ScenarioCommand


class Command(ScenarioCommand):
    help = "Computes Swan conductors from a lower filtration and fixed-space dimensions."
    kind = "conductor"

    def add_arguments(self, parser):
        parser.add_argument("operation", choices=["swan"])
        parser.add_argument("--profile", help="Profile name or JSON.")
        parser.add_argument("--dims", help="JSON mapping subgroup labels to dim A[l]^H.")
        parser.add_argument("--genus", type=int)
        parser.add_argument(
            "--tame-degree",
            type=int,
            dest="tame_degree",
            help="Also report the conductor over a base below a tame extension of this degree.",
        )
        super().add_arguments(parser)

    def scenario_data(self, options):
        return {
            "profile": options["profile"],
            "dims": options["dims"],
            "genus": options["genus"],
            "tame_degree": options["tame_degree"],
        }
