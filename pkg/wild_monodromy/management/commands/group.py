from ..base import ScenarioCommand


class Command(ScenarioCommand):
    help = "Shows the order, center, derived and Frattini subgroups of a named group."
    kind = "group"

    def add_arguments(self, parser):
        parser.add_argument("operation", choices=["info"])
        parser.add_argument("name", help='For example "Q8", "Q8xQ8", "(Q8xQ8):2".')
        super().add_arguments(parser)

    def scenario_data(self, options):
        return {"group": options["name"]}
