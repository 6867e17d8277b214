from ..base import ScenarioCommand


class Command(ScenarioCommand):
    help = "Analyzes a good reduction or genus 2 scenario and reports every checked claim."

    def add_arguments(self, parser):
        parser.add_argument("kind", choices=["good-reduction", "genus2"])
        parser.add_argument("--preset", help="Named scenario, e.g. type-I-example.")
        parser.add_argument("--p", type=int, help="The prime p.")
        parser.add_argument("--n", type=int, help="q = p^n.")
        parser.add_argument("--c", help="The coefficient c, as an expression in K.")
        parser.add_argument("--coeffs", help="b2,b3,b4 as comma-separated expressions.")
        parser.add_argument("--tower", help="Tower spec as JSON.")
        super().add_arguments(parser)

    def scenario_data(self, options):
        return {
            "kind": options["kind"],
            "preset": options["preset"],
            "p": options["p"],
            "n": options["n"],
            "c": options["c"],
            "coefficients": options["coeffs"],
            "tower": options["tower"],
        }
