"""Run a validated ScenarioConfig and return its Report."""

import logging

from .conductor import FixedDimTable, swan, swan_after_base_change
from .conf import get_setting
from .exceptions import GroupError
from .filtration import (
    compose_tower,
    herbrand_quotient_check,
    lower_profile,
    phi,
    product_arith_disjoint,
    serre_different,
    tame_base_change,
    upper_profile,
)
from .forms import CONDUCTOR, FILTRATION, GENUS2, GOOD_REDUCTION, GROUP, ScenarioConfig
from .groups import extraspecial_sequence, make_named
from .monodromy import (
    PRESETS,
    Genus2Analysis,
    Genus2Scenario,
    GoodReductionAnalysis,
    GoodReductionScenario,
)
from .reports import Report
from .utils import retry_with_precision

logger = logging.getLogger("wild_monodromy.runner")


def run(config):
    if isinstance(config, dict):
        config = ScenarioConfig.from_dict(config)
    runner = {
        GOOD_REDUCTION: run_good_reduction,
        GENUS2: run_genus2,
        FILTRATION: run_filtration,
        CONDUCTOR: run_conductor,
        GROUP: run_group,
    }[config.kind]
    logger.debug("Running %s", config.kind, extra={"config": config.data})
    return runner(config)


def _with_preset(config):
    data = dict(PRESETS[config["preset"]]) if config["preset"] else {}
    for key in ("p", "n", "c"):
        if config[key] not in (None, ""):
            data[key] = config[key]
    return data


def _precision(config):
    return config["precision"] or get_setting("PRECISION")


def _residue_degree(config):
    return config["f_ur"] or get_setting("RESIDUE_DEGREE")


def run_good_reduction(config):
    data = _with_preset(config)
    f_ur = _residue_degree(config)

    def build(precision):
        scenario = GoodReductionScenario(
            data["p"], data["n"], data.get("c") or "1", f_ur=f_ur, precision=precision
        )
        return GoodReductionAnalysis(scenario).run()

    return retry_with_precision(build, _precision(config), get_setting("MAX_PRECISION"))


def run_genus2(config):
    if config["preset"]:
        data = PRESETS[config["preset"]]
    else:
        b2, b3, b4 = config["coefficients"]
        data = {
            "tower": config["tower"].as_config(),
            "coefficients": {"b2": b2, "b3": b3, "b4": b4},
            "expected_type": config["expected_type"],
        }
    f_ur = _residue_degree(config)

    def build(precision):
        scenario = Genus2Scenario.from_config(data, precision=precision, f_ur=f_ur)
        return Genus2Analysis(scenario).run()

    return retry_with_precision(build, _precision(config), get_setting("MAX_PRECISION"))


def _profile_claims(report, prefix, profile):
    lower = lower_profile(profile)
    upper = upper_profile(profile)
    report.record(f"{prefix}.lower", "lower filtration", lower.as_dict())
    report.record(f"{prefix}.upper", "upper filtration", upper.as_dict())
    report.record(
        f"{prefix}.different", "v_L(D) = sum over i >= 0 of (|G_i| - 1)", serre_different(lower)
    )
    return lower


def run_filtration(config):
    operation = config["operation"]
    report = Report(FILTRATION, {"operation": operation})
    if operation in {"phi", "psi"}:
        profile = lower_profile(config["profile"])
        fn = phi(profile)
        if operation == "psi":
            fn = fn.inverse()
        report.record(
            operation,
            f"{operation} is piecewise linear with these vertices",
            {"vertices": fn.vertices, "final_slope": fn.final_slope},
        )
        if config["at"] is not None:
            report.record(f"{operation}.value", f"{operation}({config['at']})", fn(config["at"]))
        _profile_claims(report, "profile", profile)
    elif operation == "compose":
        sub, quot = lower_profile(config["a"]), lower_profile(config["b"])
        labels = {
            tuple(key.split("/", 1)): value for key, value in (config["labels"] or {}).items()
        }
        composite = compose_tower(sub, quot, labels)
        lower = _profile_claims(report, "composite", composite)
        report.record(
            "composite.herbrand",
            "phi of the tower is phi of the quotient after phi of the subgroup",
            herbrand_quotient_check(lower, sub, quot),
        )
    elif operation == "product":
        product = product_arith_disjoint(config["a"], config["b"])
        _profile_claims(report, "product", product)
    else:
        changed = tame_base_change(config["profile"], config["tame_degree"])
        _profile_claims(report, "tame", changed)
    return report


def run_conductor(config):
    profile = lower_profile(config["profile"])
    dims = FixedDimTable(config["dims"], config["genus"])
    report = Report(CONDUCTOR, {"profile": profile.as_dict(), "dims": dims.dims})
    dims.check_monotone(profile)
    conductor = swan(profile, dims)
    report.record("conductor", "f = eps + sw from the lower filtration", conductor.as_dict())
    if config["tame_degree"]:
        changed = swan_after_base_change(profile, dims, config["tame_degree"])
        report.record(
            "conductor.base",
            f"conductor over the base below a tame extension of degree {config['tame_degree']}",
            changed.as_dict(),
        )
    return report


def run_group(config):
    group = make_named(config["group"])
    report = Report(GROUP, {"group": config["group"]})
    report.record("order", "|G|", group.order)
    report.record("center", "|Z(G)|", group.center().order)
    report.record("derived", "|D(G)|", group.derived().order)
    report.record("frattini", "|Phi(G)|", group.frattini().order)
    report.record("orders", "sorted element orders", group.order_profile())
    try:
        extraspecial = group.is_extraspecial()
    except GroupError as exc:
        report.note(str(exc))
        extraspecial = False
    report.record("extraspecial", "G is extra-special", extraspecial)
    if extraspecial:
        report.record(
            "extraspecial.rank",
            "0 -> Z(G) -> G -> (Z/p)^2n -> 0",
            extraspecial_sequence(group),
        )
    return report
