"""
Genus 2 curves Y^2 = f(X) = 1 + b_2 X^2 + b_3 X^3 + b_4 X^4 + X^5 over a
tower over Q_2^ur.

The stable reduction is read off the octic T_f(Y) = s_1(Y)^2 - 4 s_0(Y) s_2(Y),
where f(X + Y) = sum s_k(Y) X^k:

    type I    two clusters of 4 roots at mutual distance 0 (b_3 a unit)
    type II   two clusters of 4 roots at positive mutual distance
    type III  one cluster of all 8 roots
"""

import functools
import itertools
import logging
import math
import operator
from fractions import Fraction

from django.db import models
from django.utils.translation import gettext_lazy as _

from ..conductor import product_fixed_dims, swan
from ..conf import get_setting
from ..exceptions import (
    CannotSplit,
    ConductorError,
    ConstructionError,
    FiltrationError,
    GroupError,
    InconclusiveRootSearch,
    PrecisionError,
    VerificationError,
)
from ..filtration import (
    LOWER,
    FiltrationProfile,
    arithmetically_disjoint,
    compose_tower,
    filtration_from_roots,
    product_arith_disjoint,
    upper_profile,
)
from ..groups import (
    direct_product,
    frattini_closure_surjective,
    frattini_images,
    quaternion_group,
    swap_extension,
)
from ..newton import (
    DensePoly,
    NewtonPolygon,
    SimpleExtension,
    adjoin_root,
    certify_irreducible,
    discriminant,
    hensel_split,
    newton_polygon,
    recenter,
    resultant,
    roots_in_field,
)
from ..newton.factor import IRREDUCIBLE
from ..newton.poly import element_of_valuation
from ..reports import Report
from ..tower import TowerSpec, build_tower, parse_expression
from ..utils import set_wrapped_methods
from .good_reduction import GoodReductionAnalysis, GoodReductionScenario
from .presets import GENUS2_EXPECTED, Q8_PROFILES

logger = logging.getLogger("wild_monodromy.monodromy")

COEFFICIENTS = ("b2", "b3", "b4")

# v(rho) for rho = 2^(2/3), the scale of the clusters of type I.
RHO_VALUATION = Fraction(2, 3)
QUATERNION_LABELS = {("Z(G)", "G/Z"): "Q8", ("Z(G)", "1"): "Z(Q8)"}


class DegenerationType(models.TextChoices):
    I = "I", _("two elliptic components meeting in a point")  # noqa: E741
    II = "II", _("two elliptic components joined by a rational chain")
    III = "III", _("a single component of genus 2")


class Classification:
    def __init__(self, type, evidence):
        self.type = DegenerationType(type)
        self.evidence = evidence

    def __repr__(self):
        return f"Classification(type {self.type.value}, {self.evidence})"

    def as_dict(self):
        return {"type": self.type.value, "evidence": self.evidence}


class Genus2Scenario:
    def __init__(self, spec, b2, b3, b4, precision=None, name=None, expected_type=None):
        self.spec = spec
        self.expected_type = expected_type
        self.field = build_tower(spec, precision)
        self.texts = {"b2": str(b2), "b3": str(b3), "b4": str(b4)}
        self.name = name
        self.b2, self.b3, self.b4 = (
            parse_expression(self.texts[key], self.field) for key in COEFFICIENTS
        )
        for key in COEFFICIENTS:
            value = getattr(self, key)
            if not value.is_zero() and value.valuation() < 0:
                raise ConstructionError(f"{key} = {self.texts[key]} is not integral.")

    def __repr__(self):
        return f"<Genus2Scenario {self.label}>"

    @classmethod
    def from_config(cls, data, precision=None, f_ur=None):
        spec = TowerSpec.from_config(data["tower"])
        if f_ur is None:
            f_ur = data["tower"].get("f_ur") or get_setting("RESIDUE_DEGREE")
        spec = spec.with_residue_degree(f_ur)
        coefficients = data["coefficients"]
        return cls(
            spec,
            coefficients.get("b2", "0"),
            coefficients.get("b3", "0"),
            coefficients.get("b4", "0"),
            precision,
            name=data.get("name"),
            expected_type=data.get("expected_type"),
        )

    @property
    def label(self):
        if self.name:
            return self.name
        b2, b3, b4 = (self.texts[key] for key in COEFFICIENTS)
        return f"genus2(b2={b2}, b3={b3}, b4={b4})"

    @property
    def p(self):
        return self.field.p

    def as_config(self):
        config = {
            "kind": "genus2",
            "tower": self.spec.as_config(),
            "coefficients": dict(self.texts),
            "precision": self.field.precision,
        }
        if self.name:
            config["name"] = self.name
        if self.expected_type:
            config["expected_type"] = self.expected_type
        return config

    def f_poly(self):
        field = self.field
        return DensePoly(field, [field.one, field.zero, self.b2, self.b3, self.b4, field.one])


def taylor_polys(poly):
    """[s_0, s_1, ...] with poly(X + Y) = sum s_k(Y) X^k."""
    field = poly.field
    n = poly.degree
    return [
        DensePoly(field, [poly[i] * math.comb(i, k) for i in range(k, n + 1)])
        for k in range(n + 1)
    ]


def build_Tf(scenario):
    s0, s1, s2 = taylor_polys(scenario.f_poly())[:3]
    Tf = s1 * s1 - (s0 * s2).scale(4)
    if Tf.degree != 8:
        raise VerificationError(f"T_f has degree {Tf.degree}, expected 8.")
    return Tf


def unit_condition(scenario):
    """Residue of 1 + b_3 b_2 + b_3^2 b_4."""
    b2, b3, b4 = scenario.b2, scenario.b3, scenario.b4
    return (1 + b3 * b2 + b3 * b3 * b4).residue()


def delta_polygon(Tf, ext=None):
    """
    Newton polygon of (T_f(Z + y) - T_f(y)) / Z for a root y of T_f; its
    segments are the clusters of the other roots around y.
    """
    ext = ext or SimpleExtension(Tf)
    field = Tf.field
    points, bounds = [], []
    for k, t_k in enumerate(taylor_polys(Tf)[1:], start=1):
        value = ext.reduce(t_k)
        if value.is_zero():
            bounds.append((k - 1, field.precision))
            continue
        points.append((k - 1, ext.valuation(value)))
    return NewtonPolygon.from_points(points, bounds)


def _monomial_reduction(g):
    residue_field = g.field.residue_field
    return all(residue_field.is_zero(c) for c in g.residue()[:-1])


def split_clusters(Tf):
    """
    T_f = lc T_1 T_2 with T_1 the product of the Hensel factors reducing to
    a power of Y. Return ([T_1, T_2], evidence); the distance between the
    two clusters of roots is v(res(T_1, T_2)) / 16.
    """
    field = Tf.field
    try:
        factors = hensel_split(Tf)
    except CannotSplit as exc:
        raise VerificationError(f"T_f does not split: {exc}") from exc
    one = DensePoly(field, [1])
    T1 = functools.reduce(operator.mul, [g for g in factors if _monomial_reduction(g)], one)
    T2 = functools.reduce(operator.mul, [g for g in factors if not _monomial_reduction(g)], one)
    degrees = sorted([T1.degree, T2.degree])
    if degrees != [4, 4]:
        raise VerificationError(f"T_f splits into degrees {[g.degree for g in factors]}.")
    residue_polys = field.residue_polynomials
    evidence = {
        "singularities": 2,
        "clusters": degrees,
        "distance": Fraction(resultant(T1, T2).valuation(), 16),
        "reductions": [residue_polys.format(g.residue()) for g in (T1, T2)],
    }
    return [T1, T2], evidence


def zero_cluster(Tf):
    """
    For b_2 = b_3 = 0, T_f = Y^2 R(Y) and every root reduces to 0: the
    8 roots form a single cluster.
    """
    polygon = newton_polygon(Tf)
    valuations = polygon.root_valuations()
    if polygon.zero_order < 2 or any(value <= 0 for value, _ in valuations):
        raise VerificationError("The roots of T_f do not all reduce to 0.")
    return {
        "singularities": 1,
        "clusters": [polygon.zero_order + sum(length for _, length in valuations)],
        "zero_roots": polygon.zero_order,
        "root_valuations": [[value, length] for value, length in valuations],
    }


def classify_genus2(scenario, Tf=None):
    field = scenario.field
    if scenario.p != 2:
        raise VerificationError("The genus 2 classification needs p = 2.")
    residue_field = field.residue_field
    if not scenario.b3.is_zero() and scenario.b3.valuation() == 0:
        unit = unit_condition(scenario)
        if residue_field.is_zero(unit):
            raise VerificationError("1 + b3 b2 + b3^2 b4 is not a unit.")
        _, evidence = split_clusters(Tf or build_Tf(scenario))
        if evidence["distance"] != 0:
            raise VerificationError(
                f"The clusters of T_f are at distance {evidence['distance']}, expected 0."
            )
        evidence["unit"] = residue_field.format(unit)
        return Classification(DegenerationType.I, evidence)
    Tf = Tf or build_Tf(scenario)
    if scenario.b2.is_zero() and scenario.b3.is_zero():
        evidence = zero_cluster(Tf)
        evidence.update(family="1 + c X^4 + X^5", c=scenario.texts["b4"])
        return Classification(DegenerationType.III, evidence)
    certificate = certify_irreducible(Tf.monic())
    if not certificate:
        raise PrecisionError(
            f"Insufficient precision: T_f is not certified irreducible ({certificate.verdict})"
        )
    polygon = delta_polygon(Tf.monic())
    clusters = polygon.root_valuations()
    evidence = {
        "singularities": 1,
        "root_valuation": newton_polygon(Tf).segments[0].root_valuation,
        "delta": [[value, length] for value, length in clusters],
    }
    if len(clusters) == 2 and [length for _, length in clusters] == [3, 4]:
        evidence.update(clusters=[4, 4], distance=clusters[1][0])
        return Classification(DegenerationType.II, evidence)
    if len(clusters) == 1 and clusters[0][1] == 7:
        evidence.update(clusters=[8], distance=clusters[0][0])
        return Classification(DegenerationType.III, evidence)
    raise PrecisionError(f"Insufficient precision: ambiguous clusters {clusters}")


def certify_factor(poly):
    """certify_irreducible() of poly, recentered first when its roots allow it."""
    try:
        _, centered = recenter(poly)
    except (ConstructionError, PrecisionError):
        centered = poly
    return certify_irreducible(centered)


def factor_degrees(poly):
    certificate = certify_factor(poly)
    if certificate:
        return {"degrees": [poly.degree], "certified": True}
    try:
        degrees = sorted(g.degree for g in hensel_split(poly))
    except CannotSplit:
        degrees = [poly.degree]
    return {"degrees": degrees, "certified": False}


class RootCluster:
    """
    The roots of a factor T of T_f in K(y), y one of them. A root y_i at
    distance at least v(rho) from y gives the translation by the residue of
    (y_i - y) / rho on the stable reduction.
    """

    def __init__(self, factor, name, rho_valuation=RHO_VALUATION):
        self.factor = factor
        self.rho_valuation = Fraction(rho_valuation)
        self.field, self.y = adjoin_root(factor, name=name)
        self.roots = roots_in_field(factor.over(self.field))
        self.others = [root for root in self.roots if not root.equals(self.y)]

    def __repr__(self):
        return f"<RootCluster {len(self.roots)} roots in {self.field!r}>"

    def distances(self):
        return [(root - self.y).valuation() for root in self.others]

    def pairwise(self):
        """Sorted set of v(y_i - y_j) over pairs of distinct roots."""
        pairs = itertools.combinations(self.roots, 2)
        return sorted({(a - b).valuation() for a, b in pairs})

    def residues(self):
        rho = element_of_valuation(self.field, self.rho_valuation)
        residues = [self.field.residue_field.zero]
        for root in self.others:
            ratio = (root - self.y) / rho
            if ratio.valuation() >= 0:
                residues.append(ratio.residue())
        return residues


def top_step_profile(field, label):
    """
    Lower filtration of the top step of field over the level below, from
    the conjugates of its generator. The step must be Galois.
    """
    relation = DensePoly(field, field.top_relation())
    conjugates = roots_in_field(relation)
    if len(conjugates) != relation.degree:
        raise VerificationError(
            f"The top step of degree {relation.degree} has {len(conjugates)} conjugates "
            "in the field; it is not Galois."
        )
    profile = filtration_from_roots(conjugates, field, field.uniformizer)
    breaks = [
        (b, label if index == 0 else name, order)
        for index, (b, name, order) in enumerate(profile.breaks)
    ]
    return FiltrationProfile(breaks, LOWER, group_name=label, p=field.p)


def quaternion_profile(cluster, f_poly, name):
    """
    Lower filtration of K(y, f(y)^(1/2))/K, composed from Gal(K(y)/K) and
    the quadratic step adjoining f(y)^(1/2).
    """
    quotient = top_step_profile(cluster.field, "G/Z")
    value = f_poly.over(cluster.field).evaluate(cluster.y)
    kummer, _ = adjoin_root(DensePoly(cluster.field, [-value, 0, 1]), name=name)
    sub = top_step_profile(kummer, "Z(G)")
    return compose_tower(sub, quotient, QUATERNION_LABELS, group_name="Q8")


def translation_elements(cluster):
    """Elements of Q8 for the translations of cluster, additive modulo Z(Q8)."""
    residues = [tuple(residue) for residue in cluster.residues()]
    try:
        images, _ = frattini_images(quaternion_group(), residues)
    except GroupError as exc:
        raise VerificationError(str(exc)) from exc
    return images


def maximal_monodromy_type_i(first, second):
    """
    Q8 x Q8 and the images of sigma_(i,j), acting on the first component
    through y_i and on the second through y_j.
    """
    q8 = quaternion_group()
    group = direct_product(q8, q8, name="Q8xQ8")
    return group, {group.index((a, b)) for a in first for b in second}


def maximal_monodromy_type_ii(translations, swap=True):
    """(Q8 x Q8):2; the translations of one component and the swap of the components."""
    group = swap_extension(quaternion_group())
    images = {group.index((a, 0, 0)) for a in translations}
    if swap:
        images.add(group.index((0, 0, 1)))
    return group, images


@set_wrapped_methods
class Genus2Analysis:
    wrapped_methods = ["classify", "type_i", "type_ii", "type_iii"]

    def __init__(self, scenario):
        self.scenario = scenario
        self.label = scenario.label
        self.timings = []
        self.report = Report("genus2", scenario.as_config())
        self.Tf = None
        self.clusters = []
        self.classification = None

    def __repr__(self):
        return f"<Genus2Analysis {self.label}>"

    @property
    def expected(self):
        return GENUS2_EXPECTED.get(self.scenario.name, {})

    def run(self):
        self.classify()
        handler = {
            DegenerationType.I: self.type_i,
            DegenerationType.II: self.type_ii,
            DegenerationType.III: self.type_iii,
        }[self.classification.type]
        try:
            handler()
        except VerificationError as exc:
            logger.warning(
                "Type %s analysis failed for %s: %s",
                self.classification.type.value,
                self.label,
                exc,
                extra={"scenario": self.label, "index": exc.index},
            )
            self.report.mismatch("analysis", "the degeneration type analysis completes", exc)
        self.report.timings = self.timings
        return self.report

    def pinned(self, claim_id, anchor, computed, key):
        """Check against the expected value of a preset; record it otherwise."""
        if key in self.expected:
            return self.report.check(claim_id, anchor, computed, self.expected[key])
        return self.report.record(claim_id, anchor, computed)

    def classify(self):
        self.classification = classify_genus2(self.scenario)
        self.report.record(
            "degeneration",
            "stable reduction type from the clusters of the roots of T_f",
            self.classification.as_dict(),
        )
        if self.scenario.expected_type:
            self.report.check(
                "degeneration.type",
                f"{self.label} has stable reduction of type {self.scenario.expected_type}",
                self.classification.type.value,
                self.scenario.expected_type,
            )

    def type_i(self):
        scenario = self.scenario
        field = scenario.field
        report = self.report
        self.Tf = Tf = build_Tf(scenario)
        residue_polys = field.residue_polynomials
        (T1, T2), evidence = split_clusters(Tf)
        b3 = scenario.b3
        report.check(
            "Tf.split",
            "T_f = lc T_1 T_2 with T_1 = Y^4 and T_2 = Y^4 + b3^2 modulo 2",
            evidence["reductions"],
            ["Y^4", residue_polys.format(DensePoly(field, [b3 * b3, 0, 0, 0, 1]).residue())],
        )
        disc = discriminant(Tf)
        v_disc = disc.valuation()
        report.check("Tf.discriminant", "v(disc T_f) = 16 v(2)", v_disc, 16)
        residue_field = field.residue_field
        target = (b3**8 * (1 + b3 * scenario.b2 + b3 * b3 * scenario.b4) ** 4).residue()
        normalized = (disc / field(2) ** 16).residue() if v_disc == 16 else residue_field.zero
        report.check(
            "Tf.discriminant.residue",
            "2^-16 disc T_f = b3^8 (1 + b3 b2 + b3^2 b4)^4 mod 2",
            residue_field.format(normalized),
            residue_field.format(target),
        )
        v_res = resultant(T1, T2).valuation()
        parts = discriminant(T1).valuation() + discriminant(T2).valuation() + 2 * v_res
        report.check(
            "Tf.discriminant.factors",
            "v(disc T_f) = v(disc T_1) + v(disc T_2) + 2 v(res(T_1, T_2)) with v(res) = 0",
            {"sum": parts, "resultant": v_res},
            {"sum": v_disc, "resultant": 0},
        )
        for index, factor in enumerate((T1, T2), start=1):
            certificate = certify_factor(factor)
            claim = f"T{index}.irreducible"
            anchor = f"T_{index} is irreducible over K"
            if certificate:
                report.record(claim, anchor, certificate.as_dict())
            else:
                report.advisory(claim, anchor, certificate.as_dict(), IRREDUCIBLE)
        try:
            self.clusters = [RootCluster(T1, "Pi1"), RootCluster(T2, "Pi2")]
            for index, cluster in enumerate(self.clusters, start=1):
                report.check(
                    f"K{index}.roots",
                    f"T_{index} has 4 roots in K(y) at distance v(rho) = 2/3 from y",
                    {"roots": len(cluster.roots), "distances": cluster.distances()},
                    {"roots": 4, "distances": [RHO_VALUATION] * 3},
                )
            self.factorization_shape(T2)
            f_poly = scenario.f_poly()
            a, b = (
                quaternion_profile(cluster, f_poly, f"Sigma{index}")
                for index, cluster in enumerate(self.clusters, start=1)
            )
            for key, profile in (("K1", a), ("K2", b)):
                claim = f"filtration.{key}"
                anchor = f"lower filtration of Gal({key}/K) from the conjugates of its generators"
                if key in self.expected:
                    pinned = FiltrationProfile.from_dict(Q8_PROFILES[self.expected[key]], p=2)
                    report.check(claim, anchor, profile.as_dict(), pinned.as_dict())
                else:
                    report.record(claim, anchor, profile.as_dict())
            disjoint = arithmetically_disjoint(a, b)
            report.check(
                "filtration.disjoint", "K_1/K and K_2/K have disjoint upper breaks", disjoint, True
            )
            if not disjoint:
                raise VerificationError("K_1/K and K_2/K share an upper break.")
            profile = product_arith_disjoint(a, b, group_name="Q8xQ8")
            self.pinned(
                "filtration.upper",
                "upper breaks of Gal(M/K) for M = K_1 K_2",
                [x for x, _, _ in upper_profile(profile).breaks],
                "upper",
            )
            self.pinned(
                "filtration.lower",
                "lower breaks of Gal(M/K) for M = K_1 K_2",
                [x for x, _, _ in profile.breaks],
                "lower",
            )
            dims = product_fixed_dims([label for label, _ in profile.subgroup_chain()[:-1]])
            conductor = swan(profile, dims, base="K")
            self.pinned(
                "conductor.sw", "sw(Jac(C)/K) from the filtration of M/K", conductor.sw, "sw"
            )
            report.record("conductor", "f = eps + sw over K", conductor.as_dict())
            first, second = (translation_elements(cluster) for cluster in self.clusters)
        except (
            CannotSplit,
            ConductorError,
            ConstructionError,
            FiltrationError,
            GroupError,
            InconclusiveRootSearch,
            PrecisionError,
            ValueError,
        ) as exc:
            raise VerificationError(str(exc)) from exc
        group, images = maximal_monodromy_type_i(first, second)
        report.check(
            "monodromy.group",
            "translations by root pairs generate Q8 x Q8 modulo its Frattini subgroup",
            {
                "group": group.name,
                "order": group.order,
                "translations": [len(set(first)), len(set(second))],
                "surjective": frattini_closure_surjective(group, images),
            },
            {"group": "Q8xQ8", "order": 64, "translations": [4, 4], "surjective": True},
        )

    def factorization_shape(self, T2):
        """
        Factorization of T_f over K and of T_2 over K(y_1), at f_ur and, when
        enabled, at 2 f_ur; with the roots of T_1 over K(y_1).
        """
        field = self.scenario.field
        report = self.report
        first = self.clusters[0]
        shapes = {field.f: sorted(g.degree for g in hensel_split(self.Tf))}
        over_first = {field.f: factor_degrees(T2.over(first.field))}
        if get_setting("PROXY_CHECK"):
            wider = _rebuilt(self.scenario, field.with_residue_degree(2 * field.f))
            Tf = build_Tf(wider)
            shapes[wider.field.f] = sorted(g.degree for g in hensel_split(Tf))
            (T1_wide, T2_wide), _ = split_clusters(Tf)
            L, _ = adjoin_root(T1_wide, name="Pi1")
            over_first[wider.field.f] = factor_degrees(T2_wide.over(L))
        stable = len({tuple(value) for value in shapes.values()}) == 1
        report.advisory(
            "Tf.shape",
            "factorization shape of T_f is stable under enlarging the residue field",
            {"degrees": shapes, "stable": stable},
        )
        residues = first.residues()
        report.advisory(
            "Ky1.roots",
            "K(y_1)/K is totally ramified of degree 4 and T_1(rho Y + y_1) splits over it",
            {
                "e": first.field.e // field.e,
                "roots": len(first.roots),
                "translations": len(set(residues)),
            },
            {"e": 4, "roots": 4, "translations": 4},
        )
        report.advisory(
            "roots.pairwise",
            "v(y_i - y_j) = v(rho) for distinct roots of one cluster",
            [cluster.pairwise() for cluster in self.clusters],
            [[RHO_VALUATION]] * len(self.clusters),
        )
        report.advisory(
            "T2.over_Ky1",
            "T_2 stays irreducible over K(y_1) at every residue degree",
            over_first,
            {f: {"degrees": [4], "certified": True} for f in over_first},
        )

    def type_ii(self):
        report = self.report
        self.Tf = Tf = build_Tf(self.scenario)
        polygon = newton_polygon(Tf)
        self.pinned(
            "Tf.root_valuation",
            "valuations of the 8 roots of T_f",
            polygon.root_valuations(),
            "root_valuation",
        )
        certificate = certify_irreducible(Tf.monic())
        claim, anchor = "Tf.irreducible", "T_f is irreducible over K"
        if certificate:
            report.record(claim, anchor, certificate.as_dict())
        else:
            report.advisory(claim, anchor, certificate.as_dict(), IRREDUCIBLE)
        delta = delta_polygon(Tf.monic())
        clusters = delta.root_valuations()
        self.pinned(
            "delta.clusters",
            "Delta(Z) has 3 roots of valuation v(rho) and 4 at the distance of the clusters",
            clusters,
            "delta",
        )
        if [length for _, length in clusters] != [3, 4]:
            raise VerificationError(f"Delta(Z) has clusters {clusters}, expected 3 and 4 roots.")
        try:
            cluster = RootCluster(Tf.monic(), "Pi", clusters[0][0])
            self.clusters = [cluster]
            translations = translation_elements(cluster)
        except (ConstructionError, InconclusiveRootSearch, PrecisionError, ValueError) as exc:
            raise VerificationError(str(exc)) from exc
        report.record(
            "Ky.roots",
            "roots of T_f in K(y) and their distances to y",
            {"roots": len(cluster.roots), "distances": sorted(cluster.distances())},
        )
        group, images = maximal_monodromy_type_ii(translations, swap=bool(certificate))
        report.check(
            "monodromy.group",
            "translations and the swap of the components generate (Q8 x Q8):2",
            {
                "order": group.order,
                "translations": len(set(translations)),
                "surjective": frattini_closure_surjective(group, images),
            },
            {"order": 128, "translations": 4, "surjective": True},
        )

    def type_iii(self):
        scenario = self.scenario
        report = self.report
        related = GoodReductionScenario(
            2,
            2,
            c=scenario.texts["b4"],
            f_ur=scenario.field.f,
            precision=scenario.field.precision,
        )
        report.check(
            "tower",
            "K = Q_2^ur((-2)^(1/5)) for 1 + c X^4 + X^5",
            scenario.spec.as_config()["steps"],
            related.field.spec.as_config()["steps"],
        )
        sub = GoodReductionAnalysis(related).run()
        for claim in sub.claims:
            claim.id = f"good_reduction.{claim.id}"
            report.claims.append(claim)
        report.notes.extend(sub.notes)
        if "good_reduction.conductor.K" in report:
            report.check(
                "conductor.f",
                "f(Jac(C)/K) = 9",
                report.value("good_reduction.conductor.K")["f"],
                9,
            )


def _rebuilt(scenario, field):
    return Genus2Scenario(
        field.spec,
        *(scenario.texts[key] for key in COEFFICIENTS),
        precision=field.precision,
        name=scenario.name,
        expected_type=scenario.expected_type,
    )
