"""
Brute-force fixed-point counts for the supersingular curve E: w^2 + w = t^3
in characteristic 2.

Over F_16, E(F_16) = E[3] has 9 points and E has 24 automorphisms
(t, w) -> (u^2 t + s^2, u^3 w + s u^2 t + tau) with u^3 = 1, s^4 = s and
tau^2 + tau = s^6. Those with u = 1 form Q8, whose center is -1 (s = 0,
tau = 1). For a subgroup H, E[3]^H has 3^d points with d = dim E[3]^H.
"""

import json
import logging
import math
from pathlib import Path

from .exceptions import VerificationError
from .groups import FiniteGroup
from .tower.residue import ResidueField

logger = logging.getLogger("wild_monodromy.oracles")

DATA_FILE = Path(__file__).parent / "data" / "elliptic_q8_fixed_dims.json"

INFINITY = "O"


def _on_curve(field, point):
    if point == INFINITY:
        return True
    t, w = point
    return field.add(field.mul(w, w), w) == field.pow(t, 3)


def _points(field):
    points = [INFINITY]
    for t in field.elements():
        for w in field.elements():
            if _on_curve(field, (t, w)):
                points.append((t, w))
    return points


def _automorphisms(field):
    automorphisms = []
    elements = list(field.elements())
    for u in elements:
        if field.pow(u, 3) != field.one:
            continue
        for s in elements:
            if field.pow(s, 4) != s:
                continue
            for tau in elements:
                if field.add(field.mul(tau, tau), tau) == field.pow(s, 6):
                    automorphisms.append((u, s, tau))
    return automorphisms


def _apply(field, automorphism, point):
    if point == INFINITY:
        return INFINITY
    u, s, tau = automorphism
    t, w = point
    u2 = field.mul(u, u)
    image_t = field.add(field.mul(u2, t), field.mul(s, s))
    image_w = field.add(
        field.add(field.mul(field.mul(u2, u), w), field.mul(field.mul(s, u2), t)), tau
    )
    return (image_t, image_w)


def _fixed_dimension(field, points, automorphisms):
    fixed = [
        point
        for point in points
        if all(_apply(field, a, point) == point for a in automorphisms)
    ]
    dimension = round(math.log(len(fixed), 3))
    if 3**dimension != len(fixed):
        raise VerificationError(f"{len(fixed)} fixed points is not a power of 3.")
    return dimension


def elliptic_fixed_dims_oracle(degree=4):
    """Derive {label: dim E[3]^H} for H in {1, Z(Q8), Q8}."""
    field = ResidueField(2, degree)
    points = _points(field)
    if len(points) != 9:
        raise VerificationError(f"E(F_{field.order}) has {len(points)} points, expected 9.")
    automorphisms = _automorphisms(field)
    for a in automorphisms:
        for point in points:
            if not _on_curve(field, _apply(field, a, point)):
                raise VerificationError(f"{a} does not preserve the curve.")
    if len(automorphisms) != 24:
        raise VerificationError(f"Found {len(automorphisms)} automorphisms, expected 24.")
    wild = [a for a in automorphisms if a[0] == field.one]
    point_index = {point: i for i, point in enumerate(points)}
    # The action on the 9 points is faithful, so the permutations determine Q8.
    permutations = {
        tuple(point_index[_apply(field, a, point)] for point in points): a for a in wild
    }

    def compose(x, y):
        return tuple(x[i] for i in y)

    identity = tuple(range(len(points)))
    group = FiniteGroup.from_function("Q8", list(permutations), compose, identity)
    if group.order_profile() != [1, 2, 4, 4, 4, 4, 4, 4]:
        raise VerificationError("The u = 1 automorphisms do not form Q8.")
    negation = (field.zero, field.zero, field.one)
    dims = {
        "1": _fixed_dimension(field, points, []),
        "Z(Q8)": _fixed_dimension(field, points, [negation]),
        "Q8": _fixed_dimension(field, points, wild),
    }
    logger.info("Elliptic fixed dimensions %s", dims, extra={"field": field.order})
    return {
        "curve": "w^2 + w = t^3",
        "field": f"F_{field.order}",
        "points": len(points),
        "automorphisms": len(automorphisms),
        "dims": dims,
    }


def load_frozen_dims(path=DATA_FILE):
    with Path(path).open() as fp:
        return json.load(fp)
