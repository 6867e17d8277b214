from .extension import SimpleExtension, adjoin_root, recenter
from .factor import (
    IrreducibilityCertificate,
    certify_irreducible,
    hensel_split,
    roots_in_field,
    slope_factors,
    valuation_at_root,
)
from .poly import DensePoly, determinant, discriminant, resultant, solve
from .polygon import NewtonPolygon, Segment, newton_polygon

__all__ = [
    "DensePoly",
    "IrreducibilityCertificate",
    "NewtonPolygon",
    "Segment",
    "SimpleExtension",
    "adjoin_root",
    "certify_irreducible",
    "determinant",
    "discriminant",
    "hensel_split",
    "newton_polygon",
    "recenter",
    "resultant",
    "roots_in_field",
    "slope_factors",
    "solve",
    "valuation_at_root",
]
