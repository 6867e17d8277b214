from .base import RamifiedStep, TowerField, TowerSpec, build_tower, zeta_tower
from .element import TowerElement, Valuation
from .expressions import parse_expression
from .residue import ResidueField, ResiduePolynomials

__all__ = [
    "RamifiedStep",
    "ResidueField",
    "ResiduePolynomials",
    "TowerElement",
    "TowerField",
    "TowerSpec",
    "Valuation",
    "build_tower",
    "parse_expression",
    "residue_image",
    "valuation",
    "zeta_tower",
]


def valuation(a, field=None):
    """Exact valuation of a; field selects the uniformizer units for display."""
    return a.valuation_in(field)


def residue_image(a):
    return a.residue()
