"""
Newton polygons.

The polygon of a_0 + a_1 X + ... + a_n X^n is the lower convex hull of the
points (i, v(a_i)). A segment of slope -r accounts for exactly as many roots
of valuation r as its horizontal length. Segments here store that root
valuation r directly, never the slope.
"""

from fractions import Fraction

from ..exceptions import PrecisionError


class Segment:
    def __init__(self, start, end, residual=None):
        self.start = start
        self.end = end
        self.residual = residual

    def __repr__(self):
        return f"Segment(root_valuation={self.root_valuation}, length={self.length})"

    @property
    def length(self):
        return self.end[0] - self.start[0]

    @property
    def root_valuation(self):
        return (self.start[1] - self.end[1]) / self.length

    def as_dict(self):
        return {"root_valuation": self.root_valuation, "length": self.length}


class NewtonPolygon:
    def __init__(self, vertices, zero_order=0, field=None, coefficients=None):
        self.vertices = vertices
        self.zero_order = zero_order
        self.field = field
        self.segments = [
            Segment(a, b) for a, b in zip(vertices, vertices[1:], strict=False)
        ]
        if coefficients is not None and field is not None:
            for segment in self.segments:
                segment.residual = self._residual(segment, coefficients)

    def __repr__(self):
        return f"NewtonPolygon({self.segments!r}, zero_order={self.zero_order})"

    @classmethod
    def from_points(cls, points, bounds=(), field=None, coefficients=None):
        """
        points: (i, v) pairs of the nonzero coefficients. bounds: (i, prec)
        pairs of coefficients that are zero at precision prec; a bound lying
        below the hull means the hull is not determined.
        """
        points = sorted(points)
        if not points:
            raise PrecisionError("Newton polygon of a polynomial that is zero at precision")
        zero_order = points[0][0]
        hull = []
        for point in points:
            while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
                hull.pop()
            hull.append(point)
        polygon = cls(hull, zero_order, field, coefficients)
        for i, prec in bounds:
            if zero_order < i < hull[-1][0] and prec < polygon.height_at(i):
                raise PrecisionError(
                    f"Coefficient {i} is zero only to precision {prec}, below the hull",
                    prec,
                )
        return polygon

    def height_at(self, x):
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:], strict=False):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * Fraction(x - x0, x1 - x0)
        raise ValueError(f"{x} lies outside the polygon.")

    @property
    def degree(self):
        return self.vertices[-1][0]

    def root_valuations(self):
        """[(valuation, multiplicity)] in decreasing order of valuation."""
        return [(s.root_valuation, s.length) for s in self.segments]

    def root_valuation_multiset(self):
        values = []
        for value, length in self.root_valuations():
            values.extend([value] * length)
        return values

    def is_single_segment(self):
        return len(self.segments) == 1

    def _residual(self, segment, coefficients):
        field = self.field
        units = segment.root_valuation * field.e
        step = units.denominator
        residue_field = field.residue_field
        residual = []
        for i in range(segment.start[0], segment.end[0] + 1, step):
            c = coefficients[i]
            on_segment = not c.is_zero() and c.valuation() == self.height_at(i)
            if on_segment:
                normalized = c * field.uniformizer_power(-int(c.valuation() * field.e))
                residual.append(normalized.residue())
            else:
                residual.append(residue_field.zero)
        return field.residue_polynomials.strip(residual)

    def as_dict(self):
        return {
            "vertices": [[i, v] for i, v in self.vertices],
            "segments": [s.as_dict() for s in self.segments],
            "zero_order": self.zero_order,
        }


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f):
    points, bounds = [], []
    for i, c in enumerate(f.coefficients):
        if c.is_zero():
            if c.prec != float("inf"):
                bounds.append((i, c.prec))
        else:
            points.append((i, c.valuation()))
    return NewtonPolygon.from_points(points, bounds, f.field, f.coefficients)
