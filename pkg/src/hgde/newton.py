"""
Formal Newton Polygon at Infinity - for operators written with theta = z d/dz

Implements:
- The lower boundary of the hull of the quadrants {x <= i, y >= deg a_0 - deg a_i}
- Slopes with multiplicities and the formal irregularity (height)
- Aligned text tables and an SVG path for the polygon
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from src.core.errors import DomainError
from src.series.operators import DiffOperator, poly_degree

logger = logging.getLogger("padic-desk")

Vertex = Tuple[int, int]


def _cross(o: Vertex, a: Vertex, b: Vertex) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: Tuple[Vertex, ...]

    def segments(self) -> List[Tuple[Fraction, int]]:
        """(slope, horizontal length) per edge, slopes increasing."""
        out = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            out.append((Fraction(y1 - y0, x1 - x0), x1 - x0))
        return out

    def slopes(self) -> Dict[Fraction, int]:
        return {s: m for s, m in self.segments()}

    @property
    def height(self) -> int:
        return self.vertices[-1][1] - self.vertices[0][1]

    @property
    def irregularity(self) -> int:
        return self.height

    @property
    def is_regular(self) -> bool:
        return all(s == 0 for s, _ in self.segments())

    def to_table(self) -> str:
        rows = [("slope", "multiplicity", "height")]
        for s, m in self.segments():
            rows.append((str(s), str(m), str(s * m)))
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)

    def to_svg_path(self, scale: int = 40) -> str:
        """Path in SVG user units; y grows upwards in the figure."""
        top = max(y for _, y in self.vertices)
        pts = [(x * scale, (top - y) * scale) for x, y in self.vertices]
        return "M {} {}".format(*pts[0]) + "".join(" L {} {}".format(*p) for p in pts[1:])

    def to_svg(self, scale: int = 40) -> str:
        width = (self.vertices[-1][0] + 1) * scale
        height = (self.height + 2) * scale
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">\n'
            f'  <path d="{self.to_svg_path(scale)}" fill="none" stroke="black"/>\n'
            "</svg>\n"
        )

    def to_document(self) -> Dict[str, Any]:
        return {
            "vertices": [list(v) for v in self.vertices],
            "slopes": [{"slope": str(s), "multiplicity": m} for s, m in self.segments()],
            "irregularity": self.irregularity,
        }


def newton_polygon_infty(L: DiffOperator) -> NewtonPolygon:
    """
    Formal Newton polygon at infinity of sum a_i(z) theta^i.

    The boundary is horizontal up to the last index where deg a_0 - deg a_i
    is minimal, then the lower convex hull of the remaining points.
    """
    T = L.to_theta()
    if not T.coeffs[0]:
        raise DomainError("the Newton polygon at infinity needs a_0 != 0")
    d0 = poly_degree(T.coeffs[0])
    points = [(i, d0 - poly_degree(a)) for i, a in enumerate(T.coeffs) if a]
    low = min(h for _, h in points)
    start = max(i for i, h in points if h == low)
    hull: List[Vertex] = []
    for pt in [(start, low)] + [q for q in points if q[0] > start]:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    if start > 0:
        hull.insert(0, (0, low))
    polygon = NewtonPolygon(tuple(hull))
    logger.debug("Newton polygon at infinity: %s", polygon.vertices)
    return polygon
