# Hypergeometric and uniformizing equation bookkeeping for triangle groups

from .triangles import HgdeParams, TriangleTriple, classify_triple, triple_to_hgde
from .schemes import RiemannScheme, riemann_scheme, scheme_twist, uniformizing_scheme, uniformizing_twist
from .newton import NewtonPolygon, newton_polygon_infty
from .radius import RadiusReport, radius_report
from .existence import ExistenceVerdict, commensurability_class, padic_existence

__all__ = [
    "HgdeParams",
    "TriangleTriple",
    "classify_triple",
    "triple_to_hgde",
    "RiemannScheme",
    "riemann_scheme",
    "scheme_twist",
    "uniformizing_scheme",
    "uniformizing_twist",
    "NewtonPolygon",
    "newton_polygon_infty",
    "RadiusReport",
    "radius_report",
    "ExistenceVerdict",
    "commensurability_class",
    "padic_existence",
]
