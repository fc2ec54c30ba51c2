# Takeuchi tables, orbifolds, quaternion orders and amalgams for arithmetic triangle groups

from .takeuchi import (
    PadicTriple,
    TakeuchiRow,
    arithmetic_padic_triples,
    canonical_text,
    format_table,
    load_takeuchi,
    padic_table,
    takeuchi_lookup,
    write_takeuchi,
)
from .orbifold import covering_genus, orbifold_euler_char
from .quaternion import (
    QuatElem,
    QuaternionAlgebra,
    b23,
    b2inf,
    distinct_modulo_two,
    maximal_order_basis,
    normalizes_order,
    order_closure_check,
    quotient_representatives,
    torsion_search,
    torsion_search_gamma_plus_2,
)
from .escher import escher_generators, escher_generators_check
from .amalgam import AmalgamReport, GraphOfGroups, amalgam_data, level_two_curve, quotient_orders

__all__ = [
    "PadicTriple",
    "TakeuchiRow",
    "arithmetic_padic_triples",
    "canonical_text",
    "format_table",
    "load_takeuchi",
    "padic_table",
    "takeuchi_lookup",
    "write_takeuchi",
    "covering_genus",
    "orbifold_euler_char",
    "QuatElem",
    "QuaternionAlgebra",
    "b23",
    "b2inf",
    "distinct_modulo_two",
    "maximal_order_basis",
    "normalizes_order",
    "order_closure_check",
    "quotient_representatives",
    "torsion_search",
    "torsion_search_gamma_plus_2",
    "escher_generators",
    "escher_generators_check",
    "AmalgamReport",
    "GraphOfGroups",
    "amalgam_data",
    "level_two_curve",
    "quotient_orders",
]
