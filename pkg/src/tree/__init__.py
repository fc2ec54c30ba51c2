# Bruhat-Tits tree of PGL_2 over Q_{p^f}, Berkovich disk points and Schottky data

from .vertex import (
    TreeVertex,
    ball,
    geodesic,
    lattice_distance,
    neighbors,
    to_dot,
    vertex_distance,
    vertex_from_lattice,
)
from .pgl2 import Pgl2Elem, pgl2_classify, random_element, random_vertex
from .berkovich import (
    BerkovichPoint,
    QuadraticPoint,
    TreePoint,
    classify_point,
    in_drinfeld_space,
    parse_point,
    retract,
)
from .schottky import embed, schottky_generators, schottky_triple_check, z_element

__all__ = [
    "TreeVertex",
    "ball",
    "geodesic",
    "lattice_distance",
    "neighbors",
    "to_dot",
    "vertex_distance",
    "vertex_from_lattice",
    "Pgl2Elem",
    "pgl2_classify",
    "random_element",
    "random_vertex",
    "BerkovichPoint",
    "QuadraticPoint",
    "TreePoint",
    "classify_point",
    "in_drinfeld_space",
    "parse_point",
    "retract",
    "embed",
    "schottky_generators",
    "schottky_triple_check",
    "z_element",
]
