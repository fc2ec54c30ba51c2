"""
Schottky Generators - the rank-three Schottky group of the level-2 curve over Q_9

Implements:
- z_{ee'} = i + e j + e' ij in B_{2,inf}, Trd 0 and Nrd 3
- The embedding a + bi + cj + dij -> [[a + bs, c + ds], [-c + ds, a - bs]], s^2 = -1 in Q_9
- gamma_1, gamma_2, gamma_3 and gamma_i gamma_j^-1 classified on the 3-adic tree
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Tuple

from src.atlas.quaternion import QuatElem, b2inf
from src.padic.number_field import UnramifiedRational

from .pgl2 import Pgl2Elem, pgl2_classify

logger = logging.getLogger("padic-desk")

PRIME = 3
DEGREE = 2


def _field(a, b=0) -> UnramifiedRational:
    return UnramifiedRational.from_coords(PRIME, DEGREE, (a, b))


# printed generators, entries as (rational part, coefficient of sqrt(-1))
DISPLAYED = {
    "gamma_1": (((-1, -2), (2, 0)), ((-2, 0), (-1, 2))),
    "gamma_2": (((-1, -2), (0, -2)), ((0, -2), (-1, 2))),
    "gamma_3": (((1, 0), (2, -2)), ((-2, -2), (1, 0))),
}


def z_element(e1: int, e2: int) -> QuatElem:
    Q = b2inf()
    return Q.i() + Q.j() * e1 + Q.ij() * e2


def embed(x: QuatElem) -> Pgl2Elem:
    """Needs s = sqrt(-1), which is the generator of Q_9 = Q_3(s) since X^2 + 1 is irreducible mod 3."""
    a, b, c, d = x.coords
    return Pgl2Elem.of(PRIME, DEGREE, [[_field(a, b), _field(c, d)], [_field(-c, d), _field(a, -b)]])


def _raw(x: QuatElem) -> Tuple[Tuple[UnramifiedRational, ...], ...]:
    a, b, c, d = x.coords
    return ((_field(a, b), _field(c, d)), (_field(-c, d), _field(a, -b)))


def _displayed(name: str):
    return tuple(tuple(_field(*e) for e in row) for row in DISPLAYED[name])


def schottky_generators() -> Dict[str, QuatElem]:
    zpp = z_element(1, 1)
    return {
        "gamma_1": zpp * z_element(1, -1),
        "gamma_2": zpp * z_element(-1, 1),
        "gamma_3": zpp * z_element(-1, -1),
    }


def schottky_triple_check() -> Dict[str, Any]:
    checks: Dict[str, bool] = {}
    zs = {f"z{'+' if e1 > 0 else '-'}{'+' if e2 > 0 else '-'}": z_element(e1, e2) for e1 in (1, -1) for e2 in (1, -1)}
    for name, z in zs.items():
        checks[f"Trd({name}) = 0"] = z.trd() == 0
        checks[f"Nrd({name}) = 3"] = z.nrd() == 3
        checks[f"{name}^2 is scalar"] = z * z == -3

    gammas = schottky_generators()
    raw = {name: _raw(g) for name, g in gammas.items()}
    checks["gamma_1 matches the printed matrix"] = raw["gamma_1"] == _displayed("gamma_1")
    m, shown = raw["gamma_2"], _displayed("gamma_2")
    checks["gamma_2 matches up to swapping the diagonal"] = (
        m[0][1] == shown[0][1] and m[1][0] == shown[1][0] and m[0][0] == shown[1][1] and m[1][1] == shown[0][0]
    )
    checks["gamma_3 matches the printed matrix"] = raw["gamma_3"] == _displayed("gamma_3")

    elements = {name: embed(g) for name, g in gammas.items()}
    classes: List[Dict[str, Any]] = []
    for name, g in elements.items():
        info = pgl2_classify(g)
        classes.append({"element": name, **info})
        checks[f"l({name}) = 2"] = info["kind"] == "hyperbolic" and info["translation_length"] == 2
    names = list(elements)
    for x in names:
        for y in names:
            if x == y:
                continue
            word = f"{x}*{y}^-1"
            info = pgl2_classify(elements[x] * elements[y].inverse())
            classes.append({"element": word, **info})
            checks[f"{word} is hyperbolic"] = info["kind"] == "hyperbolic"
    ok = all(checks.values())
    logger.info("Schottky triple check: %s", "ok" if ok else "FAILED")
    return {
        "checks": checks,
        "generators": {name: [[repr(e) for e in row] for row in raw[name]] for name in names},
        "classification": classes,
        "ok": ok,
    }
