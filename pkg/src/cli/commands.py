"""
Command Handlers - one function per subcommand, each returning an Outcome

Handlers take the parsed arguments and the validated CliConfig; they never
print. HANDLERS maps every subcommand name to its function.
"""

from __future__ import annotations

import logging
import random
from argparse import Namespace
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List

from src.atlas import (
    amalgam_data,
    arithmetic_padic_triples,
    b23,
    b2inf,
    distinct_modulo_two,
    escher_generators_check,
    format_table,
    load_takeuchi,
    maximal_order_basis,
    normalizes_order,
    orbifold_euler_char,
    order_closure_check,
    padic_table,
    quotient_orders,
    quotient_representatives,
    takeuchi_lookup,
    torsion_search,
    torsion_search_gamma_plus_2,
    write_takeuchi,
)
from src.atlas.amalgam import level_two_curve
from src.atlas.takeuchi import TAKEUCHI_FILE
from src.core.config import CliConfig
from src.core.errors import DataFileError, DomainError, UsageError
from src.crystal import (
    count_points_dwork,
    fp_eval,
    fp_special_values,
    hasse_functional_equations,
    hasse_interval,
    hasse_poly,
    legendre_gm_check,
    legendre_twist_relation,
    supersingular_roots,
    unit_root_report,
)
from src.gamma import (
    cm_gamma_product,
    diamond_convergence_report,
    diamond_telescoping_check,
    dwork_coeffs,
    find_row,
    gamma_p,
    gamma_p_analytic,
    gross_koblitz_check,
    load_cm_table,
    regenerate_cm_table,
    robert_identity_check,
    terms_for,
    validate_cm_table,
    write_cm_table,
    zeta_p_check,
)
from src.gamma.cm import CM_TABLE_FILE
from src.hgde import (
    HgdeParams,
    TriangleTriple,
    classify_triple,
    commensurability_class,
    newton_polygon_infty,
    padic_existence,
    radius_report,
    riemann_scheme,
    scheme_twist,
    triple_to_hgde,
    uniformizing_scheme,
    uniformizing_twist,
)
from src.isocrystal import dual, parse_isocrystal, weakly_admissible
from src.padic import EisensteinElem, UnramifiedElem, UnramifiedRational, valuation_of
from src.series import DiffOperator
from src.tree import (
    Pgl2Elem,
    TreeVertex,
    ball,
    classify_point,
    geodesic,
    in_drinfeld_space,
    lattice_distance,
    neighbors,
    parse_point,
    pgl2_classify,
    random_element,
    random_vertex,
    retract,
    schottky_triple_check,
    to_dot,
    vertex_distance,
)

from .documents import Outcome

logger = logging.getLogger("padic-desk")

Handler = Callable[[Namespace, CliConfig], Outcome]

CM_REGEN_LIMIT = 200


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _rationals(text: str, sep: str = ",") -> List[Fraction]:
    return [_rational(x) for x in text.split(sep) if x.strip()]


def _write(config: CliConfig, content: str) -> List[str]:
    if config.out is None:
        return []
    config.out.write_text(content, encoding="utf-8")
    logger.info("wrote %s", config.out)
    return [str(config.out)]


def _takeuchi_rows(config: CliConfig):
    return load_takeuchi(config.data_dir / TAKEUCHI_FILE)


# Gamma and Dwork

def cmd_gamma(args: Namespace, config: CliConfig) -> Outcome:
    p, N = config.p, config.prec
    x = _rational(args.x)
    value = gamma_p(x, N, prime=p)
    outputs: Dict[str, Any] = {"value": repr(value), "digits": value.digits()}
    precision: Dict[str, Any] = {"N": N}
    if args.analytic:
        T = config.pi_prec
        k = int(-x.numerator * pow(x.denominator, -1, p) % p)
        n_max = terms_for(p, T + p, stride=p, loss=1)
        coeffs = dwork_coeffs(p, p * (n_max + 1) + p, T + n_max + p)
        analytic = gamma_p_analytic(x, k, coeffs)
        common = min(analytic.pi_prec, (p - 1) * N)
        outputs["analytic"] = repr(analytic)
        outputs["residue_class"] = k
        outputs["agree"] = analytic.equal_mod_pi(EisensteinElem.from_scalar(p, value, common), common)
        precision["pi_prec"] = common
    return Outcome({"p": p, "x": str(x)}, outputs, precision)


def cmd_gk(args: Namespace, config: CliConfig) -> Outcome:
    p = config.p
    ks = [args.k] if args.k is not None else list(range(p - 1))
    reports = [gross_koblitz_check(p, k, config.pi_prec, threads=config.threads) for k in ks]
    equal = all(r.equal for r in reports)
    return Outcome(
        {"p": p, "k": ks},
        {"reports": [r.to_document() for r in reports], "equal": equal},
        {"pi_prec": config.pi_prec},
        ok=equal,
    )


def cmd_robert(args: Namespace, config: CliConfig) -> Outcome:
    p = config.p
    ks = [args.k] if args.k is not None else list(range(p - 1))
    reports = [robert_identity_check(p, k, args.terms, config.pi_prec) for k in ks]
    holds = all(reports)
    return Outcome(
        {"p": p, "k": ks, "terms": args.terms},
        {"reports": [r.to_document() for r in reports], "holds": holds},
        {"pi_prec": min(r.precision for r in reports)},
        ok=holds,
    )


def cmd_dwork_exp(args: Namespace, config: CliConfig) -> Outcome:
    p = config.p
    outputs = zeta_p_check(p, args.a, config.pi_prec)
    if args.show > 0:
        coeffs = dwork_coeffs(p, args.show - 1, config.pi_prec)
        outputs["coefficients"] = [repr(c) for c in coeffs.coeffs]
    ok = outputs["pth_power_is_one"] and outputs["congruence_mod_pi2"]
    return Outcome({"p": p, "a": args.a}, outputs, {"pi_prec": config.pi_prec}, ok=ok)


def cmd_diamond(args: Namespace, config: CliConfig) -> Outcome:
    p, N = config.p, config.prec
    x = _rational(args.x)
    levels = [int(v) for v in args.levels.split(",")]
    report = diamond_convergence_report(p, x, levels, prec=N)
    outputs = report.to_document()
    if x != 0 and valuation_of(x, p) == 0:
        outputs["telescoping_valuation"] = diamond_telescoping_check(p, x, levels[-1], prec=N)
    if not report.stabilising:
        outputs["note"] = "the level differences do not decrease at this point"
    return Outcome({"p": p, "x": str(x), "levels": levels}, outputs, {"N": N})


def cmd_cm_product(args: Namespace, config: CliConfig) -> Outcome:
    p, N = config.p, config.prec
    rows = load_cm_table(config.data_dir / CM_TABLE_FILE)
    result = cm_gamma_product(p, find_row(rows, args.d), N, threads=config.threads)
    return Outcome({"p": p, "d": args.d}, result.to_document(), {"N": N})


# Legendre family

def cmd_hasse(args: Namespace, config: CliConfig) -> Outcome:
    p = config.p
    h = hasse_poly(p)
    equations = hasse_functional_equations(p)
    return Outcome(
        {"p": p},
        {"h_p": repr(h), "degree": h.degree, "coefficients": list(h.coeffs), "functional_equations": equations},
        ok=all(equations.values()),
    )


def cmd_ssing(args: Namespace, config: CliConfig) -> Outcome:
    p = config.p
    roots = supersingular_roots(p)
    return Outcome({"p": p}, {"count": len(roots), "roots": [repr(r) for r in roots]})


def cmd_fp(args: Namespace, config: CliConfig) -> Outcome:
    p, N = config.p, config.prec
    if args.special:
        outputs = fp_special_values(p, N)
        return Outcome({"p": p}, outputs, {"N": N}, ok=outputs["f_p(1) = 1"] and outputs["f_p(-1) matches"])
    value = fp_eval(p, UnramifiedElem.from_int(p, 1, args.z, N), N).to_scalar()
    return Outcome({"p": p, "z": args.z}, {"value": repr(value), "digits": value.digits()}, {"N": N})


def _s0(text: str):
    if "," in text:
        return [int(c) for c in text.split(",")]
    try:
        return int(text)
    except ValueError as exc:
        raise UsageError(f"s0 must be an integer or coordinates, got {text!r}") from exc


def cmd_count(args: Namespace, config: CliConfig) -> Outcome:
    p, n = config.p, args.n
    s0 = _s0(args.s0)
    inputs = {"p": p, "n": n, "s0": args.s0}
    if args.twist:
        outputs = legendre_twist_relation(p, n, s0)
        return Outcome(inputs, outputs, ok=outputs["holds"])
    if args.verify:
        report = unit_root_report(p, n, s0, threads=config.threads)
        return Outcome(inputs, report.to_document(), ok=report.agree)
    count = count_points_dwork(p, n, s0, threads=config.threads)
    lo, hi = hasse_interval(p ** n)
    return Outcome(inputs, {"count_dwork": count, "hasse_interval": [lo, hi]})


def cmd_gm_check(args: Namespace, config: CliConfig) -> Outcome:
    report = legendre_gm_check(config.order)
    return Outcome({"order": config.order}, report.to_document(), {"order": config.order}, ok=report.ok)


def cmd_wa(args: Namespace, config: CliConfig) -> Outcome:
    path = Path(args.file)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise DataFileError(f"{path} not found") from exc
    V = parse_isocrystal(text)
    if args.dual:
        V = dual(V)
    result = weakly_admissible(V, oracle=args.oracle)
    outputs = {"object": V.describe(), **result.to_document()}
    return Outcome({"file": path.name, "dual": args.dual, "oracle": args.oracle}, outputs)


# Triangle groups and differential equations

def cmd_scheme(args: Namespace, config: CliConfig) -> Outcome:
    t = TriangleTriple.parse(args.triple)
    uniform = uniformizing_scheme(t)
    h = triple_to_hgde(t)
    hyper = riemann_scheme(h)
    a0, a1 = uniformizing_twist(t)
    matches = scheme_twist(uniform, a0, a1) == hyper
    text = "\n".join([
        f"uniformizing scheme of {t}:", uniform.to_table(), "",
        f"hypergeometric scheme, a={h.a} b={h.b} c={h.c}:", hyper.to_table(), "",
        f"twist ({a0}, {a1}) carries one to the other: {'yes' if matches else 'no'}",
    ])
    outputs = {
        "uniformizing": uniform.to_document(),
        "hypergeometric": {"params": h.to_document(), "scheme": hyper.to_document()},
        "twist": [str(a0), str(a1)],
        "twist_matches": matches,
    }
    return Outcome({"triple": str(t)}, outputs, text=text, ok=matches)


def cmd_triple(args: Namespace, config: CliConfig) -> Outcome:
    t = TriangleTriple.parse(args.triple)
    rows = _takeuchi_rows(config)
    outputs = {
        **classify_triple(t),
        "hgde": triple_to_hgde(t).to_document(),
        "existence": padic_existence(config.p, t, rows).to_document(),
        "commensurable": [str(x) for x in commensurability_class(t, rows)],
    }
    return Outcome({"p": config.p, "triple": str(t)}, outputs)


def cmd_takeuchi(args: Namespace, config: CliConfig) -> Outcome:
    rows = _takeuchi_rows(config)
    inputs: Dict[str, Any] = {"padic": args.padic, "lookup": args.lookup}
    if args.lookup:
        t = TriangleTriple.parse(args.lookup)
        row = takeuchi_lookup(rows, t.as_tuple())
        outputs = {"triple": str(t), "row": row.to_document() if row else None}
        return Outcome(inputs, outputs)
    if args.padic is not None:
        entries = padic_table(rows, args.padic)
        count = len(arithmetic_padic_triples(rows, args.padic))
    else:
        entries = [r.to_document() for r in rows]
        count = sum(len(r.triples) for r in rows)
    text = format_table(entries) + f"\n\n{count} triples"
    return Outcome(inputs, {"rows": entries, "count": count}, text=text)


def _newton_operator(args: Namespace) -> DiffOperator:
    if args.preset == "bessel":
        return DiffOperator.from_lists([[0, 0, 1], [0, 1], [0, 0, 1]])
    if args.preset == "hypergeometric":
        return HgdeParams.of(*_rationals(args.abc)).operator()
    if args.preset == "irregular":
        return DiffOperator.from_lists([[0, 0, 0, 1], [0, 1], [1]], convention="theta")
    return DiffOperator.from_lists([_rationals(poly) or [0] for poly in args.coeffs.split(";")])


def cmd_np(args: Namespace, config: CliConfig) -> Outcome:
    L = _newton_operator(args)
    polygon = newton_polygon_infty(L)
    artifacts = _write(config, polygon.to_svg())
    outputs = {"operator": repr(L), **polygon.to_document(), "regular": polygon.is_regular}
    text = f"{L!r}\n\n{polygon.to_table()}\n\nirregularity {polygon.irregularity}"
    return Outcome({"preset": args.preset, "coeffs": args.coeffs}, outputs, text=text, artifacts=artifacts)


def cmd_radius(args: Namespace, config: CliConfig) -> Outcome:
    h = HgdeParams.of(*_rationals(args.abc))
    report = radius_report(h, config.p, args.n_max, args.n_min)
    return Outcome({"p": config.p, "abc": args.abc, "n_max": args.n_max}, report.to_document())


# Tree, quaternions, amalgams

def _vertex(p: int, f: int, level: int, center: str) -> TreeVertex:
    return TreeVertex.make(p, f, level, UnramifiedRational.from_coords(p, f, _rationals(center)))


def _isometry_samples(p: int, f: int, samples: int, seed: int) -> Dict[str, Any]:
    rng = random.Random(seed)
    isometry = geodesics = True
    for _ in range(samples):
        g = random_element(p, f, rng)
        v, w = random_vertex(p, f, rng), random_vertex(p, f, rng)
        d = vertex_distance(v, w)
        isometry &= vertex_distance(g.act(v), g.act(w)) == d
        path = geodesic(v, w)
        geodesics &= len(path) == d + 1 and all(b in neighbors(a) for a, b in zip(path, path[1:]))
    return {"samples": samples, "seed": seed, "isometry": isometry, "geodesics": geodesics}


def cmd_tree(args: Namespace, config: CliConfig) -> Outcome:
    p, f = config.p, args.f
    v = _vertex(p, f, args.level, args.center)
    entries = ball(v, args.radius, threads=config.threads)
    outputs: Dict[str, Any] = {
        "vertex": v.label(),
        "q": v.q,
        "neighbors": [w.label() for w in neighbors(v)],
        "ball_size": len(entries),
    }
    ok = True
    if args.to:
        level, _, center = args.to.partition(":")
        w = _vertex(p, f, int(level), center or "0")
        path = geodesic(v, w)
        outputs["target"] = w.label()
        outputs["geodesic"] = [u.label() for u in path]
        outputs["distance"] = vertex_distance(v, w)
        outputs["lattice_distance"] = lattice_distance(p, f, v.lattice(), w.lattice())
    if args.point:
        point = parse_point(p, f, args.point)
        inside = in_drinfeld_space(point)
        outputs["point"] = {
            "description": str(point),
            "type": classify_point(point),
            "in_drinfeld_space": inside,
            "retraction": str(retract(point)) if inside else None,
        }
    if args.samples:
        outputs["properties"] = _isometry_samples(p, f, args.samples, config.seed)
        ok = outputs["properties"]["isometry"] and outputs["properties"]["geodesics"]
    artifacts = _write(config, to_dot(entries))
    return Outcome({"p": p, "f": f, "level": args.level, "center": args.center, "radius": args.radius}, outputs,
                   ok=ok, artifacts=artifacts)


def _matrix(p: int, f: int, text: str):
    rows = []
    for row in text.split(";"):
        entries = []
        for entry in row.split(","):
            entries.append(UnramifiedRational.from_coords(p, f, _rationals(entry, sep=":")))
        rows.append(entries)
    return rows


def cmd_pgl2(args: Namespace, config: CliConfig) -> Outcome:
    p, f = config.p, args.f
    g = Pgl2Elem.of(p, f, _matrix(p, f, args.matrix))
    info = pgl2_classify(g)
    base = TreeVertex.base(p, f)
    outputs = {**info, "normalised": g.rows(), "base_displacement": g.displacement(base)}
    return Outcome({"p": p, "f": f, "matrix": args.matrix}, outputs)


def cmd_schottky(args: Namespace, config: CliConfig) -> Outcome:
    report = schottky_triple_check()
    return Outcome({"p": 3, "f": 2}, report, ok=report["ok"])


def cmd_escher(args: Namespace, config: CliConfig) -> Outcome:
    escher = escher_generators_check()
    orders = {}
    for Q in (b23(), b2inf()):
        orders[Q.name] = order_closure_check(Q, maximal_order_basis(Q))
    B = b23()
    basis = maximal_order_basis(B)
    torsion = torsion_search_gamma_plus_2(args.bound)
    control = torsion_search(args.bound, level=1, traces=(0,))
    quaternions = {
        "maximal_orders": orders,
        "atkin_lehner_normalises": normalizes_order(B, B(1, 1), basis),
        "torsion_gamma_plus_2": [list(x) for x in torsion],
        "torsion_free": sorted(torsion) == [(-1, 0, 0, 0), (1, 0, 0, 0)],
        "control_contains_i": (0, 1, 0, 0) in control,
        "quotient_classes": distinct_modulo_two(B, quotient_representatives(B), basis),
    }
    ok = escher["ok"] and all(o["closed"] for o in orders.values()) and quaternions["torsion_free"]
    return Outcome({"bound": args.bound}, {"escher": escher, "quaternions": quaternions}, ok=ok)


def cmd_amalgam(args: Namespace, config: CliConfig) -> Outcome:
    report = amalgam_data(config.p)
    genus, automorphisms = level_two_curve()
    outputs = {
        **report.to_document(),
        "orbifold": {
            "chi(2,4,6)": str(orbifold_euler_char([2, 4, 6])),
            "chi(2,2,3,3)": str(orbifold_euler_char([2, 2, 3, 3])),
            "level_two_genus": genus,
            "level_two_automorphisms": automorphisms,
        },
        "quotients": quotient_orders(),
    }
    return Outcome({"p": config.p}, outputs, ok=all(report.checks.values()))


def cmd_regen_data(args: Namespace, config: CliConfig) -> Outcome:
    target = config.out or config.data_dir
    if not target.is_dir():
        raise DomainError(f"{target} is not a directory")
    cm_rows = regenerate_cm_table(CM_REGEN_LIMIT)
    bad = validate_cm_table(cm_rows)
    written = [str(write_cm_table(cm_rows, target / CM_TABLE_FILE))]
    rows = _takeuchi_rows(config)
    written.append(str(write_takeuchi(rows, target / TAKEUCHI_FILE)))
    outputs = {"cm_rows": len(cm_rows), "cm_invalid": bad, "takeuchi_rows": len(rows), "written": written}
    return Outcome({"target": str(target), "cm_limit": CM_REGEN_LIMIT}, outputs, ok=not bad)


HANDLERS: Dict[str, Handler] = {
    "gamma": cmd_gamma,
    "gk": cmd_gk,
    "robert": cmd_robert,
    "dwork-exp": cmd_dwork_exp,
    "diamond": cmd_diamond,
    "cm-product": cmd_cm_product,
    "hasse": cmd_hasse,
    "ssing": cmd_ssing,
    "fp": cmd_fp,
    "count": cmd_count,
    "gm-check": cmd_gm_check,
    "wa": cmd_wa,
    "scheme": cmd_scheme,
    "triple": cmd_triple,
    "takeuchi": cmd_takeuchi,
    "np": cmd_np,
    "radius": cmd_radius,
    "tree": cmd_tree,
    "pgl2": cmd_pgl2,
    "schottky": cmd_schottky,
    "escher": cmd_escher,
    "amalgam": cmd_amalgam,
    "regen-data": cmd_regen_data,
}
