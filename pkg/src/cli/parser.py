"""
Argument Parser - argparse front end for padic-desk

Implements:
- Shared flags (--p, --prec, --pi-prec, --order, --format, --seed, --threads, --data-dir, --out)
- One subparser per command with its own arguments
- Parse failures raised as UsageError instead of exiting
"""

from __future__ import annotations

import argparse
from typing import List, NoReturn, Optional

from src.core.errors import UsageError

COMMANDS = (
    "gamma", "gk", "robert", "dwork-exp", "diamond", "cm-product",
    "hasse", "ssing", "fp", "count", "gm-check", "wa",
    "scheme", "triple", "takeuchi", "np", "radius",
    "tree", "pgl2", "schottky", "escher", "amalgam", "regen-data",
)


class DeskArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status: int = 0, message: Optional[str] = None) -> NoReturn:
        # --help still exits normally
        if status:
            raise UsageError(message or f"{self.prog}: exit {status}")
        if message:
            self._print_message(message)
        raise SystemExit(0)


def _common() -> argparse.ArgumentParser:
    common = DeskArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="prime (default from settings)")
    common.add_argument("--prec", type=int, help="p-adic precision N")
    common.add_argument("--pi-prec", dest="pi_prec", type=int, help="precision in powers of pi")
    common.add_argument("--order", type=int, help="series truncation order")
    common.add_argument("--format", dest="output_format", choices=("text", "json-doc"))
    common.add_argument("--seed", type=int, help="seed for randomised checks")
    common.add_argument("--threads", type=int)
    common.add_argument("--data-dir", dest="data_dir")
    common.add_argument("--out", help="file for DOT/SVG/data output")
    common.add_argument("--no-timing", dest="no_timing", action="store_true", help="report elapsed_ms as 0")
    return common


def build_parser() -> DeskArgumentParser:
    common = _common()
    parser = DeskArgumentParser(prog="padic-desk", description="Exact p-adic computations and checks")
    sub = parser.add_subparsers(dest="command", parser_class=DeskArgumentParser)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("gamma", "Morita's Gamma_p at a rational point")
    p.add_argument("--x", required=True)
    p.add_argument("--analytic", action="store_true", help="also evaluate the Dwork-series expression")

    p = add("gk", "Gross-Koblitz three-way comparison")
    p.add_argument("--k", type=int, help="residue 0..p-2 (default: all)")

    p = add("robert", "Robert's identity G_k - G_(p-1+k) = (1-p) e_k")
    p.add_argument("--k", type=int, help="residue 0..p-2 (default: all)")
    p.add_argument("--terms", type=int)

    p = add("dwork-exp", "Dwork exponential at a Teichmueller point")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--show", type=int, default=0, help="print the first coefficients")

    p = add("diamond", "Diamond's G_p by levels")
    p.add_argument("--x", required=True)
    p.add_argument("--levels", default="1,2,3")

    p = add("cm-product", "Gamma_p product for an imaginary quadratic field")
    p.add_argument("--d", type=int, required=True)

    add("hasse", "Hasse polynomial and its functional equations")
    add("ssing", "Supersingular parameters in F_(p^2)")

    p = add("fp", "Unit-root function f_p at an integer point")
    p.add_argument("--z", type=int, default=-1)
    p.add_argument("--special", action="store_true", help="check f_p(1) and f_p(-1) against Gamma_p")

    p = add("count", "Points on the Legendre curve over F_(p^n)")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--s0", required=True, help="integer or comma-separated F_q coordinates")
    p.add_argument("--verify", action="store_true", help="also count by brute force")
    p.add_argument("--twist", action="store_true", help="compare with the count at 1 - s0")

    add("gm-check", "Gauss-Manin identities for the Legendre family at z = 1/2")

    p = add("wa", "Weak admissibility of a filtered isocrystal")
    p.add_argument("file", help="isocrystal text file")
    p.add_argument("--oracle", action="store_true", help="enumerate stable subspaces through kernels")
    p.add_argument("--dual", action="store_true", help="test the dual object")

    p = add("scheme", "Riemann schemes of a triangle group")
    p.add_argument("--triple", required=True)

    p = add("triple", "Classify a triangle triple and decide p-adic existence")
    p.add_argument("--triple", required=True)

    p = add("takeuchi", "Arithmetic triangle groups")
    p.add_argument("--padic", type=int, help="only the arithmetic p-adic triples")
    p.add_argument("--lookup", help="row containing this triple")

    p = add("np", "Formal Newton polygon at infinity")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", choices=("bessel", "hypergeometric", "irregular"))
    group.add_argument("--coeffs", help="polynomials in z for D^0..D^mu, ';'-separated, low degree first")
    p.add_argument("--abc", default="1/2,1/2,1", help="parameters of the hypergeometric preset")

    p = add("radius", "p-adic radius estimate of a hypergeometric series")
    p.add_argument("--abc", default="1/24,7/24,5/6")
    p.add_argument("--n-max", dest="n_max", type=int, default=729)
    p.add_argument("--n-min", dest="n_min", type=int)

    p = add("tree", "Bruhat-Tits tree around a vertex")
    p.add_argument("--f", type=int, default=1, help="residue degree")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--center", default="0", help="comma-separated coordinates")
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--to", help="second vertex as level:center")
    p.add_argument("--point", help="'classical c' or 'disk c rho' to classify and retract")
    p.add_argument("--samples", type=int, default=0, help="randomised isometry checks")

    p = add("pgl2", "Classify an element of PGL_2")
    p.add_argument("--matrix", required=True, help="'a,b;c,d', coordinates of an entry joined by ':'")
    p.add_argument("--f", type=int, default=1)

    add("schottky", "Schottky generators of the level-2 curve over Q_9")

    p = add("escher", "Escher generators and quaternion-order checks")
    p.add_argument("--bound", type=int, default=50, help="torsion search box")

    add("amalgam", "Amalgam data of the p-adic (2,4,6) group")
    add("regen-data", "Regenerate the CM table and rewrite the Takeuchi table")
    return parser


def parse_args(argv: List[str]) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
    return args
