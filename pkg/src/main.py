import logging
import sys
import time
from typing import List, NoReturn, Optional, TextIO

from pydantic import ValidationError

from src.cli import HANDLERS, CommandDocument, parse_args, render_json, render_text
from src.cli.documents import jsonable
from src.core.config import CliConfig, settings
from src.core.errors import DeskError, UsageError


logger = logging.getLogger("padic-desk")


def _config(args) -> CliConfig:
    try:
        return CliConfig.from_settings(
            settings,
            p=args.p,
            prec=args.prec,
            pi_prec=args.pi_prec,
            order=args.order,
            output_format=args.output_format,
            data_dir=args.data_dir,
            seed=args.seed,
            threads=args.threads,
            out=args.out,
        )
    except ValidationError as exc:
        errors = "; ".join(e["msg"] for e in exc.errors())
        raise UsageError(errors) from exc


def run(argv: List[str], stdout: Optional[TextIO] = None) -> int:
    """Execute one subcommand; returns the exit status and writes the result to stdout."""
    stdout = stdout or sys.stdout
    args = parse_args(argv)
    config = _config(args)
    logger.info("running %s", args.command)

    start = time.perf_counter()
    outcome = HANDLERS[args.command](args, config)
    elapsed = int((time.perf_counter() - start) * 1000)
    if args.no_timing or not settings.report_timing:
        elapsed = 0

    doc = CommandDocument(
        command=args.command,
        inputs=jsonable(outcome.inputs),
        outputs=jsonable(outcome.outputs),
        precision=jsonable(outcome.precision),
        elapsed_ms=elapsed,
    )
    if config.output_format == "json-doc":
        stdout.write(render_json(doc))
    else:
        stdout.write(render_text(doc, outcome.text))
    if not outcome.ok:
        logger.warning("%s: checks did not all pass", args.command)
    return 0


def main() -> NoReturn:
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s - %(message)s",
    )
    try:
        status = run(sys.argv[1:])
    except DeskError as exc:
        logger.error("%s", exc)
        raise SystemExit(exc.exit_code) from exc
    except Exception as exc:  # pragma: no cover - top-level safety net
        logger.exception("padic-desk failed: %s", exc)
        raise SystemExit(1) from exc
    raise SystemExit(status)


if __name__ == "__main__":
    main()
