# Command-line front end: argument parsing, handlers and result documents

from .documents import CommandDocument, Outcome, render_json, render_text
from .parser import COMMANDS, build_parser, parse_args
from .commands import HANDLERS

__all__ = [
    "CommandDocument",
    "Outcome",
    "render_json",
    "render_text",
    "COMMANDS",
    "build_parser",
    "parse_args",
    "HANDLERS",
]
