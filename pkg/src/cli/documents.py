"""
Command Documents - the structured result every subcommand produces

Implements:
- CommandDocument: {command, inputs, outputs, precision, elapsed_ms}
- json-doc rendering with stable key order
- Plain-text rendering: an optional preformatted block, then key: value lines
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel


class CommandDocument(BaseModel):
    command: str
    inputs: Dict[str, Any]
    outputs: Dict[str, Any]
    precision: Optional[Dict[str, Any]] = None
    elapsed_ms: int = 0


@dataclass
class Outcome:
    """What a command handler returns; text, when set, replaces the generic rendering of outputs."""
    inputs: Dict[str, Any]
    outputs: Dict[str, Any]
    precision: Optional[Dict[str, Any]] = None
    text: Optional[str] = None
    ok: bool = True
    artifacts: List[str] = field(default_factory=list)


def jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return repr(value)


def render_json(doc: CommandDocument) -> str:
    return json.dumps(doc.model_dump(), indent=2, ensure_ascii=False) + "\n"


def _lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    out = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and not _flat(v):
                out.append(f"{pad}-")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}- {_inline(v)}")
    else:
        out.append(f"{pad}{_inline(value)}")
    return out


def _flat(value: Any) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) or (isinstance(v, list) and _flat(v)) for v in value)
    return False


def _inline(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


def render_text(doc: CommandDocument, text: Optional[str] = None) -> str:
    if text:
        return text.rstrip("\n") + "\n"
    return "\n".join(_lines(doc.outputs, 0)) + "\n"
