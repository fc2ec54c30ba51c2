"""
Takeuchi Tables - the 76 arithmetic hyperbolic triangle groups and their p-adic rows

Implements:
- Loading data/takeuchi.json with checksum and count validation
- Lookup up to permutation and per-prime filtering with the p-adic discriminant
- Canonical writing so regenerated files keep a stable checksum
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.core.errors import DataFileError

logger = logging.getLogger("padic-desk")

TAKEUCHI_FILE = "takeuchi.json"
EXPECTED_ROWS = 18
EXPECTED_TRIPLES = 76
EXPECTED_PADIC_COUNTS = {2: 45, 3: 16, 5: 9}

Triple = Tuple[int, int, int]


def place_label(p: int, field_label: str) -> str:
    """Finite places are written as the prime itself over Q and as v<p> otherwise."""
    return str(p) if field_label == "Q" else f"v{p}"


@dataclass(frozen=True)
class TakeuchiRow:
    field: str
    disc: Tuple[str, ...]
    triples: Tuple[Triple, ...]

    def disc_label(self) -> str:
        return ".".join(self.disc) if self.disc else "1"

    def ramified_at(self, p: int) -> bool:
        return place_label(p, self.field) in self.disc

    def padic_disc(self, p: int) -> str:
        rest = [d for d in self.disc if d != place_label(p, self.field)]
        return ".".join(rest) if rest else "1"

    def to_document(self) -> Dict[str, Any]:
        return {"field": self.field, "disc": list(self.disc), "triples": [list(t) for t in self.triples]}


def _hyperbolic(t: Triple) -> bool:
    return sum(Fraction(1, e) for e in t) < 1


def canonical_text(rows: Sequence[TakeuchiRow], version: int = 1) -> str:
    body = ",\n".join("    " + json.dumps(r.to_document()) for r in rows)
    return '{\n  "version": %d,\n  "rows": [\n%s\n  ]\n}\n' % (version, body)


def checksum(text: Union[str, bytes]) -> str:
    if isinstance(text, str):
        text = text.encode("utf-8")
    return hashlib.sha256(text).hexdigest()


def validate_rows(rows: Sequence[TakeuchiRow]) -> None:
    if len(rows) != EXPECTED_ROWS:
        raise DataFileError(f"expected {EXPECTED_ROWS} Takeuchi rows, found {len(rows)}")
    seen = set()
    for row in rows:
        for t in row.triples:
            if list(t) != sorted(t):
                raise DataFileError(f"triple {t} in {row.field} is not sorted")
            if not _hyperbolic(t):
                raise DataFileError(f"triple {t} in {row.field} is not hyperbolic")
            if t in seen:
                raise DataFileError(f"triple {t} appears twice")
            seen.add(t)
    if len(seen) != EXPECTED_TRIPLES:
        raise DataFileError(f"expected {EXPECTED_TRIPLES} triples, found {len(seen)}")
    for p, count in EXPECTED_PADIC_COUNTS.items():
        found = sum(len(r.triples) for r in rows if r.ramified_at(p))
        if found != count:
            raise DataFileError(f"expected {count} {p}-adic triples, found {found}")


def _parse(raw: Any, source: str) -> List[TakeuchiRow]:
    if not isinstance(raw, dict) or not isinstance(raw.get("rows"), list):
        raise DataFileError(f"{source}: expected an object with a 'rows' array")
    rows = []
    for item in raw["rows"]:
        try:
            triples = tuple(tuple(int(e) for e in t) for t in item["triples"])
            if any(len(t) != 3 for t in triples):
                raise ValueError("triples have three entries")
            rows.append(TakeuchiRow(str(item["field"]), tuple(str(d) for d in item["disc"]), triples))
        except (KeyError, TypeError, ValueError) as exc:
            raise DataFileError(f"{source}: malformed row {item!r}") from exc
    return rows


def load_takeuchi(path: Union[str, Path], verify_checksum: bool = True) -> List[TakeuchiRow]:
    """Read and validate the table; a sibling .sha256 file pins the exact bytes."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError as exc:
        raise DataFileError(f"{path} not found") from exc
    if verify_checksum:
        sidecar = path.with_name(path.name + ".sha256")
        if sidecar.exists():
            expected = sidecar.read_text(encoding="utf-8").split()[0]
            if checksum(data) != expected:
                raise DataFileError(f"{path}: checksum mismatch")
        else:
            logger.warning("no checksum file next to %s", path)
    try:
        raw = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DataFileError(f"{path}: {exc}") from exc
    rows = _parse(raw, str(path))
    validate_rows(rows)
    logger.debug("loaded %d Takeuchi rows from %s", len(rows), path)
    return rows


def write_takeuchi(rows: Sequence[TakeuchiRow], path: Union[str, Path]) -> Path:
    """Write the canonical form and its checksum file."""
    validate_rows(rows)
    path = Path(path)
    text = canonical_text(rows)
    path.write_bytes(text.encode("utf-8"))
    path.with_name(path.name + ".sha256").write_text(f"{checksum(text)}  {path.name}\n", encoding="utf-8")
    return path


def takeuchi_lookup(rows: Sequence[TakeuchiRow], triple: Sequence[int]) -> Optional[TakeuchiRow]:
    key = tuple(sorted(triple))
    for row in rows:
        if key in row.triples:
            return row
    return None


@dataclass(frozen=True)
class PadicTriple:
    triple: Triple
    field: str
    padic_disc: str


def arithmetic_padic_triples(rows: Sequence[TakeuchiRow], p: int) -> List[PadicTriple]:
    """Triples whose quaternion algebra ramifies at a place above p; empty for p > 5."""
    out = []
    for row in rows:
        if row.ramified_at(p):
            out.extend(PadicTriple(t, row.field, row.padic_disc(p)) for t in row.triples)
    return out


def padic_table(rows: Sequence[TakeuchiRow], p: int) -> List[Dict[str, Any]]:
    """Rows grouped by field and p-adic discriminant, in file order."""
    groups: Dict[Tuple[str, str], List[Triple]] = {}
    for item in arithmetic_padic_triples(rows, p):
        groups.setdefault((item.field, item.padic_disc), []).append(item.triple)
    return [
        {"field": f, "padic_disc": d, "triples": [list(t) for t in ts]}
        for (f, d), ts in groups.items()
    ]


def format_table(entries: Sequence[Dict[str, Any]]) -> str:
    """Aligned text: field, discriminant, triples."""
    disc_key = "padic_disc" if entries and "padic_disc" in entries[0] else "disc"
    rows = [("field", "disc", "triples")]
    for e in entries:
        disc = e[disc_key] if isinstance(e[disc_key], str) else (".".join(e[disc_key]) or "1")
        rows.append((e["field"], disc, " ".join("({},{},{})".format(*t) for t in e["triples"])))
    widths = [max(len(r[i]) for r in rows) for i in range(2)]
    return "\n".join(f"{r[0].ljust(widths[0])}  {r[1].ljust(widths[1])}  {r[2]}" for r in rows)
