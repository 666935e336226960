"""Plain-text and JSON matrix formats.

Text format: one row per line, entries separated by whitespace or commas,
each an integer or ``p/q``.  Blank lines and ``#`` comments are ignored::

    # a 2 x 5 example
    1 1 1 0 1
    1 1 1 0 1

JSON mirror: ``{"rows": [["1", "-1/2"], ...]}`` (entries may also be JSON
integers).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .linalg import RationalMatrix

_SPLIT = re.compile(r"[,\s]+")


def _entry(token: str, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad matrix entry {token!r} on line {line}") from None


def parse_matrix_text(text: str) -> RationalMatrix:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append([_entry(tok, lineno) for tok in _SPLIT.split(line) if tok])
    if not rows:
        raise ParseError("matrix text contains no rows")
    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise ParseError(f"row {i + 1} has {len(r)} entries, expected {width}")
    return RationalMatrix(rows)


def format_matrix_text(a: RationalMatrix) -> str:
    cells = [[str(x) for x in r] for r in a.rows]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells) + "\n"


def matrix_to_json(a: RationalMatrix) -> dict:
    return {"rows": [[str(x) for x in r] for r in a.rows]}


def matrix_from_json(obj) -> RationalMatrix:
    rows = obj["rows"] if isinstance(obj, dict) else obj
    try:
        return RationalMatrix([[Fraction(str(x)) for x in r] for r in rows])
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(f"bad JSON matrix: {exc}") from None


def parse_matrix(text: str) -> RationalMatrix:
    """Parse either format, sniffing JSON by its first character."""
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            return matrix_from_json(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    return parse_matrix_text(text)


def load_matrix(path: str | Path) -> RationalMatrix:
    return parse_matrix(Path(path).read_text())


def parse_vector(text: str) -> list[Fraction]:
    return [_entry(tok, 1) for tok in _SPLIT.split(text.strip()) if tok]
