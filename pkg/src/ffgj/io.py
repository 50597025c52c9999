"""Plain-text and JSON matrix documents.

Text grammar::

    n SP m LF
    m tokens separated by single SP, LF     (n lines)

with tokens ``-?[0-9]+`` or ``-?[0-9]+/[1-9][0-9]*``. The final LF may be
omitted when reading; it is always written.
"""

from __future__ import annotations

import json
import re

from .errors import DimensionMismatch, ParseError
from .matrix import Matrix
from .scalar import SCALAR_RE, parse_scalar, render_scalar

_DIM_RE = re.compile(r"[1-9][0-9]*")


def _split(line: str, lineno: int) -> list[tuple[str, int]]:
    """Split on single spaces, returning (token, 1-based column) pairs."""
    out = []
    col = 1
    for tok in line.split(" "):
        if tok == "":
            raise ParseError("expected a token (tokens are separated by a single space)", lineno, col)
        out.append((tok, col))
        col += len(tok) + 1
    return out


def parse_matrix(text: str) -> Matrix:
    if text.endswith("\n"):
        text = text[:-1]
    if text == "":
        raise ParseError("empty document", 1, 1)
    lines = text.split("\n")
    header = _split(lines[0], 1)
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {len(header)} fields", 1, 1)
    for tok, col in header:
        if not _DIM_RE.fullmatch(tok):
            raise ParseError(f"invalid dimension {tok!r}", 1, col)
    n, m = (int(t) for t, _ in header)
    body = lines[1:]
    if len(body) != n:
        raise DimensionMismatch(f"header declares {n} rows, document has {len(body)}")
    rows = []
    for lineno, line in enumerate(body, 2):
        toks = _split(line, lineno)
        if len(toks) != m:
            raise DimensionMismatch(f"line {lineno}: header declares {m} columns, row has {len(toks)}")
        row = []
        for tok, col in toks:
            if not SCALAR_RE.fullmatch(tok):
                raise ParseError(f"invalid scalar {tok!r}", lineno, col)
            row.append(parse_scalar(tok))
        rows.append(row)
    return Matrix.from_rows(rows)


def render_matrix(M: Matrix) -> str:
    lines = [f"{M.n} {M.m}"]
    lines.extend(" ".join(render_scalar(x) for x in r) for r in M.rows)
    return "\n".join(lines) + "\n"


def parse_matrix_json(text: str) -> Matrix:
    """Read ``{"rows": [["1", "-2/3"], ...]}``; bare JSON integers are accepted too."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    rows = doc.get("rows") if isinstance(doc, dict) else None
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError('expected {"rows": [[...], ...]}', 1, 1)
    width = len(rows[0])
    out = []
    for i, r in enumerate(rows, 1):
        if len(r) != width or width == 0:
            raise DimensionMismatch(f"row {i} has {len(r)} entries, expected {width}")
        row = []
        for j, tok in enumerate(r, 1):
            if isinstance(tok, int) and not isinstance(tok, bool):
                tok = str(tok)
            if not isinstance(tok, str) or not SCALAR_RE.fullmatch(tok):
                raise ParseError(f"invalid scalar {tok!r} at row {i}, entry {j}", 1, 1)
            row.append(parse_scalar(tok))
        out.append(row)
    return Matrix.from_rows(out)


def render_matrix_json(M: Matrix) -> str:
    return json.dumps({"rows": [[render_scalar(x) for x in r] for r in M.rows]})
