"""Reading and writing matrices over F_q.

Text form: first non-comment line ``q k n``, then k lines of n integers
(encoded field elements).  ``#`` starts a comment.  The JSON form is an
object with keys ``q``, ``k``, ``n`` and ``rows``.
"""

from __future__ import annotations

import json
from typing import List, Sequence, Tuple

from .gf import FieldSpec, field_new


class MatrixFormatError(ValueError):
    pass


def parse_matrix(text: str) -> Tuple[FieldSpec, Tuple[Tuple[int, ...], ...]]:
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
            q, k, n, rows = int(obj["q"]), int(obj["k"]), int(obj["n"]), obj["rows"]
        except (ValueError, KeyError, TypeError) as exc:
            raise MatrixFormatError(f"bad JSON matrix: {exc}") from exc
    else:
        lines: List[List[str]] = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].split()
            if line:
                lines.append(line)
        if not lines or len(lines[0]) != 3:
            raise MatrixFormatError("header must be 'q k n'")
        try:
            q, k, n = (int(x) for x in lines[0])
            rows = [[int(x) for x in line] for line in lines[1:]]
        except ValueError as exc:
            raise MatrixFormatError(str(exc)) from exc
    if len(rows) != k:
        raise MatrixFormatError(f"expected {k} rows, found {len(rows)}")
    if any(len(r) != n for r in rows):
        raise MatrixFormatError(f"every row must have {n} entries")
    f = field_new(q)
    for r in rows:
        for a in r:
            if not 0 <= a < q:
                raise MatrixFormatError(f"{a} is not an element of GF({q})")
    return f, tuple(tuple(r) for r in rows)


def read_matrix(path: str) -> Tuple[FieldSpec, Tuple[Tuple[int, ...], ...]]:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def format_matrix(q: int, rows: Sequence[Sequence[int]], comment: str = "") -> str:
    k = len(rows)
    n = len(rows[0]) if rows else 0
    out = [f"# {comment}"] if comment else []
    out.append(f"{q} {k} {n}")
    out.extend(" ".join(str(a) for a in r) for r in rows)
    return "\n".join(out) + "\n"


def matrix_to_json(q: int, rows: Sequence[Sequence[int]]) -> dict:
    return {"k": len(rows), "n": len(rows[0]) if rows else 0, "q": q, "rows": [list(r) for r in rows]}
