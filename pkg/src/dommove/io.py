"""Plain-text point files: one point per line, whitespace or comma separated.

Lines starting with ``#`` and blank lines are skipped, as is a leading header
line made only of non-numeric tokens (e.g. ``f1 f2``).
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .model import SolutionSet, ValidationError, make_set

__all__ = ["ParseError", "parse_points", "read_points", "format_points", "write_points"]

_SPLIT = re.compile(r"[,\s]+")


class ParseError(ValidationError):
    pass


def _is_number(tok: str) -> bool:
    try:
        float(tok)
    except ValueError:
        return False
    return True


def parse_points(text: str, label: str = "", negate: bool = False, source: str = "<input>") -> SolutionSet:
    rows = []
    width = None
    seen_data = False
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        toks = [t for t in _SPLIT.split(s) if t]
        if not seen_data and not any(_is_number(t) for t in toks):
            seen_data = True  # header line
            continue
        seen_data = True
        try:
            row = [float(t) for t in toks]
        except ValueError:
            raise ParseError(f"{source}:{lineno}: not a number in {s!r}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"{source}:{lineno}: expected {width} columns, found {len(row)}")
        rows.append(row)
    if not rows:
        raise ParseError(f"{source}: no points found")
    try:
        S = make_set(rows, label)
    except ValidationError as exc:
        raise ParseError(f"{source}: {exc}") from None
    if negate:
        S = SolutionSet(np.negative(S.points), label)
        S.points.setflags(write=False)
    return S


def read_points(path, negate: bool = False) -> SolutionSet:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    return parse_points(text, label=path.stem, negate=negate, source=str(path))


def format_points(S: SolutionSet) -> str:
    return "".join(" ".join(repr(v) for v in row) + "\n" for row in S.points.tolist())


def write_points(S: SolutionSet, path, header: str | None = None) -> None:
    body = format_points(S)
    if header:
        body = "".join(f"# {h}\n" for h in header.splitlines()) + body
    Path(path).write_text(body)
