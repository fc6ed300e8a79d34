"""Reading and writing contexts: Burmeister ``.cxt`` and CSV cross tables."""
from __future__ import annotations

import csv
import io
import os
from importlib import resources

import numpy as np

from .context import ContextError, FormalContext

CSV_TRUE = frozenset({"X", "x", "1"})
CSV_FALSE = frozenset({"", "0", "."})


class ParseError(ContextError):
    """Malformed input file; ``lineno`` is 1-based, or None when not line-specific."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        self.message = message
        super().__init__(message if lineno is None else f"{message} at line {lineno}")


def _check_unique(names, first_line: int, kind: str) -> None:
    seen = {}
    for offset, n in enumerate(names):
        lineno = first_line + offset
        if not n:
            raise ParseError(f"empty {kind} name", lineno)
        if n in seen:
            raise ParseError(f"duplicate {kind} name {n!r}", lineno)
        seen[n] = lineno


def parse_cxt(text: str) -> FormalContext:
    """Parse a context in Burmeister format.

    Layout: ``B``, context name, object count, attribute count, an empty
    line, object names, attribute names, then one row of ``X``/``.`` per
    object.  Lines are LF-separated; the final newline is optional.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def line(i: int, what: str) -> str:
        if i >= len(lines):
            raise ParseError(f"unexpected end of file, expected {what}", i + 1)
        return lines[i]

    if line(0, "header 'B'") != "B":
        raise ParseError("malformed header: first line must be 'B'", 1)
    name = line(1, "context name")
    counts = []
    for i, what in ((2, "object count"), (3, "attribute count")):
        raw = line(i, what)
        if not raw.isdigit():
            raise ParseError(f"malformed header: {what} {raw!r} is not a number", i + 1)
        counts.append(int(raw))
    n_obj, n_att = counts
    if line(4, "empty line") != "":
        raise ParseError("malformed header: line 5 must be empty", 5)

    pos = 5
    names = []
    for _ in range(n_obj + n_att):
        if pos >= len(lines):
            raise ParseError(
                f"name count mismatch: expected {n_obj} object and {n_att} attribute names",
                pos + 1,
            )
        names.append(lines[pos])
        pos += 1
    object_names, attribute_names = names[:n_obj], names[n_obj:]
    _check_unique(object_names, 6, "object")
    _check_unique(attribute_names, 6 + n_obj, "attribute")

    inc = np.zeros((n_obj, n_att), dtype=bool)
    for g in range(n_obj):
        if pos >= len(lines):
            raise ParseError(
                f"row count mismatch: expected {n_obj} incidence rows, found {g}", pos + 1
            )
        row = lines[pos]
        if len(row) != n_att:
            raise ParseError(
                f"row length mismatch: expected {n_att} characters, found {len(row)}",
                pos + 1,
            )
        for m, ch in enumerate(row):
            if ch == "X":
                inc[g, m] = True
            elif ch != ".":
                raise ParseError(f"invalid incidence character {ch!r}", pos + 1)
        pos += 1
    if pos < len(lines):
        raise ParseError(
            f"row count mismatch: expected {n_obj} incidence rows, found more", pos + 1
        )
    return FormalContext(object_names, attribute_names, inc, name=name)


def write_cxt(ctx: FormalContext) -> str:
    """Serialize ``ctx`` in Burmeister format, LF-terminated."""
    out = ["B", ctx.name, str(ctx.n_objects), str(ctx.n_attributes), ""]
    out.extend(ctx.object_names)
    out.extend(ctx.attribute_names)
    for g in range(ctx.n_objects):
        out.append("".join("X" if v else "." for v in ctx.incidence[g]))
    return "\n".join(out) + "\n"


def parse_csv_crosstable(text: str) -> FormalContext:
    """Parse a CSV cross table.

    The header holds a corner cell followed by attribute names; every other
    row holds an object name followed by one cell per attribute.  ``X``,
    ``x`` and ``1`` mark incidence; empty, ``0`` and ``.`` mark its absence.
    Any other token is rejected.
    """
    reader = csv.reader(io.StringIO(text))
    rows = [(reader.line_num, r) for r in reader if r]
    if not rows:
        raise ParseError("empty CSV: missing header row", 1)
    header_line, header = rows[0]
    attribute_names = [c.strip() for c in header[1:]]
    _check_names_at(attribute_names, header_line, "attribute")

    object_names, cells = [], []
    object_lines: dict[str, int] = {}
    for lineno, row in rows[1:]:
        if len(row) != len(attribute_names) + 1:
            raise ParseError(
                f"ragged row: expected {len(attribute_names)} cells, found {len(row) - 1}",
                lineno,
            )
        obj = row[0].strip()
        if not obj:
            raise ParseError("empty object name", lineno)
        if obj in object_lines:
            raise ParseError(f"duplicate object name {obj!r}", lineno)
        object_lines[obj] = lineno
        flags = []
        for cell in row[1:]:
            token = cell.strip()
            if token in CSV_TRUE:
                flags.append(True)
            elif token in CSV_FALSE:
                flags.append(False)
            else:
                raise ParseError(f"unrecognized cell token {token!r}", lineno)
        object_names.append(obj)
        cells.append(flags)
    inc = np.array(cells, dtype=bool).reshape(len(object_names), len(attribute_names))
    return FormalContext(object_names, attribute_names, inc)


def _check_names_at(names, lineno: int, kind: str) -> None:
    seen = set()
    for n in names:
        if not n:
            raise ParseError(f"empty {kind} name", lineno)
        if n in seen:
            raise ParseError(f"duplicate {kind} name {n!r}", lineno)
        seen.add(n)


def write_csv_crosstable(ctx: FormalContext) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["", *ctx.attribute_names])
    for g, name in enumerate(ctx.object_names):
        writer.writerow([name, *("X" if v else "" for v in ctx.incidence[g])])
    return buf.getvalue()


FORMATS = {".cxt": "cxt", ".csv": "csv"}


def infer_format(path: str | os.PathLike) -> str:
    ext = os.path.splitext(os.fspath(path))[1].lower()
    try:
        return FORMATS[ext]
    except KeyError:
        raise ContextError(
            f"cannot infer input format from extension {ext!r}; use cxt or csv"
        ) from None


def parse_context(text: str, fmt: str) -> FormalContext:
    if fmt == "cxt":
        return parse_cxt(text)
    if fmt == "csv":
        return parse_csv_crosstable(text)
    raise ContextError(f"unknown input format {fmt!r}; expected cxt or csv")


def read_context(path: str | os.PathLike, fmt: str | None = None) -> FormalContext:
    """Load a context from disk; the format defaults to the file extension.

    OSError propagates unchanged so callers can tell I/O failures from
    parse failures.
    """
    fmt = fmt or infer_format(path)
    with open(path, encoding="utf-8", newline="") as fh:
        text = fh.read()
    return parse_context(text, fmt)


def load_crime_events(fmt: str = "cxt") -> FormalContext:
    """The crime-events fixture: 10 events x (11 locations ``a``-``k`` + suspects ``P1``-``P10``)."""
    text = resources.files("fcakit").joinpath(f"data/crime_events.{fmt}").read_text("utf-8")
    return parse_context(text, fmt)
