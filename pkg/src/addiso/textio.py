"""Line-oriented text formats for codes, maps and sweep reports.

Code file::

    # comments and blank lines are ignored
    field GF(2)^2
    k 3
    m 3
    row 1 1 0
    row [0,1] [0,1] 0
    row 1 0 1

An element of L is either its integer code (``0 .. |L|-1``, the K-coordinates
read as base-q digits, first coordinate least significant) or a bracketed list
of its n K-coordinates.  A map file is a code file followed by ``k`` lines
``image e_1 ... e_m``.
"""

from __future__ import annotations

import re
from typing import Optional

from .codes import GenMatrix
from .errors import AddisoError, ParseError
from .gf_tower import FieldPair, format_field, parse_field
from .isometry import CodeMap
from .solutions import SweepReport

_TOKEN = re.compile(r"\[[^\]]*\]|\S+")


class _Lines:
    def __init__(self, text: str) -> None:
        self.items: list[tuple[int, str, str, int, int]] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            stripped = line.lstrip()
            col = len(line) - len(stripped) + 1
            key, _, rest = stripped.partition(" ")
            self.items.append((lineno, key.rstrip(":"), rest, col + len(key) + 1, col))
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.items[self.pos][1] if self.pos < len(self.items) else None

    def take(self, key: str) -> tuple[int, str, int]:
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 0
            raise ParseError(f"expected '{key}' but input ended", last + 1, 1)
        lineno, k, rest, col, key_col = self.items[self.pos]
        if k != key:
            raise ParseError(f"expected '{key}', found '{k}'", lineno, key_col)
        self.pos += 1
        return lineno, rest, col


def _parse_int(text: str, lineno: int, col: int) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"expected an integer, found {text.strip()!r}", lineno, col) from None


def _parse_elements(rest: str, fp: FieldPair, lineno: int, col0: int, m: int) -> tuple[int, ...]:
    out = []
    for tok in _TOKEN.finditer(rest):
        col = col0 + tok.start()
        t = tok.group()
        if t.startswith("["):
            parts = [s.strip() for s in t[1:-1].split(",") if s.strip()]
            try:
                coeffs = [int(s) for s in parts]
            except ValueError:
                raise ParseError(f"bad coefficient list {t}", lineno, col) from None
            if len(coeffs) != fp.n or any(not 0 <= c < fp.q for c in coeffs):
                raise ParseError(f"{t} is not a list of {fp.n} elements of GF({fp.q})", lineno, col)
            out.append(fp.uncoords(coeffs))
        else:
            a = _parse_int(t, lineno, col)
            if not 0 <= a < fp.L.size:
                raise ParseError(f"element {a} outside GF({fp.L.size})", lineno, col)
            out.append(a)
    if len(out) != m:
        raise ParseError(f"expected {m} elements, found {len(out)}", lineno, col0)
    return tuple(out)


def _parse_code_block(lines: _Lines) -> GenMatrix:
    lineno, rest, col = lines.take("field")
    try:
        fp = parse_field(rest)
    except ParseError as e:
        raise ParseError(str(e), lineno, col) from None
    except AddisoError as e:
        raise ParseError(str(e), lineno, col) from None
    lineno, rest, col = lines.take("k")
    k = _parse_int(rest, lineno, col)
    lineno, rest, col = lines.take("m")
    m = _parse_int(rest, lineno, col)
    if k < 0 or m < 1:
        raise ParseError("need k >= 0 and m >= 1", lineno, col)
    rows = []
    first = None
    for _ in range(k):
        lineno, rest, col = lines.take("row")
        first = first or lineno
        rows.append(_parse_elements(rest, fp, lineno, col, m))
    try:
        return GenMatrix(fp, tuple(rows), m)
    except AddisoError as e:
        raise ParseError(str(e), first or lineno, 1) from None


def _expect_end(lines: _Lines) -> None:
    if lines.peek() is not None:
        lineno, key, _, _, key_col = lines.items[lines.pos]
        raise ParseError(f"unexpected '{key}'", lineno, key_col)


def parse_code(text: str) -> GenMatrix:
    lines = _Lines(text)
    A = _parse_code_block(lines)
    _expect_end(lines)
    return A


def parse_map(text: str) -> CodeMap:
    lines = _Lines(text)
    A = _parse_code_block(lines)
    image = []
    for _ in range(A.k):
        lineno, rest, col = lines.take("image")
        image.append(_parse_elements(rest, A.fields, lineno, col, A.m))
    _expect_end(lines)
    return CodeMap(A, tuple(image))


def format_code(A: GenMatrix) -> str:
    lines = [f"field {format_field(A.fields)}", f"k {A.k}", f"m {A.m}"]
    lines += ["row " + " ".join(map(str, r)) for r in A.rows]
    return "\n".join(lines) + "\n"


def format_map(f: CodeMap) -> str:
    return format_code(f.source) + "".join(
        "image " + " ".join(map(str, r)) + "\n" for r in f.image)


# --- sweep report --------------------------------------------------------------------

_REPORT_INTS = ("q", "n", "m", "max_k", "codes", "isometries", "extendible",
                "unextendible", "oracle_checked", "witness_cap")


def _rows_text(rows) -> str:
    return " ; ".join(" ".join(map(str, r)) for r in rows)


def format_report(r: SweepReport) -> str:
    lines = ["report: sweep", f"field: {r.field}"]
    for key in _REPORT_INTS:
        lines.append(f"{key}: {getattr(r, key)}")
        if key == "max_k":
            lines.append(f"dedupe: {'yes' if r.dedupe else 'no'}")
    for rows, image in r.witnesses:
        lines.append(f"witness: {_rows_text(rows)} -> {_rows_text(image)}")
    return "\n".join(lines) + "\n"


def _parse_rows(text: str, lineno: int) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(x) for x in part.split()) for part in text.split(";") if part.strip())
    except ValueError:
        raise ParseError("bad witness rows", lineno, 1) from None


def parse_report(text: str) -> SweepReport:
    lines = _Lines(text)
    lineno, rest, col = lines.take("report")
    if rest.strip() != "sweep":
        raise ParseError(f"unknown report kind {rest.strip()!r}", lineno, col)
    _, field_text, _ = lines.take("field")
    values = {}
    for key in _REPORT_INTS:
        lineno, rest, col = lines.take(key)
        values[key] = _parse_int(rest, lineno, col)
        if key == "max_k":
            lineno, rest, col = lines.take("dedupe")
            if rest.strip() not in ("yes", "no"):
                raise ParseError("dedupe must be yes or no", lineno, col)
            dedupe = rest.strip() == "yes"
    report = SweepReport(field_text.strip(), values["q"], values["n"], values["m"],
                         values["max_k"], dedupe=dedupe)
    for key in _REPORT_INTS[4:]:
        setattr(report, key, values[key])
    while lines.peek() is not None:
        lineno, rest, _ = lines.take("witness")
        src, arrow, img = rest.partition("->")
        if not arrow:
            raise ParseError("witness needs '->'", lineno, 1)
        report.witnesses.append((_parse_rows(src, lineno), _parse_rows(img, lineno)))
    return report
