"""Line-oriented text formats for functions, DNFs, and terms.

Function file:
    header   :=  "k=" int " n=" int " mode=" ("total" | "partial") ["default=" int]
    line     :=  int{n, space separated} " -> " int
    comments start with "#"; blank lines are ignored.
In total mode unlisted points take the header default (0 when absent); in
partial mode unlisted points are undefined and "default=" is rejected.

DNF file:
    header   :=  "k=" int " n=" int
    term     :=  ("TRUE" | factor ("*" factor)*) "->" gamma
    factor   :=  "J{" int ("," int)* "}(x" index ")"
Variables are 1-indexed; full factors are omitted when printing and a term
with no factors prints as "TRUE".  The empty DNF prints as the single line
"0".  Printing is canonical (sorted terms, sorted body lines) so equal
objects render byte-identically.
"""

from __future__ import annotations

import re

from .core import (
    Dnf,
    ElementaryConjunction,
    Interval,
    KFunction,
    PartialKFunction,
    Point,
    ValueSet,
)

_HEADER_RE = re.compile(
    r"k=(\d+)\s+n=(\d+)\s+mode=(total|partial)(?:\s+default=(\d+))?\s*$"
)
_DNF_HEADER_RE = re.compile(r"k=(\d+)\s+n=(\d+)\s*$")
_FACTOR_RE = re.compile(r"J\{(\d+(?:,\d+)*)\}\(x(\d+)\)$")


class ParseError(ValueError):
    """Malformed input text; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def parse_function(text: str) -> KFunction | PartialKFunction:
    """Parse a function file into a total or partially defined function."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "missing header")
    line_no, header = lines[0]
    m = _HEADER_RE.match(header)
    if not m:
        raise ParseError(line_no, "malformed header, expected 'k=K n=N mode=total|partial'")
    k, n, mode = int(m.group(1)), int(m.group(2)), m.group(3)
    default = int(m.group(4)) if m.group(4) is not None else None
    if not 2 <= k <= 16:
        raise ParseError(line_no, f"k={k} outside [2, 16]")
    if n < 1:
        raise ParseError(line_no, f"n={n} must be >= 1")
    if mode == "partial" and default is not None:
        raise ParseError(line_no, "default= is only meaningful in total mode")
    if default is None:
        default = 0
    if not 0 <= default < k:
        raise ParseError(line_no, f"default value {default} >= k")

    assignments: dict[Point, int] = {}
    for line_no, line in lines[1:]:
        if "->" not in line:
            raise ParseError(line_no, "expected 'x1 ... xn -> value'")
        left, _, right = line.partition("->")
        try:
            coords = tuple(int(tok) for tok in left.split())
            value = int(right.strip())
        except ValueError:
            raise ParseError(line_no, "coordinates and value must be integers") from None
        if len(coords) != n:
            raise ParseError(line_no, f"expected {n} coordinates, got {len(coords)}")
        for x in coords:
            if not 0 <= x < k:
                raise ParseError(line_no, f"coordinate {x} >= k")
        if not 0 <= value < k:
            raise ParseError(line_no, f"value {value} >= k")
        if coords in assignments:
            raise ParseError(line_no, f"duplicate point {' '.join(map(str, coords))}")
        assignments[coords] = value

    if mode == "total":
        return KFunction.from_map(k, n, assignments, default=default)
    return PartialKFunction(k, n, assignments)


def print_function(func: KFunction | PartialKFunction) -> str:
    """Canonical text: header plus sorted body lines, one per listed point."""
    if isinstance(func, KFunction):
        header = f"k={func.k} n={func.n} mode=total"
        body = [
            (p, func.value(p)) for p in func.points() if func.value(p) != 0
        ]
    else:
        header = f"k={func.k} n={func.n} mode=partial"
        body = list(func.items())
    lines = [header]
    for p, v in sorted(body):
        lines.append(f"{' '.join(map(str, p))} -> {v}")
    return "\n".join(lines) + "\n"


def format_term(ec: ElementaryConjunction) -> str:
    parts = [
        f"J{{{','.join(map(str, f.values()))}}}(x{j + 1})"
        for j, f in enumerate(ec.interval.factors)
        if not f.is_full(ec.k)
    ]
    head = "*".join(parts) if parts else "TRUE"
    return f"{head}->{ec.gamma}"


def print_dnf(d: Dnf) -> str:
    """One canonical-order term per line; the empty DNF prints as '0'."""
    if not d.terms:
        return "0\n"
    return "".join(format_term(t) + "\n" for t in d.canonical().terms)


def parse_term(text: str, k: int, n: int, line_no: int = 1) -> ElementaryConjunction:
    """Parse one term in the print_dnf syntax against a known shape."""
    body = text.strip()
    head, sep, gamma_text = body.rpartition("->")
    if not sep:
        raise ParseError(line_no, "term is missing '->gamma'")
    try:
        gamma = int(gamma_text.strip())
    except ValueError:
        raise ParseError(line_no, "gamma must be an integer") from None
    if not 1 <= gamma <= k - 1:
        raise ParseError(line_no, f"gamma {gamma} outside [1, {k - 1}]")
    factors = [ValueSet.full(k)] * n
    head = head.strip()
    if head != "TRUE":
        seen: set[int] = set()
        for chunk in head.split("*"):
            m = _FACTOR_RE.match(chunk.strip())
            if not m:
                raise ParseError(line_no, f"malformed factor {chunk.strip()!r}")
            values = [int(v) for v in m.group(1).split(",")]
            var = int(m.group(2))
            if not 1 <= var <= n:
                raise ParseError(line_no, f"variable x{var} outside x1..x{n}")
            if var in seen:
                raise ParseError(line_no, f"variable x{var} appears twice")
            seen.add(var)
            if any(not 0 <= v < k for v in values):
                raise ParseError(line_no, "factor value >= k")
            factors[var - 1] = ValueSet.from_iterable(values)
    return ElementaryConjunction(Interval(k, tuple(factors)), gamma)


def parse_dnf(text: str) -> Dnf:
    """Parse a DNF file: 'k=K n=N' header, then one term per line."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "missing header")
    line_no, header = lines[0]
    m = _DNF_HEADER_RE.match(header)
    if not m:
        raise ParseError(line_no, "malformed header, expected 'k=K n=N'")
    k, n = int(m.group(1)), int(m.group(2))
    if not 2 <= k <= 16:
        raise ParseError(line_no, f"k={k} outside [2, 16]")
    if n < 1:
        raise ParseError(line_no, f"n={n} must be >= 1")
    terms = []
    for line_no, line in lines[1:]:
        if line == "0":
            if len(lines) > 2:
                raise ParseError(line_no, "'0' must be the only body line")
            break
        terms.append(parse_term(line, k, n, line_no))
    return Dnf(k, n, tuple(terms))
