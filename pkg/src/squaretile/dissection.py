"""Axis-aligned rectangle dissections over an exact quadratic field."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import cmp_to_key

from .exactnum import NumberParseError, QuadExt, as_quad, format_number, parse_number, sign, to_decimal

__all__ = [
    "Rect",
    "Dissection",
    "Violation",
    "AspectReport",
    "NotSimilar",
    "DissectionSyntaxError",
    "validate",
    "similarity",
    "read_dissection",
    "write_dissection",
    "to_svg",
    "transpose",
    "scale",
    "stretch",
    "unit_square",
]


@dataclass(frozen=True)
class Rect:
    x: QuadExt
    y: QuadExt
    w: QuadExt
    h: QuadExt

    def __post_init__(self):
        for name in ("x", "y", "w", "h"):
            object.__setattr__(self, name, as_quad(getattr(self, name)))
        if sign(self.w) <= 0 or sign(self.h) <= 0:
            raise ValueError(f"rectangle sides must be positive: w={self.w}, h={self.h}")

    @property
    def right(self) -> QuadExt:
        return self.x + self.w

    @property
    def top(self) -> QuadExt:
        return self.y + self.h

    @property
    def area(self) -> QuadExt:
        return self.w * self.h

    def contains(self, other: Rect) -> bool:
        return (
            self.x <= other.x
            and self.y <= other.y
            and other.right <= self.right
            and other.top <= self.top
        )

    def overlaps(self, other: Rect) -> bool:
        """Interiors intersect (strict inequalities on both axes)."""
        return (
            self.x < other.right
            and other.x < self.right
            and self.y < other.top
            and other.y < self.top
        )

    def radicands(self) -> set[int]:
        return {v.d for v in (self.x, self.y, self.w, self.h) if v.b != 0}


@dataclass(frozen=True)
class Dissection:
    target: Rect
    parts: tuple[Rect, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("a dissection needs at least one part")

    def __len__(self) -> int:
        return len(self.parts)

    def radicand(self) -> int:
        ds = set(self.target.radicands())
        for p in self.parts:
            ds |= p.radicands()
        if len(ds) > 1:
            raise ValueError(f"dissection mixes radicands {sorted(ds)}")
        return ds.pop() if ds else 1


def unit_square() -> Rect:
    return Rect(0, 0, 1, 1)


@dataclass(frozen=True)
class Violation:
    kind: str  # "containment" | "overlap" | "area"
    parts: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return self.message


def validate(d: Dissection) -> Violation | None:
    """Return None if ``d`` is an exact tiling, else the first violation."""
    for i, p in enumerate(d.parts):
        if not d.target.contains(p):
            return Violation("containment", (i,), f"part {i} is not inside the target")
    pair = _overlapping_pair(d.parts)
    if pair is not None:
        i, j = pair
        return Violation("overlap", (i, j), f"parts {i} and {j} have overlapping interiors")
    total = sum((p.area for p in d.parts), QuadExt(0))
    if total != d.target.area:
        return Violation(
            "area",
            tuple(range(len(d.parts))),
            f"part areas sum to {format_number(total)}, target area is {format_number(d.target.area)}",
        )
    return None


def _ranks(values) -> dict:
    """Map each distinct exact value to its rank in increasing order."""
    distinct = list(set(values))
    # Sort on a decimal approximation, then confirm exactly; fall back to an
    # exact comparison sort only when the approximation is not decisive.
    distinct.sort(key=lambda v: to_decimal(v, 40))
    if any(sign(b - a) <= 0 for a, b in zip(distinct, distinct[1:])):
        distinct.sort(key=cmp_to_key(lambda a, b: sign(a - b)))
    return {v: k for k, v in enumerate(distinct)}


def _overlapping_pair(parts) -> tuple[int, int] | None:
    """Some pair of parts with intersecting interiors, or None.

    Sweep over x with coordinates replaced by exact ranks; the active
    y-intervals stay pairwise disjoint, so only the neighbours of a new
    interval need checking.
    """
    xr = _ranks([v for p in parts for v in (p.x, p.right)])
    yr = _ranks([v for p in parts for v in (p.y, p.top)])
    events = []
    for i, p in enumerate(parts):
        events.append((xr[p.x], 1, i))
        events.append((xr[p.right], 0, i))  # removals sort before insertions
    events.sort()
    starts: list[tuple[int, int]] = []
    spans: dict[int, tuple[int, int]] = {}
    for _, kind, i in events:
        p = parts[i]
        y0, y1 = yr[p.y], yr[p.top]
        if kind == 0:
            starts.remove((y0, i))
            continue
        pos = bisect.bisect_left(starts, (y0, i))
        for k in (pos - 1, pos):
            if 0 <= k < len(starts):
                s0, j = starts[k]
                s1 = spans[j][1]
                if s0 < y1 and y0 < s1:
                    assert parts[i].overlaps(parts[j])
                    return (min(i, j), max(i, j))
        starts.insert(pos, (y0, i))
        spans[i] = (y0, y1)
    return None


def aspect(r: Rect) -> QuadExt:
    """Longer side over shorter side."""
    return r.w / r.h if r.w >= r.h else r.h / r.w


def orientation(r: Rect) -> str:
    c = sign(r.w - r.h)
    return "wide" if c > 0 else "tall" if c < 0 else "square"


@dataclass(frozen=True)
class AspectReport:
    ratio: QuadExt
    orientations: tuple[str, ...]


@dataclass(frozen=True)
class NotSimilar:
    first: int
    second: int
    first_ratio: QuadExt
    second_ratio: QuadExt

    def __str__(self) -> str:
        return (
            f"part {self.first} has ratio {format_number(self.first_ratio)} but part "
            f"{self.second} has ratio {format_number(self.second_ratio)}"
        )


def similarity(d: Dissection) -> AspectReport | NotSimilar:
    ratios = [aspect(p) for p in d.parts]
    for k, r in enumerate(ratios[1:], start=1):
        if r != ratios[0]:
            return NotSimilar(0, k, ratios[0], r)
    return AspectReport(ratios[0], tuple(orientation(p) for p in d.parts))


def transpose(d: Dissection) -> Dissection:
    def t(r: Rect) -> Rect:
        return Rect(r.y, r.x, r.h, r.w)

    return Dissection(t(d.target), tuple(t(p) for p in d.parts))


def scale(d: Dissection, k) -> Dissection:
    def s(r: Rect) -> Rect:
        return Rect(r.x * k, r.y * k, r.w * k, r.h * k)

    return Dissection(s(d.target), tuple(s(p) for p in d.parts))


def stretch(d: Dissection, sx=1, sy=1) -> Dissection:
    """Scale horizontally by ``sx`` and vertically by ``sy``."""

    def s(r: Rect) -> Rect:
        return Rect(r.x * sx, r.y * sy, r.w * sx, r.h * sy)

    return Dissection(s(d.target), tuple(s(p) for p in d.parts))


class DissectionSyntaxError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_rect(fields: list[str], lineno: int) -> Rect:
    if len(fields) != 4:
        raise DissectionSyntaxError(f"expected 4 coordinates, got {len(fields)}", lineno)
    try:
        vals = [parse_number(f) for f in fields]
    except NumberParseError as exc:
        raise DissectionSyntaxError(str(exc), lineno) from None
    try:
        return Rect(*vals)
    except ValueError as exc:
        raise DissectionSyntaxError(str(exc), lineno) from None


def read_dissection(text: str) -> Dissection:
    target: Rect | None = None
    parts: list[Rect] = []
    radicand: tuple[int, int] | None = None  # (d, first line using it)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *fields = line.split()
        if keyword == "target":
            if target is not None:
                raise DissectionSyntaxError("duplicate 'target' line", lineno)
            rect = _parse_rect(fields, lineno)
            target = rect
        elif keyword == "part":
            if target is None:
                raise DissectionSyntaxError("'part' before 'target'", lineno)
            rect = _parse_rect(fields, lineno)
            parts.append(rect)
        else:
            raise DissectionSyntaxError(f"unknown keyword {keyword!r}", lineno)
        for dd in rect.radicands():
            if radicand is None:
                radicand = (dd, lineno)
            elif radicand[0] != dd:
                raise DissectionSyntaxError(
                    f"sqrt({dd}) conflicts with sqrt({radicand[0]}) used on line {radicand[1]}", lineno
                )
    if target is None:
        raise DissectionSyntaxError("missing 'target' line", 1)
    if not parts:
        raise DissectionSyntaxError("no 'part' lines", lineno if text else 1)
    return Dissection(target, tuple(parts))


def _rect_line(keyword: str, r: Rect) -> str:
    return " ".join([keyword] + [format_number(v) for v in (r.x, r.y, r.w, r.h)])


def write_dissection(d: Dissection, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(_rect_line("target", d.target))
    lines.extend(_rect_line("part", p) for p in d.parts)
    return "\n".join(lines) + "\n"


def _num(v) -> str:
    s = f"{float(to_decimal(v, 17)):.12g}"
    return "0" if s == "-0" else s


def to_svg(d: Dissection, px: int = 400) -> str:
    """Render to SVG with the target mapped to a px-wide viewport."""
    if px <= 0:
        raise ValueError("px must be positive")
    t = d.target
    k = QuadExt(px) / t.w
    width = px
    height = t.h * k
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{_num(height)}" viewBox="0 0 {width} {_num(height)}">',
    ]
    for p in d.parts:
        x = (p.x - t.x) * k
        y = (t.top - p.top) * k  # SVG y axis points down
        out.append(
            f'  <rect x="{_num(x)}" y="{_num(y)}" width="{_num(p.w * k)}" height="{_num(p.h * k)}" '
            f'fill="white" stroke="black" stroke-width="1"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
