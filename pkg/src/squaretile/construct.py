"""Decision procedure and explicit tilings of the unit square.

* rational ratios: the plain grid;
* quadratic ratios with both conjugates positive: two blocks of equal
  rectangles, one block laid "along" and the other "across";
* any ratio with a positive continued-fraction tower equal to 1: alternating
  vertical and horizontal cuts, each slice subdivided into a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dissection import Dissection, Rect, unit_square
from .exactnum import QuadExt, as_quad, conjugate, format_number, sign, sqrt_rational
from .polynomial import Poly
from .polystab import minimal_polynomial, stability_failure

__all__ = [
    "NotTileableError",
    "Decision",
    "grid_tiling",
    "two_block_tiling",
    "two_block_parameters",
    "quadratic_tiling",
    "cf_tower",
    "cf_tiling",
    "find_cf",
    "decide",
]


class NotTileableError(ValueError):
    """No similar-rectangle tiling exists; ``witness`` is the nonpositive value."""

    def __init__(self, witness, message: str | None = None):
        super().__init__(message or f"nonpositive conjugate {format_number(witness)}")
        self.witness = witness


def grid_tiling(m: int, n: int) -> Dissection:
    """Unit square cut into m rows and n columns of (1/n) x (1/m) cells."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    w, h = Fraction(1, n), Fraction(1, m)
    parts = [Rect(j * w, i * h, w, h) for i in range(m) for j in range(n)]
    return Dissection(unit_square(), tuple(parts))


def two_block_tiling(m: int, n: int, p: int, q: int, root: str = "plus") -> tuple[QuadExt, Dissection]:
    """Left block: m rows x n columns of (R/m) x (1/m) parts.
    Right block: p rows x q columns of 1/(pR) x (1/p) parts.

    The blocks fill the unit square exactly when n*p*R^2 - m*p*R + m*q = 0;
    ``root`` picks the larger ("plus") or smaller ("minus") solution.
    """
    if min(m, n, p, q) < 1:
        raise ValueError("block dimensions must be positive")
    if root not in ("plus", "minus"):
        raise ValueError("root must be 'plus' or 'minus'")
    disc = m * m * p * p - 4 * m * n * p * q
    if disc < 0:
        raise ValueError(f"negative discriminant {disc}: no real ratio for ({m},{n},{p},{q})")
    s = sqrt_rational(disc)
    R = (m * p + (s if root == "plus" else -s)) / (2 * n * p)
    left_w = n * R / m
    cell_w, cell_h = R / m, QuadExt(Fraction(1, m))
    parts = [Rect(j * cell_w, i * cell_h, cell_w, cell_h) for i in range(m) for j in range(n)]
    across_w, across_h = 1 / (p * R), QuadExt(Fraction(1, p))
    parts += [
        Rect(left_w + j * across_w, i * across_h, across_w, across_h) for i in range(p) for j in range(q)
    ]
    return R, Dissection(unit_square(), tuple(parts))


def _check_admissible(x: QuadExt) -> None:
    if sign(x) <= 0:
        raise NotTileableError(x, f"ratio {format_number(x)} is not positive")
    if sign(conjugate(x)) <= 0:
        raise NotTileableError(conjugate(x))


def two_block_parameters(x) -> tuple[int, int, int, int]:
    """(m, n, p, q) whose two-block equation has x as a root.

    From the canonical minimal polynomial a*x^2 + b*x + c (b < 0 < c once
    both conjugates are positive): g = gcd(a, -b), m = -b/g, n = a/g,
    p = m*g, q = c.
    """
    x = as_quad(x)
    if x.b == 0:
        raise ValueError("two-block parameters need an irrational ratio")
    _check_admissible(x)
    c, b, a = minimal_polynomial(x).int_coefficients()
    g = math.gcd(a, -b)
    m, n = -b // g, a // g
    return m, n, m * g, c


def quadratic_tiling(x) -> Dissection:
    """Tiling by rectangles of ratio x for irrational x with x, conj(x) > 0."""
    x = as_quad(x)
    m, n, p, q = two_block_parameters(x)
    R, d = two_block_tiling(m, n, p, q, "plus" if x.b > 0 else "minus")
    if R != x:
        raise AssertionError("two-block root does not match the requested ratio")
    return d


def cf_tower(R, c: Sequence[Fraction]):
    """c1*R + 1/(c2*R + 1/(... + 1/(cn*R)))."""
    if not c:
        raise ValueError("empty expansion")
    value = c[-1] * R
    for ci in reversed(c[:-1]):
        value = ci * R + 1 / value
    return value


def cf_tiling(R, c: Sequence[Fraction | int]) -> Dissection:
    """Alternating-cut tiling for a positive expansion with tower exactly 1.

    Odd steps cut a vertical slab of width/height c_i*R off the left, even
    steps a horizontal slab of height/width c_i*R off the bottom.  A slab
    with c_i = u/v is then split into a grid of cells of ratio R.
    """
    R = as_quad(R)
    c = [Fraction(ci) for ci in c]
    if sign(R) <= 0:
        raise ValueError(f"ratio {format_number(R)} must be positive")
    if any(ci <= 0 for ci in c):
        raise ValueError("expansion coefficients must be positive")
    tower = cf_tower(R, c)
    if tower != 1:
        raise ValueError(f"expansion tower equals {format_number(tower)}, not 1")
    x0, y0 = QuadExt(0), QuadExt(0)
    W, H = QuadExt(1), QuadExt(1)
    parts: list[Rect] = []
    for i, ci in enumerate(c):
        last = i == len(c) - 1
        u, v = ci.numerator, ci.denominator
        if i % 2 == 0:
            sw = W if last else ci * R * H
            if last and W != ci * R * H:
                raise AssertionError("final slab has the wrong shape")
            cols, rows = u, v
            slab = (x0, y0, sw, H)
            x0, W = x0 + sw, W - sw
        else:
            sh = H if last else ci * R * W
            if last and H != ci * R * W:
                raise AssertionError("final slab has the wrong shape")
            cols, rows = v, u
            slab = (x0, y0, W, sh)
            y0, H = y0 + sh, H - sh
        if not last and (sign(W) <= 0 or sign(H) <= 0):
            raise ValueError(f"remainder after step {i + 1} is not positive")
        sx, sy, swid, shgt = slab
        cw, ch = swid / cols, shgt / rows
        parts += [Rect(sx + a * cw, sy + b * ch, cw, ch) for b in range(rows) for a in range(cols)]
    return Dissection(unit_square(), tuple(parts))


def find_cf(x) -> list[Fraction]:
    """Positive expansion with tower 1: [v/u] for x = u/v, [n/m, p/q] otherwise."""
    x = as_quad(x)
    if x.b == 0:
        if x.a <= 0:
            raise NotTileableError(x, f"ratio {format_number(x)} is not positive")
        return [1 / x.a]
    m, n, p, q = two_block_parameters(x)
    return [Fraction(n, m), Fraction(p, q)]


@dataclass(frozen=True)
class Decision:
    verdict: str  # "possible" | "impossible" | "undecided"
    ratio: QuadExt | None = None
    dissection: Dissection | None = None
    witness: object = None
    stability: bool | None = None
    reason: str | None = None

    def report(self) -> str:
        if self.verdict == "possible":
            return f"POSSIBLE {len(self.dissection)}"
        if self.verdict == "impossible":
            w = format_number(self.witness) if isinstance(self.witness, (QuadExt, Fraction, int)) else self.witness
            return f"IMPOSSIBLE witness={w}"
        return f"UNDECIDED stability={'true' if self.stability else 'false'}"


def _decide_number(x: QuadExt) -> Decision:
    if sign(x) <= 0:
        return Decision("impossible", x, witness=x, reason="ratio is not positive")
    if x.b == 0:
        return Decision("possible", x, grid_tiling(x.a.numerator, x.a.denominator))
    if sign(conjugate(x)) <= 0:
        return Decision("impossible", x, witness=conjugate(x), reason="conjugate is not positive")
    return Decision("possible", x, quadratic_tiling(x))


def _poly_roots(p: Poly) -> list[QuadExt]:
    """Real roots of a degree-1 or degree-2 polynomial, largest first."""
    if p.degree == 1:
        return [QuadExt(-p.coeffs[0] / p.coeffs[1])]
    c, b, a = p.coeffs
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    s = sqrt_rational(disc)
    hi, lo = (-b + s) / (2 * a), (-b - s) / (2 * a)
    return [hi, lo] if sign(a) > 0 else [lo, hi]


def decide(value, root: int = 0) -> Decision:
    """Decide tileability of the square by rectangles of ratio ``value``.

    ``value`` is a rational/QuadExt ratio or a Poly assumed minimal.  For a
    polynomial of degree <= 2, ``root`` indexes its real roots (largest
    first); higher degrees only get the stability verdict.
    """
    if not isinstance(value, Poly):
        return _decide_number(as_quad(value))
    p = value
    if p.is_zero() or p.degree < 1:
        raise ValueError("polynomial must be nonzero of degree >= 1")
    failure = stability_failure(p)
    if p.degree <= 2:
        roots = _poly_roots(p)
        if failure is not None:
            bad = next((r for r in roots if sign(r) <= 0), None)
            return Decision("impossible", roots[root] if root < len(roots) else None,
                            witness=bad if bad is not None else failure,
                            stability=False, reason=failure)
        if not roots:
            raise ValueError(f"{p} has no real root")
        if not 0 <= root < len(roots):
            raise ValueError(f"root index {root} out of range for {len(roots)} real roots")
        d = _decide_number(roots[root])
        return Decision(d.verdict, d.ratio, d.dissection, d.witness, True, d.reason)
    if failure is not None:
        return Decision("impossible", None, witness=failure, stability=False, reason=failure)
    return Decision("undecided", None, stability=True,
                    reason="all roots have positive real part; no tiling is constructed above degree 2")
