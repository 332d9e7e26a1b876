"""Minimal polynomials of quadratic-field elements and the exact
"all roots in the open right half-plane" test.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import as_quad
from .polynomial import Poly

__all__ = [
    "minimal_polynomial",
    "all_roots_positive_real_part",
    "routh_first_column",
    "stability_failure",
    "evaluate",
]


def minimal_polynomial(x) -> Poly:
    """Canonical integer minimal polynomial of a rational or quadratic ``x``.

    >>> str(minimal_polynomial(QuadExt(1, 1, 2)))
    'x^2-2x-1'
    """
    x = as_quad(x)
    if x.b == 0:
        return Poly((-x.a, 1)).primitive()
    # (X - x)(X - conj x) = X^2 - 2a X + (a^2 - b^2 d)
    return Poly((x.norm(), -2 * x.a, 1)).primitive()


def evaluate(p: Poly, x):
    """Horner evaluation of ``p`` at any exact field element."""
    return p(x)


def routh_first_column(q: Poly) -> list[Fraction] | None:
    """First column of the Routh array of ``q``, highest degree first.

    Returns None if a zero shows up in the first column; the array cannot
    be continued without the epsilon/auxiliary-polynomial tricks, which we
    never need since a zero already rules out strict stability.
    """
    n = q.degree
    c = q.coeffs
    top = [c[i] for i in range(n, -1, -2)]
    nxt = [c[i] for i in range(n - 1, -1, -2)]
    width = len(top)
    nxt += [Fraction(0)] * (width - len(nxt))
    rows = [top, nxt]
    column = [top[0]]
    for _ in range(n):
        prev2, prev1 = rows[-2], rows[-1]
        pivot = prev1[0]
        if pivot == 0:
            return None
        column.append(pivot)
        if len(column) == n + 1:
            break
        new = [
            (pivot * prev2[j + 1] - prev2[0] * prev1[j + 1]) / pivot
            for j in range(width - 1)
        ] + [Fraction(0)]
        rows.append(new)
    return column


def stability_failure(p: Poly) -> str | None:
    """Why ``p`` fails the positive-real-part test, or None if it passes."""
    if p.is_zero():
        raise ValueError("zero polynomial has no roots to test")
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots to test")
    q = p.reflect()
    coeffs = q.coeffs
    lead_sign = 1 if coeffs[-1] > 0 else -1
    for i, c in enumerate(coeffs):
        if c == 0:
            return f"coefficient of x^{i} in p(-x) is zero"
        if (c > 0) != (lead_sign > 0):
            return f"coefficient of x^{i} in p(-x) has the wrong sign"
    column = routh_first_column(q)
    if column is None:
        return "zero entry in the Routh array first column"
    for k, entry in enumerate(column):
        if (entry > 0) != (lead_sign > 0):
            return f"sign change in Routh array row {k}"
    return None


def all_roots_positive_real_part(p: Poly) -> bool:
    """True iff every complex root of ``p`` has strictly positive real part.

    Tested as Hurwitz stability of p(-x) with exact rational Routh arrays.
    Roots on the imaginary axis give False.
    """
    return stability_failure(p) is None
