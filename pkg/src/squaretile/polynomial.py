"""Dense univariate polynomials with rational coefficients.

Coefficients are stored lowest degree first as a tuple of ``Fraction``.
The zero polynomial is the empty tuple.  Integer polynomials are the same
class with integral coefficients; ``primitive()`` produces the canonical
integer form (content 1, positive leading coefficient).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["Poly", "format_coefficients", "format_poly", "parse_poly"]


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int | Fraction] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def constant(cls, c: int | Fraction) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coefficients(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"polynomial {self} has non-integer coefficients")
        return tuple(c.numerator for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @staticmethod
    def _lift(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        lead = o.leading
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lead
            quot[k] = c
            if c:
                for j, bj in enumerate(o.coeffs):
                    rem[k + j] -= c * bj
        return Poly(quot), Poly(rem[:db] if db > 0 else ())

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        """True if ``self`` divides ``other`` exactly over Q."""
        return (other % self).is_zero()

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        lead = self.leading
        return Poly(c / lead for c in self.coeffs)

    def gcd(self, other: Poly) -> Poly:
        """Monic gcd over Q (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if self.is_zero():
            return Fraction(0)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        num = math.gcd(*(c.numerator * (den // c.denominator) for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> Poly:
        """Integer polynomial with content 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return Poly(x / c for x in self.coeffs)

    def substitute_square(self) -> Poly:
        """p(x) -> p(x^2)."""
        out: list[Fraction] = []
        for c in self.coeffs:
            out.extend((c, Fraction(0)))
        return Poly(out)

    def reflect(self) -> Poly:
        """p(x) -> p(-x)."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        # Horner; works for any value type closed under + and * with Fractions.
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1] + x * 0
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc


def _fmt_coeff(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else f"({c})"


def format_poly(p: Poly, var: str = "x") -> str:
    """Human form such as ``x^2-2x-1``."""
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = _fmt_coeff(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += sign + body
    return out


_MINUS = re.compile("[−–]")


def parse_poly(text: str) -> Poly:
    """Parse comma-separated integer coefficients, lowest degree first."""
    text = _MINUS.sub("-", text)
    items = [s.strip() for s in text.split(",")]
    if not items or any(not s for s in items):
        raise ValueError(f"malformed coefficient list {text!r}")
    try:
        coeffs = [int(s) for s in items]
    except ValueError:
        raise ValueError(f"coefficients must be integers: {text!r}") from None
    return Poly(coeffs)


def format_coefficients(p: Poly) -> str:
    return ",".join(str(c) for c in p.int_coefficients())
