"""Exact arithmetic: rationals, real quadratic fields Q(sqrt d), and Q(t).

Rationals are plain ``fractions.Fraction``.  ``QuadExt`` represents
``a + b*sqrt(d)`` with rational ``a``, ``b`` and squarefree ``d >= 2``; a
rational value carried as a ``QuadExt`` has ``b == 0`` and may use ``d == 1``
when it has not yet met an irrational operand.  ``RationalFunction`` is the
field of quotients of rational polynomials in one formal variable.
"""

from __future__ import annotations

import decimal
import math
from fractions import Fraction
from typing import Union

from .polynomial import Poly

__all__ = [
    "QuadExt",
    "RationalFunction",
    "RadicandMismatch",
    "NumberParseError",
    "as_quad",
    "sqrt_rational",
    "squarefree_decompose",
    "parse_number",
    "format_number",
    "conjugate",
    "sign",
    "to_decimal",
]

Number = Union[int, Fraction, "QuadExt"]


_ZERO = Fraction(0)


class RadicandMismatch(ValueError):
    pass


class NumberParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return (s, f) with n == s*s*f and f squarefree, for n >= 1."""
    if n < 1:
        raise ValueError("squarefree_decompose needs n >= 1")
    s, f, m = 1, 1, n
    p = 2
    # Beyond the cube root at most two prime factors remain.
    while p * p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                f *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(m)
    if r * r == m:
        s *= r
    else:
        f *= m
    return s, f


class QuadExt:
    """Element ``a + b*sqrt(d)`` of a real quadratic field."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0, d: int = 1):
        a, b = Fraction(a), Fraction(b)
        if b != 0:
            if d < 2:
                raise ValueError(f"radicand must be >= 2 for irrational values, got {d}")
            s, f = squarefree_decompose(d)
            if f == 1:
                a, b, d = a + b * s, Fraction(0), 1
            elif s != 1:
                b, d = b * s, f
        elif d < 1:
            raise ValueError(f"radicand must be positive, got {d}")
        self.a, self.b, self.d = a, b, d

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> QuadExt:
        # Trusted fast path: d already squarefree (or b == 0).
        obj = object.__new__(cls)
        obj.a, obj.b, obj.d = a, b, d
        return obj

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        if self.b == 0:
            return f"QuadExt({str(self.a)!r})"
        return f"QuadExt({str(self.a)!r}, {str(self.b)!r}, {self.d})"

    def __str__(self) -> str:
        return format_number(self)

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.b == 0 or o.b == 0:
            return self.b == o.b and self.a == o.a
        return self.d == o.d and self.a == o.a and self.b == o.b

    def _common_d(self, o: QuadExt) -> int:
        if self.b != 0 and o.b != 0 and self.d != o.d:
            raise RadicandMismatch(f"cannot combine sqrt({self.d}) with sqrt({o.d})")
        if self.b != 0:
            return self.d
        if o.b != 0:
            return o.d
        return self.d if self.d != 1 else o.d

    def __add__(self, other) -> QuadExt:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self.a + o.a, self.b + o.b, self._common_d(o))

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt._raw(-self.a, -self.b, self.d)

    def __pos__(self) -> QuadExt:
        return self

    def __sub__(self, other) -> QuadExt:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self.a - o.a, self.b - o.b, self._common_d(o))

    def __rsub__(self, other) -> QuadExt:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> QuadExt:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        return QuadExt._raw(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """x * conjugate(x), a rational."""
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadExt._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other) -> QuadExt:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        self._common_d(o)
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadExt:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> QuadExt:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = QuadExt(1, 0, self.d)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> QuadExt:
        return QuadExt._raw(self.a, -self.b, self.d)

    def sign(self) -> int:
        return sign(self)

    def __abs__(self) -> QuadExt:
        return -self if sign(self) < 0 else self

    def _cmp(self, other) -> int | None:
        o = _coerce(other)
        if o is None:
            return None
        return sign(self - o)

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return float(to_decimal(self, 30))


def _coerce(x) -> QuadExt | None:
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, Fraction):
        return QuadExt._raw(x, _ZERO, 1)
    if isinstance(x, int):
        return QuadExt._raw(Fraction(x), _ZERO, 1)
    return None


def as_quad(x: Number, d: int = 1) -> QuadExt:
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadExt(x, 0, d)
    raise TypeError(f"cannot interpret {x!r} as a quadratic-field element")


def conjugate(x: Number) -> Number:
    if isinstance(x, QuadExt):
        return x.conjugate()
    return x


def _sgn(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def sign(x: Number) -> int:
    """Exact sign (-1, 0, 1) of a + b*sqrt(d), without floating point."""
    if not isinstance(x, QuadExt):
        return _sgn(Fraction(x))
    sa, sb = _sgn(x.a), _sgn(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # Opposite signs: compare a^2 with b^2 d.
    if sa > 0:
        return _sgn(x.a * x.a - x.b * x.b * x.d)
    return _sgn(x.b * x.b * x.d - x.a * x.a)


def sqrt_rational(r: int | Fraction) -> QuadExt:
    """Exact square root of a nonnegative rational as s*sqrt(f)."""
    r = Fraction(r)
    if r < 0:
        raise ValueError(f"square root of negative rational {r}")
    if r == 0:
        return QuadExt(0)
    s, f = squarefree_decompose(r.numerator * r.denominator)
    coeff = Fraction(s, r.denominator)
    if f == 1:
        return QuadExt(coeff)
    return QuadExt(0, coeff, f)


def to_decimal(x: Number, digits: int = 15) -> decimal.Decimal:
    """Decimal approximation carrying ``digits`` significant digits."""
    x = as_quad(x)
    ctx = decimal.Context(prec=digits + 10)
    a = ctx.divide(decimal.Decimal(x.a.numerator), decimal.Decimal(x.a.denominator))
    if x.b == 0:
        val = a
    else:
        b = ctx.divide(decimal.Decimal(x.b.numerator), decimal.Decimal(x.b.denominator))
        val = ctx.add(a, ctx.multiply(b, ctx.sqrt(decimal.Decimal(x.d))))
    return decimal.Context(prec=digits).plus(val)


def format_rational(q: Fraction) -> str:
    return str(q)


def format_number(x: Number) -> str:
    """Canonical text, e.g. ``1-1*sqrt(2)``, ``3/2``, ``0``."""
    x = as_quad(x)
    if x.b == 0:
        return format_rational(x.a)
    term = f"{abs(x.b)}*sqrt({x.d})"
    if x.a == 0:
        return f"-{term}" if x.b < 0 else term
    return f"{x.a}{'-' if x.b < 0 else '+'}{term}"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> NumberParseError:
        return NumberParseError(msg, self.text, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.eat(token):
            raise self.error(f"expected {token!r}")

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise self.error("expected digits")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        neg = self.eat("-")
        num = self.uint()
        den = 1
        if self.eat("/"):
            den = self.uint()
            if den == 0:
                raise self.error("zero denominator")
        q = Fraction(num, den)
        return -q if neg else q

    def sqrt(self) -> QuadExt:
        self.expect("sqrt(")
        n = self.uint()
        self.expect(")")
        return sqrt_rational(n)

    def term(self) -> QuadExt:
        if self.peek() == "s":
            return self.sqrt()
        coeff = self.rational()
        self.expect("*")
        return coeff * self.sqrt()

    def number(self) -> QuadExt:
        if self.peek() == "":
            raise self.error("empty number")
        if self.peek() == "s":
            value = self.term()
        elif self.peek() in "+-" and self._sign_then_sqrt():
            neg = self.eat("-") or not self.eat("+")
            t = self.term()
            value = -t if neg else t
        else:
            head = self.rational()
            if self.peek() == "*":
                self.expect("*")
                value = head * self.sqrt()
            elif self.peek() in ("+", "-"):
                neg = self.text[self.pos] == "-"
                self.pos += 1
                t = self.term()
                value = head - t if neg else head + t
            else:
                value = QuadExt(head)
        if self.peek() != "":
            raise self.error("unexpected trailing input")
        return value

    def _sign_then_sqrt(self) -> bool:
        # "+sqrt(..)" / "-sqrt(..)" / "+1*sqrt" are "sign term"; "-3/2" is a rational.
        save = self.pos
        self.pos += 1
        self.skip()
        if self.text.startswith("sqrt(", self.pos):
            self.pos = save
            return True
        is_plus = self.text[save] == "+"
        self.pos = save
        return is_plus


def parse_number(text: str) -> QuadExt:
    """Parse ``rational [sign term]`` forms such as ``3/2+1/2*sqrt(3)``."""
    return _Parser(text).number()


class RationalFunction:
    """Element of Q(t), kept as num/den with gcd 1 and monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int | Fraction = 0, den: Poly | int | Fraction = 1):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly((1,))
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            if lead != 1:
                num = Poly(c / lead for c in num.coeffs)
                den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def variable(cls) -> RationalFunction:
        return cls(Poly.x())

    def __repr__(self) -> str:
        return f"RationalFunction({self.num.coeffs!r}, {self.den.coeffs!r})"

    def __str__(self) -> str:
        from .polynomial import format_poly

        if self.den == 1:
            return format_poly(self.num, "t")
        return f"({format_poly(self.num, 't')})/({format_poly(self.den, 't')})"

    @staticmethod
    def _lift(x) -> RationalFunction | None:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunction(x)
        if isinstance(x, Poly):
            return RationalFunction(x)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.den == 1 and self.num.degree <= 0:
            return hash(self.num.leading)
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __call__(self, value):
        """Evaluate at a field element (Fraction, QuadExt, ...)."""
        return self.num(value) / self.den(value)
