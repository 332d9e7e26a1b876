import math
import random
from fractions import Fraction

import mpmath
import pytest

from squaretile.circuit import Edge, Network
from squaretile.exactnum import QuadExt, conjugate, sign, sqrt_rational

RADICANDS = (2, 3, 5, 6, 7, 10, 11)


@pytest.fixture
def rng():
    return random.Random(20240601)


def rand_fraction(rng, lo=-20, hi=20, maxden=9, nonzero=False):
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, maxden))
        if q or not nonzero:
            return q


def rand_quad(rng, d=None, nonzero=False):
    d = d or rng.choice(RADICANDS)
    while True:
        x = QuadExt(rand_fraction(rng), rand_fraction(rng), d)
        if x or not nonzero:
            return x


def rand_positive_pair(rng, d):
    """a + b*sqrt(d) with both it and its conjugate positive."""
    while True:
        a = Fraction(rng.randint(1, 30), rng.randint(1, 5))
        b = Fraction(rng.randint(-10, 10), rng.randint(1, 5))
        if b and a * a > b * b * d:
            return QuadExt(a, b, d)


def mp_value(x, dps=100):
    """High-precision numeric value of a QuadExt; independent of the library."""
    with mpmath.workdps(dps):
        return mpmath.mpf(x.a.numerator) / x.a.denominator + (
            mpmath.mpf(x.b.numerator) / x.b.denominator
        ) * mpmath.sqrt(x.d)


def coverage_oracle(d):
    """Brute-force tiling check over the grid of all distinct coordinates.

    Every elementary cell of the arrangement must be covered by exactly one
    part.  Independent of validate(): uses mpmath ordering and midpoint tests.
    """
    with mpmath.workdps(60):
        def val(v):
            return mp_value(v, 60)

        xs = sorted({val(v) for r in (d.target, *d.parts) for v in (r.x, r.x + r.w)})
        ys = sorted({val(v) for r in (d.target, *d.parts) for v in (r.y, r.y + r.h)})
        tx0, tx1 = val(d.target.x), val(d.target.x + d.target.w)
        ty0, ty1 = val(d.target.y), val(d.target.y + d.target.h)
        boxes = [(val(p.x), val(p.x + p.w), val(p.y), val(p.y + p.h)) for p in d.parts]
        for x0, x1 in zip(xs, xs[1:]):
            for y0, y1 in zip(ys, ys[1:]):
                mx, my = (x0 + x1) / 2, (y0 + y1) / 2
                inside = tx0 < mx < tx1 and ty0 < my < ty1
                count = sum(1 for a, b, c, e in boxes if a < mx < b and c < my < e)
                if count != (1 if inside else 0):
                    return False
    return True


def random_admissible(rng):
    """Irrational x with x and its conjugate positive, small minimal polynomial."""
    while True:
        a = rng.randint(1, 4)
        b = -rng.randint(1, 14)
        c = rng.randint(1, 12)
        disc = b * b - 4 * a * c
        r = math.isqrt(max(disc, 0))
        if disc > 0 and r * r != disc:
            s = sqrt_rational(disc)
            return (-b + (s if rng.random() < 0.5 else -s)) / (2 * a)


def random_inadmissible(rng):
    """Irrational x whose conjugate is negative."""
    while True:
        d = rng.choice(RADICANDS)
        b = Fraction(rng.randint(1, 8), rng.randint(1, 3))
        a = Fraction(rng.randint(-10, 10), rng.randint(1, 3))
        x = QuadExt(a, b if rng.random() < 0.5 else -b, d)
        if sign(conjugate(x)) < 0 or sign(x) < 0:
            return x


def series(r1, r2):
    return Network(3, (Edge(0, 1, r1), Edge(1, 2, r2)), 0, 2)


def parallel(r1, r2):
    return Network(2, (Edge(0, 1, r1), Edge(0, 1, r2)), 0, 1)


def random_sp(rng, gen, depth=3):
    """Random series-parallel network as (edges between 'a' and 'b', closed form)."""
    if depth == 0 or rng.random() < 0.3:
        r = gen()
        return [("a", "b", r)], r
    left, rl = random_sp(rng, gen, depth - 1)
    right, rr = random_sp(rng, gen, depth - 1)
    if rng.random() < 0.5:
        mid = object()
        edges = [(mid if u == "b" else u, mid if v == "b" else v, r) for u, v, r in left]
        edges += [(mid if u == "a" else u, mid if v == "a" else v, r) for u, v, r in right]
        return edges, rl + rr
    return left + right, rl * rr / (rl + rr)


def sp_network(edges):
    names = {"a": 0, "b": 1}
    out = []
    for u, v, r in edges:
        for node in (u, v):
            if node not in names:
                names[node] = len(names)
        out.append(Edge(names[u], names[v], r))
    return Network(len(names), tuple(out), 0, 1)
