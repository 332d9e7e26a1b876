"""Resistor networks of dissections, solved exactly by Kirchhoff's rules.

Convention: current flows from the top of the target to the bottom.  Each
maximal horizontal segment is a node, each part is a resistor of resistance
h/w joining the node of its top edge to the node of its bottom edge.  With
the battery at voltage 1 the circuit resistance equals H/W of the target.

The solver works over any exact field whose elements support + - * / and
comparison with 0: Fraction, QuadExt and RationalFunction are all used.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .dissection import Dissection, NotSimilar, similarity, validate
from .exactnum import QuadExt, RationalFunction, conjugate, format_number, sign
from .polynomial import Poly

__all__ = [
    "Edge",
    "Network",
    "Solution",
    "SingularSystemError",
    "ConjugatePositivityError",
    "network_from_dissection",
    "solve",
    "check_solution",
    "resistance_of_dissection",
    "conjugate_network",
    "certificate",
    "dump_network",
]


class SingularSystemError(RuntimeError):
    """The pinned-potential system has no unique solution (internal error)."""


class ConjugatePositivityError(ValueError):
    def __init__(self, edge: int, value):
        super().__init__(
            f"edge {edge}: resistance {format_number(value)} has nonpositive conjugate "
            f"{format_number(conjugate(value))}"
        )
        self.edge = edge
        self.value = value
        self.witness = conjugate(value)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    resistance: Any
    tag: int | None = None


def _is_ordered(x) -> bool:
    return isinstance(x, (int, Fraction, QuadExt))


@dataclass(frozen=True)
class Network:
    n_nodes: int
    edges: tuple[Edge, ...]
    source: int
    sink: int

    def __post_init__(self):
        object.__setattr__(
            self,
            "edges",
            tuple(
                Edge(e.u, e.v, Fraction(e.resistance), e.tag) if isinstance(e.resistance, int) else e
                for e in self.edges
            ),
        )
        if not self.edges:
            raise ValueError("network has no edges")
        if self.source == self.sink:
            raise ValueError("source and sink must differ")
        for k, e in enumerate(self.edges):
            if not (0 <= e.u < self.n_nodes and 0 <= e.v < self.n_nodes):
                raise ValueError(f"edge {k} references a missing node")
            # RationalFunction resistances have no sign; positivity is not checked.
            if _is_ordered(e.resistance) and sign(e.resistance) <= 0:
                raise ValueError(f"edge {k} has nonpositive resistance {format_number(e.resistance)}")
        if not self._connected():
            raise ValueError("network is not connected")

    def _connected(self) -> bool:
        adj = defaultdict(list)
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        seen = {self.source}
        stack = [self.source]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_nodes


def dump_network(n: Network) -> str:
    lines = [f"nodes {n.n_nodes} source {n.source} sink {n.sink}"]
    for e in n.edges:
        r = e.resistance
        text = format_number(r) if _is_ordered(r) else str(r)
        lines.append(f"{e.u} {e.v} {text}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Solution:
    potentials: tuple
    currents: tuple
    battery_current: Any
    resistance: Any


def _segments(d: Dissection):
    """Maximal horizontal segments as {y: [(x0, x1, node)]}, nodes top-down."""
    raw = defaultdict(list)
    t = d.target
    raw[t.top].append((t.x, t.right))
    raw[t.y].append((t.x, t.right))
    for p in d.parts:
        raw[p.top].append((p.x, p.right))
        raw[p.y].append((p.x, p.right))
    merged = {}
    node = 0
    for y in sorted(raw, reverse=True):
        spans = sorted(raw[y], key=lambda s: s[0])
        out = []
        cur0, cur1 = spans[0]
        for a, b in spans[1:]:
            if a <= cur1:  # overlapping or touching at a point
                if b > cur1:
                    cur1 = b
            else:
                out.append((cur0, cur1))
                cur0, cur1 = a, b
        out.append((cur0, cur1))
        merged[y] = [(a, b, node + k) for k, (a, b) in enumerate(out)]
        node += len(out)
    return merged, node


def _node_at(merged, y, x0, x1) -> int:
    for a, b, n in merged[y]:
        if a <= x0 and x1 <= b:
            return n
    raise AssertionError("segment not covered by any node")


def network_from_dissection(d: Dissection, resistances: Sequence | None = None) -> Network:
    """Resistor network of a valid dissection.

    ``resistances`` overrides the per-part values h/w (used for symbolic
    resistances); by default each part gets h/w.
    """
    merged, count = _segments(d)
    t = d.target
    edges = []
    for i, p in enumerate(d.parts):
        u = _node_at(merged, p.top, p.x, p.right)
        v = _node_at(merged, p.y, p.x, p.right)
        r = p.h / p.w if resistances is None else resistances[i]
        edges.append(Edge(u, v, r, i))
    return Network(
        count,
        tuple(edges),
        _node_at(merged, t.top, t.x, t.right),
        _node_at(merged, t.y, t.x, t.right),
    )


def _gauss_solve(matrix: list[list], rhs: list) -> list:
    """Exact Gaussian elimination with first-nonzero pivoting."""
    n = len(matrix)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularSystemError(f"no pivot in column {col}")
        a[col], a[piv] = a[piv], a[col]
        prow = a[col]
        inv = 1 / prow[col]
        for r in range(col + 1, n):
            f = a[r][col]
            if f != 0:
                f = f * inv
                row = a[r]
                for c in range(col, n + 1):
                    row[c] = row[c] - f * prow[c]
    x = [None] * n
    for r in range(n - 1, -1, -1):
        acc = a[r][n]
        for c in range(r + 1, n):
            acc = acc - a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x


def solve(n: Network) -> Solution:
    """Node potentials with source pinned at 1 and sink at 0, then currents."""
    r0 = n.edges[0].resistance
    zero = r0 - r0
    one = zero + 1
    free = [k for k in range(n.n_nodes) if k not in (n.source, n.sink)]
    index = {node: i for i, node in enumerate(free)}
    size = len(free)
    matrix = [[zero] * size for _ in range(size)]
    rhs = [zero] * size
    pinned = {n.source: one, n.sink: zero}
    for e in n.edges:
        g = one / e.resistance
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if a not in index:
                continue
            i = index[a]
            matrix[i][i] = matrix[i][i] + g
            if b in index:
                matrix[i][index[b]] = matrix[i][index[b]] - g
            else:
                rhs[i] = rhs[i] + g * pinned[b]
    values = _gauss_solve(matrix, rhs) if size else []
    potentials = [zero] * n.n_nodes
    potentials[n.source] = one
    for node, i in index.items():
        potentials[node] = values[i]
    currents = tuple((potentials[e.u] - potentials[e.v]) / e.resistance for e in n.edges)
    battery = zero
    for e, cur in zip(n.edges, currents):
        if e.u == n.source:
            battery = battery + cur
        if e.v == n.source:
            battery = battery - cur
    if battery == 0:
        raise SingularSystemError("zero battery current")
    return Solution(tuple(potentials), currents, battery, one / battery)


def check_solution(n: Network, s: Solution) -> bool:
    """Re-verify Kirchhoff's current law and Ohm's law exactly."""
    for e, cur in zip(n.edges, s.currents):
        if s.potentials[e.u] - s.potentials[e.v] != cur * e.resistance:
            return False
    net = [0] * n.n_nodes
    for e, cur in zip(n.edges, s.currents):
        net[e.u] = net[e.u] + cur
        net[e.v] = net[e.v] - cur
    for k in range(n.n_nodes):
        if k not in (n.source, n.sink) and net[k] != 0:
            return False
    if net[n.source] != s.battery_current or net[n.sink] != -s.battery_current:
        return False
    return s.resistance * s.battery_current == 1


def resistance_of_dissection(d: Dissection):
    """Circuit resistance of a valid dissection; equals target h/w."""
    return solve(network_from_dissection(d)).resistance


def conjugate_network(n: Network) -> Network:
    """Replace every resistance by its conjugate.

    Requires both the resistance and its conjugate to be positive; a
    violation raises ConjugatePositivityError naming the edge.
    """
    edges = []
    for k, e in enumerate(n.edges):
        r = e.resistance
        if not _is_ordered(r):
            raise TypeError("conjugate_network needs quadratic-field resistances")
        if sign(conjugate(r)) <= 0:
            raise ConjugatePositivityError(k, r)
        edges.append(Edge(e.u, e.v, conjugate(r), e.tag))
    return Network(n.n_nodes, tuple(edges), n.source, n.sink)


class CertificateError(ValueError):
    pass


def symbolic_resistance(d: Dissection) -> RationalFunction:
    """Resistance as a function of t, where ratio-R parts carry t and the
    transposed ones carry 1 (t stands for R^2 after a vertical R-stretch)."""
    report = similarity(d)
    if isinstance(report, NotSimilar):
        raise CertificateError(f"parts are not similar: {report}")
    R = report.ratio
    t = RationalFunction.variable()
    one = RationalFunction(1)
    values = []
    for i, p in enumerate(d.parts):
        q = p.h / p.w
        if q == R:
            values.append(t)
        elif q == 1 / R:
            values.append(one)
        else:
            raise CertificateError(f"part {i} has h/w {format_number(q)}, neither R nor 1/R")
    return solve(network_from_dissection(d, values)).resistance


def certificate(d: Dissection) -> Poly:
    """Nonzero integer polynomial vanishing at the dissection's ratio R.

    Solves the network with symbolic resistances to get rho(t) = p(t)/q(t)
    and returns q(x^2)*x - p(x^2) in canonical integer form.
    """
    if validate(d) is not None:
        raise CertificateError(f"invalid dissection: {validate(d)}")
    if d.target.w != d.target.h:
        raise CertificateError("certificate needs a square target")
    report = similarity(d)
    if isinstance(report, NotSimilar):
        raise CertificateError(f"parts are not similar: {report}")
    rho = symbolic_resistance(d)
    poly = (rho.den.substitute_square() * Poly.x() - rho.num.substitute_square()).primitive()
    if poly.is_zero() or poly(report.ratio) != 0:
        raise CertificateError("internal error: certificate does not vanish at the ratio")
    return poly
