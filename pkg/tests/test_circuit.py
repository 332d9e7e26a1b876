from fractions import Fraction

import numpy as np
import pytest

from squaretile import bundled
from squaretile.circuit import (
    ConjugatePositivityError,
    Edge,
    Network,
    SingularSystemError,
    certificate,
    check_solution,
    conjugate_network,
    dump_network,
    network_from_dissection,
    resistance_of_dissection,
    solve,
    symbolic_resistance,
)
from squaretile.construct import cf_tiling, find_cf, grid_tiling, quadratic_tiling, two_block_tiling
from squaretile.dissection import Dissection, Rect, stretch, transpose
from squaretile.exactnum import QuadExt, RationalFunction, conjugate, parse_number
from squaretile.polynomial import Poly
from squaretile.polystab import evaluate

from conftest import parallel, rand_positive_pair, random_sp, series, sp_network

FIG2_R = QuadExt(Fraction(3, 2), Fraction(1, 2), 3)
HALF = Fraction(1, 2)


# --- network construction ---------------------------------------------------------


def test_two_horizontal_slabs_are_in_series():
    d = Dissection(Rect(0, 0, 1, 1), (Rect(0, HALF, 1, HALF), Rect(0, 0, 1, HALF)))
    n = network_from_dissection(d)
    assert n.n_nodes == 3 and len(n.edges) == 2
    assert [(e.u, e.v) for e in n.edges] == [(0, 1), (1, 2)]


def test_two_vertical_slabs_are_in_parallel():
    d = Dissection(Rect(0, 0, 1, 1), (Rect(0, 0, HALF, 1), Rect(HALF, 0, HALF, 1)))
    n = network_from_dissection(d)
    assert n.n_nodes == 2 and [(e.u, e.v) for e in n.edges] == [(0, 1), (0, 1)]


def test_fig2_network_shape():
    n = network_from_dissection(bundled.load("fig2"))
    assert (n.n_nodes, len(n.edges), n.source, n.sink) == (3, 5, 0, 2)
    assert dump_network(n).splitlines()[0] == "nodes 3 source 0 sink 2"


def test_corner_touching_segments_merge():
    # Two side-by-side columns cut at the same height: the cut is one node.
    d = Dissection(Rect(0, 0, 1, 1), (
        Rect(0, 0, HALF, HALF), Rect(HALF, 0, HALF, HALF),
        Rect(0, HALF, HALF, HALF), Rect(HALF, HALF, HALF, HALF),
    ))
    assert network_from_dissection(d).n_nodes == 3


def test_disjoint_segments_at_same_height_stay_separate():
    # Staggered cuts at y=1/2 split by a tall middle part.
    third = Fraction(1, 3)
    d = Dissection(Rect(0, 0, 1, 1), (
        Rect(0, 0, third, HALF), Rect(0, HALF, third, HALF),
        Rect(third, 0, third, 1),
        Rect(2 * third, 0, third, HALF), Rect(2 * third, HALF, third, HALF),
    ))
    n = network_from_dissection(d)
    assert n.n_nodes == 4
    assert solve(n).resistance == 1


def test_network_invariants():
    with pytest.raises(ValueError):
        Network(2, (Edge(0, 1, -1),), 0, 1)
    with pytest.raises(ValueError):
        Network(2, (Edge(0, 1, 1),), 0, 0)
    with pytest.raises(ValueError):
        Network(3, (Edge(0, 1, 1),), 0, 1)
    with pytest.raises(ValueError):
        Network(2, (Edge(0, 1, QuadExt(1, -1, 2)),), 0, 1)


# --- solver -----------------------------------------------------------------------------


def test_single_edge():
    assert solve(Network(2, (Edge(0, 1, Fraction(7, 3)),), 0, 1)).resistance == Fraction(7, 3)


def test_series_and_parallel_closed_forms(rng):
    for _ in range(100):
        d = rng.choice((2, 3, 5))
        r1, r2 = rand_positive_pair(rng, d), rand_positive_pair(rng, d)
        for net, expected in ((series(r1, r2), r1 + r2), (parallel(r1, r2), r1 * r2 / (r1 + r2))):
            s = solve(net)
            assert s.resistance == expected
            assert check_solution(net, s)


def test_solver_over_rational_functions():
    t = RationalFunction.variable()
    assert solve(series(t, RationalFunction(1))).resistance == t + 1
    assert solve(parallel(t, t)).resistance == t / 2


def test_wheatstone_bridge_by_hand():
    # Balanced bridge with a cross resistor: 1,2 over 2,4 with any bridge value.
    n = Network(4, (Edge(0, 1, 1), Edge(1, 3, 2), Edge(0, 2, 2), Edge(2, 3, 4), Edge(1, 2, 5)), 0, 3)
    # Balanced: the bridge carries no current; 3 || 6 = 2.
    s = solve(n)
    assert s.resistance == 2 and s.currents[4] == 0 and check_solution(n, s)


def test_singular_system_is_reported():
    # Symbolic resistances t and -t cancel at the middle node.
    t = RationalFunction.variable()
    n = Network(3, (Edge(0, 1, t), Edge(1, 2, -t)), 0, 2)
    with pytest.raises(SingularSystemError):
        solve(n)


def _float_laplacian_resistance(n):
    """Numeric oracle: dense Laplacian with pinned potentials via numpy."""
    L = np.zeros((n.n_nodes, n.n_nodes))
    for e in n.edges:
        g = 1.0 / float(e.resistance)
        L[e.u, e.u] += g
        L[e.v, e.v] += g
        L[e.u, e.v] -= g
        L[e.v, e.u] -= g
    free = [k for k in range(n.n_nodes) if k not in (n.source, n.sink)]
    V = np.zeros(n.n_nodes)
    V[n.source] = 1.0
    if free:
        A = L[np.ix_(free, free)]
        b = -L[np.ix_(free, [n.source])][:, 0]
        V[free] = np.linalg.solve(A, b)
    current = sum((V[e.u] - V[e.v]) / float(e.resistance) for e in n.edges if e.u == n.source)
    return 1.0 / current


def _samples():
    yield bundled.load("fig2")
    yield bundled.load("frame")
    yield grid_tiling(3, 2)
    for s in ("2+1*sqrt(2)", "2-1*sqrt(2)", "3/2+1/2*sqrt(3)", "5/2+1/2*sqrt(5)"):
        x = parse_number(s)
        yield quadratic_tiling(x)
        yield cf_tiling(x, find_cf(x))
    yield cf_tiling(2, [Fraction(1, 4), 1])


def test_resistance_equals_aspect_on_samples():
    for d in _samples():
        for dd in (d, stretch(d, 1, Fraction(7, 3)), stretch(d, Fraction(2, 5), 1), transpose(d)):
            n = network_from_dissection(dd)
            s = solve(n)
            assert check_solution(n, s)
            assert s.resistance == dd.target.h / dd.target.w
            assert abs(float(s.resistance) - _float_laplacian_resistance(n)) < 1e-9


def test_part_currents_equal_scaled_widths():
    for d in _samples():
        n = network_from_dissection(d)
        s = solve(n)
        for e, cur in zip(n.edges, s.currents):
            assert cur == d.parts[e.tag].w / d.target.h


def test_transpose_inverts_resistance():
    d = stretch(bundled.load("fig2"), 1, FIG2_R)
    assert resistance_of_dissection(transpose(d)) == 1 / resistance_of_dissection(d)


def test_resistance_examples():
    assert resistance_of_dissection(bundled.load("fig2")) == 1
    assert resistance_of_dissection(stretch(bundled.load("fig2"), 1, FIG2_R)) == FIG2_R
    assert resistance_of_dissection(grid_tiling(3, 2)) == 1


def test_resistance_on_all_two_block_outputs():
    for m in range(1, 5):
        for n in range(1, 5):
            for p in range(1, 5):
                for q in range(1, 5):
                    if m * m * p * p >= 4 * m * n * p * q:
                        d = two_block_tiling(m, n, p, q)[1]
                        assert resistance_of_dissection(d) == 1


# --- conjugation --------------------------------------------------------------------


def test_conjugate_rational_network_is_identical():
    n = series(Fraction(2), Fraction(3, 7))
    assert conjugate_network(n) == n


def test_conjugate_of_negative_root_resistances():
    big = QuadExt(1, 1, 2) ** 2
    n = Network(3, (Edge(0, 1, big), Edge(1, 2, Fraction(1)), Edge(0, 2, big)), 0, 2)
    c = conjugate_network(n)
    assert [e.resistance for e in c.edges] == [QuadExt(1, -1, 2) ** 2, 1, QuadExt(1, -1, 2) ** 2]


def test_conjugate_series_of_conjugate_pair():
    n = series(QuadExt(2, 1, 2), QuadExt(2, -1, 2))
    assert solve(n).resistance == 4
    assert solve(conjugate_network(n)).resistance == conjugate(QuadExt(4)) == 4


def test_conjugate_with_negative_conjugate_fails():
    n = series(QuadExt(1, 1, 2), Fraction(1))
    with pytest.raises(ConjugatePositivityError) as info:
        conjugate_network(n)
    assert info.value.edge == 0 and info.value.witness == QuadExt(1, -1, 2)


def test_conjugation_random_series_parallel(rng):
    for k in range(100):
        d = (2, 3, 5)[k % 3]
        edges, closed = random_sp(rng, lambda: rand_positive_pair(rng, d))
        n = sp_network(edges)
        r = solve(n).resistance
        assert r == closed
        assert solve(conjugate_network(n)).resistance == conjugate(r)


# --- certificate ------------------------------------------------------------------------


def test_certificate_unit_square():
    c = certificate(Dissection(Rect(0, 0, 1, 1), (Rect(0, 0, 1, 1),)))
    assert not c.is_zero() and evaluate(c, 1) == 0
    assert Poly((-1, 1)).divides(c)


def test_certificate_fig2():
    c = certificate(bundled.load("fig2"))
    assert c.is_integral() and not c.is_zero()
    assert Poly((3, -6, 2)).divides(c)
    assert evaluate(c, FIG2_R) == 0


def test_certificate_two_slabs_by_hand():
    # Two 1 x 1/2 slabs in series: rho(t) = 1 + 1 = 2, certificate x - 2.
    d = Dissection(Rect(0, 0, 1, 1), (Rect(0, HALF, 1, HALF), Rect(0, 0, 1, HALF)))
    assert symbolic_resistance(d) == 2
    assert certificate(d).int_coefficients() == (-2, 1)


def test_certificate_parity_structure():
    for d in _samples():
        if d.target.w != d.target.h:
            continue
        rho = symbolic_resistance(d)
        c = certificate(d)
        odd = Poly(v if i % 2 else 0 for i, v in enumerate(c.coeffs))
        even = Poly(v if i % 2 == 0 else 0 for i, v in enumerate(c.coeffs))
        # odd part ~ q(x^2) x, even part ~ -p(x^2), same scale factor
        scale = odd.leading / (rho.den.substitute_square() * Poly.x()).leading
        assert odd == (rho.den.substitute_square() * Poly.x()) * scale
        assert even == -(rho.num.substitute_square()) * scale
        from squaretile.dissection import similarity
        assert evaluate(c, similarity(d).ratio) == 0


def test_certificate_rejects_non_square_target():
    from squaretile.circuit import CertificateError
    with pytest.raises(CertificateError):
        certificate(Dissection(Rect(0, 0, 2, 1), (Rect(0, 0, 1, 1), Rect(1, 0, 1, 1))))
