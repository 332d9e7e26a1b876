from fractions import Fraction

import numpy as np
import pytest

from squaretile.exactnum import QuadExt, conjugate
from squaretile.polynomial import Poly, format_poly, parse_poly
from squaretile.polystab import all_roots_positive_real_part, evaluate, minimal_polynomial, routh_first_column

from conftest import rand_quad


def numeric_verdict(coeffs):
    """Oracle: sign of the real parts from a standard root finder.

    Returns None when some root sits within 1e-9 of the imaginary axis.
    """
    roots = np.roots(list(reversed(coeffs)))
    if any(abs(r.real) < 1e-9 for r in roots):
        return None
    return all(r.real > 0 for r in roots)


def random_int_poly(rng, maxdeg=5, bound=20):
    deg = rng.randint(1, maxdeg)
    coeffs = [rng.randint(-bound, bound) for _ in range(deg)]
    coeffs.append(rng.choice([c for c in range(-bound, bound + 1) if c]))
    return coeffs


# --- polynomial plumbing --------------------------------------------------------


def test_arithmetic_and_division():
    p = Poly((1, 2, 3))
    q = Poly((-1, 1))
    quo, rem = divmod(p * q + 7, q)
    assert quo == p and rem == Poly((7,))
    assert (p - p).is_zero()
    assert Poly((2, 4)).gcd(Poly((1, 2)) * Poly((5, 1))) == Poly((Fraction(1, 2), 1))
    assert Poly((0, 0, 0)).degree == -1


def test_primitive_and_substitution():
    p = Poly((Fraction(-1, 2), Fraction(-1), Fraction(1, 3)))
    assert p.primitive().int_coefficients() == (-3, -6, 2)
    assert Poly((-3, 6, -2)).primitive().int_coefficients() == (3, -6, 2)
    assert Poly((1, 2)).substitute_square() == Poly((1, 0, 2))
    assert Poly((1, 2, 3)).reflect() == Poly((1, -2, 3))


def test_text_forms():
    p = parse_poly("-1,-2,1")
    assert format_poly(p) == "x^2-2x-1"
    assert parse_poly("−1,−2,1") == p
    assert format_poly(Poly((3, -6, 2))) == "2x^2-6x+3"
    assert format_poly(Poly((0, -1))) == "-x"
    with pytest.raises(ValueError):
        parse_poly("1,,2")
    with pytest.raises(ValueError):
        parse_poly("1/2,1")


# --- minimal polynomial and evaluation --------------------------------------------


@pytest.mark.parametrize(
    "x, coeffs",
    [
        (QuadExt(1, 1, 2), (-1, -2, 1)),
        (QuadExt(Fraction(3, 2)), (-3, 2)),
        (QuadExt(Fraction(3, 2), Fraction(1, 2), 3), (3, -6, 2)),
        (QuadExt(2, -1, 2), (2, -4, 1)),
    ],
)
def test_minimal_polynomial_examples(x, coeffs):
    assert minimal_polynomial(x).int_coefficients() == coeffs


def test_evaluate_examples():
    assert evaluate(Poly((-1, -2, 1)), QuadExt(1, 1, 2)) == 0
    assert evaluate(Poly((7, 3, 5)), QuadExt(0)) == 7
    assert evaluate(Poly((3, -6, 2)), QuadExt(Fraction(3, 2), Fraction(-1, 2), 3)) == 0


def test_minimal_polynomial_properties(rng):
    for _ in range(500):
        x = rand_quad(rng)
        if x.b == 0:
            continue
        p = minimal_polynomial(x)
        assert p.degree == 2
        assert evaluate(p, x) == 0 and evaluate(p, conjugate(x)) == 0
        c = p.int_coefficients()
        assert c[-1] > 0
        assert np.gcd.reduce([abs(v) for v in c]) == 1


# --- Routh-Hurwitz ------------------------------------------------------------------


@pytest.mark.parametrize(
    "coeffs, expected",
    [
        ((-1, -2, 1), False),  # roots 1 +- sqrt2, one negative
        ((3, -6, 2), True),  # (3 +- sqrt3)/2
        ((1, 0, 1), False),  # +-i
        ((2, -4, 1), True),  # 2 +- sqrt2
        ((-3, 2), True),
        ((3, 2), False),
        ((-15, 20, -8, 1), True),  # (x-3)(x^2-5x+5)
        ((0, -1, 1), False),  # root at 0
    ],
)
def test_stability_examples(coeffs, expected):
    assert all_roots_positive_real_part(Poly(coeffs)) is expected


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        all_roots_positive_real_part(Poly())
    with pytest.raises(ValueError):
        all_roots_positive_real_part(Poly((5,)))


def test_routh_first_column_textbook_case():
    # s^3 + 2s^2 + 3s + 1: column 1, 2, 5/2, 1
    assert routh_first_column(Poly((1, 3, 2, 1))) == [1, 2, Fraction(5, 2), 1]
    # s^3 + s^2 + s + 1 (roots on the imaginary axis) hits a zero row
    assert routh_first_column(Poly((1, 1, 1, 1))) is None


def test_quadratic_vieta_rule(rng):
    for _ in range(500):
        a = rng.randint(1, 20)
        b, c = rng.randint(-20, 20), rng.randint(-20, 20)
        if b * b - 4 * a * c <= 0:
            continue
        assert all_roots_positive_real_part(Poly((c, b, a))) is (b < 0 and c > 0)


def test_stability_agrees_with_root_finder(rng):
    compared = 0
    for _ in range(500):
        coeffs = random_int_poly(rng)
        expected = numeric_verdict(coeffs)
        if expected is None:
            continue
        assert all_roots_positive_real_part(Poly(coeffs)) is expected, coeffs
        compared += 1
    assert compared > 400


def test_stability_agrees_on_products_of_known_roots(rng):
    # Build polynomials from chosen roots so positive cases are common.
    for _ in range(300):
        poly = Poly((1,))
        positive = True
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.5:
                r = Fraction(rng.randint(-6, 6) or 1, rng.randint(1, 4))
                poly = poly * Poly((-r, 1))
                positive &= r > 0
            else:
                re, im = Fraction(rng.randint(-6, 6) or 1, rng.randint(1, 3)), rng.randint(1, 4)
                poly = poly * Poly((re * re + im * im, -2 * re, 1))
                positive &= re > 0
        assert all_roots_positive_real_part(poly.primitive()) is positive
