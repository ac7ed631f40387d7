from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from algcontract.errors import ZeroPolynomial
from algcontract.exact import (
    BiLaurent,
    WeightedDegree,
    XiPoly,
    as_rational,
    berkowitz_det,
    is_polynomial,
    resultant,
    weighted_part,
    weighted_value,
)
from algcontract.textpoly import parse_poly

from conftest import F1, F2, U, V

X, Y = U, V
ONE = BiLaurent.const(1)


def t_poly(*coeffs):
    """Coefficient list in t, lowest power first, entries BiLaurent or rational."""
    return list(coeffs)


def test_as_rational_accepts_strings_and_ints():
    assert as_rational("3/5") == Fraction(3, 5)
    assert as_rational(4) == Fraction(4)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_zero_terms_are_dropped_and_equality_is_structural():
    f = BiLaurent({(1, 0): 1, (0, 1): 0})
    assert f == X
    assert (X - X).is_zero()
    assert hash(X + Y) == hash(Y + X)


def test_negative_y_exponent_rejected():
    with pytest.raises(ValueError):
        BiLaurent({(0, -1): 1})


def test_text_order_and_signs():
    f = Y ** 5 - X ** 2 - BiLaurent.monomial(5, -1, 4)
    assert f.to_text() == "y^5 - 5*y^4*x^-1 - x^2"
    assert F2.to_text(("u", "v")).startswith("v^5 - 5*v^4*u^2")
    assert BiLaurent().to_text() == "0"
    assert BiLaurent.monomial(Fraction(-1, 2), 0, 0).to_text() == "-1/2"


def test_negative_power_only_for_monomials_in_x():
    assert X ** -2 == BiLaurent.monomial(1, -2, 0)
    with pytest.raises(ValueError):
        (X + Y) ** -1


def test_degrees_and_coefficients():
    f = Y ** 3 * X ** -1 + X ** 4
    assert f.degree_y() == 3
    assert f.degree_x() == 4
    assert f.min_xexp() == -1
    assert f.total_degree() == 4
    assert f.coeff_y(3) == X ** -1
    with pytest.raises(ZeroPolynomial):
        BiLaurent().degree_x()


# --- weighted values ---------------------------------------------------

def test_weighted_order_examples():
    w = WeightedDegree(5, 3, "order")
    assert weighted_value(F1, w) == 15
    assert weighted_value(U, w) == 5
    assert weighted_value(V ** 4 * U ** 2, w) == 22


def test_weighted_part_extracts_initial_form():
    w = WeightedDegree(5, 3, "order")
    assert weighted_part(F2, w, 15) == F1


def test_is_polynomial_examples():
    assert is_polynomial(Y ** 5 - X ** 2)
    assert not is_polynomial(Y ** 5 - X ** 2 - BiLaurent.monomial(5, -1, 4))
    assert is_polynomial(BiLaurent())


def test_weighted_degree_rejects_bad_weights():
    with pytest.raises(ValueError):
        WeightedDegree(0, 1)
    with pytest.raises(ValueError):
        WeightedDegree(1, 1, "lex")


@given(st.integers(1, 12), st.integers(1, 12))
def test_coprime_weights_are_injective_below_the_box(p, q):
    """For coprime weights two monomials with b, b' < p share a weight only if equal."""
    if sympy.gcd(p, q) != 1:
        return
    seen = {}
    for a in range(-3, 3 * q):
        for b in range(p):
            w = WeightedDegree(p, q).monomial_weight(a, b)
            assert seen.setdefault(w, (a, b)) == (a, b)


# --- XiPoly --------------------------------------------------------------

def test_xipoly_arithmetic_and_evaluation():
    xi = XiPoly.xi()
    f = xi * xi * 5 - 1
    assert f.degree() == 2
    assert f(Fraction(1, 5)) == Fraction(-4, 5)
    assert XiPoly.const(3).is_constant()
    assert (xi - xi).is_zero()


# --- determinants and resultants ------------------------------------------

def test_berkowitz_matches_sympy_on_integer_matrices():
    m = [[2, -1, 0, 3], [1, 4, 5, -2], [0, 7, -3, 1], [6, 0, 1, 1]]
    assert berkowitz_det(m, 0, 1) == sympy.Matrix(m).det()


def test_resultant_eliminates_t_from_binomial():
    t5 = t_poly(-U, 0, 0, 0, 0, 1)
    res = resultant(t5, t_poly(V, 0, 0, -1))
    assert res in (F1, -F1)


def test_resultant_degree_one():
    res = resultant(t_poly(-U, 1), t_poly(V, -1))
    assert res in (V - U, U - V)


def test_resultant_reproduces_second_model_curve():
    g = t_poly(V, 0, 0, -1) + [0] * 6 + [-1]
    t5 = t_poly(-U, 0, 0, 0, 0, 1)
    for method in ("sylvester", "companion"):
        assert resultant(t5, g, method) in (F2, -F2)


def test_resultant_against_sympy():
    t, u, v = sympy.symbols("t u v")
    f = [-U, BiLaurent.const(2), BiLaurent.const(0), ONE]
    g = [V, U, -ONE]
    ours = resultant(f, g, "sylvester")
    theirs = sympy.resultant(t ** 3 + 2 * t - u, v + u * t - t ** 2, t)
    assert sympy.expand(sympy.sympify(ours.to_text(("u", "v")).replace("^", "**")) - theirs) == 0


_coeff = st.integers(-3, 3)
_small_t_poly = st.lists(st.tuples(_coeff, _coeff), min_size=2, max_size=4)


def _as_t_poly(pairs):
    """Coefficients ``c0 + c1 * u``, never with a vanishing leading coefficient."""
    coeffs = [BiLaurent({(0, 0): a, (1, 0): b}) for a, b in pairs]
    if coeffs[-1].is_zero():
        coeffs[-1] = ONE
    return coeffs


def _mul_t(f, g):
    out = [BiLaurent() for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


@settings(max_examples=40, deadline=None)
@given(_small_t_poly, _small_t_poly, _small_t_poly)
def test_resultant_is_multiplicative(a, b, c):
    f, g, h = _as_t_poly(a), _as_t_poly(b), _as_t_poly(c)
    assert resultant(f, _mul_t(g, h)) == resultant(f, g) * resultant(f, h)


# --- parsing ---------------------------------------------------------------

@pytest.mark.parametrize("text, expected", [
    ("y^5 - x^2 - 5*y^4*x^-1", Y ** 5 - X ** 2 - BiLaurent.monomial(5, -1, 4)),
    ("y^5 − x^2 − 5y^4x^(-1)", Y ** 5 - X ** 2 - BiLaurent.monomial(5, -1, 4)),
    ("(y - x^2)^5 - x^3", (Y - X ** 2) ** 5 - X ** 3),
    ("1/2*x + -y", X.scale(Fraction(1, 2)) - Y),
    ("3", BiLaurent.const(3)),
])
def test_parse_poly(text, expected):
    assert parse_poly(text) == expected


def test_parse_poly_round_trips_canonical_text():
    f = (Y - X ** 2 + BiLaurent.monomial(Fraction(2, 3), -1, 0)) ** 3
    assert parse_poly(f.to_text()) == f
