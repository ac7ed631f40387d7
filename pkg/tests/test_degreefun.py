from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algcontract.degreefun import (
    Semidegree,
    Valuation,
    integer_prefix,
    leading_coefficient,
    semidegree_eval,
    validate_positive,
    valuation_eval,
)
from algcontract.errors import ZeroPolynomial
from algcontract.exact import BiLaurent, XiPoly
from algcontract.puiseux import (
    DEGREEWISE,
    GenericSeries,
    PuiseuxPoly,
    generic_series_from_germ,
    to_global,
)

from conftest import F1, PHI1, PHI2, U, V

F = Fraction
X, Y = U, V


def degreewise_generic(terms, xi):
    return GenericSeries(PuiseuxPoly([(F(e), F(c)) for e, c in terms], DEGREEWISE), F(xi))


NU1 = Valuation(generic_series_from_germ(PHI1, 8))
DELTA2 = Semidegree(to_global(generic_series_from_germ(PHI2, 8)))
LAST2 = Y ** 5 - X ** 2 - BiLaurent.monomial(5, -1, 4)


def test_mode_checks():
    with pytest.raises(ValueError):
        Valuation(DELTA2.series)
    with pytest.raises(ValueError):
        Semidegree(NU1.series)


@pytest.mark.parametrize("f, expected", [(U, 5), (F1, 23), (V, 3)])
def test_valuation_examples(f, expected):
    assert valuation_eval(NU1, f) == expected


@pytest.mark.parametrize("f, expected", [(X, 5), (Y, 2), (Y ** 5 - X ** 2, 3), (LAST2, 2)])
def test_semidegree_examples(f, expected):
    assert semidegree_eval(DELTA2, f) == expected


def test_unit_values():
    assert NU1.unit_value == 5
    assert DELTA2.unit_value == 5


def test_zero_polynomial_has_no_value():
    with pytest.raises(ZeroPolynomial):
        semidegree_eval(DELTA2, BiLaurent())


def test_leading_coefficient_of_last_key_form_carries_xi():
    assert leading_coefficient(DELTA2, LAST2) == XiPoly((0, 5))
    assert leading_coefficient(DELTA2, Y) == XiPoly.const(1)


def test_integer_prefix_split():
    sigma = degreewise_generic([(2, 1), (F(1, 2), 3), (-1, 1)], -2)
    h, rest = integer_prefix(sigma)
    assert h == [(F(2), F(1))]
    assert rest == [(F(1, 2), F(3)), (F(-1), F(1))]


@pytest.mark.parametrize("series, expected", [
    *[(degreewise_generic([(F(2, 5), 1)], F(2 - r, 5)), True) for r in range(1, 10)],
    (degreewise_generic([(2, 1), (-1, 1)], -2), False),
    (degreewise_generic([], 1), True),
    (degreewise_generic([], 0), False),
    (degreewise_generic([(F(-1, 2), 1)], -1), False),
])
def test_validate_positive(series, expected):
    assert validate_positive(Semidegree(series)) is expected


# --- degree-like axioms -----------------------------------------------------

_semidegrees = st.sampled_from([
    DELTA2,
    Semidegree(to_global(generic_series_from_germ(PHI1, 3))),
    Semidegree(degreewise_generic([(2, 1), (F(1, 2), -3)], F(-1, 2))),
    Semidegree(degreewise_generic([(F(2, 3), 1), (F(1, 3), 2)], -1)),
])
_laurent = st.dictionaries(
    st.tuples(st.integers(-2, 3), st.integers(0, 3)),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    min_size=1, max_size=5,
).map(BiLaurent).filter(lambda f: not f.is_zero())


@settings(max_examples=250, deadline=None)
@given(_semidegrees, _laurent, _laurent)
def test_semidegree_is_multiplicative_and_ultrametric(delta, f, g):
    df, dg = semidegree_eval(delta, f), semidegree_eval(delta, g)
    assert semidegree_eval(delta, f * g) == df + dg
    if not (f + g).is_zero():
        assert semidegree_eval(delta, f + g) <= max(df, dg)
    if df != dg and not (f + g).is_zero():
        assert semidegree_eval(delta, f + g) == max(df, dg)


@settings(max_examples=100, deadline=None)
@given(_laurent.filter(lambda f: all(a >= 0 for a, _ in f.terms)),
       _laurent.filter(lambda f: all(a >= 0 for a, _ in f.terms)))
def test_valuation_is_multiplicative_and_ultrametric(f, g):
    vf, vg = valuation_eval(NU1, f), valuation_eval(NU1, g)
    assert valuation_eval(NU1, f * g) == vf + vg
    if not (f + g).is_zero():
        assert valuation_eval(NU1, f + g) >= min(vf, vg)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), _laurent.filter(lambda f: all(a >= 0 for a, _ in f.terms)))
def test_local_and_global_values_correspond(r, f):
    """``nu(f) = -delta(f(1/x, y/x))`` for the two model germs."""
    for phi in (PHI1, PHI2):
        sigma = generic_series_from_germ(phi, r)
        nu, delta = Valuation(sigma), Semidegree(to_global(sigma))
        image = f.swap_roles(lambda a, b: (-a - b, b))
        assert valuation_eval(nu, f) == -semidegree_eval(delta, image)
