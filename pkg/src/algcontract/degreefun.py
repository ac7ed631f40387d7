"""Divisorial valuations (local) and semidegrees (global) given by generic series.

A valuation is evaluated by substituting its generic series for ``v`` and
reading off the lowest exponent; a semidegree reads off the highest.  Both
are normalised so that the value of the first coordinate equals the
exponent denominator of the series, which keeps every value integral.
"""
from dataclasses import dataclass

from .errors import ZeroPolynomial
from .puiseux import DEGREEWISE, LOCAL, GenericSeries, substitute


@dataclass(frozen=True)
class Valuation:
    """Valuation ``nu`` on ``Q[u, v]`` centred at the origin."""

    series: GenericSeries

    def __post_init__(self):
        if self.series.mode != LOCAL:
            raise ValueError("a valuation needs a local generic series")

    @property
    def unit_value(self):
        return self.series.scale


@dataclass(frozen=True)
class Semidegree:
    """Semidegree ``delta`` on ``Q[x, 1/x, y]`` given by a degree-wise generic series."""

    series: GenericSeries

    def __post_init__(self):
        if self.series.mode != DEGREEWISE:
            raise ValueError("a semidegree needs a degree-wise generic series")

    @property
    def unit_value(self):
        return self.series.scale


def _value(f, series, pick):
    if f.is_zero():
        raise ZeroPolynomial("value of the zero polynomial")
    expansion = substitute(f, series)
    exponent = pick(expansion)
    value = exponent * series.scale
    assert value.denominator == 1
    return int(value)


def valuation_eval(nu, f):
    """``nu(u) * ord_u f(u, sigma(u))``."""
    return _value(f, nu.series, min)


def semidegree_eval(delta, f):
    """``delta(x) * deg_x f(x, sigma(x))``."""
    return _value(f, delta.series, max)


def leading_coefficient(delta, f):
    """Leading XiPoly of ``f`` under the series of ``delta`` (degree-wise) or ``nu`` (local)."""
    expansion = substitute(f, delta.series)
    pick = max if delta.series.mode == DEGREEWISE else min
    return expansion[pick(expansion)]


def integer_prefix(series):
    """Split the fixed part into the integer-exponent prefix ``h`` and the rest.

    Returns ``(h_terms, rest_terms)`` where ``h_terms`` are the leading terms
    with integer exponents before the first fractional one.
    """
    terms = list(series.fixed.terms)
    cut = 0
    while cut < len(terms) and terms[cut][0].denominator == 1:
        cut += 1
    return terms[:cut], terms[cut:]


def validate_positive(delta):
    """True when ``delta`` is positive on every non-constant polynomial.

    The integer prefix ``h(x)`` must be a polynomial and the first exponent
    after it (the first fractional exponent, or the xi-exponent when the
    fixed part is all integral) must be positive.
    """
    h, rest = integer_prefix(delta.series)
    if any(e < 0 for e, _ in h):
        return False
    nxt = rest[0][0] if rest else delta.series.xi_exponent
    return nxt > 0
