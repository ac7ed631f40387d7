"""Exact arithmetic: rationals, bivariate Laurent polynomials, polynomials
in the generic indeterminate xi, weighted degrees and resultants.

Every value here is immutable.  Coefficients are :class:`fractions.Fraction`.
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import ZeroPolynomial

Rational = Fraction


def as_rational(value):
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class BiLaurent:
    """Finite sum of terms ``c * x**a * y**b`` with ``a`` in Z, ``b >= 0``.

    The same type carries polynomials in ``(u, v)``; only the display names
    change.  Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (a, b), c in dict(terms).items():
                if b < 0:
                    raise ValueError("negative exponent in the second variable")
                c = as_rational(c)
                if c:
                    clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def monomial(cls, coeff, a, b):
        return cls({(a, b): coeff})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # access -----------------------------------------------------------
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in canonical order: descending y-exponent, then x-exponent."""
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))

    def coefficient(self, a, b):
        return self._terms.get((a, b), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree_y(self):
        if not self._terms:
            return -1
        return max(b for _, b in self._terms)

    def degree_x(self):
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(a for a, _ in self._terms)

    def min_xexp(self):
        if not self._terms:
            raise ZeroPolynomial("order of the zero polynomial")
        return min(a for a, _ in self._terms)

    def total_degree(self):
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(a + b for a, b in self._terms)

    def coeff_y(self, b):
        """Coefficient of ``y**b`` as a Laurent polynomial in x alone."""
        return BiLaurent._raw({(a, 0): c for (a, bb), c in self._terms.items() if bb == b})

    def is_constant(self):
        return all(k == (0, 0) for k in self._terms)

    def constant_term(self):
        return self._terms.get((0, 0), Fraction(0))

    # arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, BiLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return BiLaurent.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiLaurent._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiLaurent._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((a, b), c), = self._terms.items()
            if b:
                raise ValueError("y is not invertible")
            return BiLaurent._raw({(a * n, 0): c ** n})
        result = BiLaurent.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return BiLaurent()
        return BiLaurent._raw({k: v * c for k, v in self._terms.items()})

    def shift_x(self, k):
        """Multiply by ``x**k``."""
        return BiLaurent._raw({(a + k, b): c for (a, b), c in self._terms.items()})

    def swap_roles(self, fn):
        """Apply an exponent map ``(a, b) -> (a', b')`` term by term."""
        out = {}
        for (a, b), c in self._terms.items():
            k = fn(a, b)
            out[k] = out.get(k, 0) + c
        return BiLaurent(out)

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiLaurent.const(other)
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # display ----------------------------------------------------------
    def to_text(self, names=("x", "y")):
        if not self._terms:
            return "0"
        xn, yn = names
        parts = []
        for (a, b), c in self.items():
            factors = []
            if b:
                factors.append(yn if b == 1 else f"{yn}^{b}")
            if a:
                factors.append(xn if a == 1 else f"{xn}^{a}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"BiLaurent({self.to_text()!r})"


class XiPoly:
    """Univariate polynomial in the generic indeterminate xi."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs):
        """Build from a list of Fractions without coercion (trailing zeros trimmed)."""
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def xi(cls):
        return cls((0, 1))

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self):
        return len(self.coeffs) - 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __add__(self, other):
        if not isinstance(other, XiPoly):
            other = XiPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return XiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return XiPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, XiPoly) else XiPoly.const(-as_rational(other)))

    def __mul__(self, other):
        if not isinstance(other, XiPoly):
            c = as_rational(other)
            return XiPoly(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return XiPoly()
        if len(other.coeffs) == 1:
            c = other.coeffs[0]
            return XiPoly._raw([a * c for a in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return XiPoly._raw(out)

    __rmul__ = __mul__

    def __call__(self, xi):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * xi + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = XiPoly.const(other)
        if not isinstance(other, XiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "XiPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(str(c) if i == 0 else f"{c}*xi" + (f"^{i}" if i > 1 else ""))
        return "XiPoly(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class WeightedDegree:
    """Monomial weights ``wx`` on the first and ``wy`` on the second variable.

    ``mode`` is ``"degree"`` (maximum over terms) or ``"order"`` (minimum).
    """

    wx: int
    wy: int
    mode: str = "degree"

    def __post_init__(self):
        if self.wx <= 0 or self.wy <= 0:
            raise ValueError("weights must be positive")
        if self.mode not in ("degree", "order"):
            raise ValueError(f"unknown mode {self.mode!r}")

    def monomial_weight(self, a, b):
        return self.wx * a + self.wy * b


def weighted_value(f, w):
    """Weighted degree (or order) of a nonzero BiLaurent."""
    if f.is_zero():
        raise ZeroPolynomial("weighted value of the zero polynomial")
    values = (w.monomial_weight(a, b) for a, b in f.terms)
    return max(values) if w.mode == "degree" else min(values)


def weighted_part(f, w, value):
    """Sum of the terms of ``f`` of weight exactly ``value``."""
    return BiLaurent({k: c for k, c in f.terms.items() if w.monomial_weight(*k) == value})


def is_polynomial(f):
    """True iff no term of ``f`` carries a negative first-variable exponent."""
    return all(a >= 0 for a, _ in f.terms)


# ----------------------------------------------------------------------
# determinants and resultants over a commutative ring
# ----------------------------------------------------------------------

def berkowitz_det(matrix, zero, one):
    """Division-free determinant (Berkowitz), valid over any commutative ring."""
    n = len(matrix)
    if n == 0:
        return one
    # characteristic polynomial coefficients, highest degree first
    poly = [one]
    for r in range(n):
        a = matrix[r][r]
        col = [matrix[i][r] for i in range(r)]
        row = [matrix[r][j] for j in range(r)]
        # toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{r-1} C
        toeplitz = [one, -a]
        vec = col
        for _ in range(r):
            s = zero
            for j in range(r):
                s = s + row[j] * vec[j]
            toeplitz.append(-s)
            vec = [_dot(matrix[i][:r], vec, zero) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = zero
            for j in range(min(i, r) + 1):
                if i - j < len(toeplitz):
                    s = s + toeplitz[i - j] * poly[j]
            new.append(s)
        poly = new
    det = poly[n]
    return det if n % 2 == 0 else -det


def _dot(row, vec, zero):
    s = zero
    for a, b in zip(row, vec):
        s = s + a * b
    return s


def _trim(coeffs):
    cs = [c if isinstance(c, BiLaurent) else BiLaurent.const(c) for c in coeffs]
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def sylvester_matrix(f, g):
    """Sylvester matrix of two polynomials given as coefficient lists (low to high)."""
    f, g = _trim(f), _trim(g)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero = BiLaurent()
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def _multiplication_matrix(f, g):
    """Matrix of multiplication by ``g`` on ``R[t]/(f)`` for monic ``f``."""
    n = len(f) - 1
    zero = BiLaurent()

    def reduce(poly):
        poly = list(poly)
        for d in range(len(poly) - 1, n - 1, -1):
            c = poly[d]
            if c.is_zero():
                continue
            poly[d] = zero
            for i in range(n):
                if not f[i].is_zero():
                    poly[d - n + i] = poly[d - n + i] - c * f[i]
        return (poly + [zero] * n)[:n]

    cols = []
    current = list(g)
    for _ in range(n):
        cols.append(reduce(current))
        current = [zero] + current
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def resultant(f, g, method="auto"):
    """Resultant of two polynomials in a distinguished variable ``t``.

    ``f`` and ``g`` are coefficient sequences (lowest power of ``t`` first)
    whose entries are BiLaurent values or rationals.  The convention is the
    Sylvester determinant, which for monic ``f`` equals the product of ``g``
    over the roots of ``f``.  ``method`` selects ``"sylvester"``,
    ``"companion"`` (monic ``f`` only) or ``"auto"``.
    """
    f, g = _trim(f), _trim(g)
    if not f or not g:
        raise ZeroPolynomial("resultant with the zero polynomial")
    one, zero = BiLaurent.const(1), BiLaurent()
    if len(f) == 1 and len(g) == 1:
        return one
    if len(f) == 1:
        return f[0] ** (len(g) - 1)
    if len(g) == 1:
        return g[0] ** (len(f) - 1)
    monic = f[-1] == one
    if method == "auto":
        method = "companion" if monic else "sylvester"
    if method == "companion":
        if not monic:
            raise ValueError("companion method needs a monic first argument")
        return berkowitz_det(_multiplication_matrix(f, g), zero, one)
    if method == "sylvester":
        return berkowitz_det(sylvester_matrix(f, g), zero, one)
    raise ValueError(f"unknown method {method!r}")
