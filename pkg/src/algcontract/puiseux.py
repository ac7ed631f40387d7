"""Finite Puiseux series (local and degree-wise) over Q.

A *local* series ``v = phi(u)`` has positive exponents listed in increasing
order; a *degree-wise* series ``y = psi(x)`` lists its exponents in
decreasing order and is read as an expansion at infinity.  Only Puiseux
polynomials are ever stored: the generic tail is a single xi-term carried by
:class:`GenericSeries`.
"""
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    CurveContainsBranch,
    InvalidPairs,
    NoCharacteristicExponent,
    NotTangent,
    NotUnibranch,
    NotWeierstrass,
    UnsupportedCoefficientField,
    ZeroPolynomial,
    ZeroSeries,
)
from .exact import BiLaurent, XiPoly, as_rational, resultant

LOCAL = "local"
DEGREEWISE = "degreewise"


class PuiseuxPoly:
    """Finite sum of terms ``c * t**e`` with rational exponents."""

    __slots__ = ("terms", "mode")

    def __init__(self, terms=(), mode=LOCAL):
        if mode not in (LOCAL, DEGREEWISE):
            raise ValueError(f"unknown mode {mode!r}")
        acc = {}
        for e, c in terms:
            e, c = as_rational(e), as_rational(c)
            acc[e] = acc.get(e, 0) + c
        items = [(e, c) for e, c in acc.items() if c]
        items.sort(reverse=(mode == DEGREEWISE))
        if mode == LOCAL and items and items[0][0] <= 0:
            raise ValueError("local series need positive exponents")
        self.terms = tuple(items)
        self.mode = mode

    @classmethod
    def from_dict(cls, mapping, mode=LOCAL):
        return cls(mapping.items(), mode)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def exponents(self):
        return [e for e, _ in self.terms]

    def coefficient(self, e):
        return dict(self.terms).get(as_rational(e), Fraction(0))

    def leading(self):
        """First term in series order (lowest order locally, highest degree-wise)."""
        if not self.terms:
            raise ZeroSeries("empty series has no leading term")
        return self.terms[0]

    def __add__(self, other):
        if other.mode != self.mode:
            raise ValueError("mixed series modes")
        return PuiseuxPoly(self.terms + other.terms, self.mode)

    def __eq__(self, other):
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self.terms == other.terms and self.mode == other.mode

    def __hash__(self):
        return hash((self.terms, self.mode))

    def to_text(self, var=None):
        var = var or ("u" if self.mode == LOCAL else "x")
        if not self.terms:
            return "0"
        return _series_text(self.terms, var)

    def __repr__(self):
        return f"PuiseuxPoly({self.to_text()!r}, mode={self.mode!r})"


def _exp_text(e):
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def _series_text(terms, var, xi_exponent=None):
    parts = []
    for e, c in terms:
        mono = "1" if e == 0 else (var if e == 1 else f"{var}^{_exp_text(e)}")
        mag = abs(c)
        body = mono if mag == 1 else (str(mag) if e == 0 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    if xi_exponent is not None:
        e = xi_exponent
        mono = "xi" if e == 0 else ("xi*" + (var if e == 1 else f"{var}^{_exp_text(e)}"))
        parts.append(("+", mono))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def polydromy_order(phi):
    """Smallest ``p`` with every exponent in ``(1/p) Z``; 1 for the empty series."""
    p = 1
    for e, _ in phi.terms:
        p = lcm(p, e.denominator)
    return p


@dataclass(frozen=True)
class PuiseuxPairs:
    """Characteristic pairs ``(q_k, p_k)`` of a local series."""

    pairs: tuple = ()

    def __post_init__(self):
        pairs = tuple((int(q), int(p)) for q, p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        prev = Fraction(0)
        denom = 1
        for q, p in pairs:
            if q <= 0 or p < 2:
                raise InvalidPairs(f"pair ({q},{p}) needs q > 0 and p >= 2")
            if gcd(q, p) != 1:
                raise InvalidPairs(f"pair ({q},{p}) is not coprime")
            denom *= p
            e = Fraction(q, denom)
            if e <= prev:
                raise InvalidPairs("characteristic exponents must increase")
            prev = e

    @classmethod
    def parse(cls, text):
        """Parse ``"3/5,23/2"`` into pairs ``((3, 5), (23, 2))``."""
        out = []
        try:
            for chunk in text.split(","):
                chunk = chunk.strip()
                if not chunk:
                    continue
                q, p = chunk.split("/")
                out.append((int(q), int(p)))
        except ValueError as exc:
            raise InvalidPairs(f"cannot parse pairs {text!r}") from exc
        return cls(tuple(out))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, i):
        return self.pairs[i]

    @property
    def l(self):
        return len(self.pairs)

    @property
    def polydromy(self):
        out = 1
        for _, p in self.pairs:
            out *= p
        return out

    def characteristic_exponents(self):
        exps, denom = [], 1
        for q, p in self.pairs:
            denom *= p
            exps.append(Fraction(q, denom))
        return exps

    def reconstruct(self):
        """The Puiseux polynomial with unit coefficients at the characteristic exponents."""
        return PuiseuxPoly(((e, 1) for e in self.characteristic_exponents()), LOCAL)

    def as_list(self):
        return [list(p) for p in self.pairs]


def _characteristic_steps(terms):
    """Yield ``(exponent, q, p)`` each time a term raises the exponent denominator."""
    denom = 1
    for e, _ in terms:
        if (e * denom).denominator != 1:
            new = lcm(denom, e.denominator)
            yield e, int(e * new), new // denom
            denom = new


def puiseux_pairs(phi):
    """Puiseux pairs of a local series; empty when all exponents are integers."""
    if phi.mode != LOCAL:
        raise ValueError("puiseux_pairs expects a local series")
    return PuiseuxPairs(tuple((q, p) for _, q, p in _characteristic_steps(phi.terms)))


def truncate_below(phi, omega):
    """Terms of order strictly below ``omega`` (strictly above, degree-wise)."""
    omega = as_rational(omega)
    if phi.mode == LOCAL:
        keep = [(e, c) for e, c in phi.terms if e < omega]
    else:
        keep = [(e, c) for e, c in phi.terms if e > omega]
    return PuiseuxPoly(keep, phi.mode)


class GenericSeries:
    """A Puiseux polynomial followed by one generic term ``xi * t**xi_exponent``."""

    __slots__ = ("fixed", "xi_exponent", "scale")

    def __init__(self, fixed, xi_exponent):
        xi_exponent = as_rational(xi_exponent)
        if fixed.mode == LOCAL:
            if xi_exponent <= 0 or any(e >= xi_exponent for e in fixed.exponents()):
                raise ValueError("local xi-exponent must exceed every fixed exponent")
        elif any(e <= xi_exponent for e in fixed.exponents()):
            raise ValueError("degree-wise xi-exponent must be below every fixed exponent")
        self.fixed = fixed
        self.xi_exponent = xi_exponent
        self.scale = lcm(polydromy_order(fixed), xi_exponent.denominator)

    @property
    def mode(self):
        return self.fixed.mode

    def specialize(self, value):
        """Replace xi by a rational value, giving a plain Puiseux polynomial."""
        extra = ((self.xi_exponent, as_rational(value)),)
        return PuiseuxPoly(self.fixed.terms + extra, self.mode)

    def __eq__(self, other):
        if not isinstance(other, GenericSeries):
            return NotImplemented
        return self.fixed == other.fixed and self.xi_exponent == other.xi_exponent

    def __hash__(self):
        return hash((self.fixed, self.xi_exponent))

    def to_text(self, var=None):
        var = var or ("u" if self.mode == LOCAL else "x")
        return _series_text(self.fixed.terms, var, self.xi_exponent)

    def __repr__(self):
        return f"GenericSeries({self.to_text()!r})"


def generic_series_from_germ(phi, r):
    """Generic series of the last exceptional divisor after ``r`` extra blow-ups.

    The fixed part is ``phi`` truncated below ``(q + r)/p`` where ``p`` is the
    polydromy order and ``q/p`` the last characteristic exponent; the generic
    term sits at that exponent.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    steps = list(_characteristic_steps(phi.terms))
    if not steps:
        raise NoCharacteristicExponent("series has integer exponents only")
    p = polydromy_order(phi)
    q_last = steps[-1][0] * p
    xi_exp = (q_last + r) / p
    return GenericSeries(truncate_below(phi, xi_exp), xi_exp)


def to_global(sigma):
    """Image of a local generic series under ``u = 1/x``, ``y = x * v``."""
    if sigma.mode != LOCAL:
        raise ValueError("to_global expects a local series")
    lowest = min(sigma.fixed.exponents() + [sigma.xi_exponent])
    if lowest >= 1:
        raise NotTangent("the germ is not tangent to the line u = 0")
    fixed = PuiseuxPoly(((1 - e, c) for e, c in sigma.fixed.terms), DEGREEWISE)
    return GenericSeries(fixed, 1 - sigma.xi_exponent)


# ----------------------------------------------------------------------
# substitution
# ----------------------------------------------------------------------

def _mul_series(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=1024)
def _power(base, k, one):
    """``k``-th power of the series ``base`` (sorted tuple of (exp, coeff)); shared, read only."""
    if k == 0:
        return {Fraction(0): one}
    return _mul_series(_power(base, k - 1, one), dict(base))


def _expand(f, base, one):
    """Expand ``f(t, Y)`` where ``Y`` is the series ``base`` (dict exp -> coeff)."""
    if f.is_zero():
        raise ZeroPolynomial("substitution into the zero polynomial")
    # key forms of one series are evaluated many times: reuse its powers
    key = tuple(sorted(base.items()))
    out = {}
    for (a, b), c in f.terms.items():
        for e, coeff in _power(key, b, one).items():
            k = e + a
            out[k] = out.get(k, 0) + coeff * c
    return {e: c for e, c in out.items() if c}


def substitute(f, sigma):
    """Expand ``f(t, sigma(t))`` with XiPoly coefficients, keyed by exponent.

    Accepts a :class:`GenericSeries` or a plain :class:`PuiseuxPoly` (the
    latter yields constant XiPolys).
    """
    if isinstance(sigma, GenericSeries):
        base = {e: XiPoly.const(c) for e, c in sigma.fixed.terms}
        base[sigma.xi_exponent] = base.get(sigma.xi_exponent, XiPoly()) + XiPoly.xi()
    else:
        base = {e: XiPoly.const(c) for e, c in sigma.terms}
    return _expand(f, base, XiPoly.const(1))


def substitute_exact(f, phi):
    """Expand ``f(t, phi(t))`` for a plain Puiseux polynomial (rational coefficients)."""
    return _expand(f, dict(phi.terms), Fraction(1))


# ----------------------------------------------------------------------
# conjugate products
# ----------------------------------------------------------------------

def _power_sums(phi, p, count):
    """Power sums of the ``p`` conjugates of ``phi`` as x-only BiLaurents."""
    base = dict(phi.terms)
    current = {Fraction(0): Fraction(1)}
    sums = []
    for _ in range(count):
        current = _mul_series(current, base)
        sums.append(BiLaurent({(int(e), 0): p * c for e, c in current.items() if e.denominator == 1}))
    return sums


def minimal_polynomial(fixed, method="newton"):
    """Monic polynomial in ``y`` whose roots are the conjugates of ``fixed``.

    The result lives in ``Q[x, 1/x][y]`` (``x`` plays ``u`` for local input)
    and has y-degree equal to the polydromy order.  ``method="newton"`` uses
    power sums of the conjugates (only integer-exponent parts survive the
    sum over roots of unity) and Newton's identities; ``method="resultant"``
    computes ``Res_t(t^p - x, y - psi(t))`` with ``psi(t) = fixed(t^p)``.
    """
    if fixed.is_zero():
        raise ZeroSeries("minimal polynomial of the zero series")
    p = polydromy_order(fixed)
    if method == "resultant":
        return _minpoly_resultant(fixed, p)
    if method != "newton":
        raise ValueError(f"unknown method {method!r}")
    sums = _power_sums(fixed, p, p)
    elem = [BiLaurent.const(1)]
    for k in range(1, p + 1):
        acc = BiLaurent()
        for i in range(1, k + 1):
            term = elem[k - i] * sums[i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        elem.append(acc.scale(Fraction(1, k)))
    y = BiLaurent.y()
    out = BiLaurent()
    for k in range(p + 1):
        term = elem[k] * y ** (p - k)
        out = out + term if k % 2 == 0 else out - term
    return out


def _minpoly_resultant(fixed, p):
    shifted = [(int(e * p), c) for e, c in fixed.terms]
    lowest = min(k for k, _ in shifted)
    clear = max(0, -lowest)
    degree = clear + max(max(k for k, _ in shifted), 0)
    g = [BiLaurent() for _ in range(degree + 1)]
    g[clear] = g[clear] + BiLaurent.y()
    for k, c in shifted:
        g[clear + k] = g[clear + k] - BiLaurent.const(c)
    f = [BiLaurent.monomial(-1, 1, 0)] + [BiLaurent()] * (p - 1) + [BiLaurent.const(1)]
    res = resultant(f, g)
    lead = res.coeff_y(p)
    if len(lead) != 1:
        raise ArithmeticError("unexpected leading coefficient in conjugate product")
    ((a, _), c), = lead.terms.items()
    return res.shift_x(-a).scale(1 / c)


def intersection_multiplicity(phi, g):
    """Vanishing order of ``g(u, v)`` along ``t -> (t^p, phi(t^p))``."""
    if phi.mode != LOCAL:
        raise ValueError("intersection multiplicity needs a local series")
    if g.is_zero():
        raise CurveContainsBranch("the zero polynomial contains every branch")
    p = polydromy_order(phi)
    base = {int(e * p): c for e, c in phi.terms}
    powers = [{0: Fraction(1)}]
    for _ in range(g.degree_y()):
        prev, nxt = powers[-1], {}
        for e1, c1 in prev.items():
            for e2, c2 in base.items():
                nxt[e1 + e2] = nxt.get(e1 + e2, 0) + c1 * c2
        powers.append({e: c for e, c in nxt.items() if c})
    out = {}
    for (a, b), c in g.terms.items():
        for e, coeff in powers[b].items():
            k = e + a * p
            out[k] = out.get(k, 0) + c * coeff
    orders = [k for k, c in out.items() if c]
    if not orders:
        raise CurveContainsBranch("g vanishes identically on the branch")
    return min(orders)


# ----------------------------------------------------------------------
# Newton-Puiseux
# ----------------------------------------------------------------------

def _rational_root(value, d):
    """Rational ``c`` with ``c**d == value``, or None."""
    value = as_rational(value)
    if value == 0:
        return Fraction(0)
    sign = 1
    if value < 0:
        if d % 2 == 0:
            return None
        sign, value = -1, -value
    num, den = _int_root(value.numerator, d), _int_root(value.denominator, d)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def _int_root(n, d):
    if n < 2:
        return n
    r = round(n ** (1.0 / d)) if n.bit_length() < 1000 else None
    if r is None:
        lo, hi = 1, 1 << (n.bit_length() // d + 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** d < n:
                lo = mid + 1
            else:
                hi = mid
        r = lo
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** d == n:
            return cand
    return None


def _rational_roots(coeffs):
    """Rational roots (with multiplicity) of a univariate polynomial, low-to-high coefficients."""
    import sympy

    z = sympy.Symbol("z")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * z ** i for i, c in enumerate(coeffs))
    roots = sympy.Poly(expr, z, domain="QQ").ground_roots()
    return {Fraction(int(r.p), int(r.q)): m for r, m in roots.items()}


def _lower_hull(points):
    """Lower convex hull of ``(j, i)`` points sorted by ``j``."""
    best = {}
    for i, j in points:
        if j not in best or i < best[j]:
            best[j] = i
    pts = sorted((j, i) for j, i in best.items())
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (j1, i1), (j2, i2) = hull[-2], hull[-1]
            if (j2 - j1) * (pt[1] - i1) - (i2 - i1) * (pt[0] - j1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _binomial_powers(c, n):
    """``(c + w)^k`` for ``k = 0..n`` as dicts ``{power of w: coeff}``."""
    out = [{0: Fraction(1)}]
    for _ in range(n):
        prev, nxt = out[-1], {}
        for j, coeff in prev.items():
            nxt[j] = nxt.get(j, 0) + coeff * c
            nxt[j + 1] = nxt.get(j + 1, 0) + coeff
        out.append(nxt)
    return out


def _transform(G, d, m, c, shift):
    """``G(s^d, s^m (c + w)) / s^shift``."""
    pw = _binomial_powers(c, G.degree_y())
    out = {}
    for (i, j), coeff in G.terms.items():
        base = d * i + m * j - shift
        for k, b in pw[j].items():
            key = (base, k)
            out[key] = out.get(key, 0) + coeff * b
    return BiLaurent(out)


def _newton_options(G, all_slopes):
    """Candidate leading terms ``(m, d, c, mu)`` for the roots ``w(s)`` of ``G``.

    With ``all_slopes`` every edge of the Newton polygon is used, otherwise
    only the edges giving roots of positive order.
    """
    hull = _lower_hull(list(G.terms))
    options = []
    for (j1, i1), (j2, i2) in zip(hull, hull[1:]):
        num, den = i1 - i2, j2 - j1
        if not all_slopes and num <= 0:
            break
        g = gcd(abs(num), den)
        m, d = num // g, den // g
        value = d * i1 + m * j1
        coeffs = [Fraction(0)] * (j2 - j1 + 1)
        for j in range(j1, j2 + 1):
            if (value - m * j) % d == 0:
                coeffs[j - j1] = G.coefficient((value - m * j) // d, j)
        roots = _rational_roots(coeffs)
        groups = {}
        for z, mult in roots.items():
            lam = z ** d
            if lam not in groups or (z > 0 and groups[lam][0] < 0):
                groups[lam] = (z, mult)
        accounted = sum(d * mult for _, mult in groups.values())
        if accounted != j2 - j1:
            raise UnsupportedCoefficientField(
                "a leading Puiseux coefficient is not rational")
        for lam in sorted(groups):
            z, mult = groups[lam]
            options.append((m, d, z, mult, value))
    return options


def newton_puiseux_truncated(f, bound):
    """Puiseux root of a unibranch Weierstrass polynomial, up to ``bound`` (excluded).

    ``f`` is a BiLaurent in ``(u, v)`` monic in ``v`` with ``f(0, 0) = 0``.
    """
    bound = as_rational(bound)
    _check_weierstrass(f)
    G = f
    ram, acc = 1, 0
    terms = []
    while True:
        if G.coeff_y(0).is_zero():
            if _order_at_zero(G) > 1:
                raise NotUnibranch("repeated exact root")
            break
        options = _newton_options(G, all_slopes=False)
        if len(options) != 1:
            raise NotUnibranch("the Newton polygon splits into several branches")
        m, d, c, mult, value = options[0]
        hull = _lower_hull(list(G.terms))
        if hull[0][0] != 0 or _order_at_zero(G) != mult * d:
            raise NotUnibranch("the Newton polygon splits into several branches")
        exponent = Fraction(d * acc + m, ram * d)
        if exponent >= bound:
            break
        terms.append((exponent, c))
        G = _transform(G, d, m, c, value)
        acc, ram = d * acc + m, ram * d
    return PuiseuxPoly(terms, LOCAL)


def _order_at_zero(G):
    """Multiplicity of ``w = 0`` as a root of ``G(0, w)``."""
    js = [j for (i, j) in G.terms if i == 0]
    if not js:
        return 0
    return min(js)


def _check_weierstrass(f):
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    n = f.degree_y()
    if n < 1 or f.coeff_y(n) != BiLaurent.const(1):
        raise NotWeierstrass("polynomial is not monic in the second variable")
    if any(a < 0 for a, _ in f.terms):
        raise NotWeierstrass("negative exponent in the first variable")
    if f.constant_term() != 0:
        raise NotWeierstrass("the germ does not pass through the origin")


def puiseux_branches(F, bound=None, all_slopes=False):
    """All roots ``w(s)`` of ``F(s, w)`` up to conjugacy, as Puiseux polynomials.

    Returns a list of ``(series, multiplicity)``; multiplicity exceeds 1 only
    when ``bound`` stops the expansion before distinct branches separate.
    Exponents may be negative when ``all_slopes`` is set.
    """
    if F.is_zero():
        raise ZeroPolynomial("zero polynomial")
    out = []
    _branch_rec(F, 1, 0, [], bound, all_slopes, out, 1)
    return out


def _branch_rec(G, ram, acc, terms, bound, all_slopes, out, mult):
    while G.coeff_y(0).is_zero():
        out.append((list(terms), 1))
        G = BiLaurent({(i, j - 1): c for (i, j), c in G.terms.items()})
        if not all_slopes and _order_at_zero(G) == 0:
            return
        if G.degree_y() <= 0:
            return
    if not all_slopes and _order_at_zero(G) == 0:
        return
    for m, d, c, mu, value in _newton_options(G, all_slopes):
        exponent = Fraction(d * acc + m, ram * d)
        if bound is not None and exponent >= bound:
            out.append((list(terms), mu))
            continue
        _branch_rec(_transform(G, d, m, c, value), ram * d, d * acc + m,
                    terms + [(exponent, c)], bound, False, out, mu)


def degreewise_factorization(f, bound=None):
    """Branches at infinity of ``f(x, y)``: ``f = lc * x^m * prod Phi_i``.

    The leading y-coefficient of ``f`` must be the monomial ``lc * x^m``.

    Returns ``(m, lc, branches)`` where each branch is a degree-wise Puiseux
    polynomial (one per conjugacy class), truncated to exponents above
    ``bound``.  The default bound is one below the lowest x-exponent of
    ``f / (lc x^m)`` (and below 0); with it the branches are exact whenever ``f`` is a
    product of conjugate products of Puiseux polynomials supported there.
    """
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    lead = f.coeff_y(f.degree_y())
    if len(lead) != 1:
        raise NotWeierstrass("leading y-coefficient must be a monomial in x")
    ((m, _), lc), = lead.terms.items()
    D = f.degree_x()
    F = BiLaurent({(D - a, b): c for (a, b), c in f.terms.items()})
    if bound is None:
        bound = min(f.min_xexp() - m, 0) - 1
    local_bound = -as_rational(bound)
    found = puiseux_branches(F, local_bound, all_slopes=True)
    branches = []
    for terms, mult in found:
        series = PuiseuxPoly(((-e, c) for e, c in terms), DEGREEWISE)
        branches.extend([series] * mult)
    return m, lc, branches
