"""Key polynomials, key forms and algebraicity verdicts for at most one Puiseux pair.

Local key polynomials ``U_0, U_1, ...`` live in ``Q[u, v]`` and are built by
repeatedly cancelling the leading term of ``U_j(u, sigma(u))``.  Global key
forms live in ``Q[x, 1/x, y]`` and are read off the conjugate product of the
fractional part of a degree-wise generic series.  Every produced sequence is
checked against the recursion identities before it is returned.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .degreefun import (
    Semidegree,
    Valuation,
    integer_prefix,
    semidegree_eval,
    validate_positive,
    valuation_eval,
)
from .errors import (
    NotPolynomialKeyForms,
    NotPositive,
    NotTangent,
    NotWeierstrass,
    TooManyPairs,
)
from .exact import BiLaurent, WeightedDegree, is_polynomial, weighted_value
from .puiseux import (
    DEGREEWISE,
    LOCAL,
    PuiseuxPairs,
    PuiseuxPoly,
    generic_series_from_germ,
    minimal_polynomial,
    newton_puiseux_truncated,
    polydromy_order,
    puiseux_pairs,
    substitute,
    to_global,
)

LOCAL_NAMES = ("u", "v")
GLOBAL_NAMES = ("x", "y")


@dataclass(frozen=True)
class KeyStep:
    """Recursion data ``f_{j+1} = f_j^n - theta * prod_i f_i^{m_i}``."""

    n: int
    m: tuple
    theta: Fraction


# placeholder step attached to the last form, which has no successor
_TERMINAL = KeyStep(1, (), Fraction(1))


@dataclass(frozen=True)
class KeyFormSeq:
    """Key polynomials (``convention="order"``) or key forms (``"degree"``).

    ``steps[j]`` links ``forms[j + 1]`` to ``forms[j]`` for ``j >= 1``;
    ``steps[0]`` is None because ``f_1 = y`` is not produced by recursion,
    and the last entry is a placeholder.
    """

    forms: tuple
    values: tuple
    steps: tuple
    convention: str = "degree"
    names: tuple = GLOBAL_NAMES
    shift: BiLaurent = None
    notes: tuple = ()

    @property
    def last(self):
        return self.forms[-1]

    def texts(self):
        return [f.to_text(self.names) for f in self.forms]

    def __len__(self):
        return len(self.forms)


@dataclass(frozen=True)
class OnePairNormalForm:
    """Normalised shape ``h(x) + a_0 x^{q/p} + ... + xi x^{(q-s)/p}`` of a semidegree."""

    h: BiLaurent
    a: tuple
    p: int
    q: int
    s: int
    d_delta: int
    phi: BiLaurent
    g: tuple


@dataclass(frozen=True)
class AlgebraicityVerdict:
    contractible: bool
    algebraic: bool = None
    witness: dict = field(default_factory=dict)


# ----------------------------------------------------------------------
# recursion checks
# ----------------------------------------------------------------------

def _product(forms, m):
    out = BiLaurent.const(1)
    for f, e in zip(forms, m):
        if e:
            out = out * (f ** e)
    return out


def check_recursion(seq):
    """Verify both recursion properties as exact identities; raise AssertionError otherwise."""
    forms, values = seq.forms, seq.values
    if forms[0] != BiLaurent.x() or forms[1] != BiLaurent.y():
        raise AssertionError("key sequence must start with the two coordinates")
    for j in range(1, len(forms) - 1):
        step = seq.steps[j]
        if len(step.m) != j + 1:
            raise AssertionError(f"step {j} has the wrong number of exponents")
        for i in range(1, j + 1):
            n_i = seq.steps[i].n
            if not 0 <= step.m[i] < n_i:
                raise AssertionError(f"exponent m[{j},{i}] out of range")
        weight = sum(mi * w for mi, w in zip(step.m, values))
        if weight != step.n * values[j]:
            raise AssertionError(f"step {j}: weights do not balance")
        if seq.convention == "degree":
            ok = values[j + 1] < step.n * values[j]
        else:
            ok = values[j + 1] > step.n * values[j]
        if not ok:
            raise AssertionError(f"step {j}: value does not move past n*omega")
        rebuilt = forms[j] ** step.n - _product(forms, step.m).scale(step.theta)
        if rebuilt != forms[j + 1]:
            raise AssertionError(f"step {j}: recursion identity fails")
        if not step.theta:
            raise AssertionError(f"step {j}: theta is zero")
    return True


# ----------------------------------------------------------------------
# local key polynomials
# ----------------------------------------------------------------------

def _pair_of(phi):
    if phi.is_zero() or phi.leading()[0] >= 1:
        raise NotTangent("the germ is not tangent to the line u = 0")
    pairs = puiseux_pairs(phi)
    if len(pairs) > 1:
        raise TooManyPairs("key polynomials are only built for one Puiseux pair")
    return pairs


def local_key_polynomials(phi, r):
    """Key polynomials of the valuation of the last exceptional curve.

    For ``r = 0`` these are ``u, v``; otherwise the chain continues with
    ``v^p - a_0^p u^q`` and then subtracts one monomial at a time until the
    generic coefficient reaches the leading term.
    """
    pairs = _pair_of(phi)
    (q, p), = pairs.pairs
    sigma = generic_series_from_germ(phi, r)
    nu = Valuation(sigma)
    u, v = BiLaurent.x(), BiLaurent.y()
    forms, steps = [u, v], [None]
    a0 = phi.leading()[1]
    if r > 0:
        steps.append(KeyStep(p, (q, 0), a0 ** p))
        forms.append(v ** p - u ** q * a0 ** p)
        while True:
            expansion = substitute(forms[-1], sigma)
            low = min(expansion)
            lead = expansion[low]
            if not lead.is_constant():
                break
            value = int(low * p)
            m1 = (value * pow(q, -1, p)) % p
            m0 = (value - m1 * q) // p
            if m0 < 0:
                raise AssertionError("leading value is not reachable by a monomial")
            theta = lead.coeffs[0] / a0 ** m1
            steps.append(KeyStep(1, (m0, m1) + (0,) * (len(forms) - 2), theta))
            forms.append(forms[-1] - u ** m0 * v ** m1 * theta)
    steps.append(_TERMINAL)
    values = tuple(valuation_eval(nu, f) for f in forms)
    seq = KeyFormSeq(tuple(forms), values, tuple(steps), convention="order",
                     names=LOCAL_NAMES)
    check_recursion(seq)
    check_termination(seq, sigma)
    return seq


# ----------------------------------------------------------------------
# global key forms
# ----------------------------------------------------------------------

def one_pair_normal_form(delta):
    """Split a degree-wise generic series into ``h`` and its one-pair fractional part.

    Returns None in the integral case (``h(x) + xi x^r``).
    """
    h_terms, rest = integer_prefix(delta.series)
    h = BiLaurent({(int(e), 0): c for e, c in h_terms})
    if not rest:
        return None
    first = rest[0][0]
    p, q = first.denominator, first.numerator
    frac = PuiseuxPoly(rest, DEGREEWISE)
    xi = delta.series.xi_exponent
    if polydromy_order(frac) != p or (xi * p).denominator != 1:
        raise TooManyPairs("the semidegree has more than one Puiseux pair")
    s = int(q - xi * p)
    coeffs = dict(rest)
    a = tuple(coeffs.get(Fraction(q - i, p), Fraction(0)) for i in range(s))
    phi = minimal_polynomial(frac)
    y, x = BiLaurent.y(), BiLaurent.x()
    a0 = a[0]
    rest_sum = y ** p - x ** q * a0 ** p - phi
    d_delta = p * q - s
    g = []
    for (al, be), c in rest_sum.terms.items():
        w = al * p + be * q
        if w > d_delta:
            g.append((w, BiLaurent.monomial(c, al, be)))
    g.sort(key=lambda t: -t[0])
    return OnePairNormalForm(h, a, p, q, s, d_delta, phi, tuple(m for _, m in g))


def key_forms(delta):
    """Key forms of a positive semidegree with at most one Puiseux pair.

    In the fractional case the forms after ``y - h(x)`` are written in the
    shifted coordinate ``y' = y - h(x)`` and then expanded back; the shift is
    recorded in ``KeyFormSeq.shift``.
    """
    if not validate_positive(delta):
        raise NotPositive("the semidegree is not positive on non-constant polynomials")
    x, y = BiLaurent.x(), BiLaurent.y()
    h_terms, _ = integer_prefix(delta.series)
    forms, steps = [x, y], [None]
    current = y
    for e, c in h_terms:
        current = current - x ** int(e) * c
        steps.append(KeyStep(1, (int(e),) + (0,) * (len(forms) - 1), c))
        forms.append(current)
    normal = one_pair_normal_form(delta)
    shift = None
    if normal is not None:
        pivot = len(forms) - 1
        yp = forms[-1]
        shift = y - yp if h_terms else None
        p, q, a0 = normal.p, normal.q, normal.a[0]

        def mono(al, be, c):
            m = [0] * len(forms)
            m[0] = al
            m[pivot] = be
            return tuple(m), c

        m, theta = mono(q, 0, a0 ** p)
        steps.append(KeyStep(p, m, theta))
        forms.append(yp ** p - x ** q * a0 ** p)
        for g in normal.g:
            ((al, be), c), = g.terms.items()
            m, theta = mono(al, be, c)
            steps.append(KeyStep(1, m, theta))
            forms.append(forms[-1] - x ** al * yp ** be * c)
    values = tuple(semidegree_eval(delta, f) for f in forms)
    steps.append(_TERMINAL)
    seq = KeyFormSeq(tuple(forms), values, tuple(steps), convention="degree",
                     names=GLOBAL_NAMES, shift=shift)
    check_recursion(seq)
    check_termination(seq, delta.series)
    return seq


def check_termination(seq, series):
    """The generic coefficient must appear in the leading term of the last form."""
    expansion = substitute(seq.last, series)
    pick = max if seq.convention == "degree" else min
    if expansion[pick(expansion)].is_constant():
        raise AssertionError("last form is not terminal: its leading coefficient is free of xi")
    return True


def local_to_global_keyform(U, p):
    """``x^p * U(1/x, y/x)``: each ``u^a v^b`` becomes ``x^{p-a-b} y^b``."""
    return U.swap_roles(lambda a, b: (p - a - b, b))


# ----------------------------------------------------------------------
# the truncation criterion and verdicts
# ----------------------------------------------------------------------

def ftilde(f, q, p, r):
    """Monomials ``c u^a v^b`` of ``f`` with ``a p + b q < p q + r``."""
    if f.degree_y() != p or f.coeff_y(p) != BiLaurent.const(1):
        raise NotWeierstrass(f"expected a polynomial monic of degree {p} in v")
    bound = p * q + r
    return BiLaurent({(a, b): c for (a, b), c in f.terms.items() if a * p + b * q < bound})


def _germ_data(curve, r):
    """Return ``(phi, f, pairs)`` for a local series or a Weierstrass polynomial."""
    if isinstance(curve, PuiseuxPoly):
        phi = curve
        if phi.mode != LOCAL:
            raise ValueError("expected a local series")
        pairs = puiseux_pairs(phi)
        if len(pairs) > 1:
            raise TooManyPairs("key-form route covers one Puiseux pair only")
        f = minimal_polynomial(phi) if pairs.l else None
        return phi, f, pairs
    f = curve
    n = f.degree_y()
    head = newton_puiseux_truncated(f, 1)
    if head.is_zero():
        pairs = puiseux_pairs(newton_puiseux_truncated(f, n + 1))
        return None, f, pairs
    e = head.leading()[0]
    if e.denominator != n:
        raise TooManyPairs("key-form route covers one Puiseux pair only")
    q, p = e.numerator, e.denominator
    phi = newton_puiseux_truncated(f, Fraction(q + r, p) if r else Fraction(q + 1, p))
    return phi, f, PuiseuxPairs(((q, p),))


def decide_algebraic(curve, r):
    """Contractibility and algebraicity verdict for a germ with at most one pair.

    Two independent routes are computed and must agree: the degree bound on
    the truncation ``f~`` and the polynomiality of the last global key form.
    """
    from .resolution import is_contractible

    phi, f, pairs = _germ_data(curve, r)
    if not pairs.l or not is_contractible(pairs, r):
        return AlgebraicityVerdict(False, None, {})
    (q, p), = pairs.pairs
    ft = ftilde(f, q, p, r)
    by_ftilde = ft.is_zero() or ft.total_degree() <= p
    delta = Semidegree(to_global(generic_series_from_germ(phi, r)))
    seq = key_forms(delta)
    by_keyforms = is_polynomial(seq.last)
    if by_ftilde != by_keyforms:
        raise AssertionError("truncation route and key-form route disagree")
    witness = {
        "ftilde": ft.to_text(LOCAL_NAMES),
        "last_key_form": seq.last.to_text(GLOBAL_NAMES),
    }
    if not by_keyforms:
        bad = sorted((k for k in seq.last.terms if k[0] < 0), key=lambda k: (-k[1], -k[0]))[0]
        witness["monomial"] = BiLaurent.monomial(seq.last.coefficient(*bad), *bad).to_text()
    return AlgebraicityVerdict(True, by_keyforms, witness)


def wp_weights(seq):
    """Weights ``(1, omega_0, ..., omega_k)`` of the ambient weighted projective space."""
    if not all(is_polynomial(f) for f in seq.forms):
        raise NotPolynomialKeyForms("some key form has a negative power of x")
    return (1,) + tuple(seq.values)


def verify_one_place(f, p, q):
    """Certificate that ``f`` has one place at infinity (one-pair case).

    ``f`` must be a polynomial, monic of degree ``p`` in ``y``, of degree ``q``
    in ``x`` with a constant leading coefficient, and have weighted degree
    ``p q`` for weights ``p`` on ``x`` and ``q`` on ``y``.
    """
    if f.is_zero() or not is_polynomial(f) or p < 1 or q < 1:
        return False
    if f.degree_y() != p or f.coeff_y(p) != BiLaurent.const(1):
        return False
    if f.degree_x() != q or [b for (a, b) in f.terms if a == q] != [0]:
        return False
    return weighted_value(f, WeightedDegree(p, q)) == p * q
