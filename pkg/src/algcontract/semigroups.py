"""Virtual poles, the semigroup conditions and the three-way classification.

All quantities here depend only on the Puiseux pairs and ``r``; no series
coefficients are involved.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import InvalidPairs, NotContractibleFamily, NotCoprime, S1Fails
from .exact import BiLaurent
from .puiseux import PuiseuxPairs
from .resolution import alpha, is_contractible

ALWAYS = "AlwaysAlgebraic"
NEVER = "NeverAlgebraic"
MIXED = "Mixed"

CLI_NAMES = {ALWAYS: "always-algebraic", NEVER: "never-algebraic", MIXED: "mixed"}


def _pairs(pairs):
    if not isinstance(pairs, PuiseuxPairs):
        pairs = PuiseuxPairs(tuple(pairs))
    if not pairs.l:
        raise InvalidPairs("at least one Puiseux pair is required")
    return pairs


def _prod(values):
    out = 1
    for v in values:
        out *= v
    return out


def intersection_generators(pairs):
    """``m_0, ..., m_l``: intersection numbers of the germ with its approximate roots."""
    pairs = _pairs(pairs)
    ps = [p for _, p in pairs]
    qs = [q for q, _ in pairs]
    p = pairs.polydromy
    out = [p]
    for k in range(1, len(ps) + 1):
        total = Fraction(qs[k - 1], _prod(ps[:k]))
        for i in range(1, k):
            coeff = _prod(ps[i - 1:k - 1]) - _prod(ps[i:k - 1])
            total += coeff * Fraction(qs[i - 1], _prod(ps[:i]))
        value = p * total
        assert value.denominator == 1
        out.append(int(value))
    return tuple(out)


@dataclass(frozen=True)
class VirtualPoles:
    m: tuple
    mtilde: tuple
    generic: int
    ltilde: int
    ptilde: int

    def with_generic(self):
        """``mtilde`` followed by the generic pole."""
        return self.mtilde + (self.generic,)

    def to_dict(self):
        return {
            "m": list(self.m),
            "mtilde": list(self.mtilde),
            "generic": self.generic,
            "ltilde": self.ltilde,
            "ptilde": self.ptilde,
        }


def virtual_poles(pairs, r):
    """Virtual poles of the configuration after ``r`` extra blow-ups."""
    pairs = _pairs(pairs)
    if r < 0:
        raise ValueError("r must be non-negative")
    ps = [p for _, p in pairs]
    l = len(ps)
    m = intersection_generators(pairs)
    ltilde = l - 1 if r == 0 else l
    mtilde = [m[0]]
    for k in range(1, ltilde + 1):
        head = _prod(p * p for p in ps[:k - 1])
        mtilde.append(head * _prod(ps[k - 1:]) - m[k])
    excess = pairs.polydromy ** 2 - alpha(pairs, r)
    if r == 0:
        if excess % ps[-1]:
            raise ArithmeticError("generic pole is not integral")
        generic = excess // ps[-1]
    else:
        generic = excess
    ptilde = ps[-1] if ltilde == l - 1 else 1
    return VirtualPoles(m, tuple(mtilde), generic, ltilde, ptilde)


def semigroup_member(n, gens):
    """Non-negative coefficients ``c`` with ``sum(c_i * gens_i) == n``, or None."""
    gens = list(gens)
    if not gens or any(g <= 0 for g in gens):
        raise ValueError("generators must be positive")
    if n < 0:
        return None
    # last[v] = index of a generator used to reach v, -1 for unreachable
    last = [-1] * (n + 1)
    last[0] = len(gens)
    for v in range(1, n + 1):
        for i, g in enumerate(gens):
            if g <= v and last[v - g] != -1:
                last[v] = i
                break
    if last[n] == -1:
        return None
    coeffs = [0] * len(gens)
    v = n
    while v:
        i = last[v]
        coeffs[i] += 1
        v -= gens[i]
    return coeffs


@dataclass(frozen=True)
class ConditionResult:
    k: int
    s1: bool
    s1_witness: tuple
    s2: bool
    s2_counterexample: int

    def to_dict(self):
        return {
            "k": self.k,
            "s1": self.s1,
            "s1_witness": list(self.s1_witness) if self.s1_witness is not None else None,
            "s2": self.s2,
            "s2_counterexample": self.s2_counterexample,
        }


@dataclass(frozen=True)
class SemigroupReport:
    conditions: tuple

    def all_s1(self):
        return all(c.s1 for c in self.conditions)

    def all_s2(self):
        return all(c.s2 for c in self.conditions)

    def to_list(self):
        return [c.to_dict() for c in self.conditions]


def check_conditions(vp, pairs):
    """Evaluate S1-k and S2-k for ``1 <= k <= ltilde``.

    S2-k asks that every group element in the open interval
    ``(mtilde_{k+1}, p_k mtilde_k)`` lie in the semigroup; the smallest
    failure is reported.
    """
    pairs = _pairs(pairs)
    if vp.generic <= 0:
        raise NotContractibleFamily("the generic virtual pole is not positive")
    ps = [p for _, p in pairs]
    poles = vp.with_generic()
    out = []
    for k in range(1, vp.ltilde + 1):
        target = ps[k - 1] * poles[k]
        witness = semigroup_member(target, poles[:k])
        gens = poles[:k + 1]
        step = reduce(gcd, gens)
        counter = None
        start = poles[k + 1] + 1
        first = start + (-start) % step
        for n in range(first, target, step):
            if semigroup_member(n, gens) is None:
                counter = n
                break
        out.append(ConditionResult(k, witness is not None,
                                   tuple(witness) if witness is not None else None,
                                   counter is None, counter))
    return SemigroupReport(tuple(out))


@dataclass(frozen=True)
class Classification:
    kind: str
    report: SemigroupReport

    @property
    def cli_name(self):
        return CLI_NAMES[self.kind]


def classify(pairs, r):
    """Always, never, or sometimes algebraically contractible.

    Raises NotContractibleFamily when the configuration is not contractible
    at all (the generic pole is not positive or the germ is not tangent).
    """
    pairs = _pairs(pairs)
    vp = virtual_poles(pairs, r)
    if not is_contractible(pairs, r):
        raise NotContractibleFamily("the configuration is not analytically contractible")
    report = check_conditions(vp, pairs)
    if not report.all_s1():
        kind = NEVER
    elif not report.all_s2():
        kind = MIXED
    else:
        kind = ALWAYS
    return Classification(kind, report)


def construct_delta_curve(pairs, r):
    """Polynomial built from the virtual poles with all free coefficients set to 1.

    ``f_0 = x``, ``f_1 = y`` and ``f_{k+1} = f_k^{p_k} - prod_j f_j^{beta_{k,j}}``
    where ``p_k mtilde_k = sum_j beta_{k,j} mtilde_j``; returns the last ``f``.
    """
    pairs = _pairs(pairs)
    vp = virtual_poles(pairs, r)
    ps = [p for _, p in pairs]
    forms = [BiLaurent.x(), BiLaurent.y()]
    for k in range(1, vp.ltilde + 1):
        beta = semigroup_member(ps[k - 1] * vp.mtilde[k], vp.mtilde[:k])
        if beta is None:
            raise S1Fails(k)
        term = BiLaurent.const(1)
        for f, e in zip(forms, beta):
            if e:
                term = term * f ** e
        forms.append(forms[k] ** ps[k - 1] - term)
    return forms[-1]


def frobenius_two_gen(a, b):
    """Largest integer outside the semigroup generated by coprime ``a`` and ``b``."""
    if a < 1 or b < 1:
        raise ValueError("generators must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"{a} and {b} are not coprime")
    return a * b - a - b


def never_algebraic_family(q1, p1, p2):
    """``q_2`` making S1-2 fail at ``r = 1`` for pairs ``(q1, p1), (q2, p2)``."""
    if p1 < 2 or p2 < 2 or not 0 < q1 < p1 or gcd(q1, p1) != 1:
        raise InvalidPairs("need p1, p2 >= 2 and 0 < q1 < p1 coprime to p1")
    return (p1 - q1) * (p2 - 1) * (p1 - 1) + p1 * (p2 + 1)
