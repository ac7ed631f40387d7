from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from algcontract.errors import InvalidPairs, NotContractibleFamily, NotCoprime, S1Fails
from algcontract.keyforms import verify_one_place
from algcontract.puiseux import (
    intersection_multiplicity,
    minimal_polynomial,
    puiseux_pairs,
    truncate_below,
)
from algcontract.resolution import alpha, is_contractible
from algcontract.semigroups import (
    ALWAYS,
    MIXED,
    NEVER,
    check_conditions,
    classify,
    construct_delta_curve,
    frobenius_two_gen,
    intersection_generators,
    never_algebraic_family,
    semigroup_member,
    virtual_poles,
)

from conftest import PHI2, PHI_TWO_PAIRS, U, V

X, Y = U, V
TWO = [(3, 5), (23, 2)]


def single_pairs(max_p):
    return [(q, p) for p in range(2, max_p + 1) for q in range(1, p) if gcd(p, q) == 1]


@pytest.mark.parametrize("pairs, expected", [
    ([(3, 5)], (5, 3)),
    (TWO, (10, 6, 47)),
    ([(1, 2)], (2, 1)),
])
def test_intersection_generators(pairs, expected):
    assert intersection_generators(pairs) == expected


@pytest.mark.parametrize("phi", [PHI2, PHI_TWO_PAIRS])
def test_generators_match_intersection_with_approximate_roots(phi):
    """``m_0 = (C.u)``, ``m_1 = (C.v)`` and ``m_k`` is the intersection with the
    curve cut out by the series truncated before the k-th characteristic exponent."""
    pairs = puiseux_pairs(phi)
    m = intersection_generators(pairs)
    assert intersection_multiplicity(phi, U) == m[0]
    assert intersection_multiplicity(phi, V) == m[1]
    for k, e in enumerate(pairs.characteristic_exponents()[1:], start=2):
        approx = minimal_polynomial(truncate_below(phi, e))
        assert intersection_multiplicity(phi, approx) == m[k]


@pytest.mark.parametrize("pairs, r, mtilde, generic, ltilde, ptilde", [
    ([(3, 5)], 8, (5, 2), 2, 1, 1),
    ([(3, 5)], 0, (5,), 2, 0, 5),
    (TWO, 1, (10, 4, 3), 5, 2, 1),
])
def test_virtual_poles(pairs, r, mtilde, generic, ltilde, ptilde):
    vp = virtual_poles(pairs, r)
    assert (vp.mtilde, vp.generic, vp.ltilde, vp.ptilde) == (mtilde, generic, ltilde, ptilde)


@pytest.mark.parametrize("q, p", single_pairs(7))
def test_generic_pole_matches_alpha(q, p):
    for r in range(0, p * (p - q)):
        vp = virtual_poles([(q, p)], r)
        excess = p * p - alpha([(q, p)], r)
        assert vp.generic == (excess if r else Fraction(excess, p))


def test_generic_pole_two_pairs():
    for r in range(0, 6):
        vp = virtual_poles(TWO, r)
        excess = 100 - alpha(TWO, r)
        assert vp.generic == (excess if r else Fraction(excess, 2))


@pytest.mark.parametrize("n, gens, expected", [
    (10, [5], [2]),
    (6, [10, 4], None),
    (3, [5, 2], None),
    (0, [3], [0]),
    (-1, [3], None),
])
def test_semigroup_member(n, gens, expected):
    assert semigroup_member(n, gens) == expected


@given(st.integers(0, 200), st.lists(st.integers(1, 30), min_size=1, max_size=4))
def test_semigroup_member_witness_is_valid(n, gens):
    witness = semigroup_member(n, gens)
    if witness is not None:
        assert sum(c * g for c, g in zip(witness, gens)) == n
        assert all(c >= 0 for c in witness)
    else:
        # brute force over bounded coefficient boxes
        def reachable(v, i):
            if v == 0:
                return True
            if i == len(gens):
                return False
            return any(reachable(v - k * gens[i], i + 1) for k in range(v // gens[i] + 1))
        assert not reachable(n, 0)


def test_conditions_examples():
    c, = check_conditions(virtual_poles([(3, 5)], 8), [(3, 5)]).conditions
    assert c.s1 and c.s1_witness == (2,)
    assert not c.s2 and c.s2_counterexample == 3
    c, = check_conditions(virtual_poles([(3, 5)], 5), [(3, 5)]).conditions
    assert c.s1 and c.s2
    report = check_conditions(virtual_poles(TWO, 1), TWO)
    assert report.conditions[1].k == 2 and not report.conditions[1].s1


@pytest.mark.parametrize("pairs, r, kind", [
    ([(3, 5)], 8, MIXED),
    (TWO, 1, NEVER),
    ([(3, 5)], 0, ALWAYS),
    *[([(3, 5)], r, ALWAYS) for r in range(0, 8)],
    ([(3, 5)], 9, MIXED),
])
def test_classify(pairs, r, kind):
    assert classify(pairs, r).kind == kind


def test_classify_refuses_non_contractible():
    with pytest.raises(NotContractibleFamily):
        classify([(3, 5)], 10)


@pytest.mark.parametrize("q, p", single_pairs(10))
def test_corollary_sweep(q, p):
    for r in range(0, p * (p - q)):
        mixed = classify([(q, p)], r).kind == MIXED
        assert mixed == (2 * p - q < r < p * (p - q)), (q, p, r)
    assert frobenius_two_gen(p, p - q) == p * (p - q) - p - (p - q)


@pytest.mark.parametrize("pairs, r, expected", [
    ([(3, 5)], 3, Y ** 5 - X ** 2),
    ([(1, 2)], 1, Y ** 2 - X),
])
def test_construct(pairs, r, expected):
    assert construct_delta_curve(pairs, r) == expected


def test_construct_reports_s1_failure():
    with pytest.raises(S1Fails, match="S1 fails at k=2"):
        construct_delta_curve(TWO, 1)


@pytest.mark.parametrize("q, p", single_pairs(7))
def test_constructed_curves_have_one_place(q, p):
    for r in range(1, p * (p - q)):
        vp = virtual_poles([(q, p)], r)
        report = check_conditions(vp, [(q, p)])
        if not report.all_s1():
            continue
        f = construct_delta_curve([(q, p)], r)
        assert verify_one_place(f, p, p - q), (q, p, r)


def test_frobenius_examples():
    assert frobenius_two_gen(5, 2) == 3
    assert frobenius_two_gen(2, 3) == 1
    assert frobenius_two_gen(1, 4) == -1
    with pytest.raises(NotCoprime):
        frobenius_two_gen(4, 6)


@given(st.integers(1, 25), st.integers(1, 25))
def test_frobenius_is_largest_gap(a, b):
    if gcd(a, b) != 1:
        return
    fr = frobenius_two_gen(a, b)
    if fr >= 0:
        assert semigroup_member(fr, [a, b]) is None
    assert all(semigroup_member(n, [a, b]) is not None for n in range(fr + 1, fr + a + b + 2))


def test_never_algebraic_family():
    assert never_algebraic_family(3, 5, 2) == 23
    assert never_algebraic_family(1, 2, 2) == 7
    assert never_algebraic_family(2, 3, 2) == 11
    with pytest.raises(InvalidPairs):
        never_algebraic_family(5, 3, 2)


def test_never_algebraic_family_postcondition():
    """Where the family is contractible at r = 1 it is never algebraic."""
    for q1, p1 in single_pairs(7):
        for p2 in range(2, 5):
            q2 = never_algebraic_family(q1, p1, p2)
            if gcd(q2, p2) != 1:
                continue
            pairs = [(q1, p1), (q2, p2)]
            if is_contractible(pairs, 1):
                assert classify(pairs, 1).kind == NEVER, pairs
                assert not check_conditions(virtual_poles(pairs, 1), pairs).conditions[1].s1
