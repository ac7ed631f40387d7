"""Shared fixtures: the two model germs and hand-drawn reference dual graphs.

The reference graphs use their own vertex names; tests compare them with the
computed graphs up to weighted isomorphism.
"""
from fractions import Fraction
from pathlib import Path

import pytest

from algcontract.exact import BiLaurent
from algcontract.puiseux import LOCAL, PuiseuxPoly

F = Fraction
CURVES = Path(__file__).resolve().parent.parent / "curves"


def local_series(*terms):
    """``local_series((3, 5, 1), (2, 1, 1))`` is ``u^(3/5) + u^2``."""
    return PuiseuxPoly([(F(n, d), F(c)) for n, d, c in terms], LOCAL)


U, V = BiLaurent.x(), BiLaurent.y()

PHI1 = local_series((3, 5, 1))
PHI2 = local_series((3, 5, 1), (2, 1, 1))
PHI_TWO_PAIRS = local_series((3, 5, 1), (23, 10, 1))
F1 = V ** 5 - U ** 3
F2 = (V - U ** 2) ** 5 - U ** 3


def weighted_graph(weights, edges):
    """Weighted graph as ``(weights dict, set of frozenset edges)``."""
    return dict(weights), {frozenset(e) for e in edges}


def drawn_graph(r):
    """Reference graph for ``r >= 1``: a -2 string of length ``r - 1`` hangs off the middle."""
    weights = {"L": -1, "A": -3, "M": -2, "D1": -2, "D2": -3}
    edges = [("L", "A"), ("A", "M"), ("M", "D1"), ("D1", "D2")]
    prev = "M"
    for i in range(r - 1):
        name = f"S{i}"
        weights[name] = -2
        edges.append((prev, name))
        prev = name
    return weighted_graph(weights, edges)


def drawn_graph_r0():
    return weighted_graph({"L": -1, "A": -3, "D1": -2, "D2": -3}, [("L", "A"), ("D1", "D2")])


def drawn_graph_r8():
    """Reference graph for either model germ at r = 8 (twelve vertices)."""
    return drawn_graph(8)


def drawn_graph_two_pairs():
    weights = {"L": -1, "A": -3, "M": -2, "D1": -2, "D2": -3,
               "T": -3, "T1": -2, "T2": -2}
    edges = [("L", "A"), ("A", "M"), ("M", "D1"), ("D1", "D2")]
    prev = "M"
    for i in range(7):
        weights[f"S{i}"] = -2
        edges.append((prev, f"S{i}"))
        prev = f"S{i}"
    edges += [(prev, "T"), ("T", "T1"), ("T1", "T2")]
    return weighted_graph(weights, edges)


@pytest.fixture
def curves_dir():
    return CURVES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, _line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(RESULTS):
        terminalreporter.write_line(_line(i, RESULTS[i]))
