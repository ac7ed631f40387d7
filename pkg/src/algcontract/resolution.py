"""Blow-up simulation, dual graphs and the negative-definiteness test.

The germ is followed through its parametrisation ``t -> (t^p, phi(t^p))``.
Both local coordinates are kept as exact rational functions of ``t``; at
every step only their vanishing orders and leading coefficients are needed
to choose the chart, so the simulation never approximates.
"""
from dataclasses import dataclass
from fractions import Fraction
import json

from .errors import InvalidPairs, NotSymmetric, NotTangent
from .puiseux import LOCAL, PuiseuxPairs, polydromy_order

L_NAME = "L"


# ----------------------------------------------------------------------
# closed formulas
# ----------------------------------------------------------------------

def _check_pairs(pairs):
    if not isinstance(pairs, PuiseuxPairs):
        pairs = PuiseuxPairs(tuple(pairs))
    if not pairs.l:
        raise InvalidPairs("at least one Puiseux pair is required")
    return pairs


def alpha(pairs, r):
    """Intersection multiplicity at the origin of the germ with a generic member curve."""
    pairs = _check_pairs(pairs)
    if r < 0:
        raise ValueError("r must be non-negative")
    ps = [p for _, p in pairs]
    qs = [q for q, _ in pairs]
    l = len(ps)
    p = pairs.polydromy

    def prod(i, j):
        out = 1
        for k in range(i, j):
            out *= ps[k]
        return out

    total = Fraction(0)
    for i in range(l - 1):
        total += (prod(i, l) - prod(i + 1, l)) * Fraction(qs[i], prod(0, i + 1))
    total += (ps[-1] - 1) * Fraction(qs[-1], p)
    value = p * total + qs[-1] + r
    assert value.denominator == 1
    return int(value)


def is_contractible(pairs, r):
    """Tangency (first characteristic exponent below 1) and ``alpha < p^2``."""
    pairs = _check_pairs(pairs)
    q1, p1 = pairs[0]
    return q1 < p1 and alpha(pairs, r) < pairs.polydromy ** 2


# ----------------------------------------------------------------------
# rational functions of t
# ----------------------------------------------------------------------

class _RatFun:
    """``num / den`` with polynomial numerator and denominator (dict power -> coeff)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = {k: c for k, c in num.items() if c}
        self.den = den if den is not None else {0: Fraction(1)}
        self._strip()

    def _strip(self):
        if not self.num:
            self.den = {0: Fraction(1)}
            return
        shift = min(min(self.num), min(self.den))
        if shift:
            self.num = {k - shift: c for k, c in self.num.items()}
            self.den = {k - shift: c for k, c in self.den.items()}

    def is_zero(self):
        return not self.num

    def order(self):
        if not self.num:
            return None
        return min(self.num) - min(self.den)

    def lead(self):
        return self.num[min(self.num)] / self.den[min(self.den)]

    def __truediv__(self, other):
        return _RatFun(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def minus_const(self, c):
        num = dict(self.num)
        for k, d in self.den.items():
            num[k] = num.get(k, 0) - c * d
        return _RatFun(num, dict(self.den))


def _pmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: c for k, c in out.items() if c}


# ----------------------------------------------------------------------
# clusters and dual graphs
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Center:
    """One blow-up centre: multiplicity of the strict transform and the curves through it."""

    index: int
    multiplicity: int
    curves: tuple
    phase: str

    @property
    def proximate_to(self):
        return tuple(c for c in self.curves if c != L_NAME)


@dataclass(frozen=True)
class Cluster:
    centers: tuple
    resolution_length: int
    r: int

    def __len__(self):
        return len(self.centers)


@dataclass(frozen=True)
class DualGraph:
    """Vertex-weighted graph of the boundary curves; ``excluded`` is the last exceptional curve."""

    vertices: tuple
    edges: tuple
    excluded: str = None

    def names(self):
        return [n for n, _ in self.vertices]

    def weights(self):
        return dict(self.vertices)

    def to_dict(self):
        return {
            "vertices": [{"name": n, "weight": w} for n, w in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def components(self):
        """Connected components as lists of vertex names."""
        adj = {n: set() for n in self.names()}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen, comps = set(), []
        for n in self.names():
            if n in seen:
                continue
            stack, comp = [n], []
            seen.add(n)
            while stack:
                cur = stack.pop()
                comp.append(cur)
                for nb in sorted(adj[cur]):
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            comps.append(sorted(comp, key=self.names().index))
        return comps


def _exceptional(k):
    return f"E{k}"


def resolve(phi, r):
    """Blow up the origin until ``C`` and ``L`` form a normal crossing, then ``r`` more times.

    ``L`` is the line ``u = 0``; the germ is ``v = phi(u)``.
    """
    if phi.mode != LOCAL or phi.is_zero():
        raise ValueError("resolve expects a nonzero local series")
    if phi.leading()[0] >= 1:
        raise NotTangent("the germ is not tangent to the line u = 0")
    if r < 0:
        raise ValueError("r must be non-negative")
    p = polydromy_order(phi)
    a = _RatFun({p: Fraction(1)})
    b = _RatFun({int(e * p): c for e, c in phi.terms})
    on_a, on_b = L_NAME, None
    centers = []
    resolved_at = None
    k = 0
    while True:
        oa, ob = a.order(), b.order()
        if resolved_at is None and _is_normal_crossing(oa, ob, on_a, on_b):
            resolved_at = k
        if resolved_at is not None and k - resolved_at == r:
            break
        k += 1
        through = tuple(c for c in (on_a, on_b) if c is not None)
        mult = oa if ob is None else min(oa, ob)
        centers.append(Center(k, mult, through, "resolution" if resolved_at is None else "extra"))
        new = _exceptional(k)
        if ob is None or oa < ob:
            # chart (a, b/a): {b=0} stays, {a=0} leaves, E is {a=0}
            b = b / a
            on_a = new
        elif oa > ob:
            a = a / b
            on_b = new
        else:
            # tangent direction off both axes: only E passes through
            c = b.lead() / a.lead()
            b = (b / a).minus_const(c)
            on_a, on_b = new, None
    return Cluster(tuple(centers), resolved_at, r)


def _is_normal_crossing(oa, ob, on_a, on_b):
    if on_a is not None and on_b is not None:
        return False
    if on_a is not None:
        return oa == 1
    if on_b is not None:
        return ob == 1
    return False


def dual_graph(cluster):
    """Dual graph of ``L~`` and all exceptional curves except the last one."""
    weights = {L_NAME: 1}
    edges = set()
    order = [L_NAME]
    for c in cluster.centers:
        new = _exceptional(c.index)
        for name in c.curves:
            weights[name] -= 1
        for i, s in enumerate(c.curves):
            for t in c.curves[i + 1:]:
                edges.discard(frozenset((s, t)))
            edges.add(frozenset((s, new)))
        weights[new] = -1
        order.append(new)
    excluded = order[-1] if len(order) > 1 else None
    keep = [n for n in order if n != excluded]
    rank = {n: i for i, n in enumerate(keep)}
    kept_edges = sorted(
        (tuple(sorted(e, key=rank.get)) for e in edges if excluded not in e),
        key=lambda e: (rank[e[0]], rank[e[1]]),
    )
    return DualGraph(tuple((n, weights[n]) for n in keep), tuple(kept_edges), excluded)


def intersection_matrix(graph):
    names = graph.names()
    idx = {n: i for i, n in enumerate(names)}
    m = [[0] * len(names) for _ in names]
    for n, w in graph.vertices:
        m[idx[n]][idx[n]] = w
    for a, b in graph.edges:
        m[idx[a]][idx[b]] = 1
        m[idx[b]][idx[a]] = 1
    return m


def leading_minors(matrix):
    """Exact leading principal minors ``det M_1, ..., det M_n``."""
    return [_det_fraction([row[:k] for row in matrix[:k]]) for k in range(1, len(matrix) + 1)]


def _det_fraction(matrix):
    n = len(matrix)
    work = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if work[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            work[k], work[piv] = work[piv], work[k]
            det = -det
        det *= work[k][k]
        for i in range(k + 1, n):
            f = work[i][k] / work[k][k]
            if f:
                for j in range(k, n):
                    work[i][j] -= f * work[k][j]
    return det


def is_negative_definite(matrix):
    """Sylvester's criterion: ``(-1)^k det M_k > 0`` for every leading minor."""
    n = len(matrix)
    for i in range(n):
        if len(matrix[i]) != n:
            raise NotSymmetric("matrix is not square")
        for j in range(i):
            if matrix[i][j] != matrix[j][i]:
                raise NotSymmetric("matrix is not symmetric")
    return all((-1) ** (k + 1) * d > 0 for k, d in enumerate(leading_minors(matrix)))


def emit_dot(graph):
    """Deterministic Graphviz text; each node is labelled by name and self-intersection."""
    lines = ["graph dual {"]
    for n, w in graph.vertices:
        lines.append(f'  "{n}" [label="{n}", xlabel="{w}"];')
    for a, b in graph.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
