"""Divisor theory on metric graphs with integer edge lengths.

A metric graph is handled through a *model*: every edge of length L is
subdivided into N*L unit edges, so divisors supported on rational points
with denominator N become divisors on the vertices of an ordinary
multigraph. Linear equivalence on the model is chip-firing equivalence.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

import networkx as nx


class DegreeMismatch(ValueError):
    """Divisors of different degree can never be equivalent."""


@dataclass(frozen=True)
class MetricGraph:
    """Connected loopless multigraph with positive integer edge lengths."""

    vertices: tuple
    edges: tuple  # (u, v, length)

    def __post_init__(self):
        verts = tuple(self.vertices)
        try:
            verts = tuple(sorted(verts))
        except TypeError:
            pass
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex labels")
        vset = set(verts)
        edges = []
        for u, v, length in self.edges:
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
            if u == v:
                raise ValueError(f"loop at {u}")
            if int(length) != length or length < 1:
                raise ValueError(f"edge length {length} is not a positive integer")
            edges.append((u, v, int(length)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(edges))
        if not verts:
            raise ValueError("graph has no vertices")
        if not nx.is_connected(self.to_networkx()):
            raise ValueError("graph is not connected")

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(self.vertices)
        for u, v, length in self.edges:
            G.add_edge(u, v, length=length)
        return G

    @property
    def betti_number(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    def total_length(self) -> int:
        return sum(length for _, _, length in self.edges)


def gamma_r(r: int) -> MetricGraph:
    """Path v1..vr with i parallel unit edges between v(i-1) and vi."""
    if r < 1:
        raise ValueError("r must be at least 1")
    verts = tuple(f"v{i}" for i in range(1, r + 1))
    edges = [(f"v{i - 1}", f"v{i}", 1) for i in range(2, r + 1) for _ in range(i)]
    return MetricGraph(verts, tuple(edges))


def graph_isomorphic(g1: MetricGraph, g2: MetricGraph) -> bool:
    """Multigraph isomorphism preserving the multiset of edge lengths."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    if sorted(e[2] for e in g1.edges) != sorted(e[2] for e in g2.edges):
        return False

    def lengths_match(d1, d2):
        return sorted(a["length"] for a in d1.values()) == sorted(a["length"] for a in d2.values())

    return nx.is_isomorphic(g1.to_networkx(), g2.to_networkx(), edge_match=lengths_match)


# --- divisors --------------------------------------------------------------


class Divisor(Mapping):
    """Finitely supported integer function on vertices; zeros are dropped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        c: dict = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else ((v, 1) for v in coeffs)
        for v, k in items:
            c[v] = c.get(v, 0) + int(k)
        self._c = {v: k for v, k in c.items() if k}

    def __getitem__(self, v):
        return self._c.get(v, 0)

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __contains__(self, v):
        return v in self._c

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._c == Divisor(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        terms = " + ".join(f"{k}*{v}" for v, k in sorted(self._c.items(), key=lambda t: repr(t[0])))
        return f"Divisor({terms or '0'})"

    def __add__(self, other):
        out = dict(self._c)
        for v, k in Divisor(other).items():
            out[v] = out.get(v, 0) + k
        return Divisor(out)

    def __sub__(self, other):
        return self + {v: -k for v, k in Divisor(other).items()}

    def __neg__(self):
        return Divisor({v: -k for v, k in self._c.items()})

    def __mul__(self, n: int):
        return Divisor({v: n * k for v, k in self._c.items()})

    __rmul__ = __mul__

    @property
    def degree(self) -> int:
        return sum(self._c.values())

    def is_effective(self) -> bool:
        return all(k >= 0 for k in self._c.values())

    def support(self) -> set:
        return set(self._c)


# --- models ----------------------------------------------------------------


@dataclass(frozen=True)
class Model:
    """Level-N subdivision of a metric graph as a unit-edge multigraph.

    Original vertices keep their labels and come first; the k-th interior
    point of edge number i is labelled ``("e", i, k)``.
    """

    graph: MetricGraph
    N: int
    vertices: tuple = field(init=False)
    adjacency: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("subdivision level must be at least 1")
        verts = list(self.graph.vertices)
        idx = {v: i for i, v in enumerate(verts)}
        adj: list[dict] = [dict() for _ in verts]

        def link(a, b):
            adj[a][b] = adj[a].get(b, 0) + 1
            adj[b][a] = adj[b].get(a, 0) + 1

        for ei, (u, v, length) in enumerate(self.graph.edges):
            steps = self.N * length
            prev = idx[u]
            for k in range(1, steps):
                verts.append(("e", ei, k))
                adj.append({})
                cur = len(verts) - 1
                link(prev, cur)
                prev = cur
            link(prev, idx[v])
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "adjacency", tuple(adj))

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def valence(self) -> tuple:
        return tuple(sum(a.values()) for a in self.adjacency)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def base(self):
        """Default base vertex: the smallest original vertex label."""
        return self.graph.vertices[0]

    def is_original(self, v) -> bool:
        return self.index[v] < len(self.graph.vertices)

    def as_graph(self) -> MetricGraph:
        """The model itself as a metric graph with unit edges."""
        edges = []
        for a, nbrs in enumerate(self.adjacency):
            for b, mult in nbrs.items():
                if a < b:
                    edges.extend((self.vertices[a], self.vertices[b], 1) for _ in range(mult))
        labels = [v if self.is_original(v) else f"e{v[1]}_{v[2]}" for v in self.vertices]
        rename = dict(zip(self.vertices, labels))
        return MetricGraph(tuple(labels), tuple((rename[u], rename[v], w) for u, v, w in edges))

    # vectors <-> divisors

    def vector(self, D: Mapping) -> list[int]:
        vec = [0] * self.n
        for v, k in D.items():
            try:
                vec[self.index[v]] += k
            except KeyError:
                raise ValueError(f"{v!r} is not a vertex of the model") from None
        return vec

    def divisor(self, vec: Sequence[int]) -> Divisor:
        return Divisor({self.vertices[i]: k for i, k in enumerate(vec) if k})

    def laplacian(self) -> list[list[int]]:
        L = [[0] * self.n for _ in range(self.n)]
        for a, nbrs in enumerate(self.adjacency):
            L[a][a] = self.valence[a]
            for b, mult in nbrs.items():
                L[a][b] -= mult
        return L


def expand_model(g: MetricGraph, N: int = 1) -> Model:
    return Model(g, N)


def _as_model(m) -> Model:
    return m if isinstance(m, Model) else Model(m, 1)


# --- Dhar burning and reduction ---------------------------------------------


def _burn(m: Model, vec: Sequence[int], q: int) -> list[int]:
    """Indices left unburnt when fire starts at ``q``."""
    adj = m.adjacency
    burnt = [False] * m.n
    heat = [0] * m.n
    burnt[q] = True
    queue = deque([q])
    while queue:
        a = queue.popleft()
        for b, mult in adj[a].items():
            if burnt[b]:
                continue
            heat[b] += mult
            if heat[b] > vec[b]:
                burnt[b] = True
                queue.append(b)
    return [i for i in range(m.n) if not burnt[i]]


def dhar_burn(m: Model, D: Mapping, q) -> set:
    """Vertices that survive Dhar's fire from ``q`` (empty iff D is q-reduced)."""
    m = _as_model(m)
    vec = m.vector(D)
    qi = m.index[q]
    bad = [m.vertices[i] for i, k in enumerate(vec) if k < 0 and i != qi]
    if bad:
        raise ValueError(f"divisor is negative away from the base at {bad}")
    return {m.vertices[i] for i in _burn(m, vec, qi)}


def _fire(m: Model, vec: list[int], S: Sequence[int], times: int = 1) -> None:
    inside = set(S)
    for a in S:
        for b, mult in m.adjacency[a].items():
            if b not in inside:
                vec[a] -= times * mult
                vec[b] += times * mult


def _make_effective_off(m: Model, vec: list[int], q: int) -> None:
    """Borrow along BFS layers until every vertex other than q is >= 0.

    Borrowing by the union of layers >= j moves chips from layer j-1 into
    layer j only, so fixing layers from the outside in never breaks an
    already fixed outer layer.
    """
    dist = [-1] * m.n
    dist[q] = 0
    order = deque([q])
    while order:
        a = order.popleft()
        for b in m.adjacency[a]:
            if dist[b] < 0:
                dist[b] = dist[a] + 1
                order.append(b)
    depth = max(dist)
    for j in range(depth, 0, -1):
        layer = [i for i in range(m.n) if dist[i] == j]
        need = 0
        for v in layer:
            if vec[v] < 0:
                inward = sum(mult for b, mult in m.adjacency[v].items() if dist[b] == j - 1)
                need = max(need, -(vec[v] // inward))
        if need:
            # borrowing by the outer layers is firing their complement
            _fire(m, vec, [i for i in range(m.n) if dist[i] < j], need)


def _reduce_vec(m: Model, vec: list[int], q: int) -> list[int]:
    vec = list(vec)
    _make_effective_off(m, vec, q)
    while True:
        S = _burn(m, vec, q)
        if not S:
            return vec
        inside = set(S)
        # fire S as many times as stays legal
        times = None
        for a in S:
            out = sum(mult for b, mult in m.adjacency[a].items() if b not in inside)
            if out:
                t = vec[a] // out
                times = t if times is None else min(times, t)
        _fire(m, vec, S, max(times or 1, 1))


def reduce(m, D: Mapping, q=None) -> Divisor:
    """The unique q-reduced divisor linearly equivalent to ``D``."""
    m = _as_model(m)
    q = m.base if q is None else q
    return m.divisor(_reduce_vec(m, m.vector(D), m.index[q]))


def laplacian_solve(m, b: Mapping) -> Optional[list[int]]:
    """Integer firing vector x with L x = -b, or None.

    Independent of chip-firing: the reduced Laplacian (base row and column
    deleted) is nonsingular for a connected graph, so x is solved exactly
    over the rationals with x[base] = 0 and then tested for integrality.
    Firing x changes the divisor by -L x, so D - D' = L x' with x' = -x.
    """
    m = _as_model(m)
    vec = m.vector(b)
    if sum(vec) != 0:
        return None
    n = m.n
    if n == 1:
        return [0]
    L = m.laplacian()
    rows = [[Fraction(L[i][j]) for j in range(1, n)] + [Fraction(-vec[i])] for i in range(1, n)]
    size = n - 1
    for col in range(size):
        piv = next(r for r in range(col, size) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    sol = [rows[i][size] for i in range(size)]
    if any(x.denominator != 1 for x in sol):
        return None
    return [0] + [int(x) for x in sol]


class LaplacianOracle:
    """Reduced Laplacian inverted once, for many equivalence queries on one model.

    D1 ~ D2 exactly when the inverse carries the reduced difference to an
    integer vector.
    """

    def __init__(self, m):
        m = _as_model(m)
        self.model = m
        n = m.n
        L = m.laplacian()
        size = n - 1
        rows = [[Fraction(L[i][j]) for j in range(1, n)] + [Fraction(int(i == k)) for k in range(1, n)] for i in range(1, n)]
        for col in range(size):
            piv = next(r for r in range(col, size) if rows[r][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            rows[col] = [x / p for x in rows[col]]
            for r in range(size):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        self.inverse = [row[size:] for row in rows]

    def equivalent(self, D1: Mapping, D2: Mapping) -> bool:
        diff = [a - b for a, b in zip(self.model.vector(D1), self.model.vector(D2))]
        if sum(diff):
            return False
        rest = diff[1:]
        return all(sum(c * x for c, x in zip(row, rest)).denominator == 1 for row in self.inverse)


def reduce_naive(m, D: Mapping, q, rng=None) -> Divisor:
    """Reduction by single firings, kept as an independent cross-check.

    Chips are first pulled towards non-base vertices one random in-debt
    vertex at a time (that vertex borrows), then the unburnt set is fired
    once per round.
    """
    m = _as_model(m)
    rng = rng or random.Random(0)
    qi = m.index[q]
    vec = m.vector(D)
    while True:
        debt = [i for i in range(m.n) if i != qi and vec[i] < 0]
        if not debt:
            break
        v = rng.choice(debt)
        # v borrows: everyone else fires once as a set
        _fire(m, vec, [i for i in range(m.n) if i != v], 1)
    while True:
        S = _burn(m, vec, qi)
        if not S:
            return m.divisor(vec)
        _fire(m, vec, S, 1)


def equivalent_by_laplacian(m, D1: Mapping, D2: Mapping) -> bool:
    m = _as_model(m)
    if Divisor(D1).degree != Divisor(D2).degree:
        return False
    return laplacian_solve(m, Divisor(D2) - Divisor(D1)) is not None


def divisors_equivalent(m, D1: Mapping, D2: Mapping) -> bool:
    m = _as_model(m)
    D1, D2 = Divisor(D1), Divisor(D2)
    if D1.degree != D2.degree:
        raise DegreeMismatch(f"degrees {D1.degree} and {D2.degree} differ")
    return reduce(m, D1) == reduce(m, D2)


# --- rank and gonality -------------------------------------------------------


def _has_effective(m: Model, vec: Sequence[int], q: int) -> bool:
    return _reduce_vec(m, vec, q)[q] >= 0


def _rank_at_least_vec(m: Model, vec: list[int], r: int) -> bool:
    if r == 0:
        return _has_effective(m, vec, 0)
    for E in combinations_with_replacement(range(m.n), r):
        w = list(vec)
        for i in E:
            w[i] -= 1
        if not _has_effective(m, w, E[0]):
            return False
    return True


def rank_at_least(m, D: Mapping, r: int) -> bool:
    """Whether |D - E| is non-empty for every effective E of degree r.

    E ranges over divisors supported on model vertices.
    """
    if r < 0:
        return True
    m = _as_model(m)
    return _rank_at_least_vec(m, m.vector(D), r)


def rank(m, D: Mapping) -> int:
    m = _as_model(m)
    vec = m.vector(D)
    r = -1
    while r + 1 <= max(sum(vec), 0) and _rank_at_least_vec(m, vec, r + 1):
        r += 1
    return r


def _rank_one(m: Model, vec: list[int]) -> bool:
    # every vertex v must keep a chip after reducing at v
    return all(_reduce_vec(m, vec, v)[v] >= 1 for v in range(m.n))


@dataclass(frozen=True)
class GonalityResult:
    gonality: int
    witness: Divisor
    level: int


def reduced_effective_divisors(m: Model, degree: int, base=None, support: Optional[Iterable] = None):
    """Effective base-reduced divisors of the given degree, as index tuples.

    Yields sorted index tuples in lexicographic order; restricting
    ``support`` limits which vertices may carry chips.
    """
    q = m.index[m.base if base is None else base]
    pool = sorted(m.index[v] for v in support) if support is not None else range(m.n)
    for combo in combinations_with_replacement(pool, degree):
        vec = [0] * m.n
        for i in combo:
            vec[i] += 1
        if not _burn(m, vec, q):
            yield combo, vec


def gonality(g: MetricGraph, N: int = 1) -> GonalityResult:
    """Least degree of a rank-one divisor on the level-N model, with witness.

    Only base-reduced effective divisors are tried (one per class); a
    rank-one reduced divisor must carry a chip on the base vertex. The
    witness is the lexicographically first one at the minimal degree.
    """
    m = expand_model(g, N)
    q = m.index[m.base]
    d = 1
    while True:
        for combo, vec in reduced_effective_divisors(m, d):
            if vec[q] < 1:
                continue
            if _rank_one(m, vec):
                return GonalityResult(d, m.divisor(vec), N)
        d += 1


def rank_one_divisors(m: Model, degree: int, support: Iterable) -> list[Divisor]:
    """All base-reduced rank-one divisors of ``degree`` supported on ``support``."""
    q = m.index[m.base]
    found = []
    for combo, vec in reduced_effective_divisors(m, degree, support=support):
        if vec[q] >= 1 and _rank_one(m, vec):
            found.append(m.divisor(vec))
    return found


# --- DOT export --------------------------------------------------------------


def to_dot(g: MetricGraph, expand: bool = False, name: str = "G") -> str:
    """Graphviz text; with ``expand`` the chain vertices are drawn as points."""
    lines = [f"graph {name} {{"]
    if expand:
        m = expand_model(g, 1)
        label = {v: (str(v) if m.is_original(v) else f"e{v[1]}_{v[2]}") for v in m.vertices}
        for v in m.vertices:
            shape = "circle" if m.is_original(v) else "point"
            lines.append(f'  "{label[v]}" [shape={shape}];')
        for a, nbrs in enumerate(m.adjacency):
            for b, mult in sorted(nbrs.items()):
                if a < b:
                    for _ in range(mult):
                        lines.append(f'  "{label[m.vertices[a]]}" -- "{label[m.vertices[b]]}";')
    else:
        for v in g.vertices:
            lines.append(f'  "{v}";')
        for u, v, length in g.edges:
            lines.append(f'  "{u}" -- "{v}" [label="{length}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
