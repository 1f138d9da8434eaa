"""Regular subdivisions from integer heights, and the graphs dual to them.

Heights are lifted to R^3 and the cells are the projections of the lower
facets of the lifted point set. Everything is integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, NamedTuple, Optional, Sequence

from .chipgraph import MetricGraph
from .polygon import LatticePolygon, Point, integral_length, lattice_points


class HeightFunction:
    """Integer height at every lattice point of a two-dimensional base."""

    def __init__(self, base: LatticePolygon, assignments: Mapping[Point, int]):
        if base.dimension != 2:
            raise ValueError("base polygon must be two-dimensional")
        pts = lattice_points(base)
        values = {(int(p[0]), int(p[1])): v for p, v in assignments.items()}
        missing = [p for p in pts if p not in values]
        if missing:
            raise ValueError(f"no height given for {missing}")
        extra = set(values) - set(pts)
        if extra:
            raise ValueError(f"heights given outside the base: {sorted(extra)}")
        for p, v in values.items():
            if int(v) != v:
                raise ValueError(f"height at {p} is not an integer")
        self.base = base
        self.values = {p: int(values[p]) for p in pts}

    @classmethod
    def from_function(cls, base: LatticePolygon, f) -> "HeightFunction":
        return cls(base, {p: f(*p) for p in lattice_points(base)})

    @classmethod
    def from_partial(cls, base: LatticePolygon, partial: Mapping[Point, int]) -> "HeightFunction":
        """Fill in missing points with the lower hull of the given lifts.

        The given points must span ``base`` and the filled-in values must
        come out integral.
        """
        given = {(int(p[0]), int(p[1])): int(v) for p, v in partial.items()}
        if LatticePolygon.hull(given) != base:
            raise ValueError("the lifted points do not span the base polygon")
        pts3 = [(x, y, h) for (x, y), h in sorted(given.items())]
        planes = [(n, c) for n, c, _ in _lower_facets(pts3)]
        values = {}
        for p in lattice_points(base):
            if p in given:
                values[p] = given[p]
            else:
                values[p] = _envelope_value(planes, p)
        return cls(base, values)

    def __getitem__(self, p) -> int:
        return self.values[tuple(p)]

    def shifted(self, alpha: int, beta: int, gamma: int) -> "HeightFunction":
        """Add the affine function alpha*x + beta*y + gamma."""
        return HeightFunction(
            self.base, {(x, y): v + alpha * x + beta * y + gamma for (x, y), v in self.values.items()}
        )


def _envelope_value(planes, p) -> int:
    # the lower hull is the pointwise max of its supporting planes
    best = None
    for (nx, ny, nz), c in planes:
        z = Fraction(c - nx * p[0] - ny * p[1], nz)
        best = z if best is None else max(best, z)
    if best.denominator != 1:
        raise ValueError(f"induced height at {p} is not an integer ({best})")
    return int(best)


def _lower_facets(pts3: Sequence[tuple[int, int, int]]):
    """Lower facets of the lifted points: (normal, offset, indices on it).

    The normal (nx, ny, nz) is primitive with nz > 0 and every point obeys
    nx*x + ny*y + nz*z >= offset, with equality exactly on the facet.
    """
    facets = {}
    covered: list[frozenset] = []
    n = len(pts3)
    for i, j, k in combinations(range(n), 3):
        if any({i, j, k} <= s for s in covered):
            continue
        p, q, r = pts3[i], pts3[j], pts3[k]
        u = (q[0] - p[0], q[1] - p[1], q[2] - p[2])
        v = (r[0] - p[0], r[1] - p[1], r[2] - p[2])
        nrm = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        if nrm[2] == 0:
            continue
        if nrm[2] < 0:
            nrm = (-nrm[0], -nrm[1], -nrm[2])
        g = math.gcd(*nrm)
        nrm = (nrm[0] // g, nrm[1] // g, nrm[2] // g)
        c = nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2]
        on = []
        for idx, s in enumerate(pts3):
            val = nrm[0] * s[0] + nrm[1] * s[1] + nrm[2] * s[2]
            if val < c:
                break
            if val == c:
                on.append(idx)
        else:
            key = (nrm, c)
            if key not in facets:
                facets[key] = tuple(on)
                covered.append(frozenset(on))
    return [(nrm, c, on) for (nrm, c), on in facets.items()]


class Adjacency(NamedTuple):
    l: int
    m: int
    edge: tuple[Point, Point]
    length: int  # integral length of the shared edge
    d: int  # chain length from the facet normals


@dataclass(frozen=True)
class RegularSubdivision:
    base: LatticePolygon
    cells: tuple[LatticePolygon, ...]
    cell_affine: tuple[tuple[int, int, int], ...]
    adjacencies: tuple[Adjacency, ...]
    heights: Mapping = field(repr=False)  # induced values at every lattice point
    raised_points: tuple[Point, ...] = ()  # given heights strictly above the lower hull

    def normal(self, i: int) -> tuple[int, int, int]:
        return facet_normal(self.cell_affine[i])

    def is_unimodular(self) -> bool:
        return all(c.twice_area() == 1 for c in self.cells)


def facet_normal(affine: Sequence) -> tuple[int, int, int]:
    """Primitive normal (-alpha, -beta, 1) of the lifted cell z = alpha x + beta y + gamma."""
    alpha, beta = affine[0], affine[1]
    if int(alpha) != alpha or int(beta) != beta:
        raise ValueError(f"cell slopes ({alpha}, {beta}) are not integral")
    return (-int(alpha), -int(beta), 1)


def chain_length_d(n1: Sequence[int], n2: Sequence[int]) -> int:
    """gcd of the 2x2 minors of the matrix with rows n1, n2."""
    if n1[2] != 1 or n2[2] != 1:
        raise ValueError("normals must have third coordinate 1")
    if tuple(n1) == tuple(n2):
        raise ValueError("equal normals: cells are not distinct facets")
    minors = (
        n1[0] * n2[1] - n1[1] * n2[0],
        n1[0] * n2[2] - n1[2] * n2[0],
        n1[1] * n2[2] - n1[2] * n2[1],
    )
    return math.gcd(*minors)


def _shared_segment(A: LatticePolygon, B: LatticePolygon) -> Optional[tuple[Point, Point]]:
    for p, q in A.edges():
        for r, s in B.edges():
            d = (q[0] - p[0], q[1] - p[1])
            # both endpoints of rs on the line pq
            if d[0] * (r[1] - p[1]) - d[1] * (r[0] - p[0]) or d[0] * (s[1] - p[1]) - d[1] * (s[0] - p[0]):
                continue
            t = sorted([(0, p), (_param(d, p, q), q), (_param(d, p, r), r), (_param(d, p, s), s)])
            # overlap of [0, |pq|] and [rs] along d
            lo = max(0, min(_param(d, p, r), _param(d, p, s)))
            hi = min(_param(d, p, q), max(_param(d, p, r), _param(d, p, s)))
            if lo < hi:
                pts = {tp: pt for tp, pt in t}
                return tuple(sorted((pts[lo], pts[hi])))
    return None


def _param(d, p, x) -> int:
    return d[0] * (x[0] - p[0]) + d[1] * (x[1] - p[1])


def subdivide(base: LatticePolygon, h: HeightFunction | Mapping) -> RegularSubdivision:
    """Cells of the lower hull of the lifted lattice points of ``base``."""
    if base.dimension != 2:
        raise ValueError("base polygon must be two-dimensional")
    if not isinstance(h, HeightFunction):
        h = HeightFunction(base, h)
    elif h.base != base:
        raise ValueError("height function lives on a different base")
    pts = lattice_points(base)
    pts3 = [(x, y, h[(x, y)]) for x, y in pts]
    raw = []
    for nrm, c, on in _lower_facets(pts3):
        cell = LatticePolygon.hull(pts[i] for i in on)
        if cell.dimension == 2:
            raw.append((cell, nrm, c))
    raw.sort(key=lambda t: t[0].vertices)
    cells, affine = [], []
    for cell, (nx, ny, nz), c in raw:
        if nx % nz or ny % nz or c % nz:
            raise ValueError(f"induced function is not integral on the cell {cell}")
        cells.append(cell)
        affine.append((-nx // nz, -ny // nz, c // nz))
    induced = {}
    for p in pts:
        vals = [a * p[0] + b * p[1] + g for (a, b, g), cell in zip(affine, cells) if cell.contains(p)]
        induced[p] = max(vals)
    raised = tuple(p for p in pts if h[p] > induced[p])
    adj = []
    for i, j in combinations(range(len(cells)), 2):
        seg = _shared_segment(cells[i], cells[j])
        if seg is None:
            continue
        d = chain_length_d(facet_normal(affine[i]), facet_normal(affine[j]))
        adj.append(Adjacency(i, j, seg, integral_length(*seg), d))
    return RegularSubdivision(base, tuple(cells), tuple(affine), tuple(adj), induced, raised)


def _cell_label(i: int) -> str:
    return f"c{i + 1}"


def dual_graph(s: RegularSubdivision) -> MetricGraph:
    """One vertex per cell, L unit edges per shared edge of integral length L."""
    verts = tuple(_cell_label(i) for i in range(len(s.cells)))
    edges = [(_cell_label(a.l), _cell_label(a.m), 1) for a in s.adjacencies for _ in range(a.length)]
    return MetricGraph(verts, tuple(edges))


def corrected_graph(s: RegularSubdivision) -> MetricGraph:
    """As dual_graph, but every edge has length d (a chain of d unit edges)."""
    verts = tuple(_cell_label(i) for i in range(len(s.cells)))
    edges = [(_cell_label(a.l), _cell_label(a.m), a.d) for a in s.adjacencies for _ in range(a.length)]
    return MetricGraph(verts, tuple(edges))


def band_heights(a: int):
    """Convex c on integers: linear on [0, 2], then slope i - 1 on [i, i + 1] up to a."""

    def c(t: int) -> int:
        return sum(min(s - 1, a - 1) for s in range(2, t))

    return c


def _check_staircase(P: LatticePolygon, a: int) -> None:
    xs = [x for x, _ in P.vertices]
    ys = [y for _, y in P.vertices]
    bottom = max(x for x, y in P.vertices if y == 0) if 0 in ys else None
    ok = (
        P.dimension == 2
        and min(xs) == 0
        and min(ys) == 0
        and max(ys) == a
        and (0, 0) in P.vertices
        and P.contains((0, a))
        and bottom is not None
        and bottom >= a
        and max(xs) == bottom
        # f(b) = 0: the rightmost point is the single vertex (b, 0)
        and [v for v in P.vertices if v[0] == bottom] == [(bottom, 0)]
    )
    if not ok:
        raise ValueError(f"{P} is not a staircase polygon with a = {a}")


def theorem14_subdivision(P: LatticePolygon, a: int) -> RegularSubdivision:
    """Band subdivision by the level sets of x + y.

    Cells: hull{(0,0),(2,0),(0,2)}, the strips i <= x + y <= i + 1 for
    i = 2..a-1, and the part of P with x + y >= a (absent when P = a*Sigma).
    Realized by heights c(x + y) with c from ``band_heights``.
    """
    _check_staircase(P, a)
    c = band_heights(a)
    return subdivide(P, HeightFunction.from_function(P, lambda x, y: c(x + y)))
