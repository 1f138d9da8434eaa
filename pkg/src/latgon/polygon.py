"""Lattice polygons and their invariants.

All arithmetic is exact: integer points for lattice polygons, ``Fraction``
for the rational vertices that appear when facets are pushed outwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

Point = tuple[int, int]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable) -> list:
    """Strictly convex hull, counterclockwise, starting at the lex-min point.

    Works for any exactly comparable coordinates (ints or Fractions).
    Degenerate inputs return one point or the two endpoints of a segment.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*v)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(c // g for c in v)


@dataclass(frozen=True)
class HalfPlane:
    """The constraint ``a*x + b*y <= c`` with primitive outward normal."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if math.gcd(self.a, self.b) != 1:
            raise ValueError(f"normal ({self.a}, {self.b}) is not primitive")

    def value(self, p) -> object:
        return self.a * p[0] + self.b * p[1]

    def contains(self, p, strict: bool = False) -> bool:
        v = self.value(p)
        return v < self.c if strict else v <= self.c

    def relaxed(self, by: int = 1) -> "HalfPlane":
        return HalfPlane(self.a, self.b, self.c + by)


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of finitely many lattice points.

    ``vertices`` are stored counterclockwise, strictly convex, starting at
    the lexicographically smallest vertex, so equal point sets compare equal.
    The empty polygon has no vertices and dimension -1.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple((int(x), int(y)) for x, y in self.vertices)
        canon = tuple(convex_hull(verts))
        if len(canon) != len(set(verts)) or (canon and set(canon) != set(verts)):
            raise ValueError(f"{verts} is not a strictly convex vertex list")
        object.__setattr__(self, "vertices", canon)

    @classmethod
    def hull(cls, points: Iterable[Sequence[int]]) -> "LatticePolygon":
        pts = [(int(p[0]), int(p[1])) for p in points]
        return cls(tuple(convex_hull(pts)))

    @classmethod
    def empty(cls) -> "LatticePolygon":
        return cls(())

    @property
    def dimension(self) -> int:
        return min(len(self.vertices), 3) - 1

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"LatticePolygon({list(self.vertices)})"

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        if len(vs) < 2:
            return []
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def twice_area(self) -> int:
        vs = self.vertices
        if len(vs) < 3:
            return 0
        return sum(
            vs[i][0] * vs[(i + 1) % len(vs)][1] - vs[(i + 1) % len(vs)][0] * vs[i][1]
            for i in range(len(vs))
        )

    def half_planes(self) -> list[HalfPlane]:
        """Facet inequalities, one per edge, in counterclockwise edge order."""
        if self.dimension != 2:
            raise ValueError("half-plane description needs a two-dimensional polygon")
        out = []
        for p, q in self.edges():
            a, b = primitive((q[1] - p[1], p[0] - q[0]))
            out.append(HalfPlane(a, b, a * p[0] + b * p[1]))
        return out

    def contains(self, p) -> bool:
        if self.dimension == 2:
            return all(h.contains(p) for h in self.half_planes())
        if self.dimension == 1:
            a, b = self.vertices
            return _cross(a, b, p) == 0 and min(a, b) <= tuple(p) <= max(a, b)
        if self.dimension == 0:
            return tuple(p) == self.vertices[0]
        return False

    def boundary_point_count(self) -> int:
        if self.dimension < 1:
            return len(self.vertices)
        if self.dimension == 1:
            return integral_length(*self.vertices) + 1
        return sum(integral_length(p, q) for p, q in self.edges())

    def translate(self, t: Sequence[int]) -> "LatticePolygon":
        return LatticePolygon(tuple((x + t[0], y + t[1]) for x, y in self.vertices))


def integral_length(p: Sequence[int], q: Sequence[int]) -> int:
    """Number of lattice points on the segment ``pq`` minus one."""
    return math.gcd(q[0] - p[0], q[1] - p[1])


@dataclass(frozen=True)
class RationalPolygon:
    vertices: tuple[tuple[Fraction, Fraction], ...]

    @property
    def is_lattice(self) -> bool:
        return all(x.denominator == 1 and y.denominator == 1 for x, y in self.vertices)

    def to_lattice(self) -> LatticePolygon:
        if not self.is_lattice:
            raise ValueError("polygon has non-integral vertices")
        return LatticePolygon.hull((int(x), int(y)) for x, y in self.vertices)

    def contains(self, p) -> bool:
        vs = self.vertices
        n = len(vs)
        return all(_cross(vs[i], vs[(i + 1) % n], p) >= 0 for i in range(n))


# --- lattice points, genus ------------------------------------------------


def _row_range(hps: list[HalfPlane], x: int, strict: bool) -> tuple[int, int] | None:
    lo, hi = None, None
    for h in hps:
        rest = h.c - h.a * x
        if h.b == 0:
            if h.a * x > h.c or (strict and h.a * x == h.c):
                return None
            continue
        if h.b > 0:
            # y <= rest / b
            bound = rest // h.b
            if strict and rest % h.b == 0:
                bound -= 1
            hi = bound if hi is None else min(hi, bound)
        else:
            # b < 0: y >= rest / b
            bound = _ceil_div(rest, h.b)
            if strict and rest % h.b == 0:
                bound += 1
            lo = bound if lo is None else max(lo, bound)
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def lattice_points(P: LatticePolygon) -> list[Point]:
    """All lattice points of ``P``, sorted lexicographically."""
    if P.dimension < 0:
        return []
    if P.dimension == 0:
        return [P.vertices[0]]
    if P.dimension == 1:
        (x0, y0), (x1, y1) = P.vertices
        g = math.gcd(x1 - x0, y1 - y0)
        dx, dy = (x1 - x0) // g, (y1 - y0) // g
        return sorted((x0 + k * dx, y0 + k * dy) for k in range(g + 1))
    return _scan(P, strict=False)


def interior_points(P: LatticePolygon) -> list[Point]:
    if P.dimension < 2:
        return []
    return _scan(P, strict=True)


def _scan(P: LatticePolygon, strict: bool) -> list[Point]:
    hps = P.half_planes()
    xs = [v[0] for v in P.vertices]
    out = []
    for x in range(min(xs), max(xs) + 1):
        r = _row_range(hps, x, strict)
        if r is not None:
            out.extend((x, y) for y in range(r[0], r[1] + 1))
    return out


def genus(P: LatticePolygon) -> int:
    return len(interior_points(P))


def interior_hull(P: LatticePolygon) -> LatticePolygon:
    return LatticePolygon.hull(interior_points(P))


def relaxed_hull(P: LatticePolygon) -> RationalPolygon:
    """Intersection of the facet half-planes of ``P``, each moved out by one.

    Edges of the relaxed polygon can vanish, so the intersection is computed
    from scratch: all pairwise line intersections satisfying every relaxed
    constraint, then their hull.
    """
    if P.dimension != 2:
        raise ValueError("relaxed hull is defined for two-dimensional polygons only")
    hps = [h.relaxed() for h in P.half_planes()]
    candidates = []
    for h1, h2 in combinations(hps, 2):
        det = h1.a * h2.b - h1.b * h2.a
        if det == 0:
            continue
        x = Fraction(h1.c * h2.b - h1.b * h2.c, det)
        y = Fraction(h1.a * h2.c - h1.c * h2.a, det)
        if all(h.contains((x, y)) for h in hps):
            candidates.append((x, y))
    return RationalPolygon(tuple(convex_hull(candidates)))


def is_interior_polygon(P: LatticePolygon) -> bool:
    return relaxed_hull(P).is_lattice


# --- lattice width ---------------------------------------------------------


def width_in_direction(P: LatticePolygon, w: Sequence[int]) -> int:
    if P.is_empty:
        raise ValueError("width of the empty polygon is undefined")
    if math.gcd(w[0], w[1]) != 1:
        raise ValueError(f"direction {tuple(w)} is not primitive")
    vals = [w[0] * x + w[1] * y for x, y in P.vertices]
    return max(vals) - min(vals)


class Width(NamedTuple):
    width: int
    direction: Optional[Point]


def _candidate_directions(P: LatticePolygon, bound: int):
    """Primitive w with |<w, e1>| <= bound and |<w, e2>| <= bound.

    e1, e2 are the pair of edge vectors spanning the largest parallelogram,
    which keeps the candidate region small. Only one of w, -w is produced.
    """
    evs = [(q[0] - p[0], q[1] - p[1]) for p, q in P.edges()]
    e1, e2 = max(combinations(evs, 2), key=lambda pair: abs(pair[0][0] * pair[1][1] - pair[0][1] * pair[1][0]))
    det = e1[0] * e2[1] - e1[1] * e2[0]
    # w = M^{-1} (s, t) with rows e1, e2; x-extent over the four corners
    corners_x = [Fraction(s * e2[1] - t * e1[1], det) for s in (-bound, bound) for t in (-bound, bound)]
    lo, hi = math.floor(min(corners_x)), math.ceil(max(corners_x))
    for wx in range(max(lo, 0), hi + 1):
        ylo, yhi = None, None
        feasible = True
        for e in (e1, e2):
            # -bound <= e0*wx + e1*wy <= bound
            base = e[0] * wx
            if e[1] == 0:
                if abs(base) > bound:
                    feasible = False
                    break
                continue
            a, b = -bound - base, bound - base
            if e[1] < 0:
                a, b = -b, -a
                k = -e[1]
            else:
                k = e[1]
            lo_y, hi_y = _ceil_div(a, k), b // k
            ylo = lo_y if ylo is None else max(ylo, lo_y)
            yhi = hi_y if yhi is None else min(yhi, hi_y)
        if not feasible:
            continue
        if ylo is None:
            ylo, yhi = -bound, bound
        for wy in range(ylo, yhi + 1):
            if wx == 0 and wy <= 0:
                continue
            if math.gcd(wx, wy) == 1:
                yield (wx, wy)


def lattice_width(P: LatticePolygon) -> Width:
    """Lattice width with a primitive direction attaining it.

    lw(empty) = -1 and the width of a point or segment is 0.
    """
    if P.is_empty:
        return Width(-1, None)
    if P.dimension == 0:
        return Width(0, (0, 1))
    if P.dimension == 1:
        (x0, y0), (x1, y1) = P.vertices
        dx, dy = primitive((x1 - x0, y1 - y0))
        w = (-dy, dx) if (-dy, dx) > (0, 0) else (dy, -dx)
        return Width(0, w)
    best = min(
        (width_in_direction(P, (1, 0)), (1, 0)),
        (width_in_direction(P, (0, 1)), (0, 1)),
    )
    for w in _candidate_directions(P, best[0]):
        wd = width_in_direction(P, w)
        if (wd, w) < best:
            best = (wd, w)
    return Width(*best)


def lattice_width_recursive(P: LatticePolygon) -> int:
    """Lattice width by peeling interior hulls.

    Each layer adds 2, except a multiple dSigma (d >= 2) which adds 3.
    """
    if P.dimension < 2:
        return lattice_width(P).width
    inner = lattice_width_recursive(interior_hull(P))
    std = recognize_standard(P)
    if std.kind == "simplex" and std.d >= 2:
        return inner + 3
    return inner + 2


# --- Z-affine maps and equivalence -------------------------------------------


@dataclass(frozen=True)
class AffineLatticeMap:
    """``x -> A x + b`` with ``A`` in GL2(Z)."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    translation: tuple[int, int] = (0, 0)

    def __post_init__(self):
        m = tuple(tuple(int(c) for c in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", tuple(int(c) for c in self.translation))
        if self.det not in (1, -1):
            raise ValueError(f"matrix {m} is not unimodular (det {self.det})")

    @classmethod
    def identity(cls) -> "AffineLatticeMap":
        return cls(((1, 0), (0, 1)))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def __call__(self, p):
        (a, b), (c, d) = self.matrix
        return (a * p[0] + b * p[1] + self.translation[0], c * p[0] + d * p[1] + self.translation[1])

    def linear(self, v):
        (a, b), (c, d) = self.matrix
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def compose(self, other: "AffineLatticeMap") -> "AffineLatticeMap":
        """``self after other``."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return AffineLatticeMap(m, self(other.translation))

    def inverse(self) -> "AffineLatticeMap":
        (a, b), (c, d) = self.matrix
        k = self.det
        m = ((d * k, -b * k), (-c * k, a * k))
        inv = AffineLatticeMap(m)
        tx, ty = inv.linear(self.translation)
        return AffineLatticeMap(m, (-tx, -ty))


def apply_map(P: LatticePolygon, m: AffineLatticeMap) -> LatticePolygon:
    return LatticePolygon.hull(m(v) for v in P.vertices)


def _solve_linear(src: tuple, dst: tuple):
    """Integer matrix A with A u = u', A v = v', or None.

    ``src`` = (u, v), ``dst`` = (u', v').
    """
    (u, v), (u2, v2) = src, dst
    det = u[0] * v[1] - u[1] * v[0]
    if det == 0:
        return None
    # A = [u2 v2] [u v]^{-1}, [u v]^{-1} = adj / det
    inv = ((v[1], -v[0]), (-u[1], u[0]))
    rows = []
    for r in range(2):
        row = []
        for c in range(2):
            num = u2[r] * inv[0][c] + v2[r] * inv[1][c]
            if num % det:
                return None
            row.append(num // det)
        rows.append(tuple(row))
    (a, b), (c, d) = rows
    if a * d - b * c not in (1, -1):
        return None
    return tuple(rows)


def _corner_frames(P: LatticePolygon):
    """(vertex, primitive direction to next, primitive direction to previous)."""
    vs = P.vertices
    n = len(vs)
    for i, p in enumerate(vs):
        nxt, prv = vs[(i + 1) % n], vs[i - 1]
        yield p, primitive((nxt[0] - p[0], nxt[1] - p[1])), primitive((prv[0] - p[0], prv[1] - p[1]))


def _complete_basis(u) -> tuple[int, int]:
    """A vector x with det(u, x) = 1 for primitive u."""
    g, s, t = _ext_gcd(u[0], u[1])
    # s*u0 + t*u1 = 1 -> det((u0,u1),(-t,s)) = u0*s + u1*t = 1
    return (-t, s)


def _ext_gcd(a: int, b: int):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, s, t = _ext_gcd(b, a % b)
    return g, t, s - (a // b) * t


def _invariants(P: LatticePolygon):
    return (P.dimension, len(P.vertices), P.twice_area(), P.boundary_point_count(), genus(P))


def are_equivalent(P: LatticePolygon, Q: LatticePolygon) -> Optional[AffineLatticeMap]:
    """A Z-affine map taking ``P`` onto ``Q``, or None if there is none."""
    if _invariants(P) != _invariants(Q):
        return None
    dim = P.dimension
    if dim < 0:
        return AffineLatticeMap.identity()
    if dim == 0:
        (px, py), (qx, qy) = P.vertices[0], Q.vertices[0]
        return AffineLatticeMap(((1, 0), (0, 1)), (qx - px, qy - py))
    if dim == 1:
        p0, p1 = P.vertices
        q0, q1 = Q.vertices
        u = primitive((p1[0] - p0[0], p1[1] - p0[1]))
        u2 = primitive((q1[0] - q0[0], q1[1] - q0[1]))
        A = _solve_linear((u, _complete_basis(u)), (u2, _complete_basis(u2)))
        lin = AffineLatticeMap(A)
        t = lin(p0)
        return AffineLatticeMap(A, (q0[0] - t[0], q0[1] - t[1]))
    p, u, v = next(_corner_frames(P))
    for q, u2, v2 in _corner_frames(Q):
        for dst in ((u2, v2), (v2, u2)):
            A = _solve_linear((u, v), dst)
            if A is None:
                continue
            lin = AffineLatticeMap(A)
            t = lin(p)
            m = AffineLatticeMap(A, (q[0] - t[0], q[1] - t[1]))
            if apply_map(P, m) == Q:
                return m
    return None


def _normalizing_maps(P: LatticePolygon):
    """Maps sending a corner to the origin in a frame-independent position.

    For corner q with edge directions u, v (either order): A u = (1, 0) and
    A v = (x, y) with y > 0, 0 <= x < y. These conditions fix A uniquely.
    """
    for q, d1, d2 in _corner_frames(P):
        for u, v in ((d1, d2), (d2, d1)):
            y = abs(u[0] * v[1] - u[1] * v[0])
            # first find any unimodular A0 with A0 u = (1, 0)
            A0 = _solve_linear((u, _complete_basis(u)), ((1, 0), (0, 1)))
            x0, y0 = AffineLatticeMap(A0).linear(v)
            sign = 1 if y0 > 0 else -1
            k = -((x0) // y) if sign > 0 else (x0 // y)
            # [[1, k], [0, sign]] (x0, y0) = (x0 + k*y0, sign*y0)
            S = ((1, k), (0, sign))
            A = AffineLatticeMap(S).compose(AffineLatticeMap(A0)).matrix
            lin = AffineLatticeMap(A)
            t = lin(q)
            yield AffineLatticeMap(A, (-t[0], -t[1]))


def canonical_form(P: LatticePolygon) -> LatticePolygon:
    """A fixed representative of the equivalence class of ``P``."""
    dim = P.dimension
    if dim < 0:
        return P
    if dim == 0:
        return LatticePolygon(((0, 0),))
    if dim == 1:
        return LatticePolygon(((0, 0), (integral_length(*P.vertices), 0)))
    best = None
    for m in _normalizing_maps(P):
        img = apply_map(P, m)
        mx, my = img.vertices[0]
        img = img.translate((-mx, -my))
        key = tuple(sorted(img.vertices))
        if best is None or key < best[0]:
            best = (key, img)
    return best[1]


# --- recognizers and bounds --------------------------------------------------


class Standard(NamedTuple):
    kind: str  # "simplex", "2upsilon" or "other"
    d: Optional[int] = None


def standard_simplex(d: int) -> LatticePolygon:
    if d < 0:
        raise ValueError("dilation factor must be non-negative")
    return LatticePolygon.hull([(0, 0), (d, 0), (0, d)])


def upsilon() -> LatticePolygon:
    return LatticePolygon.hull([(-1, -1), (1, 0), (0, 1)])


def dilate(P: LatticePolygon, d: int) -> LatticePolygon:
    if d < 0:
        raise ValueError("dilation factor must be non-negative")
    return LatticePolygon.hull((d * x, d * y) for x, y in P.vertices)


_TWO_UPSILON = dilate(upsilon(), 2)


def recognize_standard(P: LatticePolygon) -> Standard:
    """Is ``P`` equivalent to some dSigma (d >= 1), to 2*Upsilon, or neither."""
    if P.dimension == 2 and len(P.vertices) == 3:
        lengths = {integral_length(p, q) for p, q in P.edges()}
        if len(lengths) == 1:
            d = lengths.pop()
            if P.twice_area() == d * d and are_equivalent(P, standard_simplex(d)) is not None:
                return Standard("simplex", d)
        if (
            P.twice_area() == 12
            and genus(P) == 4
            and P.boundary_point_count() == 6
            and are_equivalent(P, _TWO_UPSILON) is not None
        ):
            return Standard("2upsilon")
    return Standard("other")


def gonality_upper_bound(P: LatticePolygon) -> int:
    """lw(P), lowered by one for dSigma (d >= 2) and 2*Upsilon."""
    if P.dimension != 2:
        raise ValueError("gonality bound needs a two-dimensional polygon")
    lw = lattice_width(P).width
    std = recognize_standard(P)
    if std.kind == "2upsilon" or (std.kind == "simplex" and std.d >= 2):
        return lw - 1
    return lw


# --- families ----------------------------------------------------------------


def rect(a: int, b: int) -> LatticePolygon:
    return LatticePolygon.hull([(0, 0), (a, 0), (a, b), (0, b)])


def hirzebruch(a: int, b: int, k: int) -> LatticePolygon:
    if a < 1 or b < 1 or k < 0:
        raise ValueError("need a, b >= 1 and k >= 0")
    return LatticePolygon.hull([(0, 0), (a + b * k, 0), (a, b), (0, b)])


def _concave_chain(breakpoints) -> list[Point]:
    pts = [(int(x), int(y)) for x, y in breakpoints]
    if any(float(x) != x or float(y) != y for x, y in breakpoints):
        raise ValueError("breakpoints must be lattice points")
    for (x0, _), (x1, _) in zip(pts, pts[1:]):
        if x1 <= x0:
            raise ValueError("breakpoint abscissae must be strictly increasing")
    for a, b, c in zip(pts, pts[1:], pts[2:]):
        if _cross(a, b, c) > 0:
            raise ValueError(f"chain is not concave at {b}")
    return pts


def _as_breakpoints(f_values) -> list:
    f_values = list(f_values)
    if f_values and not isinstance(f_values[0], (tuple, list)):
        return [(x, y) for x, y in enumerate(f_values)]
    return f_values


def staircase_family(a: int, b: int, f_values) -> LatticePolygon:
    """Hull of (0, 0) with the graph of a concave piecewise linear f on [0, b].

    ``f_values`` lists the breakpoints ``(x, f(x))`` as lattice points, or the
    values at x = 0..b. Requires 1 <= a <= b, f(0) = a >= f(1), f(b) = 0.
    """
    if not 1 <= a <= b:
        raise ValueError("need 1 <= a <= b")
    pts = _concave_chain(_as_breakpoints(f_values))
    if pts[0] != (0, a) or pts[-1] != (b, 0):
        raise ValueError("chain must run from (0, a) to (b, 0)")
    if any(y < 0 for _, y in pts):
        raise ValueError("f must be non-negative")
    # f(1) <= a: the first segment cannot rise
    if pts[1][1] > a:
        raise ValueError("need f(1) <= f(0)")
    return LatticePolygon.hull(pts + [(0, 0)])


def kawaguchi(a: int, b: int, k: int, breakpoints) -> LatticePolygon:
    """Hull of the graph of f on [0, a + bk] with (0, 0) and (a, 0).

    f is concave piecewise linear with lattice breakpoints, f(0) > 0,
    f(a) = b, k*f(a + bk) = 0, linear on [a, a + bk] and with at least one
    horizontal segment.
    """
    if a < 1 or b < 1 or k < 0:
        raise ValueError("need a, b >= 1 and k >= 0")
    pts = _concave_chain(_as_breakpoints(breakpoints))
    end = a + b * k
    if pts[0][0] != 0 or pts[-1][0] != end:
        raise ValueError(f"chain must span [0, {end}]")
    if pts[0][1] <= 0 or any(y < 0 for _, y in pts):
        raise ValueError("f must be non-negative with f(0) > 0")
    fa = _evaluate_chain(pts, a)
    if fa != b:
        raise ValueError(f"need f(a) = b, got {fa}")
    if k * pts[-1][1] != 0:
        raise ValueError("need k * f(a + bk) = 0")
    if any(a < x < end for x, _ in pts):
        raise ValueError("f must be linear on [a, a + bk]")
    if not any(y0 == y1 for (_, y0), (_, y1) in zip(pts, pts[1:])):
        raise ValueError("need at least one horizontal segment")
    return LatticePolygon.hull(pts + [(0, 0), (a, 0)])


def _evaluate_chain(pts, x):
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            return y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)
    raise ValueError(f"{x} outside the chain")
