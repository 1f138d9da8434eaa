"""Lattice polygons up to equivalence, by number of lattice points.

Enumeration grows polygons one lattice point at a time. If a two-dimensional
polygon Q has n + 1 >= 4 lattice points, removing a suitable vertex v leaves
a two-dimensional polygon P with exactly n lattice points, and v lies at
lattice distance one outside every edge of P it sees. So v is a lattice point
of the relaxed polygon of P outside P, and every class with n + 1 points is
reached from some class with n points.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .io import polygon_from_json, polygon_to_json
from .polygon import (
    LatticePolygon,
    are_equivalent,
    apply_map,
    canonical_form,
    interior_hull,
    is_interior_polygon,
    lattice_points,
    lattice_width,
    recognize_standard,
    relaxed_hull,
)


@dataclass(frozen=True)
class CensusQuery:
    min_points: int = 3
    max_points: int = 13
    require_interior: bool = False
    require_two_dimensional: bool = True

    def __post_init__(self):
        floor = 3 if self.require_two_dimensional else 1
        if not floor <= self.min_points <= self.max_points:
            raise ValueError(f"need {floor} <= min_points <= max_points")


def _key(P: LatticePolygon):
    return P.vertices


def _growth_candidates(P: LatticePolygon) -> list:
    R = relaxed_hull(P)
    xs = [v[0] for v in R.vertices]
    ys = [v[1] for v in R.vertices]
    out = []
    for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
        for y in range(math.ceil(min(ys)), math.floor(max(ys)) + 1):
            if R.contains((x, y)) and not P.contains((x, y)):
                out.append((x, y))
    return out


def _grow(P: LatticePolygon) -> list[LatticePolygon]:
    n = len(lattice_points(P))
    out = {}
    for p in _growth_candidates(P):
        Q = LatticePolygon.hull(list(P.vertices) + [p])
        if len(lattice_points(Q)) == n + 1:
            C = canonical_form(Q)
            out[_key(C)] = C
    return list(out.values())


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("LATGON_THREADS", "1")))
    except ValueError:
        return 1


def two_dimensional_classes(max_points: int, seed: Optional[LatticePolygon] = None) -> dict[int, list[LatticePolygon]]:
    """Canonical two-dimensional classes, keyed by lattice-point count 3..max_points.

    ``seed`` is the starting unimodular triangle (any placement).
    """
    seed = seed or LatticePolygon.hull([(0, 0), (1, 0), (0, 1)])
    if len(lattice_points(seed)) != 3 or seed.dimension != 2:
        raise ValueError("seed must be a unimodular triangle")
    levels = {3: [canonical_form(seed)]}
    workers = _workers()
    for n in range(3, max_points):
        found: dict = {}
        if workers > 1 and len(levels[n]) > 64:
            with ProcessPoolExecutor(workers) as ex:
                batches = list(ex.map(_grow, levels[n], chunksize=32))
        else:
            batches = [_grow(P) for P in levels[n]]
        # merge in input order, then sort: independent of scheduling
        for batch in batches:
            for C in batch:
                found.setdefault(_key(C), C)
        levels[n + 1] = [found[k] for k in sorted(found)]
    return {n: v for n, v in levels.items() if n <= max_points}


def _lower_dimensional(min_points: int, max_points: int) -> list[LatticePolygon]:
    out = []
    if min_points <= 1 <= max_points:
        out.append(LatticePolygon(((0, 0),)))
    for k in range(max(min_points, 2), max_points + 1):
        out.append(LatticePolygon(((0, 0), (k - 1, 0))))
    return out


def enumerate_polygons(q: CensusQuery) -> list[LatticePolygon]:
    """One canonical representative per class meeting the query, sorted."""
    result = []
    if not q.require_two_dimensional:
        result.extend(_lower_dimensional(q.min_points, q.max_points))
    if q.max_points >= 3:
        for n, polys in two_dimensional_classes(q.max_points).items():
            if n >= q.min_points:
                result.extend(polys)
    if q.require_interior:
        result = [P for P in result if P.dimension < 2 or is_interior_polygon(P)]
    return sorted(result, key=_key)


# --- verification passes ----------------------------------------------------


@dataclass
class Theorem6Report:
    checked: int = 0
    generic: int = 0  # lw = lw(interior) + 2
    exceptional: int = 0  # P = d*Sigma, lw = lw(interior) + 3 = d
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_theorem6(classes: Iterable[LatticePolygon]) -> Theorem6Report:
    rep = Theorem6Report()
    for P in classes:
        if P.dimension != 2:
            continue
        rep.checked += 1
        lw = lattice_width(P).width
        inner = lattice_width(interior_hull(P)).width
        std = recognize_standard(P)
        if std.kind == "simplex" and std.d >= 2:
            rep.exceptional += 1
            if not (lw == inner + 3 == std.d):
                rep.violations.append((P, lw, inner, "simplex"))
        else:
            rep.generic += 1
            if lw != inner + 2:
                rep.violations.append((P, lw, inner, "generic"))
    return rep


@dataclass
class Lemma5Report:
    interior_classes: int = 0
    round_trips: int = 0
    maximality_checks: int = 0
    skipped_lower_dimensional: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_lemma5(classes: Iterable[LatticePolygon]) -> Lemma5Report:
    """Round trip interior_hull(relaxed_hull(P)) = P, and maximality.

    For every class G whose interior hull is equivalent to an interior class
    P, the equivalence witness must carry G into relaxed_hull(P).
    """
    classes = list(classes)
    rep = Lemma5Report()
    interior = {}
    for P in classes:
        if P.dimension != 2:
            continue
        if not is_interior_polygon(P):
            continue
        rep.interior_classes += 1
        R = relaxed_hull(P).to_lattice()
        if interior_hull(R) != P:
            rep.violations.append((P, "round trip", R))
        else:
            rep.round_trips += 1
        interior[_key(canonical_form(P))] = P
    for G in classes:
        if G.dimension != 2:
            continue
        inner = interior_hull(G)
        if inner.dimension != 2:
            rep.skipped_lower_dimensional += 1
            continue
        P = interior.get(_key(canonical_form(inner)))
        if P is None:
            rep.violations.append((G, "interior hull missing from census", inner))
            continue
        m = are_equivalent(inner, P)
        R = relaxed_hull(P)
        image = apply_map(G, m)
        rep.maximality_checks += 1
        if not all(R.contains(v) for v in image.vertices):
            rep.violations.append((G, "not contained in relaxed hull", P))
    return rep


# --- on-disk format ---------------------------------------------------------


def write_census(polys: Iterable[LatticePolygon], path) -> None:
    lines = sorted(json.dumps(polygon_to_json(P), separators=(",", ":")) for P in polys)
    with open(path, "w") as fh:
        for line in lines:
            fh.write(line + "\n")


def read_census(path) -> list[LatticePolygon]:
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                out.append(polygon_from_json(json.loads(line)))
            except (ValueError, json.JSONDecodeError) as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return out
