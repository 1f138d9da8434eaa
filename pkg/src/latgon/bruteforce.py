"""Naive polygon enumeration, kept only to cross-check the census.

Every vertex set inside a square box is tried; nothing is shared with the
growth enumerator except canonical_form for deduplication.
"""

from __future__ import annotations

from .polygon import LatticePolygon, canonical_form, convex_hull, lattice_points


def brute_force_classes(max_points: int, box: int = 7) -> dict[int, set]:
    """Canonical vertex tuples of two-dimensional polygons, by point count.

    Vertex sets are built in lexicographic order from points of
    [0, box) x [0, box) with the first vertex on the column x = 0 (any
    polygon in the box can be slid left onto it). Branches whose hull
    already has too many lattice points, or a non-vertex point, are cut.
    """
    grid = [(x, y) for x in range(box) for y in range(box)]
    out: dict[int, set] = {}

    def count(pts):
        hull = convex_hull(pts)
        return len(lattice_points(LatticePolygon(tuple(hull)))), hull

    def extend(chosen, start):
        for i in range(start, len(grid)):
            pts = chosen + [grid[i]]
            n, hull = count(pts)
            if n > max_points or len(hull) < len(pts):
                # a point swallowed by the hull never becomes a vertex again
                continue
            if len(hull) >= 3:
                C = canonical_form(LatticePolygon(tuple(hull)))
                out.setdefault(n, set()).add(C.vertices)
            extend(pts, i + 1)

    for i, p in enumerate(grid):
        if p[0] == 0:
            extend([p], i + 1)
    return out
