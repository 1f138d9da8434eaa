"""JSON encodings shared by the CLI and the census files."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .chipgraph import Divisor, MetricGraph, Model
from .polygon import AffineLatticeMap, LatticePolygon, RationalPolygon
from .subdivision import HeightFunction, RegularSubdivision

_CHAIN_LABEL = re.compile(r"^e(\d+)_(\d+)$")


class InputError(ValueError):
    """Unreadable or malformed input file."""


def load_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{what} must be an integer, got {v!r}")
    return v


def polygon_to_json(P: LatticePolygon) -> dict:
    return {"vertices": [list(v) for v in P.vertices]}


def polygon_from_json(obj) -> LatticePolygon:
    try:
        verts = obj["vertices"]
        pts = [(_int(v[0], "coordinate"), _int(v[1], "coordinate")) for v in verts]
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"polygon needs a 'vertices' list of [x, y] pairs ({exc})") from None
    return LatticePolygon.hull(pts)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def rational_polygon_to_json(R: RationalPolygon) -> dict:
    return {"vertices": [[_frac(x), _frac(y)] for x, y in R.vertices], "is_lattice": R.is_lattice}


def map_to_json(m: AffineLatticeMap) -> dict:
    return {"matrix": [list(r) for r in m.matrix], "translation": list(m.translation)}


def heights_from_json(obj) -> HeightFunction:
    try:
        base = polygon_from_json(obj["base"])
        given = {}
        for rec in obj["heights"]:
            x, y, h = (_int(c, "height entry") for c in rec)
            if (x, y) in given:
                raise InputError(f"duplicate height for {(x, y)}")
            given[(x, y)] = h
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"heights file needs 'base' and 'heights' [[x, y, h], ...] ({exc})") from None
    from .polygon import lattice_points

    if set(lattice_points(base)) <= set(given):
        return HeightFunction(base, given)
    return HeightFunction.from_partial(base, given)


def subdivision_to_json(s: RegularSubdivision) -> dict:
    return {
        "base": polygon_to_json(s.base),
        "cells": [
            {"label": f"c{i + 1}", "vertices": [list(v) for v in c.vertices], "affine": list(a)}
            for i, (c, a) in enumerate(zip(s.cells, s.cell_affine))
        ],
        "adjacencies": [
            {"cells": [f"c{a.l + 1}", f"c{a.m + 1}"], "edge": [list(p) for p in a.edge], "L": a.length, "d": a.d}
            for a in s.adjacencies
        ],
        "raised_points": [list(p) for p in s.raised_points],
    }


def graph_to_json(g: MetricGraph) -> dict:
    return {"vertices": [str(v) for v in g.vertices], "edges": [[str(u), str(v), w] for u, v, w in g.edges]}


def graph_from_json(obj) -> MetricGraph:
    try:
        verts = [str(v) for v in obj["vertices"]]
        edges = [(str(u), str(v), _int(w, "edge length")) for u, v, w in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"graph needs 'vertices' and 'edges' [[u, v, length], ...] ({exc})") from None
    return MetricGraph(tuple(verts), tuple(edges))


def label_to_json(v) -> str:
    if isinstance(v, tuple):
        return f"e{v[1]}_{v[2]}"
    return str(v)


def divisor_to_json(D: Divisor) -> dict:
    return {"coeffs": {label_to_json(v): k for v, k in sorted(D.items(), key=lambda t: label_to_json(t[0]))}}


def divisor_from_json(obj, m: Model) -> Divisor:
    try:
        coeffs = obj["coeffs"]
        items = list(coeffs.items())
    except (KeyError, TypeError, AttributeError):
        raise InputError("divisor needs a 'coeffs' object") from None
    out = {}
    for label, k in items:
        out[parse_label(label, m)] = _int(k, "coefficient")
    return Divisor(out)


def parse_label(label: str, m: Model):
    if label in m.index:
        return label
    hit = _CHAIN_LABEL.match(label)
    if hit:
        v = ("e", int(hit.group(1)), int(hit.group(2)))
        if v in m.index:
            return v
    raise InputError(f"unknown vertex {label!r}")
