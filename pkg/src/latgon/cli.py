"""The ``latgon`` command.

Exit codes: 0 success, 1 input error, 2 usage error, 3 verification failure.
All JSON output uses sorted keys, so equal inputs give equal bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chipgraph as cg
from .census import CensusQuery, enumerate_polygons, read_census, verify_lemma5, verify_theorem6, write_census
from .io import (
    InputError,
    divisor_from_json,
    divisor_to_json,
    dumps,
    graph_from_json,
    graph_to_json,
    heights_from_json,
    load_json,
    map_to_json,
    parse_label,
    polygon_from_json,
    polygon_to_json,
    rational_polygon_to_json,
    subdivision_to_json,
)
from .polygon import (
    are_equivalent,
    genus,
    gonality_upper_bound,
    interior_hull,
    lattice_points,
    lattice_width,
    lattice_width_recursive,
    recognize_standard,
    relaxed_hull,
)
from .subdivision import corrected_graph, dual_graph, subdivide, theorem14_subdivision

OK, INPUT_ERROR, USAGE_ERROR, VERIFY_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _polygon(path):
    return polygon_from_json(load_json(path))


def _graph(path):
    return graph_from_json(load_json(path))


# --- polygon -------------------------------------------------------------------


def cmd_polygon_analyze(args) -> int:
    P = _polygon(args.file)
    out = {"polygon": polygon_to_json(P), "dimension": P.dimension, "lattice_points": len(lattice_points(P))}
    if P.dimension == 2:
        w = lattice_width(P)
        std = recognize_standard(P)
        out.update(
            genus=genus(P),
            lattice_width={"width": w.width, "direction": list(w.direction), "recursive": lattice_width_recursive(P)},
            interior_hull=polygon_to_json(interior_hull(P)),
            relaxed_hull=rational_polygon_to_json(relaxed_hull(P)),
            classification={"kind": std.kind, "d": std.d},
            gonality_upper_bound=gonality_upper_bound(P),
        )
    _emit(out)
    return OK


def cmd_polygon_equiv(args) -> int:
    m = are_equivalent(_polygon(args.a), _polygon(args.b))
    _emit({"equivalent": m is not None, "map": map_to_json(m) if m else None})
    return OK


# --- subdivisions and graphs -------------------------------------------------


def _subdivision(path):
    h = heights_from_json(load_json(path))
    return subdivide(h.base, h)


def cmd_subdivide(args) -> int:
    _emit(subdivision_to_json(_subdivision(args.file)))
    return OK


def cmd_dualgraph(args) -> int:
    s = _subdivision(args.file)
    g = corrected_graph(s) if args.corrected else dual_graph(s)
    if args.format == "dot":
        sys.stdout.write(cg.to_dot(g, expand=True))
    else:
        _emit(graph_to_json(g))
    return OK


def _gonality_json(res: cg.GonalityResult) -> dict:
    return {"gonality": res.gonality, "level": res.level, "witness": divisor_to_json(res.witness)}


def cmd_gon(args) -> int:
    g = _graph(args.file)
    if args.level is not None:
        if args.level < 1:
            raise UsageError("--level must be positive")
        _emit(_gonality_json(cg.gonality(g, args.level)))
        return OK
    results = [cg.gonality(g, N) for N in (1, 2, 3)]
    values = {r.gonality for r in results}
    _emit(
        {
            "gonality": results[0].gonality,
            "levels": [_gonality_json(r) for r in results],
            "stable": len(values) == 1,
        }
    )
    return OK


def cmd_rank(args) -> int:
    m = cg.expand_model(_graph(args.graph), 1)
    D = divisor_from_json(load_json(args.divisor), m)
    _emit({"degree": D.degree, "rank": cg.rank(m, D)})
    return OK


def cmd_reduce(args) -> int:
    m = cg.expand_model(_graph(args.graph), 1)
    D = divisor_from_json(load_json(args.divisor), m)
    q = parse_label(args.base, m) if args.base is not None else m.base
    _emit({"base": args.base or str(m.base), "reduced": divisor_to_json(cg.reduce(m, D, q))})
    return OK


def cmd_equivdiv(args) -> int:
    m = cg.expand_model(_graph(args.graph), 1)
    D1 = divisor_from_json(load_json(args.d1), m)
    D2 = divisor_from_json(load_json(args.d2), m)
    try:
        eq = cg.divisors_equivalent(m, D1, D2)
    except cg.DegreeMismatch as exc:
        raise InputError(str(exc)) from None
    _emit({"equivalent": eq})
    return OK


# --- census --------------------------------------------------------------------


def cmd_census(args) -> int:
    try:
        q = CensusQuery(args.min, args.max, args.interior, not args.all_dimensions)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    polys = enumerate_polygons(q)
    if args.out:
        write_census(polys, args.out)
        _emit({"classes": len(polys), "out": args.out})
    else:
        for P in sorted(dumps_line(P) for P in polys):
            sys.stdout.write(P + "\n")
    return OK


def dumps_line(P) -> str:
    return json.dumps(polygon_to_json(P), separators=(",", ":"))


def cmd_census_verify(args) -> int:
    try:
        polys = read_census(args.file)
    except OSError as exc:
        raise InputError(f"{args.file}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    run6 = args.theorem6 or not (args.theorem6 or args.lemma5)
    run5 = args.lemma5 or not (args.theorem6 or args.lemma5)
    out, ok = {"classes": len(polys)}, True
    if run6:
        r = verify_theorem6(polys)
        out["theorem6"] = {"checked": r.checked, "generic": r.generic, "exceptional": r.exceptional, "violations": len(r.violations)}
        ok &= r.ok
    if run5:
        r = verify_lemma5(polys)
        out["lemma5"] = {
            "interior_classes": r.interior_classes,
            "round_trips": r.round_trips,
            "maximality_checks": r.maximality_checks,
            "skipped_lower_dimensional": r.skipped_lower_dimensional,
            "violations": len(r.violations),
        }
        ok &= r.ok
    _emit(out)
    return OK if ok else VERIFY_FAILED


# --- bound and verify-paper -------------------------------------------------------


def cmd_bound(args) -> int:
    P = _polygon(args.polygon)
    if args.heights:
        h = heights_from_json(load_json(args.heights))
        if h.base != P:
            raise InputError("heights base differs from the polygon")
        s = subdivide(P, h)
    else:
        s = theorem14_subdivision(P, args.theorem14)
    g = corrected_graph(s)
    upper = gonality_upper_bound(P)
    res = cg.gonality(g, args.level)
    _emit(
        {
            "upper_bound": upper,
            "graph_gonality": res.gonality,
            "level": args.level,
            "cells": len(s.cells),
            "meets": res.gonality == upper,
        }
    )
    return OK


def _table(results) -> str:
    lines = [f"{'check':<20} {'status':<6} {'runtime':>8}  computed"]
    for r in results:
        lines.append(f"{r.name:<20} {r.status:<6} {r.runtime:>7.2f}s  {r.computed}")
    return "\n".join(lines) + "\n"


def cmd_verify_paper(args) -> int:
    from .verify import CHECKS, verify_paper

    selection = [n for chunk in (args.only or []) for n in chunk.split(",") if n]
    unknown = [n for n in selection if n not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    results = verify_paper(selection or None)
    if args.json:
        # runtimes vary between runs, so they stay out of the JSON body
        _emit([{k: v for k, v in r.to_json().items() if k != "runtime"} for r in results])
    else:
        sys.stdout.write(_table(results))
    return OK if all(r.status == "pass" for r in results) else VERIFY_FAILED


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latgon", description="Lattice polygons, subdivisions and chip-firing gonality.")
    sub = p.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("polygon", help="polygon invariants and equivalence")
    psub = poly.add_subparsers(dest="action", required=True)
    a = psub.add_parser("analyze")
    a.add_argument("file")
    a.set_defaults(func=cmd_polygon_analyze)
    e = psub.add_parser("equiv")
    e.add_argument("a")
    e.add_argument("b")
    e.set_defaults(func=cmd_polygon_equiv)

    s = sub.add_parser("subdivide", help="regular subdivision from a heights file")
    s.add_argument("file")
    s.set_defaults(func=cmd_subdivide)

    d = sub.add_parser("dualgraph", help="dual graph of a subdivision")
    d.add_argument("file")
    d.add_argument("--corrected", action="store_true", help="use chain lengths d on the edges")
    d.add_argument("--format", choices=("json", "dot"), default="json")
    d.set_defaults(func=cmd_dualgraph)

    g = sub.add_parser("gon", help="gonality of a metric graph")
    g.add_argument("file")
    g.add_argument("--level", type=int)
    g.set_defaults(func=cmd_gon)

    r = sub.add_parser("rank", help="rank of a divisor")
    r.add_argument("graph")
    r.add_argument("divisor")
    r.set_defaults(func=cmd_rank)

    rd = sub.add_parser("reduce", help="reduced representative of a divisor")
    rd.add_argument("graph")
    rd.add_argument("divisor")
    rd.add_argument("--base")
    rd.set_defaults(func=cmd_reduce)

    eq = sub.add_parser("equivdiv", help="linear equivalence of two divisors")
    eq.add_argument("graph")
    eq.add_argument("d1")
    eq.add_argument("d2")
    eq.set_defaults(func=cmd_equivdiv)

    c = sub.add_parser("census", help="polygons up to equivalence (see also: census verify FILE)")
    c.add_argument("--min", type=int, default=3)
    c.add_argument("--max", type=int, default=13)
    c.add_argument("--interior", action="store_true")
    c.add_argument("--all-dimensions", action="store_true", help="include points and segments")
    c.add_argument("--out")
    c.set_defaults(func=cmd_census)

    cv = sub.add_parser("census-verify", help=argparse.SUPPRESS)
    cv.prog = "latgon census verify"
    cv.add_argument("file")
    cv.add_argument("--theorem6", action="store_true")
    cv.add_argument("--lemma5", action="store_true")
    cv.set_defaults(func=cmd_census_verify)

    b = sub.add_parser("bound", help="upper bound against graph gonality")
    b.add_argument("polygon")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--heights")
    src.add_argument("--theorem14", type=int, metavar="A")
    b.add_argument("--level", type=int, default=1)
    b.set_defaults(func=cmd_bound)

    v = sub.add_parser("verify-paper", help="run the built-in acceptance checks")
    v.add_argument("--only", action="append", metavar="NAME[,NAME]")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:2] == ["census", "verify"]:
        argv = ["census-verify"] + argv[2:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"latgon: usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (InputError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"latgon: error: {msg}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
