import json

import pytest

from latgon import cli, verify

CHAIN_EXAMPLE_HEIGHTS = {
    "base": {"vertices": [[-3, 0], [3, 0], [0, 3]]},
    "heights": [[-1, 1, 0], [1, 1, 0], [0, 2, 0], [-3, 0, 1], [3, 0, 1], [0, 3, 1]],
}
GAMMA2 = {"vertices": ["v1", "v2"], "edges": [["v1", "v2", 1], ["v1", "v2", 1]]}


@pytest.fixture
def files(tmp_path):
    def put(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return put


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_polygon_analyze(capsys, files):
    f = files("p.json", {"vertices": [[-2, -2], [2, 0], [0, 2]]})
    code, out, _ = run(capsys, "polygon", "analyze", f)
    data = json.loads(out)
    assert code == 0
    assert data["genus"] == 4
    assert data["lattice_width"]["width"] == 4 == data["lattice_width"]["recursive"]
    assert data["classification"]["kind"] == "2upsilon"
    assert data["gonality_upper_bound"] == 3
    assert data["relaxed_hull"] == {"is_lattice": True, "vertices": [["-3/1", "-3/1"], ["3/1", "0/1"], ["0/1", "3/1"]]}
    assert data["interior_hull"] == {"vertices": [[-1, -1], [1, 0], [0, 1]]}


def test_polygon_equiv(capsys, files):
    a = files("a.json", {"vertices": [[0, 0], [1, 0], [0, 1]]})
    b = files("b.json", {"vertices": [[0, 0], [1, 0], [1, 1]]})
    c = files("c.json", {"vertices": [[0, 0], [2, 0], [0, 2]]})
    code, out, _ = run(capsys, "polygon", "equiv", a, b)
    assert code == 0 and json.loads(out)["equivalent"] is True
    code, out, _ = run(capsys, "polygon", "equiv", a, c)
    assert code == 0 and json.loads(out) == {"equivalent": False, "map": None}


def test_subdivide_and_dualgraph(capsys, files):
    h = files("h.json", CHAIN_EXAMPLE_HEIGHTS)
    code, out, _ = run(capsys, "subdivide", h)
    data = json.loads(out)
    assert code == 0 and len(data["cells"]) == 4
    assert sorted(a["d"] for a in data["adjacencies"]) == [1, 1, 1, 1, 1, 2]
    code, out, _ = run(capsys, "dualgraph", h)
    assert len(json.loads(out)["edges"]) == 7
    code, out, _ = run(capsys, "dualgraph", h, "--corrected")
    assert sorted(e[2] for e in json.loads(out)["edges"]) == [1, 1, 1, 1, 1, 1, 2]
    code, out, _ = run(capsys, "dualgraph", h, "--corrected", "--format", "dot")
    assert code == 0 and out.startswith("graph")


def test_gon(capsys, files):
    g = files("g.json", GAMMA2)
    code, out, _ = run(capsys, "gon", g)
    data = json.loads(out)
    assert code == 0 and data["gonality"] == 2 and data["stable"]
    assert [lv["level"] for lv in data["levels"]] == [1, 2, 3]
    code, out, _ = run(capsys, "gon", g, "--level", "2")
    assert json.loads(out)["gonality"] == 2


def test_rank_reduce_equivdiv(capsys, files):
    g = files("g.json", {"vertices": ["v1", "v2", "v3"], "edges": [["v1", "v2", 1]] * 2 + [["v2", "v3", 1]] * 3})
    d = files("d.json", {"coeffs": {"v3": 3}})
    code, out, _ = run(capsys, "reduce", g, d, "--base", "v1")
    assert code == 0 and json.loads(out)["reduced"] == {"coeffs": {"v1": 2, "v2": 1}}
    code, out, _ = run(capsys, "rank", g, files("e.json", {"coeffs": {"v1": 1, "v2": 1, "v3": 1}}))
    assert json.loads(out) == {"degree": 3, "rank": 1}
    code, out, _ = run(capsys, "equivdiv", g, d, files("f.json", {"coeffs": {"v1": 2, "v2": 1}}))
    assert code == 0 and json.loads(out) == {"equivalent": True}
    code, _, err = run(capsys, "equivdiv", g, d, files("h.json", {"coeffs": {"v1": 1}}))
    assert code == 1 and "degree" in err


def test_chain_vertex_labels(capsys, files):
    g = files("g.json", {"vertices": ["a", "b"], "edges": [["a", "b", 2]]})
    code, out, _ = run(capsys, "reduce", g, files("d.json", {"coeffs": {"e0_1": 1}}), "--base", "a")
    assert code == 0 and json.loads(out)["reduced"] == {"coeffs": {"a": 1}}


def test_census_and_verify(capsys, tmp_path):
    out_file = tmp_path / "c.jsonl"
    code, out, _ = run(capsys, "census", "--min", "3", "--max", "8", "--out", str(out_file))
    assert code == 0 and json.loads(out)["classes"] == 85
    code, out, _ = run(capsys, "census", "verify", "--theorem6", "--lemma5", str(out_file))
    data = json.loads(out)
    assert code == 0 and data["theorem6"]["violations"] == 0 and data["lemma5"]["violations"] == 0
    code, out, _ = run(capsys, "census", "--max", "4", "--all-dimensions", "--min", "1")
    assert code == 0 and len(out.splitlines()) == 1 + 3 + 1 + 3


def test_census_usage_errors(capsys):
    assert run(capsys, "census", "--min", "2")[0] == 2
    assert run(capsys, "census", "--bogus")[0] == 2


def test_bound(capsys, files):
    p = files("p.json", {"vertices": [[0, 0], [4, 0], [0, 3]]})
    code, out, _ = run(capsys, "bound", p, "--theorem14", "3")
    assert code == 0 and json.loads(out) == {"cells": 3, "graph_gonality": 3, "level": 1, "meets": True, "upper_bound": 3}
    e = files("e.json", CHAIN_EXAMPLE_HEIGHTS["base"])
    code, out, _ = run(capsys, "bound", e, "--heights", files("h.json", CHAIN_EXAMPLE_HEIGHTS))
    data = json.loads(out)
    assert code == 0 and data["upper_bound"] == 3 and data["graph_gonality"] <= 3
    flat = files("flat.json", {"base": {"vertices": [[0, 0], [4, 0], [0, 3]]}, "heights": [[0, 0, 0], [4, 0, 0], [0, 3, 0]]})
    code, out, _ = run(capsys, "bound", p, "--heights", flat)
    assert json.loads(out)["graph_gonality"] == 1


def test_input_errors(capsys, files):
    bad = files("bad.json", '{"vertices": [[0, 0],\n [1, }')
    code, _, err = run(capsys, "polygon", "analyze", bad)
    assert code == 1 and "bad.json:2:" in err
    code, _, err = run(capsys, "polygon", "analyze", "/nonexistent/p.json")
    assert code == 1
    code, _, err = run(capsys, "polygon", "analyze", files("x.json", {"vertices": [[0, 0.5]]}))
    assert code == 1
    code, _, err = run(capsys, "rank", files("g.json", GAMMA2), files("d.json", {"coeffs": {"zz": 1}}))
    assert code == 1 and "zz" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    code, _, err = run(capsys, "verify-paper", "--only", "no-such-check")
    assert code == 2 and "no-such-check" in err


def test_verify_paper_selection(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "lw-simplex", "--json")
    data = json.loads(out)
    assert code == 0 and len(data) == 1
    assert data[0]["status"] == "pass"
    assert data[0]["computed"]["5Sigma"] == [5, 5] == data[0]["expected"]["5Sigma"]
    assert data[0]["provenance"].startswith("[PAPER]")
    code, out, _ = run(capsys, "verify-paper", "--only", "gamma-gonality")
    assert code == 0 and "gamma-gonality" in out and "pass" in out


def test_verify_paper_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(verify.CHECKS, "lw-simplex", lambda: ({"x": 1}, "[TRIVIAL]", {"x": 2}))
    assert run(capsys, "verify-paper", "--only", "lw-simplex")[0] == 3


def test_every_check_registered_once():
    assert len(verify.CHECKS) == 10


def test_output_is_deterministic(capsys, files):
    h = files("h.json", CHAIN_EXAMPLE_HEIGHTS)
    first = run(capsys, "subdivide", h)[1]
    assert run(capsys, "subdivide", h)[1] == first
    g = files("g.json", GAMMA2)
    assert run(capsys, "gon", g)[1] == run(capsys, "gon", g)[1]
