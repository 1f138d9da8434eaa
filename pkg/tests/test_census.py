import pytest

from latgon.bruteforce import brute_force_classes
from latgon.census import (
    CensusQuery,
    enumerate_polygons,
    read_census,
    two_dimensional_classes,
    verify_lemma5,
    verify_theorem6,
    write_census,
)
from latgon.polygon import (
    LatticePolygon,
    canonical_form,
    interior_hull,
    is_interior_polygon,
    lattice_points,
    lattice_width,
    lattice_width_recursive,
    standard_simplex,
)


def test_query_validation():
    with pytest.raises(ValueError):
        CensusQuery(min_points=2)
    with pytest.raises(ValueError):
        CensusQuery(min_points=5, max_points=4)
    assert CensusQuery(min_points=1, require_two_dimensional=False).min_points == 1


def test_three_points_is_one_class():
    polys = enumerate_polygons(CensusQuery(3, 3))
    assert len(polys) == 1
    assert polys[0] == canonical_form(standard_simplex(1))


def test_lower_dimensional_classes_included_on_request():
    polys = enumerate_polygons(CensusQuery(2, 3, require_two_dimensional=False))
    segments = [P for P in polys if P.dimension == 1]
    assert sorted(len(lattice_points(P)) for P in segments) == [2, 3]
    assert len(polys) == 3


def test_growth_matches_brute_force():
    grown = two_dimensional_classes(6)
    brute = brute_force_classes(6, box=7)
    assert {n: {P.vertices for P in ps} for n, ps in grown.items()} == brute


def test_brute_force_box_invariance():
    assert brute_force_classes(5, box=6) == brute_force_classes(5, box=8)


def test_seed_invariance():
    a = two_dimensional_classes(9)
    b = two_dimensional_classes(9, seed=LatticePolygon.hull([(4, -3), (5, -3), (9, -2)]))
    assert a == b


def test_parallel_run_is_identical(monkeypatch):
    serial = two_dimensional_classes(10)
    monkeypatch.setenv("LATGON_THREADS", "2")
    assert two_dimensional_classes(10) == serial


def test_canonical_representatives_are_distinct_and_fixed(census13):
    keys = [P.vertices for P in census13]
    assert len(keys) == len(set(keys)) == 1143
    for P in census13[::37]:
        assert canonical_form(P) == P


def test_width_algorithms_agree_on_census(census13):
    for P in census13:
        assert lattice_width(P).width == lattice_width_recursive(P)


def test_interior_count(census13):
    interior = [P for P in census13 if is_interior_polygon(P)]
    assert len(interior) == 176
    ten = [P for P in interior if len(lattice_points(P)) == 10]
    assert sum(1 for P in ten if len(lattice_points(interior_hull(P))) == 2) == 6


def test_interior_filter_agrees_with_predicate():
    q = CensusQuery(3, 9, require_interior=True)
    filtered = enumerate_polygons(q)
    everything = enumerate_polygons(CensusQuery(3, 9))
    assert filtered == [P for P in everything if is_interior_polygon(P)]


def test_theorem6_report(census13):
    rep = verify_theorem6(census13)
    assert rep.ok
    assert rep.checked == 1143
    assert rep.exceptional == 2  # 2Sigma and 3Sigma are the only simplices with <= 13 points


def test_lemma5_report(census13):
    rep = verify_lemma5(census13)
    assert rep.ok
    assert rep.round_trips == rep.interior_classes == 176
    assert rep.maximality_checks + rep.skipped_lower_dimensional == 1143


def test_lemma5_skips_three_sigma():
    rep = verify_lemma5([canonical_form(standard_simplex(3))])
    assert rep.skipped_lower_dimensional == 1 and rep.maximality_checks == 0


def test_census_file_roundtrip(tmp_path):
    polys = enumerate_polygons(CensusQuery(3, 7))
    path = tmp_path / "c.jsonl"
    write_census(polys, path)
    lines = path.read_text().splitlines()
    assert lines == sorted(lines)
    assert sorted(read_census(path), key=lambda P: P.vertices) == polys


def test_read_census_reports_line_numbers(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"vertices": [[0,0],[1,0],[0,1]]}\n{"vertices": [[0,"x"]]}\n')
    with pytest.raises(ValueError, match=":2:"):
        read_census(path)
