import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latgon.polygon import (
    AffineLatticeMap,
    HalfPlane,
    LatticePolygon,
    RationalPolygon,
    apply_map,
    are_equivalent,
    canonical_form,
    dilate,
    genus,
    gonality_upper_bound,
    hirzebruch,
    integral_length,
    interior_hull,
    interior_points,
    is_interior_polygon,
    kawaguchi,
    lattice_points,
    lattice_width,
    lattice_width_recursive,
    recognize_standard,
    rect,
    relaxed_hull,
    standard_simplex,
    staircase_family,
    upsilon,
    width_in_direction,
)

from .oracles import boundary_count, brute_width, scan_points, shoelace2

SIGMA = standard_simplex(1)
TWO_UPSILON = dilate(upsilon(), 2)
SQUARE = rect(1, 1)
SHEAR = AffineLatticeMap(((1, 1), (0, 1)))

points = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
polygons = st.lists(points, min_size=1, max_size=7).map(LatticePolygon.hull)
two_dim = polygons.filter(lambda P: P.dimension == 2)


def random_unimodular(rng: random.Random) -> AffineLatticeMap:
    gens = [((1, 1), (0, 1)), ((1, -1), (0, 1)), ((1, 0), (1, 1)), ((1, 0), (-1, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, 1))]
    m = AffineLatticeMap.identity()
    for _ in range(rng.randint(0, 6)):
        m = AffineLatticeMap(rng.choice(gens)).compose(m)
    return AffineLatticeMap(m.matrix, (rng.randint(-20, 20), rng.randint(-20, 20)))


# --- construction ---------------------------------------------------------------


def test_vertices_are_canonical_ccw_from_lex_min():
    P = LatticePolygon.hull([(2, 2), (0, 0), (2, 0), (0, 2), (1, 1), (1, 0)])
    assert P.vertices == ((0, 0), (2, 0), (2, 2), (0, 2))


def test_dimensions():
    assert LatticePolygon.empty().dimension == -1
    assert LatticePolygon.hull([(3, 4)]).dimension == 0
    assert LatticePolygon.hull([(0, 0), (1, 1), (2, 2)]).dimension == 1
    assert SIGMA.dimension == 2


def test_halfplane_relaxed_pushes_out_by_one():
    h = HalfPlane(1, 1, 1)
    assert h.contains((0, 1)) and not h.contains((0, 1), strict=True)
    assert h.relaxed().contains((1, 1))
    assert not h.relaxed().contains((2, 1))


# --- lattice points and genus ------------------------------------------------------


def test_lattice_points_examples():
    assert lattice_points(SIGMA) == [(0, 0), (0, 1), (1, 0)]
    assert len(lattice_points(TWO_UPSILON)) == 10
    assert lattice_points(LatticePolygon.empty()) == []


def test_genus_examples():
    assert genus(TWO_UPSILON) == 4
    assert genus(SIGMA) == 0
    assert genus(LatticePolygon.hull([(-3, 0), (3, 0), (0, 3)])) == 4


@settings(max_examples=200, deadline=None)
@given(polygons)
def test_lattice_points_match_scan(P):
    assert sorted(lattice_points(P)) == scan_points(P.vertices)


@settings(max_examples=200, deadline=None)
@given(two_dim)
def test_pick(P):
    area2, b = shoelace2(P.vertices), boundary_count(P.vertices)
    assert P.twice_area() == area2
    assert P.boundary_point_count() == b
    assert 2 * genus(P) == area2 - b + 2
    assert sorted(interior_points(P)) == scan_points(P.vertices, strict=True)


def test_integral_length():
    assert integral_length((-1, 1), (1, 1)) == 2
    assert integral_length((3, 0), (1, 1)) == 1
    assert integral_length((2, 5), (2, 5)) == 0


# --- hulls -------------------------------------------------------------------------


def test_interior_hull_examples():
    assert interior_hull(standard_simplex(3)) == LatticePolygon.hull([(1, 1)])
    assert interior_hull(standard_simplex(2)).is_empty
    assert are_equivalent(interior_hull(TWO_UPSILON), upsilon()) is not None


@pytest.mark.parametrize("d", range(3, 9))
def test_interior_of_simplex_is_smaller_simplex(d):
    inner = interior_hull(standard_simplex(d))
    if d == 3:
        assert inner.dimension == 0
    else:
        assert are_equivalent(inner, standard_simplex(d - 3)) is not None


def test_relaxed_hull_examples():
    R = relaxed_hull(upsilon())
    assert R.is_lattice and R.to_lattice() == TWO_UPSILON
    for d in (1, 2, 5):
        R = relaxed_hull(standard_simplex(d))
        assert R.is_lattice
        assert R.to_lattice() == standard_simplex(d + 3).translate((-1, -1))
    assert relaxed_hull(SQUARE).to_lattice() == LatticePolygon.hull([(-1, -1), (2, -1), (2, 2), (-1, 2)])


def test_relaxed_hull_can_be_rational():
    # y >= -1 meets 5x - 2y >= -1 at x = -3/5
    R = relaxed_hull(LatticePolygon.hull([(0, 0), (1, 0), (2, 5)]))
    assert isinstance(R, RationalPolygon)
    assert not R.is_lattice
    assert (Fraction(-3, 5), Fraction(-1)) in R.vertices
    with pytest.raises(ValueError):
        R.to_lattice()


def test_relaxed_hull_needs_two_dimensions():
    with pytest.raises(ValueError):
        relaxed_hull(LatticePolygon.hull([(0, 0), (2, 0)]))


def test_is_interior_polygon_examples():
    assert is_interior_polygon(upsilon())
    assert is_interior_polygon(SIGMA)
    assert is_interior_polygon(SQUARE)
    assert not is_interior_polygon(LatticePolygon.hull([(0, 0), (1, 0), (2, 5)]))


# --- lattice width -----------------------------------------------------------------


def test_width_in_direction_examples():
    assert width_in_direction(standard_simplex(4), (0, 1)) == 4
    assert width_in_direction(TWO_UPSILON, (1, 1)) == 6
    assert width_in_direction(LatticePolygon.hull([(3, -2)]), (5, 7)) == 0
    with pytest.raises(ValueError):
        width_in_direction(LatticePolygon.empty(), (1, 0))


@pytest.mark.parametrize("d", range(1, 9))
def test_lattice_width_of_simplex(d):
    assert lattice_width(standard_simplex(d)).width == d
    assert lattice_width_recursive(standard_simplex(d)) == d


def test_lattice_width_examples():
    assert lattice_width(TWO_UPSILON).width == 4
    assert lattice_width_recursive(TWO_UPSILON) == 4
    assert lattice_width(hirzebruch(2, 3, 1)).width == 3
    assert lattice_width_recursive(standard_simplex(4)) == 4
    assert lattice_width(LatticePolygon.empty()).width == -1
    prism = LatticePolygon.hull([(0, 0), (4, 0), (0, 1), (7, 1)])
    assert lattice_width(prism).width == 1 == lattice_width_recursive(prism)


@settings(max_examples=150, deadline=None)
@given(two_dim)
def test_lattice_width_matches_brute_force_and_certificate(P):
    w = lattice_width(P)
    assert w.width == brute_width(P.vertices)
    assert width_in_direction(P, w.direction) == w.width
    assert lattice_width_recursive(P) == w.width


def test_lattice_width_invariant_under_unimodular_maps():
    rng = random.Random(1729)
    shapes = [TWO_UPSILON, standard_simplex(5), hirzebruch(2, 3, 1), rect(3, 5), LatticePolygon.hull([(0, 0), (5, 1), (2, 4)])]
    for _ in range(1000):
        P = rng.choice(shapes)
        Q = apply_map(P, random_unimodular(rng))
        assert lattice_width(Q).width == lattice_width(P).width


# --- maps and equivalence ----------------------------------------------------------


def test_apply_map_examples():
    assert apply_map(TWO_UPSILON, AffineLatticeMap.identity()) == TWO_UPSILON
    assert apply_map(SIGMA, SHEAR) == LatticePolygon.hull([(0, 0), (1, 0), (1, 1)])
    moved = apply_map(TWO_UPSILON, AffineLatticeMap(((1, 0), (0, 1)), (5, -7)))
    assert moved == TWO_UPSILON.translate((5, -7))


def test_non_unimodular_map_rejected():
    with pytest.raises(ValueError):
        AffineLatticeMap(((2, 0), (0, 1)))


def test_map_inverse_and_compose():
    rng = random.Random(7)
    for _ in range(50):
        m = random_unimodular(rng)
        assert apply_map(apply_map(TWO_UPSILON, m), m.inverse()) == TWO_UPSILON
        assert m.compose(m.inverse()) == AffineLatticeMap.identity()


def test_are_equivalent_examples():
    assert are_equivalent(SIGMA, LatticePolygon.hull([(0, 0), (1, 0), (1, 1)])) is not None
    assert are_equivalent(standard_simplex(2), standard_simplex(3)) is None
    Q = apply_map(TWO_UPSILON, SHEAR)
    m = are_equivalent(TWO_UPSILON, Q)
    assert m is not None and apply_map(TWO_UPSILON, m) == Q


def test_equivalence_is_an_equivalence_relation():
    rng = random.Random(11)
    shapes = [TWO_UPSILON, hirzebruch(2, 3, 1), rect(2, 3), LatticePolygon.hull([(0, 0), (3, 0), (1, 2)])]
    for P in shapes:
        assert are_equivalent(P, P) is not None
        Q = apply_map(P, random_unimodular(rng))
        R = apply_map(Q, random_unimodular(rng))
        m = are_equivalent(P, Q)
        assert apply_map(P, m) == Q
        assert apply_map(Q, are_equivalent(Q, P)) == P
        assert apply_map(P, are_equivalent(P, R)) == R
    for P, Q in zip(shapes, shapes[1:]):
        assert are_equivalent(P, Q) is None


@settings(max_examples=100, deadline=None)
@given(two_dim, st.randoms(use_true_random=False))
def test_canonical_form_is_a_class_invariant(P, r):
    Q = apply_map(P, random_unimodular(r))
    assert canonical_form(P) == canonical_form(Q)
    assert are_equivalent(canonical_form(P), P) is not None


# --- recognizers and families ----------------------------------------------------------


def test_recognize_standard_examples():
    assert recognize_standard(LatticePolygon.hull([(0, 0), (5, 0), (0, 5)])) == ("simplex", 5)
    assert recognize_standard(apply_map(TWO_UPSILON, SHEAR)).kind == "2upsilon"
    assert recognize_standard(SQUARE).kind == "other"


def test_gonality_upper_bound_examples():
    assert gonality_upper_bound(standard_simplex(5)) == 4
    assert gonality_upper_bound(TWO_UPSILON) == 3
    assert gonality_upper_bound(rect(3, 5)) == 3
    with pytest.raises(ValueError):
        gonality_upper_bound(LatticePolygon.hull([(0, 0), (3, 0)]))


def test_staircase_family():
    P = staircase_family(2, 4, [2, 2, 2, 1, 0])
    assert P == LatticePolygon.hull([(0, 0), (0, 2), (1, 2), (2, 2), (3, 1), (4, 0)])
    assert staircase_family(2, 4, [(0, 2), (2, 2), (4, 0)]) == P


def test_staircase_family_rejects_non_concave_values():
    with pytest.raises(ValueError):
        staircase_family(2, 4, [2, 2, 1, 1, 0])


def test_hirzebruch_and_kawaguchi():
    assert hirzebruch(2, 3, 1) == LatticePolygon.hull([(0, 0), (5, 0), (2, 3), (0, 3)])
    assert lattice_width(hirzebruch(2, 4, 0)).width == 2
    with pytest.raises(ValueError):
        kawaguchi(2, 3, 1, [(0, 2), (3, 0)])
