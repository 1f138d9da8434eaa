"""Lattice polygons, regular subdivisions and divisor theory on their dual graphs."""

from .chipgraph import (
    DegreeMismatch,
    Divisor,
    MetricGraph,
    Model,
    dhar_burn,
    divisors_equivalent,
    expand_model,
    gamma_r,
    gonality,
    graph_isomorphic,
    rank,
    reduce,
)
from .census import CensusQuery, enumerate_polygons, verify_lemma5, verify_theorem6
from .polygon import (
    AffineLatticeMap,
    LatticePolygon,
    RationalPolygon,
    apply_map,
    are_equivalent,
    canonical_form,
    genus,
    gonality_upper_bound,
    interior_hull,
    lattice_points,
    lattice_width,
    lattice_width_recursive,
    recognize_standard,
    relaxed_hull,
    staircase_family,
    standard_simplex,
    upsilon,
)
from .subdivision import (
    HeightFunction,
    RegularSubdivision,
    corrected_graph,
    dual_graph,
    subdivide,
    theorem14_subdivision,
)

__version__ = "0.1.0"

__all__ = [
    "CensusQuery",
    "enumerate_polygons",
    "verify_lemma5",
    "verify_theorem6",
    "DegreeMismatch",
    "Divisor",
    "MetricGraph",
    "Model",
    "dhar_burn",
    "divisors_equivalent",
    "expand_model",
    "gamma_r",
    "gonality",
    "graph_isomorphic",
    "rank",
    "reduce",
    "AffineLatticeMap",
    "LatticePolygon",
    "RationalPolygon",
    "apply_map",
    "are_equivalent",
    "canonical_form",
    "genus",
    "gonality_upper_bound",
    "interior_hull",
    "lattice_points",
    "lattice_width",
    "lattice_width_recursive",
    "recognize_standard",
    "relaxed_hull",
    "staircase_family",
    "standard_simplex",
    "upsilon",
    "HeightFunction",
    "RegularSubdivision",
    "corrected_graph",
    "dual_graph",
    "subdivide",
    "theorem14_subdivision",
]
