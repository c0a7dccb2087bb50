"""Multipath cohomology of directed graphs."""

from __future__ import annotations

from .algebra import Algebra, algebra_betti, build_algebra_complex, dual_numbers, parse_algebra, qdim
from .cohomology import (
    BettiTable,
    CochainComplex,
    betti_numbers,
    build_field_complex,
    multipath_betti,
    verify_d_squared,
)
from .digraph import Digraph, GluingMap, build_digraph, disjoint_union, glue, is_multipath, reverse_orientation
from .euler import chi_alpha, graded_euler, leaf_configurations, leaf_sequence_dimension_check
from .families import (
    GraphFamily,
    alternating,
    dandelion,
    family,
    h_graph,
    linear,
    parse_family,
    polygon,
    sink_star,
    source_star,
)
from .linalg import QQ, FieldSpec
from .linear import analyze, closed_form_betti, linear_from_word, recursion_check_alternating
from .poset import PathPoset, enumerate_path_poset, level_counts, verify_poset_axioms
from .polynomial import LaurentPolynomial
from .signs import SignAssignment, canonical_sign, verify_sign
from .simplicial import build_multipath_complex, reduced_simplicial_betti, verify_shift_isomorphism
from .structure import (
    acyclicity_report,
    decompose_at_vertex,
    detect_cone_edge,
    mayer_vietoris_check,
    suspend,
    wedge_family,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra", "BettiTable", "CochainComplex", "Digraph", "FieldSpec", "GluingMap", "GraphFamily",
    "LaurentPolynomial", "PathPoset", "QQ", "SignAssignment", "acyclicity_report", "algebra_betti",
    "alternating", "analyze", "betti_numbers", "build_algebra_complex", "build_digraph",
    "build_field_complex", "build_multipath_complex", "canonical_sign", "chi_alpha",
    "closed_form_betti", "dandelion", "decompose_at_vertex", "detect_cone_edge", "disjoint_union",
    "dual_numbers", "enumerate_path_poset", "family", "glue", "graded_euler", "h_graph",
    "is_multipath", "leaf_configurations", "leaf_sequence_dimension_check", "level_counts", "linear",
    "linear_from_word", "mayer_vietoris_check", "multipath_betti", "parse_algebra", "parse_family",
    "polygon", "qdim", "recursion_check_alternating", "reduced_simplicial_betti",
    "reverse_orientation", "sink_star", "source_star", "suspend", "verify_d_squared",
    "verify_poset_axioms", "verify_shift_isomorphism", "verify_sign", "wedge_family",
]
