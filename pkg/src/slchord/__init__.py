"""Chord diagrams on string links, their intersection graphs and GF(2) weight systems."""

from ._kernels import BACKEND
from .diagram import (
    ChordDiagram,
    Endpoint,
    ParseError,
    adjacent_transposition,
    canonical_text,
    connected_components,
    diagram_coproduct,
    parse_diagram,
    relabel_canonical,
    stack_product,
)
from .enumerate import diagram_count, enumerate_diagrams
from .formal import FormalSum
from .gf2 import Gf2Matrix, adjacency_matrix, congruence_witness_check, gf2_det, gf2_rank
from .graph import (
    IntersectionGraph,
    complement_edge,
    graph_coproduct,
    graph_product,
    intersection_graph,
    parse_graph,
    tilde_move,
)
from .harness import SuiteReport, find_adjacency_collisions, run_suite
from .relations import MoveTrace, SlideMove, applicable_slides, apply_slide, is_normal_form, normal_form
from .surgery import HomflyMonomial, components_after_surgery, conway_weight, homfly_weight

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ChordDiagram",
    "Endpoint",
    "FormalSum",
    "Gf2Matrix",
    "HomflyMonomial",
    "IntersectionGraph",
    "MoveTrace",
    "ParseError",
    "SlideMove",
    "SuiteReport",
    "adjacency_matrix",
    "adjacent_transposition",
    "applicable_slides",
    "apply_slide",
    "canonical_text",
    "complement_edge",
    "components_after_surgery",
    "congruence_witness_check",
    "connected_components",
    "conway_weight",
    "diagram_count",
    "diagram_coproduct",
    "enumerate_diagrams",
    "find_adjacency_collisions",
    "gf2_det",
    "gf2_rank",
    "graph_coproduct",
    "graph_product",
    "homfly_weight",
    "intersection_graph",
    "is_normal_form",
    "normal_form",
    "parse_diagram",
    "parse_graph",
    "relabel_canonical",
    "run_suite",
    "stack_product",
    "tilde_move",
]
