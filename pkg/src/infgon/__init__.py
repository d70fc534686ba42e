"""Exact combinatorics of arc diagrams on the integer line.

Arcs with admissible lengths double as coordinates in a translation quiver;
maximal non-crossing diagrams are validated, classified and mutated exactly
from finite presentations, with a finite-polygon model as brute-force
ground truth.
"""
from .arcs import Arc, Context, admissible_arcs_in_window, crosses, is_admissible, is_overarc
from .diagram import (
    ArcDiagram,
    Classification,
    DiagramError,
    FountainTail,
    NoTail,
    PeriodicTail,
    ValidationReport,
    WindowTooSmallError,
    diagram_from_json_dict,
    diagram_loads,
)
from .mutation import (
    ArcNotInDiagramError,
    InvalidDiagramError,
    MutationOption,
    PSequence,
    StaleOptionError,
    enumerate_mutations,
    find_overarc,
    mutate,
    p_sequence,
)
from .polygon import PolygonAngulation, enumerate_angulations, fuss_catalan, polygon_mutations
from .presets import canonical_fountain, theorem_b_diagram, zigzag
from .quiver import component_index, ext_profile, hom_dim, serre, suspend, tau

__all__ = [
    "Arc",
    "ArcDiagram",
    "ArcNotInDiagramError",
    "Classification",
    "Context",
    "DiagramError",
    "FountainTail",
    "InvalidDiagramError",
    "MutationOption",
    "NoTail",
    "PSequence",
    "PeriodicTail",
    "PolygonAngulation",
    "StaleOptionError",
    "ValidationReport",
    "WindowTooSmallError",
    "admissible_arcs_in_window",
    "canonical_fountain",
    "component_index",
    "crosses",
    "diagram_from_json_dict",
    "diagram_loads",
    "enumerate_angulations",
    "enumerate_mutations",
    "ext_profile",
    "find_overarc",
    "fuss_catalan",
    "hom_dim",
    "is_admissible",
    "is_overarc",
    "mutate",
    "p_sequence",
    "polygon_mutations",
    "serre",
    "suspend",
    "tau",
    "theorem_b_diagram",
    "zigzag",
]
