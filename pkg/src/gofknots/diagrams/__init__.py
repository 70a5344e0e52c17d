"""Heegaard diagrams, curves on them and bounded curve search."""

from gofknots.diagrams.complex import FREE, V, W, Cell, Side, StandardDiagram, build_standard_diagram
from gofknots.diagrams.curves import (
    GofVerdict,
    InvalidCurve,
    NormalCurve,
    Transit,
    complement_euler_characteristics,
    in_minimal_position,
    is_essential,
    is_gof,
    read_word,
)
from gofknots.diagrams.enumerate import DEFAULT_MAX_FREE, enumerate_curves, search_gof
from gofknots.diagrams.fileio import (
    CurveRecord,
    list_fixtures,
    load_curve,
    load_diagram,
    load_fixture,
    save_curve,
)
from gofknots.diagrams.render import render_svg
from gofknots.diagrams.surgery import apply_disk_surgery_word, inverse_pair_positions, surgery_fixpoint

__all__ = [
    "FREE",
    "V",
    "W",
    "Cell",
    "Side",
    "StandardDiagram",
    "build_standard_diagram",
    "GofVerdict",
    "InvalidCurve",
    "NormalCurve",
    "Transit",
    "complement_euler_characteristics",
    "in_minimal_position",
    "is_essential",
    "is_gof",
    "read_word",
    "DEFAULT_MAX_FREE",
    "enumerate_curves",
    "search_gof",
    "CurveRecord",
    "list_fixtures",
    "load_curve",
    "load_diagram",
    "load_fixture",
    "save_curve",
    "render_svg",
    "apply_disk_surgery_word",
    "inverse_pair_positions",
    "surgery_fixpoint",
]
