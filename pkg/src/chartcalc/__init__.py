"""chartcalc: construct, validate, transform and analyze charts on the sphere.

Charts are the planar diagrams of surface-braid theory: oriented labeled
graphs whose vertices have degree 1 (black), 4 (crossing) or 6 (white),
subject to local label/orientation axioms.  The package provides the
combinatorial-map data model, axiom and normal-form validation, label
subgraphs and shape detection, region analysis (angled disks, lenses,
in/out balance counting), an auditable local-move rewriting engine,
pseudo-chart pattern matching, bounded enumeration and a CLI.
"""

from chartcalc.core import (
    Chart,
    ChartBuilder,
    Dart,
    canonical_form,
    canonical_key,
    empty_chart,
    face_walk,
    parse_chart,
    serialize_chart,
)

__version__ = "0.1.0"

__all__ = [
    "Chart",
    "ChartBuilder",
    "Dart",
    "canonical_form",
    "canonical_key",
    "empty_chart",
    "face_walk",
    "parse_chart",
    "serialize_chart",
    "__version__",
]
