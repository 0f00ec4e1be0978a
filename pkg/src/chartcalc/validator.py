"""Chart axiom checking and minimal-normal-form lints.

The four chart axioms (degree/kind conformance, label range, the local
shape at white vertices, coherent crossings with label gap > 1) are hard
requirements of validity.  The normal-form assumptions are deliberately
reported as lints rather than errors: the move engine must be able to
pass through intermediate states that violate them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from chartcalc.core import (
    BLACK,
    CROSSING,
    IN,
    MARKER,
    NODE_DEGREE,
    OUT,
    WHITE,
    Chart,
    check_structure,
)
from chartcalc.errors import AxiomIIIViolated, NotAWhiteVertex

__all__ = [
    "ValidationReport",
    "check_axioms",
    "middle_arcs",
    "is_middle_arc",
    "check_minimal_form",
    "white_local_shape_ok",
]


@dataclass
class ValidationReport:
    """Collected axiom and lint failures.

    ``axiom_failures`` empty  <=>  the chart is a valid chart.
    Lint failures flag departures from the minimal normal form only.
    """

    axiom_failures: list[tuple[str, str, str]] = field(default_factory=list)
    lint_failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.axiom_failures

    @property
    def clean(self) -> bool:
        return not self.axiom_failures and not self.lint_failures

    def render_text(self) -> str:
        lines = []
        for rule, loc, msg in self.axiom_failures:
            lines.append(f"axiom {rule} at {loc}: {msg}")
        for rule, loc, msg in self.lint_failures:
            lines.append(f"lint {rule} at {loc}: {msg}")
        if not lines:
            lines.append("ok")
        return "\n".join(lines) + "\n"

    def render_jsonl(self) -> str:
        lines = []
        for kind, triples in (("axiom", self.axiom_failures), ("lint", self.lint_failures)):
            for rule, loc, msg in triples:
                lines.append(
                    json.dumps(
                        {"kind": kind, "rule": rule, "location": loc, "message": msg},
                        sort_keys=True,
                    )
                )
        return "\n".join(lines) + ("\n" if lines else "")


def white_local_shape_ok(directions: list[str], labels: list[int]) -> bool:
    """Local validity of a degree-6 vertex, on its counterclockwise germ
    sequence: exactly three consecutive inward arcs (hence three
    consecutive outward), labels alternating between two values that
    differ by one.
    """
    if len(directions) != 6 or len(labels) != 6:
        return False
    if labels[0] != labels[2] or labels[2] != labels[4]:
        return False
    if labels[1] != labels[3] or labels[3] != labels[5]:
        return False
    if abs(labels[0] - labels[1]) != 1:
        return False
    if sum(1 for d in directions if d == IN) != 3:
        return False
    # Three consecutive (cyclically): exactly one in->out transition.
    flips = sum(
        1 for i in range(6) if directions[i] == IN and directions[(i + 1) % 6] == OUT
    )
    return flips == 1


def check_axioms(chart: Chart) -> ValidationReport:
    """Report every axiom violation; never raises on chart content."""
    check_structure(chart)
    report = ValidationReport()
    n = chart.braid_index

    for node, kind in chart.nodes.items():
        deg = chart.degree(node)
        if deg != NODE_DEGREE[kind]:
            report.axiom_failures.append(
                ("i", node, f"{kind} vertex has degree {deg}, expected {NODE_DEGREE[kind]}")
            )
        if kind == MARKER and deg == 2:
            a, b = (chart.dart(d) for d in chart.rotation[node])
            if a.label != b.label:
                report.axiom_failures.append(("i", node, "marker darts carry different labels"))
            if a.direction == b.direction:
                report.axiom_failures.append(("i", node, "marker darts share a direction"))

    for did, d in chart.darts.items():
        if not 1 <= d.label <= n - 1:
            report.axiom_failures.append(
                ("ii", did, f"label {d.label} outside [1, {n - 1}]")
            )

    for node, kind in chart.nodes.items():
        if kind == WHITE and chart.degree(node) == 6:
            rot = chart.rotation[node]
            dirs = [chart.dart(d).direction for d in rot]
            labels = [chart.dart(d).label for d in rot]
            if not white_local_shape_ok(dirs, labels):
                report.axiom_failures.append(
                    (
                        "iii",
                        node,
                        "white vertex arcs must be three consecutive inward, three "
                        "consecutive outward, labels alternating i, i+1",
                    )
                )
        elif kind == CROSSING and chart.degree(node) == 4:
            rot = chart.rotation[node]
            darts = [chart.dart(d) for d in rot]
            for p in (0, 1):
                a, b = darts[p], darts[p + 2]
                if a.label != b.label:
                    report.axiom_failures.append(
                        ("iv", node, f"diagonal darts {a.id}/{b.id} carry different labels")
                    )
                if a.direction == b.direction:
                    report.axiom_failures.append(
                        ("iv", node, f"diagonal through {node} is not coherently oriented")
                    )
            if abs(darts[0].label - darts[1].label) <= 1:
                report.axiom_failures.append(
                    (
                        "iv",
                        node,
                        f"crossing labels {darts[0].label}, {darts[1].label} must differ by more than 1",
                    )
                )
    return report


def middle_arcs(chart: Chart, white: str) -> tuple[str, str]:
    """The two middle arcs at a white vertex: the central dart of the
    inward run and the central dart of the outward run, in that order.
    """
    if chart.nodes.get(white) != WHITE:
        raise NotAWhiteVertex(f"{white} is not a white vertex")
    rot = chart.rotation.get(white, ())
    if len(rot) != 6:
        raise AxiomIIIViolated(f"white vertex {white} has degree {len(rot)}")
    dirs = [chart.dart(d).direction for d in rot]
    labels = [chart.dart(d).label for d in rot]
    if not white_local_shape_ok(dirs, labels):
        raise AxiomIIIViolated(f"white vertex {white} violates the local shape")
    for r in range(6):
        if all(dirs[(r + k) % 6] == IN for k in range(3)):
            return rot[(r + 1) % 6], rot[(r + 4) % 6]
    raise AxiomIIIViolated(f"white vertex {white}: no inward run found")


def is_middle_arc(chart: Chart, dart_id: str) -> bool:
    """True when the dart is a middle arc at its (white) origin."""
    d = chart.dart(dart_id)
    if chart.nodes.get(d.origin) != WHITE:
        return False
    try:
        return dart_id in middle_arcs(chart, d.origin)
    except AxiomIIIViolated:
        return False


def check_minimal_form(chart: Chart) -> ValidationReport:
    """Normal-form lints, reported on top of the axiom check.

    (a) no terminal edge contains a crossing; (b) no free edge contains
    a crossing; (c) no free edges and no simple hoops at all (they are
    kept near infinity and excluded from the serialized chart); (d) each
    complementary domain of every ring and hoop contains at least one
    white vertex.
    """
    from chartcalc.regions import split_sides
    from chartcalc.subgraphs import extract_subgraph

    report = check_axioms(chart)
    for m in range(1, chart.braid_index):
        gamma = extract_subgraph(chart, m)
        for edge in gamma.edges:
            interior_crossings = [
                node for node in edge.through_nodes if chart.nodes[node] == CROSSING
            ]
            if edge.kind == "terminal" and interior_crossings:
                report.lint_failures.append(
                    ("2.2", edge.describe(), "terminal edge contains a crossing")
                )
            if edge.kind == "free":
                if interior_crossings:
                    report.lint_failures.append(
                        ("2.3", edge.describe(), "free edge contains a crossing")
                    )
                report.lint_failures.append(
                    ("2.4", edge.describe(), "free edge present in the serialized chart")
                )
            if edge.kind == "hoop":
                # A disjoint closed curve always bounds an empty side under
                # the ambient-placement convention, so every hoop is simple.
                report.lint_failures.append(
                    ("2.4", edge.describe(), "simple hoop present in the serialized chart")
                )
                report.lint_failures.append(
                    ("2.5", edge.describe(), "hoop side without white vertices")
                )
            if edge.kind == "ring":
                barrier = set(edge.chart_darts())
                side_a, side_b = split_sides(chart, barrier)
                for side in (side_a, side_b):
                    whites = _whites_strictly_inside(chart, side, barrier)
                    if not whites:
                        report.lint_failures.append(
                            ("2.5", edge.describe(), "ring side without white vertices")
                        )
    return report


def _whites_strictly_inside(chart: Chart, faces: set[int], barrier: set[str]) -> list[str]:
    from chartcalc.core import face_of_dart, face_walk

    fo = face_of_dart(chart, face_walk(chart, check_euler=False))
    out = []
    for node, kind in chart.nodes.items():
        if kind != WHITE:
            continue
        incident = {fo[d] for d in chart.rotation[node]}
        if incident <= faces:
            out.append(node)
    return out
