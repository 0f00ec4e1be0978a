"""Data model: builder, faces, serialization and canonical forms."""

import pytest

from chartcalc.core import (
    BLACK,
    CROSSING,
    MARKER,
    WHITE,
    ChartBuilder,
    canonical_key,
    component_of_node,
    empty_chart,
    face_walk,
    parse_chart,
    serialize_chart,
)
from chartcalc.errors import ChartSyntaxError, SemanticError
from chartcalc import fixtures as fx


def test_empty_chart_has_one_boundaryless_face():
    chart = empty_chart(3)
    assert chart.braid_index == 3
    assert chart.nodes == {}
    assert face_walk(chart) == [()]


def test_builder_free_edge_single_face():
    b = ChartBuilder(2)
    b1, b2 = b.node(BLACK), b.node(BLACK)
    b.connect(b1, 0, b2, 0, 1)
    chart = b.build()
    assert len(face_walk(chart)) == 1
    assert chart.dart("d0").direction == "out"
    assert chart.dart("d1").direction == "in"


def test_builder_rejects_slot_reuse():
    b = ChartBuilder(3)
    w = b.node(WHITE)
    v = b.node(WHITE)
    b.connect(w, 0, v, 0, 1)
    with pytest.raises(SemanticError):
        b.connect(w, 0, v, 1, 1)


def test_builder_rejects_unfilled_slots():
    b = ChartBuilder(3)
    b.node(WHITE)
    with pytest.raises(SemanticError):
        b.build()


def test_degree_override_theta_pseudo_chart():
    # Two degree-3 vertices joined by three edges: V=2, E=3, F=3.
    b = ChartBuilder(3)
    u = b.node(CROSSING, "u", degree=3)
    v = b.node(CROSSING, "v", degree=3)
    b.connect(u, 0, v, 0, 1)
    b.connect(u, 1, v, 2, 1)
    b.connect(u, 2, v, 1, 1)
    chart = b.build()
    assert len(chart.nodes) == 2
    assert len(chart.darts) // 2 == 3
    assert len(face_walk(chart)) == 3


def test_face_walk_counts_on_fixtures():
    for chart in (fx.crossing_strands(), fx.spoke_wheel(), fx.loop_disk()[0]):
        faces = face_walk(chart)
        v = len(chart.nodes)
        e = len(chart.darts) // 2
        assert v - e + len(faces) == 2


def test_serialize_parse_roundtrip():
    for chart in (fx.loop_disk()[0], fx.solar_eclipse(), fx.hoop_only(),
                  fx.triangle_filled()[0], empty_chart(4)):
        again = parse_chart(serialize_chart(chart))
        assert canonical_key(again) == canonical_key(chart)


def test_parse_reports_line_numbers():
    with pytest.raises(ChartSyntaxError) as err:
        parse_chart("chart/1 n=3\nnonsense here\n")
    assert err.value.line == 2


def test_canonical_key_ignores_node_names():
    def build(names):
        b = ChartBuilder(3)
        w = b.node(WHITE, names[0])
        blacks = [b.node(BLACK, n) for n in names[1:]]
        b.connect(w, 0, w, 2, 1)
        b.connect(blacks[0], 0, w, 1, 2)
        b.connect(w, 3, blacks[1], 0, 2)
        b.connect(w, 4, blacks[2], 0, 1)
        b.connect(blacks[3], 0, w, 5, 2)
        return b.build()

    a = build(("w", "p", "q", "r", "s"))
    b = build(("center", "k1", "k2", "k3", "k4"))
    assert canonical_key(a) == canonical_key(b)


def test_canonical_key_ignores_rotation_phase():
    chart = fx.solar_eclipse()
    shifted = chart.copy()
    for node in shifted.rotation:
        rot = shifted.rotation[node]
        shifted.rotation[node] = rot[2:] + rot[:2]
    assert canonical_key(shifted) == canonical_key(chart)


def test_component_ids():
    chart = fx.ring_crossings()
    comp = component_of_node(chart)
    assert len(set(comp.values())) == 1

    b = ChartBuilder(3)
    for _ in range(2):
        m = b.node(MARKER)
        b.connect(m, 0, m, 1, 1)
    two = b.build()
    assert len(set(component_of_node(two).values())) == 2


def test_scan_darts_deterministic():
    chart = fx.loop_disk()[0]
    assert chart.scan_darts() == chart.scan_darts()
