"""Label subgraph extraction checked against independent traversal oracles."""

from chartcalc import fixtures as fx
from chartcalc.core import BLACK, CROSSING, MARKER, WHITE, Chart
from chartcalc.subgraphs import (
    component_white_count,
    detect_shapes,
    extract_subgraph,
    splice_partner,
)


def _oracle_edges(chart: Chart, m: int):
    """Partition label-m darts into maximal edges by direct walking.

    Written independently of extract_subgraph: walks dart by dart,
    continuing through crossings on the diagonally opposite germ and
    through markers on the other germ, and collects each edge as a
    frozenset of chart darts.
    """
    def step(d):
        node = chart.dart(d).origin
        kind = chart.nodes[node]
        rot = chart.rotation[node]
        i = rot.index(d)
        if kind == CROSSING and len(rot) == 4:
            return rot[(i + 2) % 4]
        if kind == MARKER and len(rot) == 2:
            return rot[1 - i]
        return None

    darts = {d for d, dart in chart.darts.items() if dart.label == m}
    edges = []
    seen = set()
    for d in sorted(darts):
        if d in seen:
            continue
        cluster = set()
        frontier = [d]
        while frontier:
            cur = frontier.pop()
            if cur in cluster:
                continue
            cluster.add(cur)
            tw = chart.twin(cur)
            frontier.append(tw)
            nxt = step(cur)
            if nxt is not None:
                frontier.append(nxt)
        seen |= cluster
        edges.append(frozenset(cluster))
    return edges


def _oracle_kind(chart: Chart, cluster: frozenset) -> str:
    ends = []
    crossings = 0
    for d in cluster:
        node = chart.dart(d).origin
        kind = chart.nodes[node]
        if kind in (BLACK, WHITE):
            ends.append((kind, node))
        elif kind == CROSSING:
            crossings += 1
    if not ends:
        return "ring" if crossings else "hoop"
    whites = {node for kind, node in ends if kind == WHITE}
    blacks = sum(1 for kind, _ in ends if kind == BLACK)
    if not whites:
        return "free"
    if blacks:
        return "terminal"
    return "loop" if len(whites) == 1 else "regular"


def _all_charts(corpus, fixture_charts):
    yield from corpus
    for name, chart in fixture_charts.items():
        if name != "io_imbalance":
            yield chart


def _both_halves(chart, darts):
    return frozenset(darts) | frozenset(chart.twin(d) for d in darts)


def test_edges_match_oracle_partition(corpus, fixture_charts):
    for chart in _all_charts(corpus, fixture_charts):
        for m in range(1, chart.braid_index):
            expected = set(_oracle_edges(chart, m))
            got = {_both_halves(chart, e.chart_darts())
                   for e in extract_subgraph(chart, m).edges}
            assert got == expected


def test_edge_kinds_match_oracle(corpus, fixture_charts):
    for chart in _all_charts(corpus, fixture_charts):
        for m in range(1, chart.braid_index):
            sub = extract_subgraph(chart, m)
            for e in sub.edges:
                cluster = _both_halves(chart, e.chart_darts())
                assert e.kind == _oracle_kind(chart, cluster)


def test_splice_partner_is_an_involution(corpus, fixture_charts):
    for chart in _all_charts(corpus, fixture_charts):
        for d in chart.darts:
            p = splice_partner(chart, d)
            kind = chart.nodes[chart.dart(d).origin]
            if kind in (BLACK, WHITE):
                assert p is None
            else:
                assert p is not None and splice_partner(chart, p) == d


def test_component_white_count_matches_union_find(corpus):
    for chart in corpus:
        for m in range(1, chart.braid_index):
            clusters = _oracle_edges(chart, m)
            # Merge clusters sharing a white vertex, then count whites.
            whites = [
                {chart.dart(d).origin for d in c
                 if chart.nodes[chart.dart(d).origin] == WHITE}
                for c in clusters
            ]
            merged: list[set] = []
            for group in whites:
                hit = [g for g in merged if g & group]
                for g in hit:
                    merged.remove(g)
                    group |= g
                merged.append(group)
            expected = sorted(len(g) for g in merged)
            assert sorted(component_white_count(chart, m)) == expected


def test_shape_detectors_on_fixtures():
    cases = [
        ("solar_eclipse", fx.solar_eclipse()),
        ("eyeglasses", fx.eyeglasses()),
        ("skew_eyeglasses_1", fx.skew_eyeglasses_1()),
        ("skew_eyeglasses_2", fx.skew_eyeglasses_2()),
    ]
    for shape, chart in cases:
        shapes = detect_shapes(chart, 2)
        assert any(s["shape"] == shape for s in shapes), (shape, shapes)
    # Shape detectors never cross-fire on each other's fixtures.
    for shape, chart in cases:
        for other, _ in cases:
            if other == shape:
                continue
            assert not any(
                s["shape"] == other
                for m in range(1, chart.braid_index)
                for s in detect_shapes(chart, m)
            )


def test_loop_hoop_ring_kinds_on_fixtures():
    assert [e.kind for e in extract_subgraph(fx.hoop_only(), 2).edges] == ["hoop"]
    assert [e.kind for e in extract_subgraph(fx.ring_crossings(), 1).edges] == ["ring"]
    loop_chart = fx.loop_disk()[0]
    kinds = [e.kind for e in extract_subgraph(loop_chart, 2).edges]
    assert kinds.count("loop") == 1
