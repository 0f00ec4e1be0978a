"""Regions, disks, lenses, complexity and the in/out balance law."""

import itertools

import pytest

from chartcalc import fixtures as fx
from chartcalc.core import face_walk
from chartcalc.errors import ChartError
from chartcalc.regions import (
    Region,
    angled_disks,
    associated_disk,
    complexity,
    count_c,
    count_w,
    detect_lenses,
    io_balance,
    local_complexity,
    split_sides,
)
from chartcalc.subgraphs import extract_subgraph


def _admissible_regions(chart):
    """All single faces plus all two-face unions, as closed regions."""
    n_faces = len(face_walk(chart, check_euler=False))
    for f in range(n_faces):
        yield Region(frozenset({f}))
    for a, b in itertools.combinations(range(n_faces), 2):
        yield Region(frozenset({a, b}))


def test_io_balance_law_on_corpus(corpus):
    # For a genuine chart every admissible region is balanced: each
    # label-k arc entering the region must leave it again.
    checked = 0
    for chart in corpus:
        for region in _admissible_regions(chart):
            for k in range(1, chart.braid_index):
                try:
                    inward, outward = io_balance(chart, region, k)
                except ChartError:
                    continue
                assert inward == outward, (chart, sorted(region.faces), k)
                checked += 1
    assert checked > 0


def test_io_imbalance_fixture_is_one_three():
    chart, h = fx.io_imbalance()
    sub = extract_subgraph(chart, 2)
    loop = sub.edge_of_dart(h["loop_dart"])
    disk = associated_disk(chart, loop)
    barrier = set()
    for d in h["bigon_darts"]:
        barrier |= {d, chart.twin(d)}
    side_a, side_b = split_sides(chart, barrier)
    inner = side_a if side_a <= set(disk.faces) else side_b
    assert inner <= set(disk.faces)
    annulus = Region(frozenset(set(disk.faces) - inner))
    assert io_balance(chart, annulus, h["label"]) == (1, 3)


def test_associated_disk_of_the_loop():
    chart, h = fx.loop_disk()
    loop = extract_subgraph(chart, 2).edge_of_dart(h["loop_dart"])
    disk = associated_disk(chart, loop)
    whites_inside = {
        n for n in chart.nodes
        if chart.nodes[n] == "white" and n != h["loop_white"]
    }
    from chartcalc.moves import _disk_interior_nodes
    interior = set(_disk_interior_nodes(chart, set(disk.faces)))
    assert whites_inside <= interior


def test_lens_detection():
    lens_chart, _ = fx.lens_pair()
    lenses = detect_lenses(lens_chart)
    assert len(lenses) == 1
    assert len(detect_lenses(fx.loop_disk()[0])) == 1
    assert detect_lenses(fx.white_with_terminals()) == []
    before, _ = fx.ciii_before()
    after, _ = fx.ciii_after()
    assert detect_lenses(before) == []
    assert len(detect_lenses(after)) == 1


def _oracle_lenses(chart):
    """Brute-force lens search by pairwise edge and side enumeration."""
    from chartcalc.core import WHITE, face_of_dart
    from chartcalc.validator import middle_arcs
    from test_subgraphs import _oracle_edges

    fo = face_of_dart(chart, face_walk(chart, check_euler=False))
    n_faces = len(set(fo.values()))
    middles = {n: set(middle_arcs(chart, n))
               for n, kind in chart.nodes.items() if kind == WHITE}

    def white_ends(cluster):
        return {chart.dart(d).origin for d in cluster
                if chart.nodes[chart.dart(d).origin] == WHITE}

    def end_germ_count(cluster):
        return sum(1 for d in cluster
                   if chart.nodes[chart.dart(d).origin] in (WHITE, "black"))

    def sides_of(barrier):
        # Merge faces adjacent across unbarred edges.
        parent = list(range(n_faces))

        def find(i):
            while parent[i] != i:
                i = parent[i]
            return i

        for d in chart.darts:
            if d in barrier:
                continue
            a, b = find(fo[d]), find(fo[chart.twin(d)])
            if a != b:
                parent[a] = b
        groups = {}
        for f in range(n_faces):
            groups.setdefault(find(f), set()).add(f)
        return list(groups.values()) if len(groups) == 2 else []

    def edge_touches(start, side):
        frontier = {start, chart.twin(start)}
        seen = set()
        while frontier:
            d = frontier.pop()
            if d in seen:
                continue
            seen.add(d)
            if fo[d] in side or fo[chart.twin(d)] in side:
                return True
            node = chart.dart(d).origin
            kind = chart.nodes[node]
            rot = chart.rotation[node]
            if kind == "crossing" and len(rot) == 4:
                nxt = rot[(rot.index(d) + 2) % 4]
                frontier |= {nxt, chart.twin(nxt)}
            elif kind == "marker" and len(rot) == 2:
                nxt = rot[1 - rot.index(d)]
                frontier |= {nxt, chart.twin(nxt)}
        return False

    found = set()
    for m in range(1, chart.braid_index - 1):
        lo = [c for c in _oracle_edges(chart, m)
              if len(white_ends(c)) == 2 and end_germ_count(c) == 2
              and all(chart.nodes[chart.dart(d).origin] != "black"
                      for d in c)]
        hi = [c for c in _oracle_edges(chart, m + 1)
              if len(white_ends(c)) == 2 and end_germ_count(c) == 2
              and all(chart.nodes[chart.dart(d).origin] != "black"
                      for d in c)]
        for e1 in lo:
            for e2 in hi:
                whites = white_ends(e1)
                if white_ends(e2) != whites:
                    continue
                hit1 = {w for w in whites if e1 & middles[w]}
                hit2 = {w for w in whites if e2 & middles[w]}
                if (hit1 or hit2) and whites not in (hit1, hit2):
                    continue
                barrier = e1 | e2
                for side in sides_of(barrier):
                    gate = all(
                        not edge_touches(g, side)
                        for w in whites for g in chart.rotation[w]
                        if g not in barrier
                    )
                    if gate:
                        found.add((m, frozenset(whites), frozenset(side)))
    return found


def test_lens_detector_matches_oracle(corpus, fixture_charts):
    charts = list(corpus)
    charts += [c for n, c in fixture_charts.items() if n != "io_imbalance"]
    checked = hits = 0
    for chart in charts:
        got = {
            (lens["type"][0], frozenset(lens["whites"]),
             frozenset(lens["region"].faces))
            for lens in detect_lenses(chart)
        }
        assert got == _oracle_lenses(chart)
        checked += 1
        hits += len(got)
    assert checked > 0 and hits > 0


def test_angled_disks_on_triangle():
    chart, h = fx.triangle_filled()
    disks = [d for d in angled_disks(chart, 3, max_k=3) if d.k == 3]
    assert disks
    corners = {w for d in disks for w in d.corners}
    assert corners <= set(h["corners"])


def test_local_complexity_orders_triangle_disks():
    chart, _ = fx.triangle_filled()
    for disk in angled_disks(chart, 3, max_k=3):
        nf, nb = local_complexity(chart, disk)
        assert nf >= 0 and nb >= 0


def test_complexity_is_lexicographic(corpus):
    sample = corpus[:40]
    for chart in sample:
        c = complexity(chart)
        assert c.w == count_w(chart)
        assert count_c(chart) == sum(
            1 for _, kind in chart.nodes.items() if kind == "crossing"
        )
    ordered = sorted(sample, key=complexity)
    ws = [complexity(c).w for c in ordered]
    assert ws == sorted(ws)


def test_split_sides_requires_separating_barrier():
    chart, h = fx.loop_disk()
    barrier = {h["loop_dart"], chart.twin(h["loop_dart"])}
    inside, outside = split_sides(chart, barrier)
    assert inside and outside
    assert inside | outside == set(range(len(face_walk(chart))))
    with pytest.raises(ChartError):
        split_sides(chart, set())
