"""Axiom checking against a brute-force local oracle, plus lint behavior."""

import itertools

import pytest

from chartcalc import fixtures as fx
from chartcalc.core import WHITE, ChartBuilder
from chartcalc.validator import (
    check_axioms,
    check_minimal_form,
    is_middle_arc,
    middle_arcs,
    white_local_shape_ok,
)


def _oracle(dirs: tuple[str, ...]) -> bool:
    # Valid iff the six germs split into one cyclic run of three "in"
    # and one cyclic run of three "out".
    for start in range(6):
        rolled = dirs[start:] + dirs[:start]
        if rolled == ("in",) * 3 + ("out",) * 3:
            return True
    return False


def test_local_white_shapes_match_oracle():
    valid = 0
    for phase in (0, 1):
        labels = [1 + ((i + phase) % 2) for i in range(6)]
        for dirs in itertools.product(("in", "out"), repeat=6):
            got = white_local_shape_ok(list(dirs), labels)
            assert got == _oracle(dirs), (dirs, labels)
            valid += got
    assert valid == 12


def test_non_alternating_labels_rejected():
    dirs = ["in"] * 3 + ["out"] * 3
    assert white_local_shape_ok(dirs, [1, 2, 1, 2, 1, 2])
    assert not white_local_shape_ok(dirs, [1, 2, 1, 2, 1, 3])
    assert not white_local_shape_ok(dirs, [1, 1, 1, 2, 2, 2])


def test_fixture_charts_pass_axioms(fixture_charts):
    # io_imbalance is a deliberately partial configuration: its open
    # strand ends are realized as degree-one stub nodes.
    for name, chart in fixture_charts.items():
        if name == "io_imbalance":
            continue
        report = check_axioms(chart)
        assert report.ok, f"{name}: {report.render_text()}"


def test_corpus_passes_axioms(corpus):
    assert corpus
    assert all(check_axioms(chart).ok for chart in corpus)


def test_bad_white_degree_rejected():
    b = ChartBuilder(3)
    w = b.node(WHITE, "w", degree=4)
    b.connect(w, 0, w, 2, 1)
    b.connect(w, 1, w, 3, 2)
    assert not check_axioms(b.build()).ok


def test_middle_arcs_carry_distinct_labels(corpus):
    # The two middle arcs of a white vertex sit three slots apart, so
    # alternation forces their labels to differ.
    seen = 0
    for chart in corpus:
        for node, kind in chart.nodes.items():
            if kind != WHITE:
                continue
            d1, d2 = middle_arcs(chart, node)
            assert chart.dart(d1).label != chart.dart(d2).label
            assert is_middle_arc(chart, d1) and is_middle_arc(chart, d2)
            others = [d for d in chart.rotation[node] if d not in (d1, d2)]
            assert not any(is_middle_arc(chart, d) for d in others)
            seen += 1
    assert seen > 0


def test_minimal_form_fixtures_are_clean():
    for name, chart in fx.minimal_form_fixtures().items():
        report = check_minimal_form(chart)
        assert report.clean, f"{name}: {report.render_text()}"


@pytest.mark.parametrize("name,needle", [
    ("hoop_only", "hoop"),
    ("ring_crossings", "ring side"),
    ("crossing_strands", "free edge"),
    ("dot_crossing", "terminal edge contains a crossing"),
])
def test_normal_form_lints_fire(name, needle):
    report = check_minimal_form(getattr(fx, name)())
    assert not report.clean
    assert any(needle in msg for _, _, msg in report.lint_failures)
