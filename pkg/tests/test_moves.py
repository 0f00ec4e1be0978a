"""Elementary move soundness: the full site sweep and the catalog laws."""

import pytest

from chartcalc import fixtures as fx
from chartcalc.core import canonical_key
from chartcalc.errors import ChartError
from chartcalc.moves import (
    CI_HOOP,
    CI_M2,
    CI_R2,
    CI_R3,
    CI_R4,
    C_II,
    C_III,
    DELTAS,
    FORWARD,
    INVERSE,
    ElementaryMove,
    apply_move,
    apply_move_detailed,
    enumerate_sites,
    move_from_line,
    move_to_line,
    search_reduction,
)
from chartcalc.regions import complexity, count_c, count_w
from chartcalc.validator import check_axioms

ALL_KINDS = (CI_HOOP, CI_M2, CI_R2, CI_R3, CI_R4, C_II, C_III)


def _counts(chart):
    free = sum(
        1 for kind in (chart.nodes[n] for n in chart.nodes) if kind == "black"
    )
    return count_w(chart), free, count_c(chart)


def test_catalog_sweep_on_corpus(corpus):
    """Every catalog move at every matching site: axioms hold, the
    declared deltas are observed, and the inverse restores the original.
    """
    applied = 0
    for chart in corpus:
        key = canonical_key(chart)
        before = _counts(chart)
        for kind in ALL_KINDS:
            for direction in (FORWARD, INVERSE):
                for site in enumerate_sites(chart, kind, direction):
                    mid, inv, _ = apply_move_detailed(chart, site)
                    assert check_axioms(mid).ok, (kind, direction, site.params)
                    dw, db, dc = DELTAS[kind]
                    if direction == INVERSE:
                        dw, db, dc = -dw, -db, -dc
                    after = _counts(mid)
                    assert after[0] - before[0] == dw
                    assert after[1] - before[1] == db
                    assert after[2] - before[2] == dc
                    back = apply_move(mid, inv)
                    assert canonical_key(back) == key
                    applied += 1
    assert applied > 0


def test_declared_deltas_cover_catalog():
    assert set(DELTAS) == set(ALL_KINDS)
    assert DELTAS[CI_M2] == (2, 0, 0)
    assert DELTAS[CI_R2] == (0, 0, 2)
    assert DELTAS[C_II] == (0, 0, 1)
    for kind in (CI_HOOP, CI_R3, CI_R4, C_III):
        assert DELTAS[kind] == (0, 0, 0)


def test_only_annihilation_lowers_complexity(corpus):
    # The white-pair annihilation is the single catalog move with a
    # negative complexity delta; every other site preserves or raises it.
    for chart in corpus[:60]:
        base = complexity(chart)
        for kind in ALL_KINDS:
            for direction in (FORWARD, INVERSE):
                for site in enumerate_sites(chart, kind, direction):
                    after = complexity(apply_move(chart, site))
                    if after < base:
                        assert kind == CI_M2 and direction == INVERSE


def test_move_line_roundtrip():
    moves = [
        ElementaryMove(CI_HOOP, FORWARD, {"label": 3}),
        ElementaryMove(CI_R4, FORWARD,
                       {"white": "w", "crossings": ("c1", "c2", "c3")}),
        ElementaryMove(CI_M2, INVERSE, {"w1": "a", "w2": "b"}),
    ]
    for mv in moves:
        assert move_from_line(move_to_line(mv)) == mv


def test_bad_move_line_rejected():
    with pytest.raises(ChartError):
        move_from_line("NOT_A_MOVE sideways")


def test_hoop_creation_and_removal():
    chart = fx.white_with_terminals()
    mid = apply_move(chart, ElementaryMove(CI_HOOP, FORWARD, {"label": 2}))
    assert len(mid.nodes) == len(chart.nodes) + 1
    sites = enumerate_sites(mid, CI_HOOP, INVERSE)
    assert sites
    back = apply_move(mid, sites[0])
    assert canonical_key(back) == canonical_key(chart)


def test_relocation_reaches_pinned_state():
    before, bh = fx.ciii_before()
    after, _ = fx.ciii_after()
    moved = apply_move(
        before, ElementaryMove(C_III, FORWARD, {"dart": bh["anchor_dart"]})
    )
    assert canonical_key(moved) == canonical_key(after)


def test_search_reduction_on_reducible_fixture():
    chart, _ = fx.triangle_reducible()
    trace = search_reduction(chart, depth=3, beam=16)
    assert trace is not None
    reduced = trace.replay(chart)
    assert complexity(reduced) < complexity(chart)
    assert count_w(reduced) <= count_w(chart) - 2


def test_search_reduction_gives_up_on_clean_chart():
    assert search_reduction(fx.white_with_terminals(), depth=2, beam=8) is None
