"""Shared corpus and fixture-chart collections for the test suite."""

import pytest

from chartcalc import fixtures as fx
from chartcalc.harness import EnumerationBudget, enumerate_charts


@pytest.fixture(scope="session")
def corpus():
    """The default enumeration corpus, generated once per session."""
    return list(enumerate_charts(EnumerationBudget()))


@pytest.fixture(scope="session")
def fixture_charts():
    """Every fixture chart keyed by constructor name, handles dropped."""
    charts = {}
    for name in ("crossing_strands", "triangle_strands", "spoke_wheel",
                 "white_with_terminals", "pinched_strands", "dot_crossing",
                 "solar_eclipse", "eyeglasses", "skew_eyeglasses_1",
                 "skew_eyeglasses_2", "hoop_only", "ring_crossings"):
        charts[name] = getattr(fx, name)()
    for name in ("shift_fixture", "clear_fixture", "loop_disk", "lens_pair",
                 "io_imbalance", "triangle_filled", "triangle_emptied",
                 "triangle_reducible", "ciii_before", "ciii_after"):
        charts[name] = getattr(fx, name)()[0]
    return charts
