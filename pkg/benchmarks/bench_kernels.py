"""Benchmark the compiled kernels against the pure-Python reference.

Builds a deterministic batch of corpus charts, extracts their flat dart
arrays and times face_orbits, component_ids and min_encoding under both
implementations.  Run with:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from chartcalc.core import _index_arrays, _colors
from chartcalc.harness import EnumerationBudget, enumerate_charts
from chartcalc.kernels import pykernel

try:
    from chartcalc.kernels import _fastkernel
except ImportError:
    _fastkernel = None


def _workload():
    budget = EnumerationBudget(n_max=3, white_max=2, black_max=4,
                               crossing_max=0)
    batch = []
    for chart in enumerate_charts(budget):
        if not chart.darts:
            continue
        ids, _, twin, snext = _index_arrays(chart)
        batch.append((twin, snext, _colors(chart, ids)))
    return batch


def _run(module, batch) -> dict[str, float]:
    timings = {}
    t0 = time.perf_counter()
    for twin, snext, _ in batch:
        module.face_orbits(twin, snext)
    timings["face_orbits"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    comps = []
    for twin, snext, _ in batch:
        comps.append(module.component_ids(twin, snext))
    timings["component_ids"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    for (twin, snext, color), comp in zip(batch, comps):
        members = list(range(len(twin)))
        module.min_encoding(twin, snext, color, members)
    timings["min_encoding"] = time.perf_counter() - t0
    return timings


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    batch = _workload()
    print(f"workload: {len(batch)} charts, "
          f"{sum(len(t) for t, _, _ in batch)} darts total")
    impls = [("python", pykernel)]
    if _fastkernel is not None:
        impls.append(("cython", _fastkernel))
    else:
        print("compiled kernel unavailable; timing pure Python only")

    results = {}
    for name, module in impls:
        best = {}
        for _ in range(args.repeat):
            for op, sec in _run(module, batch).items():
                best[op] = min(best.get(op, float("inf")), sec)
        results[name] = best

    ops = sorted(results[impls[0][0]])
    for op in ops:
        line = f"{op:>14}:"
        for name, _ in impls:
            line += f"  {name} {results[name][op] * 1e3:8.2f} ms"
        if len(impls) == 2:
            speedup = results["python"][op] / max(results["cython"][op], 1e-12)
            line += f"  speedup {speedup:5.1f}x"
        print(line)

    # Cross-check: both implementations must agree exactly.
    if _fastkernel is not None:
        for twin, snext, color in batch:
            members = list(range(len(twin)))
            assert pykernel.face_orbits(twin, snext) == \
                _fastkernel.face_orbits(twin, snext)
            assert pykernel.component_ids(twin, snext) == \
                _fastkernel.component_ids(twin, snext)
            assert pykernel.min_encoding(twin, snext, color, members) == \
                _fastkernel.min_encoding(twin, snext, color, members)
        print("agreement: exact on the full workload")


if __name__ == "__main__":
    main()
