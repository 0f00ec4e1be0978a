"""Pure-Python reference implementation of the hot kernels.

Darts are integers 0..D-1.  The map structure is given by two arrays:

* ``twin[d]``  -- the opposite dart of the same edge (fixed-point-free
  involution),
* ``snext[d]`` -- the next dart counterclockwise around the origin of ``d``.

``color[d]`` is an opaque integer folding together whatever per-dart data
(origin kind, label, direction) should distinguish non-isomorphic charts.

The compiled kernel in ``_fastkernel.pyx`` implements the same three
functions with the same semantics; ``chartcalc.kernels`` picks one at
import time.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def face_orbits(twin: list[int], snext: list[int]) -> list[int]:
    """Assign a face index to every dart.

    Faces are orbits of the permutation phi(d) = snext[twin[d]].  Indices
    are assigned in order of the lowest dart encountered, so the result is
    deterministic for a fixed dart numbering.
    """
    n = len(twin)
    face = [-1] * n
    nfaces = 0
    for start in range(n):
        if face[start] >= 0:
            continue
        d = start
        while face[d] < 0:
            face[d] = nfaces
            d = snext[twin[d]]
        nfaces += 1
    return face


def component_ids(twin: list[int], snext: list[int]) -> list[int]:
    """Connected-component index per dart (components of twin+snext)."""
    n = len(twin)
    comp = [-1] * n
    ncomp = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = ncomp
        while stack:
            d = stack.pop()
            for e in (twin[d], snext[d]):
                if comp[e] < 0:
                    comp[e] = ncomp
                    stack.append(e)
        ncomp += 1
    return comp


def _bfs_order(twin: list[int], snext: list[int], start: int, size: int) -> list[int]:
    order = [start]
    seen = {start}
    head = 0
    while head < len(order):
        d = order[head]
        head += 1
        for e in (twin[d], snext[d]):
            if e not in seen:
                seen.add(e)
                order.append(e)
    return order


def min_encoding(
    twin: list[int],
    snext: list[int],
    color: list[int],
    members: list[int],
) -> tuple[tuple[int, ...], list[int]]:
    """Canonical encoding of one connected component.

    Runs a breadth-first relabeling from every member dart and keeps the
    lexicographically smallest encoding.  The encoding lists, per dart in
    discovery order, the relabeled twin, relabeled rotation successor and
    the dart color; it is invariant under dart renumbering and under the
    phase of each stored rotation cycle.

    Returns the winning encoding together with the discovery order (old
    dart numbers in canonical position order).
    """
    best_enc: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    size = len(members)
    for start in members:
        order = _bfs_order(twin, snext, start, size)
        rank = {d: i for i, d in enumerate(order)}
        enc = []
        for d in order:
            enc.append(rank[twin[d]])
            enc.append(rank[snext[d]])
            enc.append(color[d])
        enc_t = tuple(enc)
        if best_enc is None or enc_t < best_enc:
            best_enc = enc_t
            best_order = order
    assert best_enc is not None and best_order is not None
    return best_enc, best_order
