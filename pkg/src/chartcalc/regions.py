"""Face-union regions: disks, lenses, counting and the in/out balance law.

A region is a union of faces of the chart.  Its boundary consists of the
darts with exactly one flanking face inside.  Around a vertex, the face
corners in counterclockwise order are ``face(g)`` just before each germ
``g`` and ``face(twin(g))`` just after it, so the two faces flanking a
germ are exactly that pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from chartcalc.core import (
    BLACK,
    CROSSING,
    WHITE,
    Chart,
    face_of_dart,
    face_walk,
)
from chartcalc.errors import (
    BoundaryLabelViolation,
    NotALoop,
    SemanticError,
)
from chartcalc.subgraphs import (
    LOOP,
    GammaEdge,
    extract_subgraph,
)

__all__ = [
    "Region",
    "AngledDisk",
    "Complexity",
    "complexity",
    "region_from_faces",
    "split_sides",
    "count_w",
    "count_c",
    "associated_disk",
    "angled_disks",
    "detect_lenses",
    "io_balance",
    "local_complexity",
    "relocate_infinity",
]


@dataclass(frozen=True)
class Region:
    """A union of chart faces, optionally taken with its closure."""

    faces: frozenset
    closure: bool = True

    def __contains__(self, face: int) -> bool:
        return face in self.faces


@dataclass
class AngledDisk:
    """A disk bounded by k edges of one label subgraph.

    Feelers are the other label-m edges hanging into the open disk from
    boundary white vertices; the disk is special when every feeler is a
    terminal edge.
    """

    region: Region
    m: int
    k: int
    boundary_edges: tuple[GammaEdge, ...]
    feelers: tuple[GammaEdge, ...]
    special: bool
    corners: tuple[str, ...]


@dataclass(frozen=True, order=True)
class Complexity:
    """Chart complexity (white count, negated free-edge count)."""

    w: int
    neg_f: int


def complexity(chart: Chart) -> Complexity:
    free = 0
    for m in range(1, chart.braid_index):
        free += sum(1 for e in extract_subgraph(chart, m).edges if e.kind == "free")
    return Complexity(count_w(chart), -free)


def region_from_faces(chart: Chart, faces, closure: bool = True) -> Region:
    nfaces = len(face_walk(chart, check_euler=False))
    for f in faces:
        if not 0 <= f < nfaces:
            raise SemanticError(f"face {f} out of range (chart has {nfaces} faces)")
    return Region(faces=frozenset(faces), closure=closure)


# -- face topology helpers ------------------------------------------------


def _faces_and_map(chart: Chart):
    faces = face_walk(chart, check_euler=False)
    return faces, face_of_dart(chart, faces)


def germ_flanks(chart: Chart, fo: dict[str, int], dart_id: str) -> tuple[int, int]:
    """The two face corners flanking a germ at its origin."""
    return fo[dart_id], fo[chart.twin(dart_id)]


def node_corner_faces(chart: Chart, fo: dict[str, int], node: str) -> set[int]:
    return {fo[g] for g in chart.rotation[node]}


def boundary_darts(chart: Chart, region: Region, fo: dict[str, int] | None = None) -> set[str]:
    if fo is None:
        _, fo = _faces_and_map(chart)
    out = set()
    for d in chart.darts:
        a, b = fo[d], fo[chart.twin(d)]
        if (a in region.faces) != (b in region.faces):
            out.add(d)
    return out


def split_sides(chart: Chart, barrier: set[str]) -> tuple[set[int], set[int]]:
    """The two face-components separated by a simple closed barrier.

    The barrier is a set of darts (both halves of each barred edge);
    faces adjacent across any unbarred edge merge.  Raises if the barrier
    does not split the sphere into exactly two parts.
    """
    faces, fo = _faces_and_map(chart)
    parent = list(range(len(faces)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for d in chart.darts:
        if d in barrier or chart.twin(d) in barrier:
            continue
        a, b = find(fo[d]), find(fo[chart.twin(d)])
        if a != b:
            parent[a] = b
    sides: dict[int, set[int]] = {}
    for f in range(len(faces)):
        sides.setdefault(find(f), set()).add(f)
    if len(sides) != 2:
        raise SemanticError(
            f"barrier splits the sphere into {len(sides)} parts, expected 2"
        )
    a, b = sorted(sides.values(), key=lambda s: min(s))
    return a, b


# -- counting -------------------------------------------------------------


def _nodes_in(chart: Chart, region: Region, kind: str) -> list[str]:
    _, fo = _faces_and_map(chart)
    out = []
    for node, k in chart.nodes.items():
        if k != kind:
            continue
        corners = node_corner_faces(chart, fo, node)
        if region.closure:
            if corners & region.faces:
                out.append(node)
        else:
            if corners <= region.faces:
                out.append(node)
    return out


def count_w(chart: Chart, region: Region | None = None) -> int:
    """White vertices in the region (whole chart when region is None)."""
    if region is None:
        return sum(1 for k in chart.nodes.values() if k == WHITE)
    return len(_nodes_in(chart, region, WHITE))


def count_c(chart: Chart, region: Region | None = None) -> int:
    """Crossings in the region (whole chart when region is None)."""
    if region is None:
        return sum(1 for k in chart.nodes.values() if k == CROSSING)
    return len(_nodes_in(chart, region, CROSSING))


# -- disks ----------------------------------------------------------------


def associated_disk(chart: Chart, loop: GammaEdge) -> Region:
    """The side of a loop not containing the third same-label edge at
    the loop's white vertex.
    """
    if loop.kind != LOOP:
        raise NotALoop(f"{loop.describe()} is not a loop")
    w = loop.endpoints[0]
    barrier = loop.chart_darts() | {chart.twin(d) for d in loop.chart_darts()}
    third = [
        g
        for g in chart.rotation[w]
        if chart.dart(g).label == loop.label and g not in barrier
    ]
    if len(third) != 1:
        raise NotALoop(f"loop white vertex {w} lacks a third label-{loop.label} germ")
    side_a, side_b = split_sides(chart, barrier)
    _, fo = _faces_and_map(chart)
    e_face = fo[third[0]]
    inside = side_b if e_face in side_a else side_a
    return Region(faces=frozenset(inside), closure=False)


def _cycles(sub, max_len: int = 4):
    """Simple cycles in the label subgraph, as edge-index tuples.

    Includes closed single edges (loops count with their one vertex) and
    vertex-disjoint cycles of open regular edges up to ``max_len``.
    """
    out = []
    for i, e in enumerate(sub.edges):
        if e.closed and e.kind == LOOP:
            out.append((i,))
    regular = [
        (i, e)
        for i, e in enumerate(sub.edges)
        if not e.closed and e.kind == "regular" and e.endpoints[0] != e.endpoints[1]
    ]
    for k in range(2, max_len + 1):
        for combo in itertools.combinations(regular, k):
            # The chosen edges must form one simple cycle: every incident
            # vertex has degree exactly two.
            deg: dict[str, int] = {}
            for _, e in combo:
                for v in e.endpoints:
                    deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()) or len(deg) != k:
                continue
            if _is_single_cycle(combo):
                out.append(tuple(i for i, _ in combo))
    return out


def _is_single_cycle(combo) -> bool:
    idx = {i: e for i, e in combo}
    start = combo[0][0]
    seen = {start}
    v = idx[start].endpoints[1]
    while True:
        nxt = [
            i
            for i, e in combo
            if i not in seen and v in e.endpoints
        ]
        if not nxt:
            break
        i = nxt[0]
        seen.add(i)
        e = idx[i]
        v = e.endpoints[1] if e.endpoints[0] == v else e.endpoints[0]
    return len(seen) == len(combo)


def angled_disks(chart: Chart, m: int, max_k: int = 4) -> list[AngledDisk]:
    """Disks whose boundary decomposes into k label-m edges.

    Both sides of each simple cycle are emitted (any simple closed curve
    on the sphere bounds two disks).  Feelers are computed as the label-m
    edges whose germ at a boundary white vertex points into the open
    disk.
    """
    sub = extract_subgraph(chart, m)
    _, fo = _faces_and_map(chart)
    disks = []
    for cycle in _cycles(sub, max_k):
        edges = tuple(sub.edges[i] for i in cycle)
        barrier = set()
        for e in edges:
            barrier |= e.chart_darts()
            barrier |= {chart.twin(d) for d in e.chart_darts()}
        try:
            side_a, side_b = split_sides(chart, barrier)
        except SemanticError:
            continue
        corners = tuple(
            sorted({v for e in edges for v in e.endpoints if chart.nodes[v] == WHITE})
        )
        for side in (side_a, side_b):
            region = Region(faces=frozenset(side), closure=False)
            feelers = _feelers(chart, sub, fo, corners, barrier, side)
            disks.append(
                AngledDisk(
                    region=region,
                    m=m,
                    k=len(edges),
                    boundary_edges=edges,
                    feelers=tuple(feelers),
                    special=all(f.kind == "terminal" for f in feelers),
                    corners=corners,
                )
            )
    return disks


def _feelers(chart, sub, fo, corners, barrier, side):
    feelers = []
    seen = set()
    for w in corners:
        for g in chart.rotation[w]:
            if g in barrier or chart.dart(g).label != sub.label:
                continue
            if fo[g] in side:
                e = sub.edge_of_dart(g)
                key = id(e)
                if key not in seen:
                    seen.add(key)
                    feelers.append(e)
    return feelers


# -- lenses ---------------------------------------------------------------


def detect_lenses(chart: Chart) -> list[dict]:
    """Disks bounded by one label-m and one label-(m+1) edge meeting the
    middle-arc conditions.

    A candidate bigon must pass the gate: no edge through either of its
    white vertices may enter the open disk.  It is a lens when either
    neither boundary edge contains a middle arc, or one of them contains
    middle arcs at both white vertices simultaneously.
    """
    from chartcalc.validator import middle_arcs

    found = []
    _, fo = _faces_and_map(chart)
    middles: dict[str, tuple[str, str]] = {}
    for node, kind in chart.nodes.items():
        if kind == WHITE:
            middles[node] = middle_arcs(chart, node)

    for m in range(1, chart.braid_index - 1):
        sub_m = extract_subgraph(chart, m)
        sub_n = extract_subgraph(chart, m + 1)
        for e1 in sub_m.edges:
            if e1.closed or e1.kind != "regular":
                continue
            w1, w2 = e1.endpoints
            if w1 == w2:
                continue
            for e2 in sub_n.edges:
                if e2.closed or e2.kind != "regular":
                    continue
                if set(e2.endpoints) != {w1, w2}:
                    continue
                found.extend(
                    _lens_sides(chart, fo, middles, m, e1, e2, w1, w2)
                )
    return found


def _lens_sides(chart, fo, middles, m, e1, e2, w1, w2):
    out = []
    barrier = set()
    for e in (e1, e2):
        barrier |= e.chart_darts()
        barrier |= {chart.twin(d) for d in e.chart_darts()}
    try:
        side_a, side_b = split_sides(chart, barrier)
    except SemanticError:
        return out
    if not _middle_condition(chart, middles, e1, e2, (w1, w2)):
        return out
    for side in (side_a, side_b):
        if _lens_gate(chart, fo, barrier, side, (w1, w2)):
            out.append(
                {
                    "type": (m, m + 1),
                    "edges": (e1.describe(), e2.describe()),
                    "whites": (w1, w2),
                    "region": Region(faces=frozenset(side), closure=False),
                }
            )
    return out


def _middle_condition(chart, middles, e1, e2, whites) -> bool:
    def edge_middles(e):
        hits = set()
        for w in whites:
            for g in e.germs_at(chart, w):
                if g in middles[w]:
                    hits.add(w)
        return hits

    h1, h2 = edge_middles(e1), edge_middles(e2)
    if not h1 and not h2:
        return True
    return set(whites) in (h1, h2)


def _lens_gate(chart, fo, barrier, side, whites) -> bool:
    from chartcalc.subgraphs import splice_partner

    for w in whites:
        for g in chart.rotation[w]:
            if g in barrier:
                continue
            # Walk the whole edge through crossings and markers; it must
            # stay out of the open disk.
            for d in _edge_darts_from(chart, g):
                if fo[d] in side or fo[chart.twin(d)] in side:
                    return False
    return True


def _edge_darts_from(chart: Chart, start: str):
    from chartcalc.subgraphs import splice_partner

    # Forward from start, then backward from its twin.
    for first in (start, chart.twin(start)):
        d = first
        seen = set()
        while d is not None and d not in seen:
            seen.add(d)
            yield d
            d = splice_partner(chart, chart.twin(d))


# -- in/out balance -------------------------------------------------------


def io_balance(chart: Chart, region: Region, k: int) -> tuple[int, int]:
    """Count inward and outward label-k arc germs in the closed region.

    The region's boundary may only carry labels k-1, k, k+1.  A germ at
    a white vertex counts when at least one of its two flanking faces
    lies in the region, so arcs running along the boundary contribute; a
    germ at a black vertex counts only when both flanks lie inside.
    Markers and crossings carry no germs of their own.
    """
    _, fo = _faces_and_map(chart)
    for d in boundary_darts(chart, region, fo):
        lbl = chart.dart(d).label
        if not k - 1 <= lbl <= k + 1:
            raise BoundaryLabelViolation(
                f"boundary dart {d} carries label {lbl}, outside [{k - 1}, {k + 1}]"
            )
    inward = outward = 0
    for d, dart in chart.darts.items():
        if dart.label != k:
            continue
        kind = chart.nodes[dart.origin]
        a, b = germ_flanks(chart, fo, d)
        if kind == WHITE:
            hit = a in region.faces or b in region.faces
        elif kind == BLACK:
            hit = a in region.faces and b in region.faces
        else:
            continue
        if hit:
            if dart.direction == "in":
                inward += 1
            else:
                outward += 1
    return inward, outward


def local_complexity(chart: Chart, disk: AngledDisk) -> tuple[int, int]:
    """(interior white count, boundary crossing count) of an angled disk."""
    w_int = count_w(chart, disk.region)
    boundary_crossings = {
        node
        for e in disk.boundary_edges
        for node in e.through_nodes
        if chart.nodes[node] == CROSSING
    }
    return w_int, len(boundary_crossings)


def relocate_infinity(chart: Chart, face: int) -> Chart:
    """Move the point at infinity into the given complementary domain."""
    nfaces = len(face_walk(chart, check_euler=False))
    if not 0 <= face < nfaces:
        raise SemanticError(f"face {face} out of range (chart has {nfaces} faces)")
    out = chart.copy()
    out.infinity_face = face
    return out
