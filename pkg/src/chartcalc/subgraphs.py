"""Label subgraphs: edge extraction, classification and shape detection.

For a chart and a label m, the label subgraph collects every label-m dart
into maximal edges.  Crossings and markers are interior points of these
edges, never endpoints: an edge is spliced straight through a crossing
(continuing on the diagonally opposite germ) and through a marker.  The
genuine endpoints are black and white vertices only.

Edge kinds partition the edges: free (two black ends), terminal (one
white, one black), loop (closed, exactly one white vertex), hoop (closed,
no vertices and no crossings), ring (closed, a crossing but no white
vertex), regular (two white ends, possibly the same vertex twice).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from chartcalc.core import (
    BLACK,
    CROSSING,
    MARKER,
    WHITE,
    Chart,
)
from chartcalc.errors import LabelOutOfRange, NotIncident

__all__ = [
    "GammaEdge",
    "LabelSubgraph",
    "extract_subgraph",
    "neighbor_edges",
    "detect_shapes",
    "component_white_count",
    "splice_partner",
]

FREE = "free"
TERMINAL = "terminal"
LOOP = "loop"
HOOP = "hoop"
RING = "ring"
REGULAR = "regular"


def splice_partner(chart: Chart, dart_id: str) -> str | None:
    """The dart continuing an edge through the origin of ``dart_id``.

    At a crossing the edge continues on the diagonally opposite germ; at
    a marker it continues on the other germ.  At black and white vertices
    the edge ends, so there is no partner.
    """
    d = chart.dart(dart_id)
    kind = chart.nodes[d.origin]
    rot = chart.rotation[d.origin]
    if kind == CROSSING:
        i = rot.index(dart_id)
        # Degree-overridden stubs terminate the edge.
        return rot[(i + 2) % 4] if len(rot) == 4 else None
    if kind == MARKER:
        i = rot.index(dart_id)
        return rot[1 - i] if len(rot) == 2 else None
    return None


@dataclass
class GammaEdge:
    """One maximal edge of a label subgraph.

    ``dart_path`` lists the chart darts traversed tip to tail: for an
    open edge it starts at one endpoint and each following dart is the
    splice continuation at the previous dart's head; for a closed edge it
    is the same cycle starting at a deterministic dart.  Orientation of
    the path is by traversal, not by the arc orientation.
    """

    label: int
    dart_path: tuple[str, ...]
    endpoints: tuple[str, ...]
    kind: str
    through_nodes: tuple[str, ...]
    closed: bool

    def chart_darts(self) -> set[str]:
        """The traversal half of every dart pair underlying the edge."""
        return set(self.dart_path)

    def describe(self) -> str:
        ends = ",".join(self.endpoints) if self.endpoints else "closed"
        return f"gamma{self.label}[{self.kind}:{ends}:{self.dart_path[0]}]"

    def germs_at(self, chart: Chart, node: str) -> list[str]:
        """Germs of this edge at ``node``: path darts anchored there plus
        the twins of path darts whose head is there.
        """
        out = [d for d in self.dart_path if chart.dart(d).origin == node]
        for d in self.dart_path:
            t = chart.twin(d)
            if chart.dart(t).origin == node and t not in out:
                out.append(t)
        return out


@dataclass
class LabelSubgraph:
    """All label-m edges of a chart, with their component partition."""

    label: int
    edges: list[GammaEdge] = field(default_factory=list)
    # Component index per edge, and the white/black vertex sets per
    # component; crossings and markers do not join components.
    edge_component: list[int] = field(default_factory=list)
    components: list[dict] = field(default_factory=list)
    # Twin map of the chart the subgraph was extracted from, so darts can
    # be resolved to edges from either half of an arc.
    _twin: dict = field(default_factory=dict)

    def edge_of_dart(self, dart_id: str) -> GammaEdge:
        for e in self.edges:
            if dart_id in e.dart_path:
                return e
        # A dart and its twin always belong to the same edge.
        for e in self.edges:
            for d in e.dart_path:
                if self._twin.get(d) == dart_id:
                    return e
        raise KeyError(dart_id)

    def edges_at(self, node: str) -> list[GammaEdge]:
        """Edges incident to a black or white vertex, with multiplicity."""
        out = []
        for e in self.edges:
            out.extend(e for _ in range(e.endpoints.count(node)))
        return out


def _trace(chart: Chart, start: str, seen: set[str]) -> tuple[tuple[str, ...], bool]:
    """Follow an edge from dart ``start`` until a real endpoint or back
    to the start.  Returns the forward dart path and whether it closed.
    """
    path = [start]
    seen.add(start)
    seen.add(chart.twin(start))
    d = start
    while True:
        t = chart.twin(d)
        nxt = splice_partner(chart, t)
        if nxt is None:
            return tuple(path), False
        if nxt == start:
            return tuple(path), True
        path.append(nxt)
        seen.add(nxt)
        seen.add(chart.twin(nxt))
        d = nxt


def extract_subgraph(chart: Chart, m: int) -> LabelSubgraph:
    """The label-m subgraph with its edges spliced through crossings and
    markers and classified by kind.
    """
    if not 1 <= m <= chart.braid_index - 1:
        raise LabelOutOfRange(f"label {m} outside [1, {chart.braid_index - 1}]")
    sub = LabelSubgraph(label=m, _twin={d: chart.twin(d) for d in chart.darts})
    seen: set[str] = set()
    order = [d for d in chart.scan_darts() if chart.dart(d).label == m]

    # Open edges first: start from every germ anchored at a black or
    # white vertex so the path begins at a genuine endpoint.
    for d in order:
        if d in seen:
            continue
        if chart.nodes[chart.dart(d).origin] not in (BLACK, WHITE):
            continue
        path, closed = _trace(chart, d, seen)
        sub.edges.append(_make_edge(chart, m, path, closed))
    # Remaining darts belong to closed edges (hoops and rings).
    for d in order:
        if d in seen:
            continue
        path, closed = _trace(chart, d, seen)
        sub.edges.append(_make_edge(chart, m, path, closed))

    _partition(chart, sub)
    return sub


def _make_edge(chart: Chart, m: int, path: tuple[str, ...], closed: bool) -> GammaEdge:
    through = []
    for i, d in enumerate(path):
        if i == 0 and not closed:
            continue
        through.append(chart.dart(d).origin)
    if closed:
        endpoints: tuple[str, ...] = ()
        whites = [n for n in through if chart.nodes[n] == WHITE]
        crossings = [n for n in through if chart.nodes[n] == CROSSING]
        if len(whites) == 1:
            kind = LOOP
            endpoints = (whites[0], whites[0])
        elif whites:
            kind = REGULAR
            endpoints = tuple(whites[:2])
        elif crossings:
            kind = RING
        else:
            kind = HOOP
        # Interior nodes exclude the white endpoints of a loop.
        through = [n for n in through if chart.nodes[n] != WHITE]
    else:
        a = chart.dart(path[0]).origin
        b = chart.head(path[-1])
        endpoints = (a, b)
        through = [chart.dart(d).origin for d in path[1:]]
        kinds = sorted(chart.nodes[x] for x in (a, b))
        if kinds == [BLACK, BLACK]:
            kind = FREE
        elif kinds == [BLACK, WHITE]:
            kind = TERMINAL
        elif a == b:
            # A closed edge through exactly one white vertex.
            kind = LOOP
            closed = True
        else:
            kind = REGULAR
    return GammaEdge(
        label=m,
        dart_path=path,
        endpoints=endpoints,
        kind=kind,
        through_nodes=tuple(through),
        closed=closed,
    )


def _partition(chart: Chart, sub: LabelSubgraph) -> None:
    # Union-find over edges sharing a black/white vertex.
    parent = list(range(len(sub.edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    at: dict[str, int] = {}
    for i, e in enumerate(sub.edges):
        for v in e.endpoints:
            if v in at:
                a, b = find(at[v]), find(i)
                parent[a] = b
            else:
                at[v] = i
    roots: dict[int, int] = {}
    for i in range(len(sub.edges)):
        r = find(i)
        if r not in roots:
            roots[r] = len(roots)
        sub.edge_component.append(roots[r])
    sub.components = [
        {"edges": [], "whites": set(), "blacks": set()} for _ in range(len(roots))
    ]
    for i, e in enumerate(sub.edges):
        c = sub.components[sub.edge_component[i]]
        c["edges"].append(i)
        for v in e.endpoints:
            if chart.nodes[v] == WHITE:
                c["whites"].add(v)
            else:
                c["blacks"].add(v)


def neighbor_edges(chart: Chart, sub: LabelSubgraph, e_i: GammaEdge, w_j: str):
    """The two edges of the other label at ``w_j`` flanking ``e_i``.

    Looking at the counterclockwise germ order around the white vertex,
    the edge just before a germ of ``e_i`` is the a-edge and the one just
    after is the b-edge.  Both carry the other label at the vertex; for a
    loop the two may coincide.
    """
    if w_j not in e_i.endpoints:
        raise NotIncident(f"{w_j} is not an endpoint of {e_i.describe()}")
    germs = e_i.germs_at(chart, w_j)
    rot = chart.rotation[w_j]
    g = germs[0]
    i = rot.index(g)
    before = rot[i - 1]
    after = rot[(i + 1) % len(rot)]
    other = extract_subgraph(chart, chart.dart(before).label)
    return other.edge_of_dart(before), other.edge_of_dart(after)


def component_white_count(chart: Chart, m: int) -> list[int]:
    """White-vertex count of each connected component of the subgraph."""
    sub = extract_subgraph(chart, m)
    return [len(c["whites"]) for c in sub.components]


def detect_shapes(chart: Chart, m: int) -> list[dict]:
    """Loop-built shapes involving label m.

    Solar eclipse: a label-m loop and a label-(m+1) loop sharing their
    single white vertex.  The remaining shapes classify each connected
    component of the label-m subgraph that contains a loop and at most
    three white vertices: eyeglasses (two loops joined by an edge), skew
    eyeglasses of type 1 (a loop, a two-edge bigon and a connecting edge,
    with a terminal edge at the far vertex) and of type 2 (two loops
    joined through a third vertex carrying a terminal edge).
    """
    found: list[dict] = []
    sub = extract_subgraph(chart, m)
    loops = [e for e in sub.edges if e.kind == LOOP]

    if m + 1 <= chart.braid_index - 1:
        nxt = extract_subgraph(chart, m + 1)
        nxt_loops = {e.endpoints[0]: e for e in nxt.edges if e.kind == LOOP}
        for lp in loops:
            w = lp.endpoints[0]
            if w in nxt_loops:
                found.append(
                    {
                        "shape": "solar_eclipse",
                        "labels": (m, m + 1),
                        "white": w,
                        "edges": (lp.describe(), nxt_loops[w].describe()),
                    }
                )

    for ci, comp in enumerate(sub.components):
        edges = [sub.edges[i] for i in comp["edges"]]
        comp_loops = [e for e in edges if e.kind == LOOP]
        whites = comp["whites"]
        if not comp_loops or len(whites) > 3:
            continue
        shape = _classify_component(edges, comp_loops, whites)
        if shape is not None:
            found.append(
                {
                    "shape": shape,
                    "labels": (m,),
                    "whites": tuple(sorted(whites)),
                    "edges": tuple(e.describe() for e in edges),
                }
            )
    return found


def _classify_component(edges, comp_loops, whites) -> str | None:
    kinds = sorted(e.kind for e in edges)
    if len(whites) == 2 and len(comp_loops) == 2 and kinds == [LOOP, LOOP, REGULAR]:
        conn = next(e for e in edges if e.kind == REGULAR)
        if set(conn.endpoints) == whites:
            return "eyeglasses"
    if len(whites) == 3 and kinds == [LOOP, REGULAR, REGULAR, REGULAR, TERMINAL]:
        # One loop; a bigon pair between two vertices marks type 1.
        pairs = [frozenset(e.endpoints) for e in edges if e.kind == REGULAR]
        if any(pairs.count(p) == 2 for p in set(pairs)):
            return "skew_eyeglasses_1"
    if len(whites) == 3 and len(comp_loops) == 2 and kinds == [
        LOOP,
        LOOP,
        REGULAR,
        REGULAR,
        TERMINAL,
    ]:
        return "skew_eyeglasses_2"
    return None
