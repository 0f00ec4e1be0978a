"""Pseudo-chart patterns, their symmetry family, and subchart matching.

A pattern is a partial chart: white and black nodes with full rotations,
arcs between them, and dangling legs.  Labels are symbolic affine
expressions k + a*mu + b*delta with mu, delta in {+1, -1}, so one
pattern covers a whole family of concrete label assignments; a label may
also be a wildcard.  Crossings never appear as pattern nodes: a pattern
arc matches a chart edge regardless of the crossings it passes through.

The RO family of a pattern collects its images under orientation
reversal (every dart direction flipped) and reflection (every rotation
cycle reversed).  Matching is closed under the family: an embedding of
any member is reported, and results are deduplicated by their image on
the chart, so symmetric placements count once.

Matching is pure and side-effect free; the search over family members,
sign branches, and anchor sites is embarrassingly parallel in principle
and sequential and deterministic here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from chartcalc.core import (
    BLACK,
    IN,
    OUT,
    WHITE,
    Chart,
    face_of_dart,
    face_walk,
)
from chartcalc.errors import ChartSyntaxError, SemanticError
from chartcalc.regions import Region
from chartcalc.subgraphs import splice_partner

__all__ = [
    "Pattern",
    "PatternBuilder",
    "PDart",
    "ROFamily",
    "reverse_orientation",
    "reflect",
    "ro_family",
    "match",
    "pattern_library",
    "serialize_pattern",
    "parse_pattern",
]

NODE_SLOTS = {WHITE: 6, BLACK: 1}


@dataclass(frozen=True)
class PDart:
    """Half of a pattern arc, or a dangling leg when ``twin`` is None.

    ``label`` is (a, b) for the symbolic value k + a*mu + b*delta, or
    None for a wildcard.  A ``terminal`` leg additionally requires its
    chart edge to end at a black vertex (the dotted-vertex shorthand:
    a drawn dot stands for an undrawn terminal edge).
    """

    id: str
    origin: str
    twin: str | None
    label: tuple[int, int] | None
    direction: str
    terminal: bool = False


@dataclass
class Pattern:
    """A partial chart with symbolic labels and dangling legs."""

    name: str
    nodes: dict = field(default_factory=dict)
    darts: dict = field(default_factory=dict)
    rotation: dict = field(default_factory=dict)
    meta: str = ""

    @property
    def uses_delta(self) -> bool:
        return any(d.label is not None and d.label[1] != 0 for d in self.darts.values())

    def legs(self) -> list[str]:
        return [d for d, pd in self.darts.items() if pd.twin is None]

    def components(self) -> list[list[str]]:
        """Connected node groups (legs do not connect anything)."""
        parent = {n: n for n in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for pd in self.darts.values():
            if pd.twin is not None:
                a, b = find(pd.origin), find(self.darts[pd.twin].origin)
                if a != b:
                    parent[a] = b
        groups: dict = {}
        for n in self.nodes:
            groups.setdefault(find(n), []).append(n)
        return [sorted(g) for g in sorted(groups.values())]


def reverse_orientation(p: Pattern) -> Pattern:
    """The pattern with every dart direction flipped."""
    out = Pattern(name=p.name, nodes=dict(p.nodes), rotation=dict(p.rotation), meta=p.meta)
    for did, pd in p.darts.items():
        out.darts[did] = replace(pd, direction=IN if pd.direction == OUT else OUT)
    return out


def reflect(p: Pattern) -> Pattern:
    """The mirror image: every rotation cycle reversed."""
    out = Pattern(name=p.name, nodes=dict(p.nodes), darts=dict(p.darts), meta=p.meta)
    out.rotation = {n: tuple(reversed(r)) for n, r in p.rotation.items()}
    return out


@dataclass
class ROFamily:
    """The closure of a pattern under orientation reversal and
    reflection: at most four distinct members.
    """

    base: Pattern

    def members(self) -> list[tuple[str, Pattern]]:
        g = self.base
        return [
            ("G", g),
            ("G*", reverse_orientation(g)),
            ("r(G)", reflect(g)),
            ("r(G*)", reflect(reverse_orientation(g))),
        ]

    def distinct(self) -> int:
        seen = set()
        for _, m in self.members():
            seen.add(_structural_key(m))
        return len(seen)


def ro_family(p: Pattern) -> ROFamily:
    return ROFamily(base=p)


def _structural_key(p: Pattern):
    return (
        tuple(sorted(p.nodes.items())),
        tuple(sorted((d, pd.origin, pd.twin, pd.label, pd.direction, pd.terminal)
                     for d, pd in p.darts.items())),
        tuple(sorted((n, r) for n, r in p.rotation.items())),
    )


class PatternBuilder:
    """Assemble a pattern node by node, mirroring the chart builder.

    Symbolic labels are given as an int a (meaning k + a*mu) or a pair
    (a, b) (meaning k + a*mu + b*delta); None is a wildcard.
    """

    def __init__(self, name: str, meta: str = ""):
        self.name = name
        self.meta = meta
        self._kinds: dict = {}
        self._slots: dict = {}
        self._darts: dict = {}
        self._counter = 0

    def node(self, kind: str, name: str) -> str:
        if name in self._kinds:
            raise SemanticError(f"duplicate pattern node {name}")
        self._kinds[name] = kind
        self._slots[name] = [None] * NODE_SLOTS[kind]
        return name

    def white(self, name: str) -> str:
        return self.node(WHITE, name)

    def black(self, name: str) -> str:
        return self.node(BLACK, name)

    @staticmethod
    def _coeff(label):
        if label is None:
            return None
        if isinstance(label, int):
            return (label, 0)
        return (int(label[0]), int(label[1]))

    def connect(self, u: str, i: int, v: str, j: int, label) -> tuple[str, str]:
        """Arc oriented u -> v at slots i, j."""
        c = self._coeff(label)
        a = f"q{self._counter}"
        b = f"q{self._counter + 1}"
        self._counter += 2
        for node, slot in ((u, i), (v, j)):
            if self._slots[node][slot] is not None:
                raise SemanticError(f"pattern slot {slot} at {node} already used")
        self._darts[a] = PDart(id=a, origin=u, twin=b, label=c, direction=OUT)
        self._darts[b] = PDart(id=b, origin=v, twin=a, label=c, direction=IN)
        self._slots[u][i] = a
        self._slots[v][j] = b
        return a, b

    def leg(self, u: str, i: int, label=None, direction: str = OUT,
            terminal: bool = False) -> str:
        c = self._coeff(label)
        a = f"q{self._counter}"
        self._counter += 1
        if self._slots[u][i] is not None:
            raise SemanticError(f"pattern slot {i} at {u} already used")
        self._darts[a] = PDart(
            id=a, origin=u, twin=None, label=c, direction=direction, terminal=terminal
        )
        self._slots[u][i] = a
        return a

    def build(self) -> Pattern:
        p = Pattern(name=self.name, meta=self.meta)
        p.nodes = dict(self._kinds)
        p.darts = dict(self._darts)
        for n, slots in self._slots.items():
            if any(s is None for s in slots):
                raise SemanticError(f"pattern node {n} has unfilled slots")
            p.rotation[n] = tuple(slots)
            if self._kinds[n] == WHITE:
                dirs = [self._darts[s].direction for s in slots]
                flips = sum(
                    1 for i in range(6) if dirs[i] == IN and dirs[(i + 1) % 6] == OUT
                )
                if sum(1 for d in dirs if d == IN) != 3 or flips != 1:
                    raise SemanticError(
                        f"pattern white {n} lacks the three-in three-out run"
                    )
        return p


# -- serialization ---------------------------------------------------------


def _label_text(c) -> str:
    if c is None:
        return "*"
    a, b = c
    out = "k"
    if a:
        out += f"{a:+d}u"
    if b:
        out += f"{b:+d}d"
    return out


_LABEL_RE = re.compile(r"^k(?P<u>[+-]\d+)?u?(?P<d>[+-]\d+)?d?$")


def _label_parse(text: str):
    if text == "*":
        return None
    m = re.match(r"^k(?:([+-]\d+)u)?(?:([+-]\d+)d)?$", text)
    if not m:
        raise ChartSyntaxError(0, f"bad symbolic label {text!r}")
    return (int(m.group(1) or 0), int(m.group(2) or 0))


def serialize_pattern(p: Pattern) -> str:
    lines = [f"pattern/1 name={p.name}"]
    for n in sorted(p.nodes):
        lines.append(f"node {n} {p.nodes[n]}")
    for d in sorted(p.darts):
        pd = p.darts[d]
        if pd.twin is None:
            extra = " terminal" if pd.terminal else ""
            lines.append(
                f"leg {d} origin={pd.origin} label={_label_text(pd.label)} "
                f"dir={pd.direction}{extra}"
            )
        else:
            lines.append(
                f"dart {d} origin={pd.origin} twin={pd.twin} "
                f"label={_label_text(pd.label)} dir={pd.direction}"
            )
    for n in sorted(p.rotation):
        lines.append(f"rot {n} = " + " ".join(p.rotation[n]))
    return "\n".join(lines) + "\n"


def parse_pattern(text: str) -> Pattern:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("pattern/1"):
        raise ChartSyntaxError(1, "missing pattern/1 header")
    name = dict(
        part.split("=", 1) for part in lines[0].split()[1:] if "=" in part
    ).get("name", "pattern")
    p = Pattern(name=name)
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if parts[0] == "node":
            p.nodes[parts[1]] = parts[2]
        elif parts[0] in ("dart", "leg"):
            attrs = dict(part.split("=", 1) for part in parts[2:] if "=" in part)
            p.darts[parts[1]] = PDart(
                id=parts[1],
                origin=attrs["origin"],
                twin=attrs.get("twin"),
                label=_label_parse(attrs["label"]),
                direction=attrs["dir"],
                terminal="terminal" in parts,
            )
        elif parts[0] == "rot":
            p.rotation[parts[1]] = tuple(parts[3:])
        else:
            raise ChartSyntaxError(i, f"unknown pattern line {ln!r}")
    return p


# -- matching --------------------------------------------------------------


def _walk_edge(chart: Chart, germ: str):
    """Follow the chart edge from a germ to its far endpoint.

    Returns (arrival germ at the far node, far node) splicing straight
    through crossings and markers, or None on a closed hoop/ring orbit.
    """
    d = germ
    for _ in range(len(chart.darts) + 1):
        t = chart.twin(d)
        node = chart.dart(t).origin
        if chart.nodes[node] in (BLACK, WHITE):
            return t, node
        nxt = splice_partner(chart, t)
        if nxt == germ:
            return None
        d = nxt
    return None


def _nodes_in_region(chart: Chart, region: Region | None):
    if region is None:
        return set(chart.nodes)
    faces = face_walk(chart, check_euler=False)
    fo = face_of_dart(chart, faces)
    out = set()
    for node in chart.nodes:
        corners = set()
        for g in chart.rotation[node]:
            corners.add(fo[g])
            corners.add(fo[chart.twin(g)])
        if corners & set(region.faces):
            out.add(node)
    return out


class _MatchState:
    def __init__(self, chart, allowed, pattern, mu, delta):
        self.chart = chart
        self.allowed = allowed
        self.p = pattern
        self.mu = mu
        self.delta = delta
        self.k = None
        self.node_map: dict = {}
        self.dart_map: dict = {}
        self.used_nodes: set = set()
        self.used_edges: set = set()

    def value(self, c):
        return self.k + c[0] * self.mu + c[1] * self.delta

    def unify(self, c, concrete: int) -> bool:
        if c is None:
            return True
        want = concrete - c[0] * self.mu - c[1] * self.delta
        if self.k is None:
            if not 1 <= want <= self.chart.braid_index - 1:
                return False
            self.k = want
            return True
        return self.k == want


def match(chart: Chart, region: Region | None, p: Pattern) -> list[dict]:
    """All embeddings of the RO family of ``p`` into the region.

    Each embedding reports the family member, the sign assignment, the
    resolved base label k, and the node and germ images.  Results are
    deduplicated by image, so a placement found through several family
    members or symmetries is listed once.
    """
    if not chart.darts:
        return []
    allowed = _nodes_in_region(chart, region)
    deltas = (1, -1) if p.uses_delta else (1,)
    results = []
    seen = set()
    for tag, member in ROFamily(p).members():
        for mu in (1, -1):
            for delta in deltas:
                for emb in _match_member(chart, allowed, member, mu, delta):
                    key = (
                        frozenset(emb["nodes"].values()),
                        frozenset(emb["darts"].values()),
                    )
                    if key in seen:
                        continue
                    seen.add(key)
                    emb["variant"] = tag
                    results.append(emb)
    results.sort(key=lambda e: (sorted(e["nodes"].values()), e["k"]))
    return results


def _match_member(chart, allowed, p, mu, delta):
    comps = p.components()
    if not comps:
        return
    anchors = []
    for comp in comps:
        whites = [n for n in comp if p.nodes[n] == WHITE]
        if not whites:
            return
        anchors.append(whites[0])
    chart_whites = sorted(
        n for n in allowed if chart.nodes[n] == WHITE and len(chart.rotation[n]) == 6
    )

    def place_component(ci, state):
        if ci == len(comps):
            yield {
                "k": state.k,
                "mu": state.mu,
                "delta": state.delta,
                "nodes": dict(state.node_map),
                "darts": dict(state.dart_map),
            }
            return
        w0 = anchors[ci]
        for cand in chart_whites:
            if cand in state.used_nodes:
                continue
            for offset in range(6):
                saved = _snapshot(state)
                if _assign_white(state, w0, cand, offset) and _close(state, ci):
                    yield from place_component(ci + 1, state)
                _restore(state, saved)

    state = _MatchState(chart, allowed, p, mu, delta)
    yield from place_component(0, state)


def _snapshot(state):
    return (
        state.k,
        dict(state.node_map),
        dict(state.dart_map),
        set(state.used_nodes),
        set(state.used_edges),
    )


def _restore(state, saved):
    state.k, state.node_map, state.dart_map, state.used_nodes, state.used_edges = (
        saved[0], dict(saved[1]), dict(saved[2]), set(saved[3]), set(saved[4])
    )


def _assign_white(state, pnode, cnode, offset) -> bool:
    p, chart = state.p, state.chart
    prot = p.rotation[pnode]
    crot = chart.rotation[cnode]
    for i, pd_id in enumerate(prot):
        pd = p.darts[pd_id]
        cd_id = crot[(offset + i) % 6]
        cd = chart.dart(cd_id)
        if pd.direction != cd.direction:
            return False
        if not state.unify(pd.label, cd.label):
            return False
        state.dart_map[pd_id] = cd_id
    state.node_map[pnode] = cnode
    state.used_nodes.add(cnode)
    return True


def _assign_black(state, pnode, cnode, germ_p, germ_c) -> bool:
    p, chart = state.p, state.chart
    if chart.nodes[cnode] != BLACK or cnode in state.used_nodes:
        return False
    prot = p.rotation[pnode]
    if len(prot) != 1 or len(chart.rotation[cnode]) != 1:
        return False
    pd = p.darts[prot[0]]
    cd = chart.dart(chart.rotation[cnode][0])
    if prot[0] != germ_p or chart.rotation[cnode][0] != germ_c:
        return False
    if pd.direction != cd.direction or not state.unify(pd.label, cd.label):
        return False
    state.dart_map[prot[0]] = cd.id
    state.node_map[pnode] = cnode
    state.used_nodes.add(cnode)
    return True


def _close(state, ci) -> bool:
    """Propagate arcs from every newly placed node of component ci."""
    p, chart = state.p, state.chart
    comp = set(p.components()[ci])
    queue = [n for n in comp if n in state.node_map]
    done_edges = set()
    while queue:
        node = queue.pop()
        for pd_id in p.rotation[node]:
            pd = p.darts[pd_id]
            if pd.twin is None:
                if not _check_leg(state, pd):
                    return False
                continue
            ekey = frozenset((pd_id, pd.twin))
            if ekey in done_edges:
                continue
            done_edges.add(ekey)
            germ_c = state.dart_map[pd_id]
            hit = _walk_edge(chart, germ_c)
            if hit is None:
                return False
            far_germ, far_node = hit
            if far_node not in state.allowed:
                return False
            cekey = frozenset((germ_c, far_germ))
            if cekey in state.used_edges:
                return False
            state.used_edges.add(cekey)
            tnode = p.darts[pd.twin].origin
            if tnode in state.node_map:
                if state.node_map[tnode] != far_node:
                    return False
                if state.dart_map.get(pd.twin) != far_germ:
                    return False
                continue
            kind = p.nodes[tnode]
            if kind == BLACK:
                if not _assign_black(state, tnode, far_node, pd.twin, far_germ):
                    return False
            elif kind == WHITE:
                if chart.nodes[far_node] != WHITE or far_node in state.used_nodes:
                    return False
                crot = chart.rotation[far_node]
                slot = p.rotation[tnode].index(pd.twin)
                offset = (crot.index(far_germ) - slot) % 6
                if not _assign_white(state, tnode, far_node, offset):
                    return False
            else:
                return False
            queue.append(tnode)
    return True


def _check_leg(state, pd) -> bool:
    if not pd.terminal:
        return True
    germ_c = state.dart_map[pd.id]
    hit = _walk_edge(state.chart, germ_c)
    return hit is not None and state.chart.nodes[hit[1]] == BLACK


# -- library ---------------------------------------------------------------

A_IN = (IN, IN, IN, OUT, OUT, OUT)       # in-run at slots 0..2
A_OUT = (OUT, OUT, OUT, IN, IN, IN)      # out-run at slots 0..2
S_IIOOOI = (IN, IN, OUT, OUT, OUT, IN)
S_OOIIIO = (OUT, OUT, IN, IN, IN, OUT)
S_IOOOII = (IN, OUT, OUT, OUT, IN, IN)
S_OIIIOO = (OUT, IN, IN, IN, OUT, OUT)


def _fill_odd_legs(pb, w, dirs, label):
    for slot in (1, 3, 5):
        pb.leg(w, slot, label, dirs[slot])


def _fill_even_legs(pb, w, dirs, label):
    for slot in (0, 2, 4):
        pb.leg(w, slot, label, dirs[slot])


def _p03():
    pb = PatternBuilder("P03", "loop with its associated disk side")
    w1 = pb.white("w1")
    pb.connect(w1, 4, w1, 2, 0)
    pb.leg(w1, 0, 0, IN)
    _fill_odd_legs(pb, w1, A_IN, 1)
    return pb.build()


def _p05a():
    pb = PatternBuilder(
        "P05a",
        "loop disk with exactly two interior whites joined by parallel strands",
    )
    w1, wa, wb = pb.white("w1"), pb.white("wa"), pb.white("wb")
    b1, ba, bb, bc = (pb.black(n) for n in ("b1", "ba", "bb", "bc"))
    # w1: in-run 0..2; even label k, odd k+1.  The loop leaves a single
    # slot on its disk side, so exactly one k+1 edge enters the disk;
    # the other two k+1 germs of w1 stay outside.
    pb.connect(w1, 4, w1, 2, 0)            # loop
    pb.leg(w1, 0, 0, IN)                   # third k-edge, outside the disk
    pb.connect(b1, 0, w1, 1, 1)            # terminal at the middle arc
    pb.connect(w1, 3, wa, 0, 1)            # e1, into the disk
    pb.leg(w1, 5, 1, OUT)                  # second k+1 edge, outside
    # wa: in-run 0..2; even k+1, odd k+2.
    pb.connect(wb, 0, wa, 2, 1)            # joining k+1 edge
    pb.connect(wa, 4, ba, 0, 1)            # terminal
    pb.connect(wb, 1, wa, 1, 2)            # joining k+2 edge (middle arcs)
    pb.leg(wa, 3, 2, OUT)                  # e3
    pb.leg(wa, 5, 2, OUT)                  # e4
    # wb: out-run 0..2.
    pb.connect(wb, 2, bb, 0, 1)            # terminal
    pb.connect(bc, 0, wb, 4, 1)            # terminal
    pb.leg(wb, 3, 2, IN)                   # e5
    pb.leg(wb, 5, 2, IN)                   # e6
    return pb.build()


def _p06a():
    pb = PatternBuilder("P06a", "nested loop whose disk repeats the two-white core")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    b2, b3, b4, b5 = (pb.black(n) for n in ("b2", "b3", "b4", "b5"))
    pb.connect(w2, 4, w2, 2, 1)
    pb.leg(w2, 0, 1, IN)
    pb.connect(b2, 0, w2, 1, 2)
    pb.connect(w2, 3, w3, 0, 2)
    pb.leg(w2, 5, 2, OUT)
    pb.connect(w4, 0, w3, 2, 2)
    pb.connect(w3, 4, b3, 0, 2)
    pb.connect(w4, 1, w3, 1, 3)
    pb.leg(w3, 3, 3, OUT)
    pb.leg(w3, 5, 3, OUT)
    pb.connect(w4, 2, b4, 0, 2)
    pb.connect(b5, 0, w4, 4, 2)
    pb.leg(w4, 3, 3, IN)
    pb.leg(w4, 5, 3, IN)
    return pb.build()


def _p06b():
    pb = PatternBuilder("P06b", "two-angled disk with one feeler and an outer white")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    bf, bx, by = pb.black("bf"), pb.black("bx"), pb.black("by")
    b4, b4b = pb.black("b4"), pb.black("b4b")
    pb.leg(w2, 0, 1, IN)
    pb.connect(w2, 2, w3, 2, 1)
    pb.connect(w2, 4, w3, 4, 1)
    pb.connect(bx, 0, w2, 1, 2)
    pb.connect(w2, 3, w4, 0, 2)
    pb.leg(w2, 5, 2, IN)
    pb.connect(w3, 0, bf, 0, 1)            # the feeler, a terminal edge
    pb.connect(w3, 1, w4, 2, 2)
    pb.leg(w3, 3, 2, IN)
    pb.connect(w3, 5, by, 0, 2)
    pb.connect(w4, 4, b4, 0, 2)
    pb.leg(w4, 1, 3, IN)
    pb.leg(w4, 3, 3, OUT)
    pb.connect(w4, 5, b4b, 0, 3)
    return pb.build()


def _p06c():
    pb = PatternBuilder("P06c", "two-angled disk chained to a third white")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    bt2, bt3, bt4 = pb.black("bt2"), pb.black("bt3"), pb.black("bt4")
    pb.leg(w2, 0, 1, IN)
    pb.connect(w2, 2, w3, 2, 1)
    pb.connect(w2, 4, w3, 4, 1)
    pb.connect(bt2, 0, w2, 1, 2)
    pb.leg(w2, 3, 2, OUT)
    pb.leg(w2, 5, 2, IN)
    pb.connect(w3, 0, w4, 0, 1)
    pb.leg(w3, 1, 2, OUT)
    pb.leg(w3, 3, 2, IN)
    pb.connect(w3, 5, bt3, 0, 2)
    pb.leg(w4, 2, 1, IN)
    pb.leg(w4, 4, 1, OUT)
    pb.connect(bt4, 0, w4, 1, 2)
    pb.leg(w4, 3, 2, OUT)
    pb.leg(w4, 5, 2, OUT)
    return pb.build()


def _p06d():
    pb = PatternBuilder("P06d", "three-angled disk with dotted corners, resolved labels")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    bw3, bw4 = pb.black("bw3"), pb.black("bw4")
    pb.connect(w2, 2, w3, 0, 1)
    pb.connect(w3, 2, w4, 0, 1)
    pb.connect(w4, 2, w2, 0, 1)
    pb.leg(w2, 4, 1, IN)
    pb.connect(bw3, 0, w3, 4, 1)
    pb.connect(bw4, 0, w4, 4, 1)
    pb.connect(w2, 1, w4, 5, 2)
    pb.leg(w2, 3, 2, OUT)
    pb.leg(w2, 5, 2, IN)
    pb.leg(w3, 1, 2, OUT)
    pb.leg(w3, 3, 2, OUT)
    pb.leg(w3, 5, 2, IN)
    pb.leg(w4, 1, 2, OUT)
    pb.leg(w4, 3, 2, OUT)
    return pb.build()


def _bigon(pb, wa, wb, same_direction: bool):
    if same_direction:
        # wa: dirs in,in,out,out,out,in; wb mirrored.
        pb.leg(wa, 0, 0, IN)
        pb.connect(wa, 2, wb, 2, 0)
        pb.connect(wa, 4, wb, 4, 0)
        pb.leg(wb, 0, 0, OUT)
        return (S_IIOOOI, S_OOIIIO)
    pb.leg(wa, 0, 0, IN)
    pb.connect(wa, 2, wb, 2, 0)
    pb.connect(wb, 4, wa, 4, 0)
    pb.leg(wb, 0, 0, OUT)
    return (S_IOOOII, S_OIIIOO)


def _p07a():
    pb = PatternBuilder("P07a", "two-angled disk, coherently oriented, bare")
    wa, wb = pb.white("wa"), pb.white("wb")
    da, db = _bigon(pb, wa, wb, True)
    _fill_odd_legs(pb, wa, da, 1)
    _fill_odd_legs(pb, wb, db, 1)
    return pb.build()


def _p07b():
    pb = PatternBuilder("P07b", "two-angled disk, coherently oriented, with chord")
    wa, wb = pb.white("wa"), pb.white("wb")
    da, db = _bigon(pb, wa, wb, True)
    pb.connect(wa, 3, wb, 3, 1)
    for slot in (1, 5):
        pb.leg(wa, slot, 1, da[slot])
        pb.leg(wb, slot, 1, db[slot])
    return pb.build()


def _p07c():
    pb = PatternBuilder("P07c", "two-angled disk with one feeler and a far white")
    wa, wb = pb.white("wa"), pb.white("wb")
    bf = pb.black("bf")
    pb.leg(wa, 0, 0, IN)
    pb.connect(wa, 2, wb, 2, 0)
    pb.connect(wa, 4, wb, 4, 0)
    pb.connect(wb, 0, bf, 0, 0)            # feeler terminal
    _fill_odd_legs(pb, wa, S_IIOOOI, 1)
    _fill_odd_legs(pb, wb, S_OOIIIO, 1)
    w4 = pb.white("w4")
    b4, b4b = pb.black("b4"), pb.black("b4b")
    pb.leg(w4, 0, (0, 1), IN)
    pb.leg(w4, 2, (0, 1), IN)
    pb.connect(w4, 4, b4, 0, (0, 1))
    pb.leg(w4, 1, (0, 2), IN)
    pb.leg(w4, 3, (0, 2), OUT)
    pb.connect(w4, 5, b4b, 0, (0, 2))
    return pb.build()


def _p07d():
    pb = PatternBuilder("P07d", "two-angled disk, opposing orientations, bare")
    wa, wb = pb.white("wa"), pb.white("wb")
    da, db = _bigon(pb, wa, wb, False)
    _fill_odd_legs(pb, wa, da, 1)
    _fill_odd_legs(pb, wb, db, 1)
    return pb.build()


def _p07e():
    pb = PatternBuilder("P07e", "two-angled disk, opposing orientations, with chord")
    wa, wb = pb.white("wa"), pb.white("wb")
    da, db = _bigon(pb, wa, wb, False)
    pb.connect(wa, 1, wb, 1, 1)
    for slot in (3, 5):
        pb.leg(wa, slot, 1, da[slot])
        pb.leg(wb, slot, 1, db[slot])
    return pb.build()


def _triangle(pb, ws, label=0):
    w1, w2, w3 = ws
    pb.connect(w1, 2, w2, 0, label)
    pb.connect(w2, 2, w3, 0, label)
    pb.connect(w3, 2, w1, 0, label)


def _p08a():
    pb = PatternBuilder("P08a", "special three-angled disk, bare")
    ws = [pb.white(n) for n in ("w1", "w2", "w3")]
    _triangle(pb, ws)
    for w in ws:
        pb.leg(w, 4, 0, IN)
        _fill_odd_legs(pb, w, S_IOOOII, 1)
    return pb.build()


def _p08b():
    pb = PatternBuilder("P08b", "special three-angled disk with chord")
    ws = [pb.white(n) for n in ("w1", "w2", "w3")]
    _triangle(pb, ws)
    for w in ws:
        pb.leg(w, 4, 0, IN)
    pb.connect(ws[0], 1, ws[1], 5, 1)
    pb.leg(ws[0], 3, 1, OUT)
    pb.leg(ws[0], 5, 1, IN)
    pb.leg(ws[1], 1, 1, OUT)
    pb.leg(ws[1], 3, 1, OUT)
    _fill_odd_legs(pb, ws[2], S_IOOOII, 1)
    return pb.build()


def _p10():
    pb = PatternBuilder("P10", "disk bounded by one base edge and two raised edges")
    wa, wb, wc = pb.white("wa"), pb.white("wb"), pb.white("wc")
    pb.leg(wa, 0, 0, IN)
    pb.connect(wa, 2, wb, 2, 0)            # e*
    pb.leg(wa, 4, 0, OUT)
    pb.connect(wc, 0, wa, 1, 1)            # e3
    pb.leg(wa, 3, 1, OUT)
    pb.leg(wa, 5, 1, IN)
    pb.leg(wb, 0, 0, OUT)
    pb.leg(wb, 4, 0, IN)
    pb.connect(wc, 2, wb, 3, 1)            # e4
    pb.leg(wb, 1, 1, OUT)
    pb.leg(wb, 5, 1, OUT)
    pb.leg(wc, 4, 1, IN)
    pb.leg(wc, 1, 2, OUT)
    pb.leg(wc, 3, 2, IN)
    pb.leg(wc, 5, 2, IN)
    return pb.build()


def _p12():
    pb = PatternBuilder("P12", "loop disk with a two-angled disk and a chained white")
    w1, w2, w3, w4 = (pb.white(n) for n in ("w1", "w2", "w3", "w4"))
    pb.connect(w1, 4, w1, 2, 0)
    pb.leg(w1, 0, 0, IN)
    pb.leg(w1, 1, 1, IN)
    pb.connect(w1, 3, w2, 0, 1)
    pb.leg(w1, 5, 1, OUT)
    pb.connect(w2, 2, w3, 2, 1)
    pb.connect(w2, 4, w3, 4, 1)
    _fill_odd_legs(pb, w2, S_IIOOOI, None)
    pb.connect(w3, 0, w4, 0, 1)
    _fill_odd_legs(pb, w3, S_OOIIIO, None)
    pb.leg(w4, 2, 1, IN)
    pb.leg(w4, 4, 1, OUT)
    _fill_odd_legs(pb, w4, A_IN, None)
    return pb.build()


def _p13(which: str):
    pb = PatternBuilder(f"P13{which}", "white vertex with a terminal edge, or its dot")
    w = pb.white("w")
    if which == "a":
        b = pb.black("b")
        pb.leg(w, 0, 0, IN)
        pb.leg(w, 2, 0, IN)
        pb.connect(w, 4, b, 0, 0)
    elif which == "b":
        b = pb.black("b")
        pb.connect(b, 0, w, 0, 0)
        pb.leg(w, 2, 0, IN)
        pb.leg(w, 4, 0, OUT)
    else:
        pb.leg(w, 0, 0, IN)
        pb.leg(w, 2, 0, IN)
        pb.leg(w, 4, 0, OUT, terminal=True)
    _fill_odd_legs(pb, w, A_IN, None)
    return pb.build()


def _p14a():
    pb = PatternBuilder("P14a", "interior loop")
    w2 = pb.white("w2")
    pb.connect(w2, 4, w2, 2, 1)
    pb.leg(w2, 0, 1, IN)
    _fill_odd_legs(pb, w2, A_IN, None)
    return pb.build()


def _p14b():
    pb = PatternBuilder("P14b", "interior two-angled disk with a feeler")
    w2, w3 = pb.white("w2"), pb.white("w3")
    bf = pb.black("bf")
    pb.leg(w2, 0, 1, IN)
    pb.connect(w2, 2, w3, 2, 1)
    pb.connect(w2, 4, w3, 4, 1)
    pb.connect(w3, 0, bf, 0, 1)
    _fill_odd_legs(pb, w2, S_IIOOOI, None)
    _fill_odd_legs(pb, w3, S_OOIIIO, None)
    return pb.build()


def _p14c():
    pb = PatternBuilder("P14c", "interior two-angled disk, coherently oriented")
    w2, w3 = pb.white("w2"), pb.white("w3")
    pb.leg(w2, 0, 1, IN)
    pb.connect(w2, 2, w3, 2, 1)
    pb.connect(w2, 4, w3, 4, 1)
    pb.leg(w3, 0, 1, OUT)
    _fill_odd_legs(pb, w2, S_IIOOOI, None)
    _fill_odd_legs(pb, w3, S_OOIIIO, None)
    return pb.build()


def _p14d():
    pb = PatternBuilder("P14d", "interior two-angled disk chained to a third white")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    pb.leg(w2, 0, 1, IN)
    pb.connect(w2, 2, w3, 2, 1)
    pb.connect(w2, 4, w3, 4, 1)
    pb.connect(w3, 0, w4, 0, 1)
    pb.leg(w4, 2, 1, IN)
    pb.leg(w4, 4, 1, OUT)
    _fill_odd_legs(pb, w2, S_IIOOOI, None)
    _fill_odd_legs(pb, w3, S_OOIIIO, None)
    _fill_odd_legs(pb, w4, A_IN, None)
    return pb.build()


def _p14e():
    pb = PatternBuilder("P14e", "interior three-angled disk with dotted corners")
    ws = [pb.white(n) for n in ("w2", "w3", "w4")]
    bw3, bw4 = pb.black("bw3"), pb.black("bw4")
    _triangle(pb, ws, 1)
    pb.leg(ws[0], 4, 1, IN)
    pb.connect(bw3, 0, ws[1], 4, 1)
    pb.connect(bw4, 0, ws[2], 4, 1)
    pb.connect(ws[0], 1, ws[2], 5, (1, 1))
    pb.leg(ws[0], 3, None, OUT)
    pb.leg(ws[0], 5, None, IN)
    pb.leg(ws[1], 1, None, OUT)
    pb.leg(ws[1], 3, None, OUT)
    pb.leg(ws[1], 5, None, IN)
    pb.leg(ws[2], 1, None, OUT)
    pb.leg(ws[2], 3, None, OUT)
    return pb.build()


def _p14f():
    pb = PatternBuilder("P14f", "three-angled disk stacked on a two-angled disk")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    pb.connect(w4, 0, w2, 0, 1)
    pb.connect(w2, 2, w3, 0, 1)
    pb.leg(w2, 4, 1, OUT)
    pb.connect(w3, 2, w4, 2, 1)
    pb.connect(w3, 4, w4, 4, 1)
    pb.leg(w4, 1, None, OUT)
    pb.leg(w4, 3, None, IN)
    pb.leg(w4, 5, None, OUT)
    _fill_odd_legs(pb, w2, S_IIOOOI, None)
    _fill_odd_legs(pb, w3, S_IIOOOI, None)
    return pb.build()


def _p15a():
    pb = PatternBuilder("P15a", "pair of eyeglasses")
    w2, w3 = pb.white("w2"), pb.white("w3")
    pb.connect(w2, 0, w3, 0, 0)
    pb.connect(w2, 4, w2, 2, 0)
    pb.connect(w3, 2, w3, 4, 0)
    _fill_odd_legs(pb, w2, S_OIIIOO, None)
    _fill_odd_legs(pb, w3, S_IOOOII, None)
    return pb.build()


def _p15b():
    pb = PatternBuilder("P15b", "pair of skew eyeglasses, first kind")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    b4 = pb.black("b4")
    pb.connect(w2, 0, w3, 0, 0)
    pb.connect(w2, 4, w2, 2, 0)
    pb.connect(w3, 2, w4, 0, 0)
    pb.connect(w4, 2, w3, 4, 0)
    pb.connect(b4, 0, w4, 4, 0)
    _fill_odd_legs(pb, w2, S_OIIIOO, None)
    _fill_odd_legs(pb, w3, S_IOOOII, None)
    _fill_odd_legs(pb, w4, S_IOOOII, None)
    return pb.build()


def _p15c():
    pb = PatternBuilder("P15c", "pair of skew eyeglasses, second kind")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    b4 = pb.black("b4")
    pb.connect(w2, 0, w4, 0, 0)
    pb.connect(w2, 4, w2, 2, 0)
    pb.connect(w3, 0, w4, 2, 0)
    pb.connect(w3, 4, w3, 2, 0)
    pb.connect(w4, 4, b4, 0, 0)
    _fill_odd_legs(pb, w2, S_OIIIOO, None)
    _fill_odd_legs(pb, w3, S_OIIIOO, None)
    _fill_odd_legs(pb, w4, A_IN, None)
    return pb.build()


def _p19(which: str):
    pb = PatternBuilder(
        f"P19{which}", "three-angled disk with hanging terminals at its corners"
    )
    ws = [pb.white(n) for n in ("w1", "w2", "w3")]
    _triangle(pb, ws)
    for w in ws:
        pb.leg(w, 4, 0, IN)
    bt1, bt3 = pb.black("bt1"), pb.black("bt3")
    if which == "a":
        pb.connect(ws[0], 1, bt1, 0, 1)
        pb.leg(ws[0], 3, 1, OUT)
        pb.leg(ws[0], 5, 1, IN)
        pb.connect(ws[2], 1, bt3, 0, -1)
        pb.leg(ws[2], 3, -1, OUT)
        pb.leg(ws[2], 5, -1, IN)
        _fill_odd_legs(pb, ws[1], S_IOOOII, -1)
    elif which == "b":
        pb.connect(bt1, 0, ws[0], 5, 1)
        pb.leg(ws[0], 1, 1, OUT)
        pb.leg(ws[0], 3, 1, OUT)
        pb.connect(bt3, 0, ws[2], 5, -1)
        pb.leg(ws[2], 1, -1, OUT)
        pb.leg(ws[2], 3, -1, OUT)
        _fill_odd_legs(pb, ws[1], S_IOOOII, -1)
    else:
        pb.connect(bt1, 0, ws[0], 5, 1)
        pb.leg(ws[0], 1, 1, OUT)
        pb.leg(ws[0], 3, 1, OUT)
        pb.connect(ws[2], 1, bt3, 0, -1)
        pb.leg(ws[2], 3, -1, OUT)
        pb.connect(ws[1], 1, ws[2], 5, -1)
        pb.leg(ws[1], 3, -1, OUT)
        pb.leg(ws[1], 5, -1, IN)
    return pb.build()


def _p22(which: str):
    pb = PatternBuilder(
        f"P22{which}", "skew eyeglasses with the far disk, terminal in or out"
    )
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    b4 = pb.black("b4")
    pb.connect(w2, 0, w3, 0, 0)
    pb.connect(w2, 4, w2, 2, 0)
    pb.connect(w3, 2, w4, 0 if which == "a" else 4, 0)
    pb.connect(w4, 2, w3, 4, 0)
    pb.connect(b4, 0, w4, 4 if which == "a" else 0, 0)
    _fill_odd_legs(pb, w2, S_OIIIOO, 1)
    _fill_odd_legs(pb, w3, S_IOOOII, None)
    _fill_odd_legs(pb, w4, S_IOOOII, None)
    return pb.build()


def _p23():
    pb = PatternBuilder("P23", "three-angled disk with a fan corner")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    pb.leg(w2, 0, 0, IN)
    pb.connect(w2, 2, w3, 0, 0)
    pb.connect(w2, 4, w4, 4, 0)
    pb.connect(w3, 2, w4, 2, 0)
    pb.leg(w3, 4, 0, OUT)
    pb.leg(w4, 0, 0, OUT)
    _fill_odd_legs(pb, w2, S_IIOOOI, None)
    _fill_odd_legs(pb, w3, S_IIOOOI, None)
    _fill_odd_legs(pb, w4, S_OOIIIO, None)
    return pb.build()


def _p24b():
    pb = PatternBuilder("P24b", "three-angled disk with a fan corner and chord")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    pb.leg(w2, 0, 0, IN)
    pb.connect(w2, 2, w3, 0, 0)
    pb.connect(w2, 4, w4, 4, 0)
    pb.connect(w3, 2, w4, 2, 0)
    pb.leg(w3, 4, 0, OUT)
    pb.leg(w4, 0, 0, OUT)
    pb.connect(w2, 3, w3, 1, 1)
    pb.leg(w2, 1, 1, IN)
    pb.leg(w2, 5, 1, IN)
    pb.leg(w3, 3, 1, OUT)
    pb.leg(w3, 5, 1, IN)
    _fill_odd_legs(pb, w4, S_OOIIIO, 1)
    return pb.build()


def _p26a():
    pb = PatternBuilder("P26a", "skew eyeglasses with the loop label pinned")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    b4 = pb.black("b4")
    pb.connect(w2, 0, w3, 0, 0)
    pb.connect(w2, 4, w2, 2, 0)
    pb.connect(w3, 2, w4, 0, 0)
    pb.connect(w4, 2, w3, 4, 0)
    pb.connect(b4, 0, w4, 4, 0)
    _fill_odd_legs(pb, w2, S_OIIIOO, 1)
    _fill_odd_legs(pb, w3, S_IOOOII, None)
    _fill_odd_legs(pb, w4, S_IOOOII, None)
    return pb.build()


def _p26b():
    pb = PatternBuilder("P26b", "skew eyeglasses with a coherently oriented far disk")
    w2, w3, w4 = pb.white("w2"), pb.white("w3"), pb.white("w4")
    b4 = pb.black("b4")
    pb.connect(w2, 0, w3, 0, 0)
    pb.connect(w2, 4, w2, 2, 0)
    pb.connect(w3, 2, w4, 2, 0)
    pb.connect(w3, 4, w4, 4, 0)
    pb.connect(w4, 0, b4, 0, 0)
    _fill_odd_legs(pb, w2, S_OIIIOO, 1)
    _fill_odd_legs(pb, w3, S_IIOOOI, None)
    _fill_odd_legs(pb, w4, S_OOIIIO, None)
    return pb.build()


def _p26c():
    p = _p19("b")
    p.name = "P26c"
    p.meta = "emptied three-angled disk before the relocation move"
    return p


def _p26d():
    pb = PatternBuilder("P26d", "lens core between two raised labels")
    wx, wy = pb.white("wx"), pb.white("wy")
    pb.leg(wx, 0, 1, IN)
    pb.connect(wx, 2, wy, 2, 1)
    pb.leg(wx, 4, 1, OUT)
    pb.leg(wx, 1, 2, IN)
    pb.connect(wx, 3, wy, 3, 2)
    pb.leg(wx, 5, 2, IN)
    pb.leg(wy, 0, 1, OUT)
    pb.leg(wy, 4, 1, IN)
    pb.leg(wy, 1, 2, OUT)
    pb.leg(wy, 5, 2, OUT)
    return pb.build()


def pattern_library() -> dict[str, Pattern]:
    """The catalog of transcribed plate configurations, keyed by id."""
    builders = [
        _p03, _p05a, _p06a, _p06b, _p06c, _p06d,
        _p07a, _p07b, _p07c, _p07d, _p07e,
        _p08a, _p08b, _p10, _p12,
        lambda: _p13("a"), lambda: _p13("b"), lambda: _p13("c"),
        _p14a, _p14b, _p14c, _p14d, _p14e, _p14f,
        _p15a, _p15b, _p15c,
        lambda: _p19("a"), lambda: _p19("b"), lambda: _p19("c"),
        lambda: _p22("a"), lambda: _p22("b"),
        _p23, _p24b, _p26a, _p26b, _p26c, _p26d,
    ]
    lib = {}
    for fn in builders:
        p = fn()
        lib[p.name] = p
    return lib
