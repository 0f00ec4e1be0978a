"""Elementary chart moves and the composite procedures built from them.

Every elementary move is applied at an explicit anchor (dart and node
ids); there is no implicit search inside ``apply_move``.  Each
application is validated three ways: the rewritten chart must pass the
structural and Euler checks, it must not acquire new axiom failures, and
the observed (white, black, crossing) count deltas must equal the move
kind's declared table.  The composite procedures (vertex shifting,
crossing clearing, arc freeing, triangle deformation and reduction, and
bounded reduction search) only ever call ``apply_move``, so their traces
replay move by move.

Applications are value-like: the input chart is never mutated, and a
``MoveTrace`` carries the exact inverse of every step so a trace can be
replayed backward.  ``search_reduction`` may evaluate branches in
parallel in principle (each branch owns its chart copy and the memo
table only needs safe insertion); the implementation here is sequential
and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from chartcalc.core import (
    BLACK,
    CROSSING,
    IN,
    MARKER,
    OUT,
    WHITE,
    Chart,
    Dart,
    canonical_key,
    component_of_node,
    face_of_dart,
    face_walk,
)
from chartcalc.errors import (
    AxiomRegression,
    BlockedPath,
    ChartError,
    EulerViolation,
    InteriorNotEmpty,
    LabelConditionViolated,
    LabelOutOfRange,
    NotIncident,
    PatternMismatch,
    PreconditionViolated,
    SideConditionViolated,
)
from chartcalc.regions import Region, complexity, count_w
from chartcalc.subgraphs import GammaEdge, extract_subgraph, splice_partner
from chartcalc.validator import check_axioms, middle_arcs

__all__ = [
    "FORWARD",
    "INVERSE",
    "MOVE_KINDS",
    "DELTAS",
    "ElementaryMove",
    "MoveTrace",
    "apply_move",
    "apply_move_detailed",
    "enumerate_sites",
    "move_to_line",
    "move_from_line",
    "shift_white_vertex",
    "clear_edge_crossings",
    "make_arc_free",
    "triangle_deform",
    "triangle_reduce",
    "search_reduction",
]

FORWARD = "forward"
INVERSE = "inverse"

CI_HOOP = "CI_hoop"
CI_M2 = "CI_M2"
CI_R2 = "CI_R2"
CI_R3 = "CI_R3"
CI_R4 = "CI_R4"
C_II = "CII"
C_III = "CIII"

MOVE_KINDS = (CI_HOOP, CI_M2, CI_R2, CI_R3, CI_R4, C_II, C_III)

# Declared forward count deltas (white, black, crossing); inverse negates.
DELTAS = {
    CI_HOOP: (0, 0, 0),
    CI_M2: (2, 0, 0),
    CI_R2: (0, 0, 2),
    CI_R3: (0, 0, 0),
    CI_R4: (0, 0, 0),
    C_II: (0, 0, 1),
    C_III: (0, 0, 0),
}


@dataclass(frozen=True)
class ElementaryMove:
    """One move application site: kind, direction and anchor ids."""

    kind: str
    direction: str
    anchor: dict

    def describe(self) -> str:
        return move_to_line(self)


@dataclass
class MoveTrace:
    """An ordered, replayable sequence of elementary moves.

    ``inverses[i]`` undoes ``moves[i]`` on the chart state reached after
    step i; replaying the inverses in reverse order recovers the start
    chart up to isomorphism.  The footprint is the set of node and dart
    ids touched by any step.
    """

    moves: list[ElementaryMove] = field(default_factory=list)
    inverses: list[ElementaryMove] = field(default_factory=list)
    footprint: set = field(default_factory=set)

    def append(self, move: ElementaryMove, inverse: ElementaryMove, touched: set) -> None:
        self.moves.append(move)
        self.inverses.append(inverse)
        self.footprint |= touched

    def extend(self, other: "MoveTrace") -> None:
        self.moves.extend(other.moves)
        self.inverses.extend(other.inverses)
        self.footprint |= other.footprint

    def replay(self, chart: Chart) -> Chart:
        for m in self.moves:
            chart = apply_move(chart, m)
        return chart

    def replay_backward(self, chart: Chart) -> Chart:
        for m in reversed(self.inverses):
            chart = apply_move(chart, m)
        return chart


def move_to_line(move: ElementaryMove) -> str:
    """One-line text form: kind, direction, anchor key=value pairs.

    The internal restoration keys (``names``, ``rots``) that recorded
    inverses carry for exact-id undo are omitted; a reparsed move still
    applies at the same site, it only allocates fresh ids.
    """
    parts = [move.kind, move.direction]
    for key in sorted(move.anchor):
        if key in ("names", "rots"):
            continue
        value = move.anchor[key]
        if isinstance(value, (list, tuple)):
            value = "+".join(str(v) for v in value)
        parts.append(f"{key}={value}")
    return " ".join(parts)


def move_from_line(line: str) -> ElementaryMove:
    parts = line.split()
    if len(parts) < 2 or parts[0] not in MOVE_KINDS or parts[1] not in (FORWARD, INVERSE):
        raise PatternMismatch(f"bad move line {line!r}")
    anchor: dict = {}
    for p in parts[2:]:
        key, _, value = p.partition("=")
        if "+" in value:
            anchor[key] = tuple(value.split("+"))
        elif key == "label":
            anchor[key] = int(value)
        else:
            anchor[key] = value
    return ElementaryMove(kind=parts[0], direction=parts[1], anchor=anchor)


# -- low-level surgery helpers --------------------------------------------


def _fresh(chart: Chart, prefix: str, taken: set) -> str:
    i = 0
    while True:
        name = f"{prefix}{i}"
        if name not in chart.darts and name not in chart.nodes and name not in taken:
            taken.add(name)
            return name
        i += 1


class _Namer:
    """Id source for surgeries that create nodes and darts.

    When the anchor carries a ``names`` list the ids are taken from it in
    role order, so undoing a deletion recreates the exact original ids
    and chained inverse anchors stay resolvable.  Otherwise fresh ids are
    generated.
    """

    def __init__(self, chart: Chart, anchor: dict):
        self.chart = chart
        self.taken: set = set()
        given = anchor.get("names", ())
        self.queue = list(given)

    def take(self, prefix: str) -> str:
        if self.queue:
            name = self.queue.pop(0)
            if name in self.chart.darts or name in self.chart.nodes or name in self.taken:
                raise PatternMismatch(f"requested id {name!r} is already in use")
            self.taken.add(name)
            return name
        return _fresh(self.chart, prefix, self.taken)


def _pair(chart: Chart, a: str, b: str) -> None:
    """Make darts a and b twins; their labels and directions must agree."""
    da, db = chart.darts[a], chart.darts[b]
    if da.label != db.label or da.direction == db.direction:
        raise AxiomRegression(
            f"retwin {a}/{b}: incompatible label or direction"
        )
    chart.darts[a] = replace(da, twin=b)
    chart.darts[b] = replace(db, twin=a)


def _add_dart(chart: Chart, did: str, origin: str, label: int, direction: str) -> None:
    # Twin is wired afterwards with _pair.
    chart.darts[did] = Dart(id=did, origin=origin, twin=did, label=label, direction=direction)


def _drop_darts(chart: Chart, dart_ids) -> None:
    for d in dart_ids:
        del chart.darts[d]


def _drop_node(chart: Chart, node: str) -> None:
    del chart.nodes[node]
    del chart.rotation[node]


def _opp(direction: str) -> str:
    return IN if direction == OUT else OUT


def _fo(chart: Chart) -> dict:
    return face_of_dart(chart, face_walk(chart, check_euler=False))


def _counts(chart: Chart) -> tuple[int, int, int]:
    w = b = c = 0
    for kind in chart.nodes.values():
        if kind == WHITE:
            w += 1
        elif kind == BLACK:
            b += 1
        elif kind == CROSSING:
            c += 1
    return w, b, c


def _need_dart(chart: Chart, anchor: dict, key: str) -> str:
    d = anchor.get(key)
    if not isinstance(d, str) or d not in chart.darts:
        raise PatternMismatch(f"anchor {key}={d!r} is not a dart of the chart")
    return d


def _need_node(chart: Chart, anchor: dict, key: str, kind: str | None = None) -> str:
    n = anchor.get(key)
    if not isinstance(n, str) or n not in chart.nodes:
        raise PatternMismatch(f"anchor {key}={n!r} is not a node of the chart")
    if kind is not None and chart.nodes[n] != kind:
        raise PatternMismatch(f"anchor node {n} is {chart.nodes[n]}, expected {kind}")
    return n


# -- elementary move application ------------------------------------------


def apply_move(chart: Chart, move: ElementaryMove) -> Chart:
    """Apply one elementary move at its anchor and return the new chart."""
    new, _inv, _touched = apply_move_detailed(chart, move)
    return new


def apply_move_detailed(chart: Chart, move: ElementaryMove):
    """Apply a move and also return its exact inverse and footprint."""
    if move.kind not in MOVE_KINDS:
        raise PatternMismatch(f"unknown move kind {move.kind!r}")
    if move.direction not in (FORWARD, INVERSE):
        raise PatternMismatch(f"unknown move direction {move.direction!r}")
    before = _counts(chart)
    before_failures = set(check_axioms(chart).axiom_failures)

    work = chart.copy()
    handler = _HANDLERS[(move.kind, move.direction)]
    inverse, touched = handler(work, move.anchor)
    # Exact-id undo: restore the recorded cyclic orders of recreated
    # nodes (poke-created crossings may carry either handedness).
    for tup in move.anchor.get("rots", ()):
        if not tup or tup[0] not in work.darts:
            continue
        node = work.dart(tup[0]).origin
        if set(tup) == set(work.rotation[node]):
            work.rotation[node] = tuple(tup)

    try:
        face_walk(work, check_euler=True)
    except EulerViolation as exc:
        raise PatternMismatch(f"move would break planarity: {exc}") from exc

    after_failures = set(check_axioms(work).axiom_failures)
    if not after_failures <= before_failures:
        raise AxiomRegression(
            f"{move.kind} {move.direction} introduced axiom failures: "
            f"{sorted(after_failures - before_failures)}"
        )
    dw, db, dc = DELTAS[move.kind]
    if move.direction == INVERSE:
        dw, db, dc = -dw, -db, -dc
    after = _counts(work)
    observed = tuple(a - b for a, b in zip(after, before))
    if observed != (dw, db, dc):
        raise AxiomRegression(
            f"{move.kind} {move.direction}: observed deltas {observed}, "
            f"declared ({dw}, {db}, {dc})"
        )
    if work.infinity_face is not None:
        nfaces = len(face_walk(work, check_euler=False))
        if work.infinity_face >= nfaces:
            work.infinity_face = None
    return work, inverse, touched


# -- CI hoop ---------------------------------------------------------------


def _do_hoop_forward(chart: Chart, anchor: dict):
    label = anchor.get("label")
    if not isinstance(label, int) or not 1 <= label <= chart.braid_index - 1:
        raise LabelOutOfRange(f"hoop label {label!r} outside [1, {chart.braid_index - 1}]")
    namer = _Namer(chart, anchor)
    marker = namer.take("mk")
    h0 = namer.take("h")
    h1 = namer.take("h")
    chart.nodes[marker] = MARKER
    _add_dart(chart, h0, marker, label, OUT)
    _add_dart(chart, h1, marker, label, IN)
    _pair(chart, h0, h1)
    chart.rotation[marker] = (h0, h1)
    inverse = ElementaryMove(CI_HOOP, INVERSE, {"marker": marker})
    return inverse, {marker, h0, h1}


def _do_hoop_inverse(chart: Chart, anchor: dict):
    marker = _need_node(chart, anchor, "marker", MARKER)
    rot = chart.rotation[marker]
    if len(rot) != 2 or chart.twin(rot[0]) != rot[1]:
        raise PatternMismatch(f"marker {marker} does not carry a bare hoop")
    label = chart.dart(rot[0]).label
    names = (marker, rot[0], rot[1])
    rots = (tuple(rot),)
    _drop_darts(chart, rot)
    _drop_node(chart, marker)
    inverse = ElementaryMove(
        CI_HOOP, FORWARD, {"label": label, "names": names, "rots": rots}
    )
    return inverse, {marker, *rot}


# -- CI M2: white vertex pair birth / death --------------------------------


def _do_m2_forward(chart: Chart, anchor: dict):
    darts = anchor.get("darts")
    if not isinstance(darts, (list, tuple)) or len(darts) != 3:
        raise PatternMismatch("CI_M2 forward anchor needs darts=(d1, d2, d3)")
    d1, d2, d3 = (str(d) for d in darts)
    for d in (d1, d2, d3):
        if d not in chart.darts:
            raise PatternMismatch(f"anchor dart {d!r} is not in the chart")
    edges = [{d, chart.twin(d)} for d in (d1, d2, d3)]
    if edges[0] & edges[1] or edges[0] & edges[2] or edges[1] & edges[2]:
        raise PatternMismatch("CI_M2 anchor arcs must be pairwise distinct")
    a1, a2, a3 = (chart.dart(d) for d in (d1, d2, d3))
    if not (a1.direction == a2.direction == a3.direction):
        raise PatternMismatch("CI_M2 anchor arcs must be coherently oriented")
    if a1.label != a3.label or abs(a1.label - a2.label) != 1:
        raise SideConditionViolated(
            f"CI_M2 needs labels (j, j', j) with |j - j'| = 1, got "
            f"({a1.label}, {a2.label}, {a3.label})"
        )
    fo = _fo(chart)
    comp = component_of_node(chart)

    def stacked(a: str, b: str) -> bool:
        # Face walks cannot see across components; a detached arc floats
        # freely in its region, so adjacency is the caller's assertion.
        if comp[chart.dart(a).origin] != comp[chart.dart(b).origin]:
            return True
        return fo[a] == fo[chart.twin(b)]

    if not (stacked(d1, d2) and stacked(d2, d3)):
        raise PatternMismatch("CI_M2 anchor arcs are not stacked along shared faces")

    j, jp = a1.label, a2.label
    flow = a1.direction
    t1, t2, t3 = chart.twin(d1), chart.twin(d2), chart.twin(d3)

    namer = _Namer(chart, anchor)
    w1 = namer.take("w")
    w2 = namer.take("w")
    chart.nodes[w1] = WHITE
    chart.nodes[w2] = WHITE
    names = {n: namer.take("n") for n in (
        "L1", "L2", "L3", "mtA", "mcA", "mbA",
        "mtB", "mcB", "mbB", "R1", "R2", "R3",
    )}
    strand = {"1": j, "2": jp, "3": j}
    for k in "123":
        _add_dart(chart, names[f"L{k}"], w1, strand[k], _opp(flow))
        _add_dart(chart, names[f"R{k}"], w2, strand[k], flow)
    for tag, lbl in (("mt", jp), ("mc", j), ("mb", jp)):
        _add_dart(chart, names[tag + "A"], w1, lbl, flow)
        _add_dart(chart, names[tag + "B"], w2, lbl, _opp(flow))
    _pair(chart, d1, names["L1"])
    _pair(chart, d2, names["L2"])
    _pair(chart, d3, names["L3"])
    _pair(chart, names["mtA"], names["mtB"])
    _pair(chart, names["mcA"], names["mcB"])
    _pair(chart, names["mbA"], names["mbB"])
    _pair(chart, names["R1"], t1)
    _pair(chart, names["R2"], t2)
    _pair(chart, names["R3"], t3)
    chart.rotation[w1] = (
        names["mcA"], names["mtA"], names["L1"], names["L2"], names["L3"], names["mbA"]
    )
    chart.rotation[w2] = (
        names["R2"], names["R1"], names["mtB"], names["mcB"], names["mbB"], names["R3"]
    )
    inverse = ElementaryMove(CI_M2, INVERSE, {"white_a": w1, "white_b": w2})
    touched = {w1, w2, d1, d2, d3, t1, t2, t3, *names.values()}
    return inverse, touched


def _do_m2_inverse(chart: Chart, anchor: dict):
    w1 = _need_node(chart, anchor, "white_a", WHITE)
    w2 = _need_node(chart, anchor, "white_b", WHITE)
    if w1 == w2:
        raise PatternMismatch("CI_M2 inverse needs two distinct white vertices")
    rot1, rot2 = chart.rotation[w1], chart.rotation[w2]
    if len(rot1) != 6 or len(rot2) != 6:
        raise PatternMismatch("CI_M2 inverse needs two degree-6 white vertices")

    def run_start(rot, want):
        dirs = [chart.dart(d).direction for d in rot]
        for s in range(6):
            if all(dirs[(s + k) % 6] == want for k in range(3)):
                return s
        raise PatternMismatch("white vertex lacks a direction run")

    s1 = run_start(rot1, OUT)
    mids = [rot1[(s1 + k) % 6] for k in range(3)]  # (m_b, m_c, m_t)
    outs1 = [rot1[(s1 + 3 + k) % 6] for k in range(3)]  # (L1, L2, L3)
    for m in mids:
        if chart.dart(chart.twin(m)).origin != w2:
            raise PatternMismatch("out-run of white_a does not lead to white_b")
    s2 = run_start(rot2, IN)
    expect = [chart.twin(mids[2]), chart.twin(mids[1]), chart.twin(mids[0])]
    if [rot2[(s2 + k) % 6] for k in range(3)] != expect:
        raise PatternMismatch("middle arcs are not parallel between the two whites")
    outs2 = [rot2[(s2 + 3 + k) % 6] for k in range(3)]  # (R3, R2, R1)
    rs = [outs2[2], outs2[1], outs2[0]]  # (R1, R2, R3)

    pairs = []
    for lk, rk in zip(outs1, rs):
        ol, orr = chart.twin(lk), chart.twin(rk)
        if chart.dart(ol).origin in (w1, w2) or chart.dart(orr).origin in (w1, w2):
            raise PatternMismatch("CI_M2 inverse outer arcs fold back into the pair")
        if chart.dart(lk).label != chart.dart(rk).label:
            raise PatternMismatch("CI_M2 inverse strand labels do not match across the pair")
        pairs.append((ol, orr))
    dead = set(rot1) | set(rot2)
    if {p for pr in pairs for p in pr} & dead:
        raise PatternMismatch("CI_M2 inverse outer arcs are not distinct from the pair")
    names = (
        w1, w2, outs1[0], outs1[1], outs1[2],
        mids[2], mids[1], mids[0],
        chart.twin(mids[2]), chart.twin(mids[1]), chart.twin(mids[0]),
        rs[0], rs[1], rs[2],
    )
    rots = (tuple(rot1), tuple(rot2))
    for ol, orr in pairs:
        _pair(chart, ol, orr)
    _drop_darts(chart, dead)
    _drop_node(chart, w1)
    _drop_node(chart, w2)
    inverse = ElementaryMove(
        CI_M2,
        FORWARD,
        {"darts": tuple(p[0] for p in pairs), "names": names, "rots": rots},
    )
    return inverse, dead | {w1, w2} | {p for pr in pairs for p in pr}


# -- CI R2: strand poke / retraction ---------------------------------------


def _do_r2_forward(chart: Chart, anchor: dict):
    d_a = _need_dart(chart, anchor, "dart_a")
    d_b = _need_dart(chart, anchor, "dart_b")
    if d_b in (d_a, chart.twin(d_a)):
        raise PatternMismatch("CI_R2 anchors must lie on two distinct arcs")
    A, B = chart.dart(d_a), chart.dart(d_b)
    if abs(A.label - B.label) <= 1:
        raise SideConditionViolated(
            f"CI_R2 needs |i - j| >= 2, got labels {A.label}, {B.label}"
        )
    fo = _fo(chart)
    if fo[d_a] != fo[d_b]:
        raise PatternMismatch("CI_R2 anchor darts do not border a common face")

    ta, tb = chart.twin(d_a), chart.twin(d_b)
    namer = _Namer(chart, anchor)
    x1 = namer.take("c")
    x2 = namer.take("c")
    chart.nodes[x1] = CROSSING
    chart.nodes[x2] = CROSSING
    n = {k: namer.take("n") for k in (
        "a1x", "a2x1", "a2x2", "a3x", "f1x", "f2x1", "f2x2", "f3x"
    )}
    _add_dart(chart, n["a1x"], x1, A.label, _opp(A.direction))
    _add_dart(chart, n["a2x1"], x1, A.label, A.direction)
    _add_dart(chart, n["a2x2"], x2, A.label, _opp(A.direction))
    _add_dart(chart, n["a3x"], x2, A.label, A.direction)
    _add_dart(chart, n["f1x"], x2, B.label, _opp(B.direction))
    _add_dart(chart, n["f2x2"], x2, B.label, B.direction)
    _add_dart(chart, n["f2x1"], x1, B.label, _opp(B.direction))
    _add_dart(chart, n["f3x"], x1, B.label, B.direction)
    _pair(chart, d_a, n["a1x"])
    _pair(chart, n["a2x1"], n["a2x2"])
    _pair(chart, n["a3x"], ta)
    _pair(chart, d_b, n["f1x"])
    _pair(chart, n["f2x2"], n["f2x1"])
    _pair(chart, n["f3x"], tb)
    chart.rotation[x1] = (n["a2x1"], n["f2x1"], n["a1x"], n["f3x"])
    chart.rotation[x2] = (n["a2x2"], n["f1x"], n["a3x"], n["f2x2"])
    inverse = ElementaryMove(CI_R2, INVERSE, {"bigon": n["a2x2"]})
    return inverse, {x1, x2, d_a, ta, d_b, tb, *n.values()}


def _diag(chart: Chart, dart_id: str) -> str:
    rot = chart.rotation[chart.dart(dart_id).origin]
    return rot[(rot.index(dart_id) + 2) % 4]


def _do_r2_inverse(chart: Chart, anchor: dict):
    d = _need_dart(chart, anchor, "bigon")
    d2 = chart.rot_next(chart.twin(d))
    back = chart.rot_next(chart.twin(d2))
    if back != d or d2 in (d, chart.twin(d)):
        raise PatternMismatch("anchor dart does not lie on a two-dart face")
    x_a, x_b = chart.dart(d).origin, chart.dart(d2).origin
    if x_a == x_b or chart.nodes[x_a] != CROSSING or chart.nodes[x_b] != CROSSING:
        raise PatternMismatch("CI_R2 inverse needs a bigon between two distinct crossings")
    # Outer stubs of the two strands beyond the bigon.
    a_outer_b = _diag(chart, chart.twin(d))  # A side at x_b
    b_outer_a = _diag(chart, chart.twin(d2))  # B side at x_a
    a_outer_a = _diag(chart, d)
    b_outer_b = _diag(chart, d2)
    ou = chart.twin(a_outer_b)
    oa = chart.twin(a_outer_a)
    ob = chart.twin(b_outer_a)
    oq = chart.twin(b_outer_b)
    for stub in (ou, oa, ob, oq):
        if chart.dart(stub).origin in (x_a, x_b):
            raise PatternMismatch("CI_R2 inverse outer arcs fold back into the bigon")
    dead = set(chart.rotation[x_a]) | set(chart.rotation[x_b])
    names = (
        x_b, x_a,
        a_outer_b, chart.twin(d), d, a_outer_a,
        b_outer_a, d2, chart.twin(d2), b_outer_b,
    )
    rots = (tuple(chart.rotation[x_b]), tuple(chart.rotation[x_a]))
    _pair(chart, ou, oa)
    _pair(chart, ob, oq)
    _drop_darts(chart, dead)
    _drop_node(chart, x_a)
    _drop_node(chart, x_b)
    inverse = ElementaryMove(
        CI_R2, FORWARD, {"dart_a": ou, "dart_b": ob, "names": names, "rots": rots}
    )
    return inverse, dead | {x_a, x_b, ou, oa, ob, oq}


# -- CI R3: triangle flip --------------------------------------------------


def _do_r3(chart: Chart, anchor: dict):
    t1 = _need_dart(chart, anchor, "face_dart")
    t2 = chart.rot_next(chart.twin(t1))
    t3 = chart.rot_next(chart.twin(t2))
    if chart.rot_next(chart.twin(t3)) != t1 or len({t1, t2, t3}) != 3:
        raise PatternMismatch("anchor dart does not lie on a three-dart face")
    ts = [t1, t2, t3]
    xs = [chart.dart(t).origin for t in ts]
    if len(set(xs)) != 3 or any(chart.nodes[x] != CROSSING for x in xs):
        raise PatternMismatch("CI_R3 needs a triangle of three distinct crossings")

    g_a, g_b, g_c, g_d, o_c, o_d = [], [], [], [], [], []
    for i in range(3):
        g_a.append(chart.twin(ts[i - 1]))
        g_b.append(ts[i])
        rot = chart.rotation[xs[i]]
        p = rot.index(ts[i])
        g_c.append(rot[(p + 1) % 4])
        g_d.append(rot[(p + 2) % 4])
        o_c.append(chart.twin(rot[(p + 1) % 4]))
        o_d.append(chart.twin(rot[(p + 2) % 4]))
    pairs = []
    for i in range(3):
        pairs.append((g_c[i], g_d[i - 1]))
        pairs.append((o_c[i], g_b[i - 1]))
        pairs.append((o_d[i], g_a[(i + 1) % 3]))
    flat = [p for pr in pairs for p in pr]
    if len(set(flat)) != len(flat):
        raise PatternMismatch("CI_R3 outer arcs fold back into the triangle")
    for a, b in pairs:
        _pair(chart, a, b)
    inverse = ElementaryMove(CI_R3, INVERSE, {"face_dart": g_d[0]})
    return inverse, set(flat) | set(xs)


def _do_r3_inverse(chart: Chart, anchor: dict):
    inverse, touched = _do_r3(chart, anchor)
    return ElementaryMove(CI_R3, FORWARD, dict(inverse.anchor)), touched


# -- CI R4: strand over a white-vertex fan ---------------------------------


def _do_r4(chart: Chart, anchor: dict, direction: str):
    w = _need_node(chart, anchor, "white", WHITE)
    cs = anchor.get("crossings")
    if not isinstance(cs, (list, tuple)) or len(cs) != 3:
        raise PatternMismatch("CI_R4 anchor needs crossings=(c1, c2, c3)")
    cs = [str(c) for c in cs]
    if len(set(cs)) != 3:
        raise PatternMismatch("CI_R4 anchor crossings must be distinct")
    rot_w = chart.rotation[w]
    if len(rot_w) != 6:
        raise PatternMismatch("CI_R4 needs a degree-6 white vertex")
    for c in cs:
        if chart.nodes.get(c) != CROSSING:
            raise PatternMismatch(f"anchor node {c} is not a crossing")
    spokes = []
    for c in cs:
        gs = [g for g in rot_w if chart.head(g) == c]
        if len(gs) != 1:
            raise PatternMismatch(f"crossing {c} is not joined to {w} by a single arc")
        spokes.append(gs[0])
    pos = [rot_w.index(g) for g in spokes]
    delta = (pos[1] - pos[0]) % 6
    if delta == 5:
        delta = -1
    if delta not in (1, -1) or (pos[2] - pos[1]) % 6 != delta % 6:
        raise PatternMismatch("CI_R4 spokes are not rotation-consecutive")

    # Walk the moved strand through the three crossings in anchor order.
    s_fwd = []
    for i, c in enumerate(cs):
        rot_c = chart.rotation[c]
        q = chart.twin(spokes[i])  # toward w
        p = rot_c.index(q)
        cands = [rot_c[(p + 1) % 4], rot_c[(p + 3) % 4]]
        if i < 2:
            nxt = [s for s in cands if chart.head(s) == cs[i + 1]]
            if len(nxt) != 1:
                raise PatternMismatch("CI_R4 strand does not run through consecutive crossings")
            s_fwd.append(nxt[0])
        else:
            prev = chart.twin(s_fwd[1])
            s_fwd.append(_diag(chart, prev))
    labels = {chart.dart(s).label for s in s_fwd}
    if len(labels) != 1:
        raise PatternMismatch("CI_R4 crossings do not share one strand")
    j = labels.pop()
    s_back0 = _diag(chart, s_fwd[0])
    ob = chart.twin(s_back0)
    oe = chart.twin(s_fwd[2])
    if chart.dart(ob).origin in cs or chart.dart(oe).origin in cs:
        raise PatternMismatch("CI_R4 strand ends fold back into the fan")
    aways = [_diag(chart, chart.twin(g)) for g in spokes]
    spoke_outer = [chart.twin(a) for a in aways]
    for s in spoke_outer:
        if chart.dart(s).origin in cs:
            raise PatternMismatch("CI_R4 spokes fold back into the fan")
    strand_flow = chart.dart(ob).direction

    # Remove the crossings and splice the spokes.
    names: list = []
    for i, c in enumerate(cs):
        names += [c, chart.twin(spokes[i]), aways[i], _diag(chart, s_fwd[i]), s_fwd[i]]
    rots = tuple(tuple(chart.rotation[c]) for c in cs)
    dead = set()
    for c in cs:
        dead |= set(chart.rotation[c])
    for g, s in zip(spokes, spoke_outer):
        _pair(chart, g, s)
    _drop_darts(chart, dead)
    for c in cs:
        _drop_node(chart, c)

    # Reinsert on the opposite spokes, swept the other way round.
    targets = [rot_w[(pos[0] - k * delta) % 6] for k in (1, 2, 3)]
    namer = _Namer(chart, anchor)
    new_cs = []
    prev_s = ob
    touched = {w, *dead, *cs, ob, oe, *spokes, *spoke_outer}
    for k, g in enumerate(targets):
        nk = namer.take("c")
        chart.nodes[nk] = CROSSING
        far = chart.twin(g)
        gd = chart.dart(g)
        tw = namer.take("n")
        aw = namer.take("n")
        sb = namer.take("n")
        sf = namer.take("n")
        _add_dart(chart, tw, nk, gd.label, _opp(gd.direction))
        _add_dart(chart, aw, nk, gd.label, gd.direction)
        _add_dart(chart, sb, nk, j, _opp(strand_flow))
        _add_dart(chart, sf, nk, j, strand_flow)
        _pair(chart, g, tw)
        _pair(chart, aw, far)
        _pair(chart, prev_s, sb)
        if -delta == 1:
            chart.rotation[nk] = (aw, sf, tw, sb)
        else:
            chart.rotation[nk] = (aw, sb, tw, sf)
        new_cs.append(nk)
        prev_s = sf
        touched |= {nk, tw, aw, sb, sf, g, far}
    _pair(chart, prev_s, oe)
    flip = INVERSE if direction == FORWARD else FORWARD
    inverse = ElementaryMove(
        CI_R4,
        flip,
        {"white": w, "crossings": tuple(new_cs), "names": tuple(names), "rots": rots},
    )
    return inverse, touched


def _do_r4_forward(chart: Chart, anchor: dict):
    return _do_r4(chart, anchor, FORWARD)


def _do_r4_inverse(chart: Chart, anchor: dict):
    return _do_r4(chart, anchor, INVERSE)


# -- CII: black vertex across an arc ---------------------------------------


def _do_cii_forward(chart: Chart, anchor: dict):
    g = _need_dart(chart, anchor, "dart_g")
    f = _need_dart(chart, anchor, "dart_f")
    b = chart.dart(g).origin
    if chart.nodes[b] != BLACK:
        raise PatternMismatch(f"anchor dart {g} does not start at a black vertex")
    if f in (g, chart.twin(g)):
        raise PatternMismatch("CII anchors must lie on two distinct arcs")
    G, F = chart.dart(g), chart.dart(f)
    if abs(G.label - F.label) <= 1:
        raise SideConditionViolated(
            f"CII needs |i - j| >= 2, got labels {G.label}, {F.label}"
        )
    fo = _fo(chart)
    if fo[g] != fo[f]:
        raise PatternMismatch("CII anchor darts do not border a common face")
    tz = chart.twin(g)
    tf = chart.twin(f)
    namer = _Namer(chart, anchor)
    x = namer.take("c")
    chart.nodes[x] = CROSSING
    e_b = namer.take("n")
    e_rest = namer.take("n")
    f_back = namer.take("n")
    f_fwd = namer.take("n")
    _add_dart(chart, e_b, x, G.label, _opp(G.direction))
    _add_dart(chart, e_rest, x, G.label, G.direction)
    _add_dart(chart, f_back, x, F.label, _opp(F.direction))
    _add_dart(chart, f_fwd, x, F.label, F.direction)
    _pair(chart, g, e_b)
    _pair(chart, e_rest, tz)
    _pair(chart, f, f_back)
    _pair(chart, f_fwd, tf)
    chart.rotation[x] = (e_b, f_back, e_rest, f_fwd)
    inverse = ElementaryMove(C_II, INVERSE, {"black": b})
    return inverse, {x, b, g, tz, f, tf, e_b, e_rest, f_back, f_fwd}


def _do_cii_inverse(chart: Chart, anchor: dict):
    b = _need_node(chart, anchor, "black", BLACK)
    g = chart.rotation[b][0]
    x = chart.head(g)
    if chart.nodes[x] != CROSSING:
        raise PatternMismatch(f"black vertex {b} is not adjacent to a crossing")
    rot = chart.rotation[x]
    p = rot.index(chart.twin(g))
    e_rest = rot[(p + 2) % 4]
    f_back, f_fwd = rot[(p + 1) % 4], rot[(p + 3) % 4]
    oz = chart.twin(e_rest)
    of = chart.twin(f_back)
    oq = chart.twin(f_fwd)
    for stub in (oz, of, oq):
        if chart.dart(stub).origin == x:
            raise PatternMismatch("CII inverse arcs fold back into the crossing")
    dead = set(rot)
    names = (x, chart.twin(g), e_rest, f_back, f_fwd)
    rots = (tuple(rot),)
    _pair(chart, g, oz)
    _pair(chart, of, oq)
    _drop_darts(chart, dead)
    _drop_node(chart, x)
    inverse = ElementaryMove(
        C_II, FORWARD, {"dart_g": g, "dart_f": of, "names": names, "rots": rots}
    )
    return inverse, dead | {x, b, g, oz, of, oq}


# -- CIII: black vertex through a white vertex -----------------------------


def _do_ciii(chart: Chart, anchor: dict):
    g1 = _need_dart(chart, anchor, "dart")
    w = chart.dart(g1).origin
    if chart.nodes.get(w) != WHITE:
        raise PatternMismatch(f"anchor dart {g1} does not start at a white vertex")
    mid_in, mid_out = middle_arcs(chart, w)
    if g1 in (mid_in, mid_out):
        raise SideConditionViolated(
            "the edge containing the black vertex attaches by a middle arc"
        )
    if chart.nodes[chart.head(g1)] != BLACK:
        raise SideConditionViolated(f"dart {g1} does not lead to a black vertex")
    label = chart.dart(g1).label
    others = [
        d
        for d in chart.rotation[w]
        if d != g1 and d not in (mid_in, mid_out) and chart.dart(d).label == label
    ]
    if len(others) != 1:
        raise PatternMismatch(f"white vertex {w} lacks a partner germ of label {label}")
    g2 = others[0]
    if chart.dart(g1).direction != chart.dart(g2).direction:
        raise AxiomRegression("non-middle same-label germs disagree in direction")
    t1, t2 = chart.twin(g1), chart.twin(g2)
    _pair(chart, g1, t2)
    _pair(chart, g2, t1)
    inverse = ElementaryMove(C_III, INVERSE, {"dart": g2})
    return inverse, {w, g1, g2, t1, t2}


def _do_ciii_inverse(chart: Chart, anchor: dict):
    inverse, touched = _do_ciii(chart, anchor)
    return ElementaryMove(C_III, FORWARD, dict(inverse.anchor)), touched


_HANDLERS = {
    (CI_HOOP, FORWARD): _do_hoop_forward,
    (CI_HOOP, INVERSE): _do_hoop_inverse,
    (CI_M2, FORWARD): _do_m2_forward,
    (CI_M2, INVERSE): _do_m2_inverse,
    (CI_R2, FORWARD): _do_r2_forward,
    (CI_R2, INVERSE): _do_r2_inverse,
    (CI_R3, FORWARD): _do_r3,
    (CI_R3, INVERSE): _do_r3_inverse,
    (CI_R4, FORWARD): _do_r4_forward,
    (CI_R4, INVERSE): _do_r4_inverse,
    (C_II, FORWARD): _do_cii_forward,
    (C_II, INVERSE): _do_cii_inverse,
    (C_III, FORWARD): _do_ciii,
    (C_III, INVERSE): _do_ciii_inverse,
}


# -- site enumeration ------------------------------------------------------


def enumerate_sites(chart: Chart, kind: str, direction: str = FORWARD) -> list[ElementaryMove]:
    """All anchors where the move applies, in deterministic scan order.

    Each returned move has been verified to apply cleanly (candidates
    whose side conditions or planarity simulation fail are dropped).
    """
    if kind not in MOVE_KINDS:
        raise PatternMismatch(f"unknown move kind {kind!r}")
    candidates = _CANDIDATES[(kind, direction)](chart)
    sites = []
    for anchor in candidates:
        move = ElementaryMove(kind, direction, anchor)
        try:
            apply_move_detailed(chart, move)
        except (PatternMismatch, SideConditionViolated, LabelOutOfRange):
            continue
        sites.append(move)
    return sites


def _cand_hoop_forward(chart: Chart):
    return [{"label": m} for m in range(1, chart.braid_index)]


def _cand_hoop_inverse(chart: Chart):
    return [
        {"marker": n}
        for n, kind in chart.nodes.items()
        if kind == MARKER
        and len(chart.rotation[n]) == 2
        and chart.twin(chart.rotation[n][0]) == chart.rotation[n][1]
    ]


def _cand_m2_forward(chart: Chart):
    if not chart.darts:
        return []
    fo = _fo(chart)
    out = []
    order = chart.scan_darts()
    for d2 in order:
        b = chart.dart(d2)
        left = [
            d1 for d1 in order
            if abs(chart.dart(d1).label - b.label) == 1
            and chart.dart(d1).direction == b.direction
            and fo[d1] == fo[chart.twin(d2)]
            and d1 not in (d2, chart.twin(d2))
        ]
        right = [
            d3 for d3 in order
            if abs(chart.dart(d3).label - b.label) == 1
            and chart.dart(d3).direction == b.direction
            and fo[d2] == fo[chart.twin(d3)]
            and d3 not in (d2, chart.twin(d2))
        ]
        for d1 in left:
            for d3 in right:
                if chart.dart(d1).label != chart.dart(d3).label:
                    continue
                if d3 in (d1, chart.twin(d1)):
                    continue
                out.append({"darts": (d1, d2, d3)})
    return out


def _cand_m2_inverse(chart: Chart):
    whites = [n for n, k in chart.nodes.items() if k == WHITE]
    out = []
    for w1 in whites:
        for w2 in whites:
            if w1 != w2:
                out.append({"white_a": w1, "white_b": w2})
    return out


def _cand_r2_forward(chart: Chart):
    if not chart.darts:
        return []
    fo = _fo(chart)
    order = chart.scan_darts()
    out = []
    for d_a in order:
        for d_b in order:
            if d_b in (d_a, chart.twin(d_a)):
                continue
            if abs(chart.dart(d_a).label - chart.dart(d_b).label) <= 1:
                continue
            if fo[d_a] != fo[d_b]:
                continue
            out.append({"dart_a": d_a, "dart_b": d_b})
    return out


def _faces_of(chart: Chart):
    if not chart.darts:
        return []
    return face_walk(chart, check_euler=False)


def _cand_r2_inverse(chart: Chart):
    out = []
    for face in _faces_of(chart):
        if len(face) == 2:
            out.append({"bigon": face[0]})
    return out


def _cand_r3(chart: Chart):
    out = []
    for face in _faces_of(chart):
        if len(face) == 3:
            out.append({"face_dart": face[0]})
    return out


def _cand_r4(chart: Chart):
    out = []
    for w, kind in chart.nodes.items():
        if kind != WHITE or len(chart.rotation.get(w, ())) != 6:
            continue
        rot = chart.rotation[w]
        heads = [chart.head(g) for g in rot]
        for r in range(6):
            cs = [heads[r], heads[(r + 1) % 6], heads[(r + 2) % 6]]
            if len(set(cs)) != 3:
                continue
            if any(chart.nodes.get(c) != CROSSING for c in cs):
                continue
            out.append({"white": w, "crossings": tuple(cs)})
    return out


def _cand_cii_forward(chart: Chart):
    if not chart.darts:
        return []
    fo = _fo(chart)
    order = chart.scan_darts()
    out = []
    for g in order:
        if chart.nodes[chart.dart(g).origin] != BLACK:
            continue
        for f in order:
            if f in (g, chart.twin(g)):
                continue
            if abs(chart.dart(g).label - chart.dart(f).label) <= 1:
                continue
            if fo[g] != fo[f]:
                continue
            out.append({"dart_g": g, "dart_f": f})
    return out


def _cand_cii_inverse(chart: Chart):
    out = []
    for n, kind in chart.nodes.items():
        if kind == BLACK and chart.nodes.get(chart.head(chart.rotation[n][0])) == CROSSING:
            out.append({"black": n})
    return out


def _cand_ciii(chart: Chart):
    out = []
    for w, kind in chart.nodes.items():
        if kind != WHITE or len(chart.rotation.get(w, ())) != 6:
            continue
        for g in chart.rotation[w]:
            if chart.nodes.get(chart.head(g)) == BLACK:
                out.append({"dart": g})
    return out


_CANDIDATES = {
    (CI_HOOP, FORWARD): _cand_hoop_forward,
    (CI_HOOP, INVERSE): _cand_hoop_inverse,
    (CI_M2, FORWARD): _cand_m2_forward,
    (CI_M2, INVERSE): _cand_m2_inverse,
    (CI_R2, FORWARD): _cand_r2_forward,
    (CI_R2, INVERSE): _cand_r2_inverse,
    (CI_R3, FORWARD): _cand_r3,
    (CI_R3, INVERSE): _cand_r3,
    (CI_R4, FORWARD): _cand_r4,
    (CI_R4, INVERSE): _cand_r4,
    (C_II, FORWARD): _cand_cii_forward,
    (C_II, INVERSE): _cand_cii_inverse,
    (C_III, FORWARD): _cand_ciii,
    (C_III, INVERSE): _cand_ciii,
}


# -- composite procedures --------------------------------------------------


def _edge_summary(chart: Chart, label: int):
    sub = extract_subgraph(chart, label)
    return sorted((e.kind, tuple(sorted(e.endpoints))) for e in sub.edges)


def _crossings_along(chart: Chart, germ: str) -> list[str]:
    """Crossing nodes met along the edge starting at a germ dart."""
    out = []
    d = germ
    while True:
        t = chart.twin(d)
        node = chart.dart(t).origin
        if chart.nodes[node] == CROSSING:
            out.append(node)
        nxt = splice_partner(chart, t)
        if nxt is None or nxt == germ:
            return out
        d = nxt


def shift_white_vertex(chart: Chart, w: str, e: GammaEdge, target_side: int = 0):
    """Shift a white vertex past the next crossing along one of its edges.

    ``e`` is an edge of the subgraph of the white vertex's label k that
    ends at ``w``; the crossing passed is the one at index
    ``target_side`` along ``e`` from ``w`` (only the adjacent crossing,
    index 0, is shiftable at desk scale).  Requires the label condition
    h > k > m or h < k < m for the other label h at ``w`` and the label
    m of the strand crossed.  Returns the new chart and the trace of the
    two pokes and the fan move that realize the shift.
    """
    if chart.nodes.get(w) != WHITE:
        raise PatternMismatch(f"{w} is not a white vertex")
    germs = e.germs_at(chart, w)
    if not germs:
        raise NotIncident(f"{w} is not an endpoint of {e.describe()}")
    g_e = germs[0]
    k = e.label
    rot = chart.rotation[w]
    r = rot.index(g_e)
    h = next(
        chart.dart(d).label for d in rot if chart.dart(d).label != k
    )

    cs = _crossings_along(chart, g_e)
    if target_side >= len(cs):
        raise BlockedPath(f"edge has no crossing at index {target_side} from {w}")
    if target_side != 0:
        raise BlockedPath("only the crossing adjacent to the white vertex is shiftable")
    p = cs[0]
    if chart.head(g_e) != p:
        raise BlockedPath(f"crossing {p} is not adjacent to {w} along the edge")
    m = next(
        chart.dart(d).label for d in chart.rotation[p] if chart.dart(d).label != k
    )
    if not (h > k > m or h < k < m):
        raise LabelConditionViolated(
            f"shift needs h > k > m or h < k < m, got h={h}, k={k}, m={m}"
        )
    eps = h - k
    fixed_labels = []
    lbl = k - eps
    while 1 <= lbl <= chart.braid_index - 1:
        fixed_labels.append(lbl)
        lbl -= eps
    before_fixed = {lbl: _edge_summary(chart, lbl) for lbl in fixed_labels}

    sp_plus = rot[(r + 1) % 6]
    sp_minus = rot[r - 1]
    # The two stubs of the crossed strand at p.
    q = chart.twin(g_e)
    rot_p = chart.rotation[p]
    i = rot_p.index(q)
    stubs = (rot_p[(i + 1) % 4], rot_p[(i + 3) % 4])

    result = None
    for assign in ((stubs[0], stubs[1]), (stubs[1], stubs[0])):
        try:
            result = _shift_attempt(chart, w, p, sp_plus, sp_minus, assign)
            break
        except (PatternMismatch, SideConditionViolated, BlockedPath):
            continue
    if result is None:
        raise BlockedPath(f"no poke combination realizes the shift at {p}")
    new_chart, trace = result

    for lbl in fixed_labels:
        if _edge_summary(new_chart, lbl) != before_fixed[lbl]:
            raise AxiomRegression(f"shift modified the fixed subgraph of label {lbl}")
    return new_chart, trace


def _shift_attempt(chart: Chart, w, p, sp_plus, sp_minus, stub_assign):
    trace = MoveTrace()
    cur = chart
    inner = []
    for spoke, stub in zip((sp_plus, sp_minus), stub_assign):
        done = False
        for d_a, d_b, via_bigon_twin in (
            (cur.twin(stub), spoke, False),
            (stub, cur.twin(spoke), True),
        ):
            move = ElementaryMove(CI_R2, FORWARD, {"dart_a": d_a, "dart_b": d_b})
            try:
                nxt, inverse, touched = apply_move_detailed(cur, move)
            except (PatternMismatch, SideConditionViolated):
                continue
            bigon = inverse.anchor["bigon"]
            x_inner = (
                nxt.dart(nxt.twin(bigon)).origin if via_bigon_twin
                else nxt.dart(bigon).origin
            )
            trace.append(move, inverse, touched)
            cur = nxt
            inner.append(x_inner)
            done = True
            break
        if not done:
            raise BlockedPath("no face-compatible poke for a spoke")
    fan = ElementaryMove(
        CI_R4, FORWARD, {"white": w, "crossings": (inner[1], p, inner[0])}
    )
    cur, inverse, touched = apply_move_detailed(cur, fan)
    trace.append(fan, inverse, touched)
    return cur, trace


def clear_edge_crossings(chart: Chart, e: GammaEdge):
    """Push every crossing off an edge whose white ends carry the two
    neighbor labels, shifting each end past its adjacent crossings.
    """
    m = e.label
    whites = [v for v in e.endpoints if chart.nodes.get(v) == WHITE]
    if len(whites) != 2 or whites[0] == whites[1]:
        raise PreconditionViolated("edge must join two distinct white vertices")

    def other_label(wv):
        return next(
            chart.dart(d).label for d in chart.rotation[wv] if chart.dart(d).label != m
        )

    by_label = {other_label(wv): wv for wv in whites}
    if set(by_label) != {m - 1, m + 1}:
        raise PreconditionViolated(
            f"edge ends must lie in the label {m - 1} and {m + 1} subgraphs"
        )
    w_minus, w_plus = by_label[m - 1], by_label[m + 1]
    g_minus = e.germs_at(chart, w_minus)[0]
    g_plus = e.germs_at(chart, w_plus)[0]

    trace = MoveTrace()
    cur = chart
    before_fixed = {lbl: _edge_summary(chart, lbl) for lbl in (m - 1, m, m + 1)}
    for _ in range(len(_crossings_along(chart, g_minus)) + 1):
        cs_minus = _crossings_along(cur, g_minus)
        if not cs_minus:
            break
        cs_plus = list(reversed(cs_minus))

        def cross_label(c):
            return next(
                cur.dart(d).label for d in cur.rotation[c] if cur.dart(d).label != m
            )

        if cross_label(cs_minus[0]) > m + 1:
            wv, germ = w_minus, g_minus
        elif cross_label(cs_plus[0]) < m - 1:
            wv, germ = w_plus, g_plus
        else:
            raise BlockedPath(
                "crossings are interleaved against both ends; clearing needs "
                "commutation beyond desk scale"
            )
        sub = extract_subgraph(cur, m)
        cur, step = shift_white_vertex(cur, wv, sub.edge_of_dart(germ), 0)
        trace.extend(step)
    else:
        raise BlockedPath("crossing clearing did not terminate")
    for lbl in (m - 1, m, m + 1):
        if _edge_summary(cur, lbl) != before_fixed[lbl]:
            raise AxiomRegression(f"clearing modified the fixed subgraph of label {lbl}")
    return cur, trace


def _region_sides(chart: Chart, barrier: set):
    from chartcalc.regions import split_sides

    return split_sides(chart, barrier)


def _track_region(chart: Chart, barrier: set, ref_dart: str) -> frozenset:
    side_a, side_b = _region_sides(chart, barrier)
    fo = _fo(chart)
    return frozenset(side_a if fo[ref_dart] in side_a else side_b)


def make_arc_free(chart: Chart, disk: Region, alpha) -> tuple[Chart, MoveTrace]:
    """Expel every arc entering and leaving the disk through the arc
    ``alpha`` (given as darts along the disk boundary), innermost first.
    """
    from chartcalc.regions import boundary_darts

    faces = set(disk.faces)
    if count_w(chart, Region(frozenset(faces), closure=False)) != 0:
        raise PreconditionViolated("disk interior contains white vertices")
    alpha_set = set()
    for d in alpha:
        if d not in chart.darts:
            raise PreconditionViolated(f"alpha dart {d!r} is not in the chart")
        alpha_set.add(d)
        alpha_set.add(chart.twin(d))
    barrier = boundary_darts(chart, Region(frozenset(faces)))
    if not alpha_set <= barrier | {chart.twin(d) for d in barrier}:
        raise PreconditionViolated("alpha does not lie on the disk boundary")
    # The reference dart tracking the disk side must survive every
    # retraction, so prefer one on the boundary away from alpha.
    fo0 = _fo(chart)
    stable = sorted(barrier - alpha_set) or sorted(barrier)
    ref = next(d for d in stable if fo0[d] in faces)

    trace = MoveTrace()
    cur = chart
    for _ in range(len(chart.darts) + 1):
        bigon = _innermost_alpha_bigon(cur, faces, alpha_set)
        if bigon is None:
            break
        move = ElementaryMove(CI_R2, INVERSE, {"bigon": bigon})
        cur, inverse, touched = apply_move_detailed(cur, move)
        trace.append(move, inverse, touched)
        barrier = {d for d in barrier if d in cur.darts}
        alpha_set = {d for d in alpha_set if d in cur.darts}
        faces = set(_track_region(cur, barrier, ref))
    if _detect_alpha_arcs(cur, faces, alpha_set):
        raise BlockedPath("nested returning arcs are not reducible to empty bigons")
    return cur, trace


def _innermost_alpha_bigon(chart: Chart, faces: set, alpha_set: set):
    fo = _fo(chart) if chart.darts else {}
    for face in _faces_of(chart):
        if len(face) != 2:
            continue
        d1, d2 = face
        if fo[d1] not in faces:
            continue
        for d in (d1, d2):
            on_alpha = d in alpha_set or chart.twin(d) in alpha_set
            outside = fo[chart.twin(d)] not in faces
            if on_alpha and outside:
                ok = all(
                    chart.nodes[chart.dart(x).origin] == CROSSING for x in (d1, d2)
                )
                if ok:
                    return d1
    return None


def _detect_alpha_arcs(chart: Chart, faces: set, alpha_set: set) -> list:
    fo = _fo(chart) if chart.darts else {}
    found = []
    for c, kind in chart.nodes.items():
        if kind != CROSSING:
            continue
        rot = chart.rotation[c]
        on_alpha = [d for d in rot if d in alpha_set or chart.twin(d) in alpha_set]
        if not on_alpha:
            continue
        crossed = [d for d in rot if d not in on_alpha]
        for g in crossed:
            if fo[g] in faces and fo[chart.twin(g)] in faces:
                end = _walk_inside(chart, fo, faces, alpha_set, g)
                if end is not None:
                    found.append((c, end))
    return found


def _walk_inside(chart: Chart, fo, faces, alpha_set, germ):
    d = germ
    for _ in range(len(chart.darts)):
        t = chart.twin(d)
        node = chart.dart(t).origin
        if chart.nodes[node] != CROSSING:
            return None
        rot = chart.rotation[node]
        if any(x in alpha_set or chart.twin(x) in alpha_set for x in rot):
            return node
        corners = {fo[x] for x in rot}
        if not corners <= faces:
            return None
        nxt = splice_partner(chart, t)
        if nxt is None:
            return None
        d = nxt
    return None


def _disk_interior_nodes(chart: Chart, faces: set) -> list[str]:
    fo = _fo(chart)
    out = []
    for node in chart.nodes:
        corners = {fo[g] for g in chart.rotation[node]}
        corners |= {fo[chart.twin(g)] for g in chart.rotation[node]}
        if corners <= faces:
            out.append(node)
    return out


def triangle_deform(chart: Chart, disk) -> tuple[Chart, MoveTrace]:
    """Relocate the corner-attached terminal edges of a cleared
    three-angled disk through their corner white vertices.

    Each interior black vertex must hang from a corner white by a
    non-middle germ; the relocation exchanges that germ's far half with
    the partner germ of the same label, carrying the black vertex to the
    partner's side.  Every corner germ is processed at most once, so the
    procedure terminates even when the exchange is an automorphism of
    the chart.
    """
    from chartcalc.regions import boundary_darts

    if disk.k != 3:
        raise PatternMismatch(f"expected a 3-angled disk, got k={disk.k}")
    if disk.feelers:
        raise PatternMismatch("the disk has feelers")
    faces = set(disk.region.faces)
    interior = _disk_interior_nodes(chart, faces)
    if any(chart.nodes[n] == WHITE for n in interior):
        raise InteriorNotEmpty("disk interior contains white vertices")
    if any(chart.nodes[n] not in (BLACK,) for n in interior):
        raise PatternMismatch(
            "disk interior is not cleared down to corner-attached terminal edges"
        )
    barrier = boundary_darts(chart, Region(frozenset(faces)))
    ref = next(d for d in sorted(barrier) if _fo(chart)[d] in faces)

    trace = MoveTrace()
    cur = chart
    done: set[str] = set()
    for _ in range(len(interior) + 1):
        faces = set(_track_region(cur, barrier, ref))
        inside = [n for n in _disk_interior_nodes(cur, faces) if cur.nodes[n] == BLACK]
        pending = []
        for b in sorted(inside):
            g1 = cur.twin(cur.rotation[b][0])
            if cur.nodes.get(cur.dart(g1).origin) != WHITE:
                raise PatternMismatch(f"interior black {b} is not attached to a corner")
            if g1 not in done:
                pending.append(g1)
        if not pending:
            break
        move = ElementaryMove(C_III, FORWARD, {"dart": pending[0]})
        cur, inverse, touched = apply_move_detailed(cur, move)
        done.add(pending[0])
        trace.append(move, inverse, touched)
    else:
        raise PatternMismatch("triangle deformation did not terminate")
    faces = set(_track_region(cur, barrier, ref))
    leftover = [
        n
        for n in _disk_interior_nodes(cur, faces)
        if not (cur.nodes[n] == BLACK and cur.twin(cur.rotation[n][0]) in done)
    ]
    if leftover:
        raise PatternMismatch("triangle deformation left interior content behind")
    return cur, trace


def triangle_reduce(chart: Chart, disk) -> tuple[Chart, MoveTrace]:
    """Deform a cleared three-angled disk empty, then annihilate the
    corner pair left in relator position; the white count drops by two.
    """
    cur, trace = triangle_deform(chart, disk)
    corners = disk.corners
    for wa in corners:
        for wb in corners:
            if wa == wb:
                continue
            move = ElementaryMove(CI_M2, INVERSE, {"white_a": wa, "white_b": wb})
            try:
                nxt, inverse, touched = apply_move_detailed(cur, move)
            except (PatternMismatch, SideConditionViolated):
                continue
            trace.append(move, inverse, touched)
            return nxt, trace
    raise PatternMismatch("no corner pair of the emptied triangle annihilates")


def search_reduction(chart: Chart, depth: int = 3, beam: int = 16):
    """Bounded search for a complexity-lowering move trace.

    Returns a MoveTrace whose end chart has strictly smaller complexity,
    or None when the bounded search is exhausted (which is not a
    minimality certificate).
    """
    start = complexity(chart)
    seen = {canonical_key(chart)}
    frontier: list[tuple[Chart, MoveTrace]] = [(chart, MoveTrace())]
    for _ in range(depth):
        children = []
        for cur, trace in frontier:
            for kind in MOVE_KINDS:
                for direction in (FORWARD, INVERSE):
                    for move in enumerate_sites(cur, kind, direction):
                        try:
                            nxt, inverse, touched = apply_move_detailed(cur, move)
                        except ChartError:
                            continue
                        key = canonical_key(nxt)
                        if key in seen:
                            continue
                        seen.add(key)
                        branch = MoveTrace(
                            moves=list(trace.moves),
                            inverses=list(trace.inverses),
                            footprint=set(trace.footprint),
                        )
                        branch.append(move, inverse, touched)
                        if complexity(nxt) < start:
                            return branch
                        children.append((complexity(nxt), key, nxt, branch))
        children.sort(key=lambda item: (item[0], item[1]))
        frontier = [(c, t) for _, _, c, t in children[:beam]]
        if not frontier:
            break
    return None
