"""Combinatorial-map model of charts on the sphere.

A chart is stored as a set of nodes, a set of paired darts (half-edges)
and a counterclockwise rotation order of darts at every node.  Faces are
derived by the standard face walk, and the distinguished infinity face is
an annotation naming one of them.

The module also provides the CHART/1 text serialization, a canonical form
used for isomorphism rejection, and a small builder for assembling charts
in tests and fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from chartcalc import kernels
from chartcalc.errors import (
    ChartSyntaxError,
    DanglingDart,
    EulerViolation,
    SemanticError,
)

__all__ = [
    "BLACK",
    "CROSSING",
    "WHITE",
    "MARKER",
    "NODE_DEGREE",
    "Dart",
    "Chart",
    "ChartBuilder",
    "check_structure",
    "face_walk",
    "face_of_dart",
    "component_of_node",
    "empty_chart",
    "parse_chart",
    "serialize_chart",
    "canonical_form",
    "canonical_key",
]

BLACK = "black"
CROSSING = "crossing"
WHITE = "white"
MARKER = "marker"

NODE_KINDS = (BLACK, CROSSING, WHITE, MARKER)

# Degree required of each node kind; markers are auxiliary subdivision
# points on closed edges and are invisible to feature predicates.
NODE_DEGREE = {BLACK: 1, CROSSING: 4, WHITE: 6, MARKER: 2}

OUT = "out"
IN = "in"


@dataclass(frozen=True)
class Dart:
    """One half of an edge, anchored at its origin node.

    ``direction`` is relative to the origin: an edge oriented u -> v has
    the outward dart at u and the inward dart at v.
    """

    id: str
    origin: str
    twin: str
    label: int
    direction: str


@dataclass
class Chart:
    """A chart on the sphere: nodes, darts and a rotation system.

    Charts are treated as values: operations return new charts rather
    than mutating shared state.  Node and dart insertion order is
    significant only for deterministic serialization and face numbering.
    """

    braid_index: int
    nodes: dict[str, str] = field(default_factory=dict)
    darts: dict[str, Dart] = field(default_factory=dict)
    rotation: dict[str, tuple[str, ...]] = field(default_factory=dict)
    infinity_face: int | None = None

    # -- simple accessors -------------------------------------------------

    def kind(self, node: str) -> str:
        return self.nodes[node]

    def dart(self, dart_id: str) -> Dart:
        return self.darts[dart_id]

    def twin(self, dart_id: str) -> str:
        return self.darts[dart_id].twin

    def head(self, dart_id: str) -> str:
        """Node at the far end of the dart's edge."""
        return self.darts[self.darts[dart_id].twin].origin

    def degree(self, node: str) -> int:
        return len(self.rotation.get(node, ()))

    def rot_next(self, dart_id: str) -> str:
        rot = self.rotation[self.darts[dart_id].origin]
        i = rot.index(dart_id)
        return rot[(i + 1) % len(rot)]

    def rot_prev(self, dart_id: str) -> str:
        rot = self.rotation[self.darts[dart_id].origin]
        i = rot.index(dart_id)
        return rot[i - 1]

    def copy(self) -> "Chart":
        return Chart(
            braid_index=self.braid_index,
            nodes=dict(self.nodes),
            darts=dict(self.darts),
            rotation=dict(self.rotation),
            infinity_face=self.infinity_face,
        )

    def scan_darts(self) -> list[str]:
        """Darts in deterministic scan order: node order, rotation order."""
        out: list[str] = []
        for node in self.nodes:
            out.extend(self.rotation.get(node, ()))
        return out


def empty_chart(n: int = 2) -> Chart:
    return Chart(braid_index=n)


# -- structural checks ----------------------------------------------------


def check_structure(chart: Chart) -> None:
    """Verify twin/rotation bookkeeping; raise on the first defect.

    Degree-vs-kind conformance and label ranges are chart axioms handled
    by the validator module, not structural requirements; the face walk
    and canonical form only need what is checked here.
    """
    if chart.braid_index < 2:
        raise SemanticError(f"braid index must be >= 2, got {chart.braid_index}")
    for d in chart.darts.values():
        if d.origin not in chart.nodes:
            raise SemanticError(f"dart {d.id}: unknown origin node {d.origin}")
        if d.direction not in (OUT, IN):
            raise SemanticError(f"dart {d.id}: bad direction {d.direction!r}")
        t = chart.darts.get(d.twin)
        if t is None:
            raise DanglingDart(f"dart {d.id}: missing twin {d.twin}")
        if t.id == d.id:
            raise DanglingDart(f"dart {d.id} is its own twin")
        if t.twin != d.id:
            raise DanglingDart(f"twin of {d.id} is {t.id} but twin of {t.id} is {t.twin}")
        if t.label != d.label:
            raise SemanticError(f"darts {d.id}/{t.id}: labels differ across the edge")
        if t.direction == d.direction:
            raise SemanticError(f"darts {d.id}/{t.id}: both ends oriented {d.direction}")
    seen: dict[str, str] = {}
    for node, rot in chart.rotation.items():
        if node not in chart.nodes:
            raise SemanticError(f"rotation for unknown node {node}")
        if not rot:
            raise SemanticError(f"node {node} has an empty rotation")
        for dart_id in rot:
            d = chart.darts.get(dart_id)
            if d is None:
                raise DanglingDart(f"rotation at {node} names unknown dart {dart_id}")
            if d.origin != node:
                raise DanglingDart(f"dart {dart_id} listed at {node}, origin is {d.origin}")
            if dart_id in seen:
                raise DanglingDart(f"dart {dart_id} appears twice in rotations")
            seen[dart_id] = node
    for dart_id in chart.darts:
        if dart_id not in seen:
            raise DanglingDart(f"dart {dart_id} missing from every rotation")
    for node in chart.nodes:
        if node not in chart.rotation:
            raise SemanticError(f"node {node} has no rotation line")
        if chart.nodes[node] not in NODE_KINDS:
            raise SemanticError(f"node {node}: unknown kind {chart.nodes[node]!r}")


# -- faces ----------------------------------------------------------------


def _index_arrays(chart: Chart) -> tuple[list[str], dict[str, int], list[int], list[int]]:
    """Flatten the chart to kernel arrays in scan order."""
    ids = chart.scan_darts()
    pos = {d: i for i, d in enumerate(ids)}
    twin = [pos[chart.darts[d].twin] for d in ids]
    snext = [0] * len(ids)
    for node in chart.nodes:
        rot = chart.rotation.get(node, ())
        for i, d in enumerate(rot):
            snext[pos[d]] = pos[rot[(i + 1) % len(rot)]]
    return ids, pos, twin, snext


def face_walk(chart: Chart, check_euler: bool = True) -> list[tuple[str, ...]]:
    """Faces as cyclic dart sequences, in deterministic emission order.

    The successor of a dart along its face is the rotation successor of
    its twin.  Every dart lies on exactly one face.  The empty chart is
    the whole sphere: one face with no boundary darts.

    With ``check_euler`` set, each connected component must satisfy
    V - E + F = 2 (a sphere embedding); otherwise EulerViolation is
    raised.  A disconnected chart satisfies the identity per component,
    with disjoint components understood to share the ambient domain.
    """
    check_structure(chart)
    if not chart.darts:
        if chart.nodes:
            raise SemanticError("chart has nodes but no darts")
        return [()]
    ids, pos, twin, snext = _index_arrays(chart)
    face_id = kernels.face_orbits(twin, snext)
    nfaces = max(face_id) + 1
    faces: list[list[str]] = [[] for _ in range(nfaces)]
    started = [False] * nfaces
    for i, d in enumerate(ids):
        f = face_id[i]
        if not started[f]:
            started[f] = True
            j = i
            while True:
                faces[f].append(ids[j])
                j = snext[twin[j]]
                if j == i:
                    break
    if check_euler:
        comp = kernels.component_ids(twin, snext)
        node_comp = {chart.darts[d].origin: comp[i] for i, d in enumerate(ids)}
        ncomp = max(comp) + 1
        for c in range(ncomp):
            v = sum(1 for n in node_comp.values() if n == c)
            e = sum(1 for x in comp if x == c) // 2
            f = len({face_id[i] for i in range(len(ids)) if comp[i] == c})
            if v - e + f != 2:
                raise EulerViolation(
                    f"component {c}: V-E+F = {v}-{e}+{f} = {v - e + f}, expected 2"
                )
    return [tuple(f) for f in faces]


def face_of_dart(chart: Chart, faces: list[tuple[str, ...]] | None = None) -> dict[str, int]:
    """Map each dart id to the index of its face."""
    if faces is None:
        faces = face_walk(chart)
    out: dict[str, int] = {}
    for i, f in enumerate(faces):
        for d in f:
            out[d] = i
    return out


def component_of_node(chart: Chart) -> dict[str, int]:
    """Connected-component index per node (isolated charts only via darts)."""
    if not chart.darts:
        return {}
    ids, pos, twin, snext = _index_arrays(chart)
    comp = kernels.component_ids(twin, snext)
    return {chart.darts[d].origin: comp[i] for i, d in enumerate(ids)}


# -- CHART/1 serialization ------------------------------------------------

_SECTIONS = ("node", "dart", "rot", "infinity")


def parse_chart(text: str | bytes) -> Chart:
    """Parse CHART/1 text into a Chart.

    Raises ChartSyntaxError (with the offending line number) for
    malformed text and SemanticError for well-formed text describing an
    inconsistent chart (unknown nodes, out-of-range labels, twin
    mismatches).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = text.splitlines()
    header = None
    header_line = 0
    items: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "chart/1" or not parts[1].startswith("n="):
                raise ChartSyntaxError(lineno, f"expected 'chart/1 n=<int>' header, got {line!r}")
            try:
                header = int(parts[1][2:])
            except ValueError:
                raise ChartSyntaxError(lineno, f"bad braid index in header: {parts[1]!r}")
            header_line = lineno
            continue
        items.append((lineno, line.split()))
    if header is None:
        raise ChartSyntaxError(len(lines) + 1, "missing 'chart/1' header")
    if header < 2:
        raise SemanticError(f"braid index must be >= 2, got {header}")

    chart = Chart(braid_index=header)
    section = 0
    for lineno, parts in items:
        kw = parts[0]
        if kw not in _SECTIONS:
            raise ChartSyntaxError(lineno, f"unknown directive {kw!r}")
        want = _SECTIONS.index(kw)
        if want < section:
            raise ChartSyntaxError(lineno, f"{kw!r} line out of section order")
        section = want
        if kw == "node":
            if len(parts) != 3:
                raise ChartSyntaxError(lineno, "expected 'node <id> <kind>'")
            _, nid, kind = parts
            if kind not in NODE_KINDS:
                raise ChartSyntaxError(lineno, f"unknown node kind {kind!r}")
            if nid in chart.nodes:
                raise SemanticError(f"duplicate node id {nid}")
            chart.nodes[nid] = kind
        elif kw == "dart":
            if len(parts) != 6:
                raise ChartSyntaxError(
                    lineno, "expected 'dart <id> origin=<node> twin=<dart> label=<int> dir=<out|in>'"
                )
            did = parts[1]
            fields_: dict[str, str] = {}
            for p in parts[2:]:
                if "=" not in p:
                    raise ChartSyntaxError(lineno, f"expected key=value, got {p!r}")
                k, v = p.split("=", 1)
                fields_[k] = v
            if set(fields_) != {"origin", "twin", "label", "dir"}:
                raise ChartSyntaxError(lineno, f"bad dart fields {sorted(fields_)}")
            try:
                label = int(fields_["label"])
            except ValueError:
                raise ChartSyntaxError(lineno, f"bad label {fields_['label']!r}")
            if fields_["dir"] not in (OUT, IN):
                raise ChartSyntaxError(lineno, f"bad direction {fields_['dir']!r}")
            if did in chart.darts:
                raise SemanticError(f"duplicate dart id {did}")
            if fields_["origin"] not in chart.nodes:
                raise SemanticError(f"dart {did}: unknown origin node {fields_['origin']}")
            if not 1 <= label <= header - 1:
                raise SemanticError(
                    f"dart {did}: label {label} outside [1, {header - 1}]"
                )
            chart.darts[did] = Dart(
                id=did,
                origin=fields_["origin"],
                twin=fields_["twin"],
                label=label,
                direction=fields_["dir"],
            )
        elif kw == "rot":
            if len(parts) < 4 or parts[2] != "=":
                raise ChartSyntaxError(lineno, "expected 'rot <node> = <dart> ...'")
            nid = parts[1]
            if nid not in chart.nodes:
                raise SemanticError(f"rotation for unknown node {nid}")
            if nid in chart.rotation:
                raise SemanticError(f"duplicate rotation for node {nid}")
            chart.rotation[nid] = tuple(parts[3:])
        else:  # infinity
            if len(parts) != 3 or parts[1] != "=":
                raise ChartSyntaxError(lineno, "expected 'infinity = <face index>'")
            try:
                chart.infinity_face = int(parts[2])
            except ValueError:
                raise ChartSyntaxError(lineno, f"bad face index {parts[2]!r}")

    check_structure(chart)
    if chart.infinity_face is not None:
        nfaces = len(face_walk(chart, check_euler=False))
        if not 0 <= chart.infinity_face < nfaces:
            raise SemanticError(
                f"infinity face {chart.infinity_face} out of range (chart has {nfaces} faces)"
            )
    return chart


def serialize_chart(chart: Chart) -> str:
    """Emit CHART/1 text in node/dart insertion order."""
    out = [f"chart/1 n={chart.braid_index}"]
    for nid, kind in chart.nodes.items():
        out.append(f"node {nid} {kind}")
    for d in chart.darts.values():
        out.append(
            f"dart {d.id} origin={d.origin} twin={d.twin} label={d.label} dir={d.direction}"
        )
    for nid in chart.nodes:
        rot = chart.rotation.get(nid, ())
        out.append(f"rot {nid} = " + " ".join(rot))
    if chart.infinity_face is not None:
        out.append(f"infinity = {chart.infinity_face}")
    return "\n".join(out) + "\n"


# -- canonical form -------------------------------------------------------

_KIND_CODE = {BLACK: 0, CROSSING: 1, WHITE: 2, MARKER: 3}


def _colors(chart: Chart, ids: list[str]) -> list[int]:
    span = 2 * (chart.braid_index + 1)
    out = []
    for d in ids:
        dart = chart.darts[d]
        c = _KIND_CODE[chart.nodes[dart.origin]] * span
        c += 2 * dart.label + (0 if dart.direction == OUT else 1)
        out.append(c)
    return out


def canonical_form(chart: Chart) -> Chart:
    """Relabel the chart into a canonical isomorph.

    Two charts related by renaming of ids or by rotating the stored
    cyclic orders produce identical canonical serializations.  Reflection
    is deliberately not quotiented out; pattern matching handles mirror
    symmetry separately.  Disconnected charts canonicalize per component,
    components ordered by their encodings.
    """
    check_structure(chart)
    if not chart.darts:
        return Chart(braid_index=chart.braid_index, infinity_face=chart.infinity_face)
    ids, pos, twin, snext = _index_arrays(chart)
    colors = _colors(chart, ids)
    comp = kernels.component_ids(twin, snext)
    ncomp = max(comp) + 1
    encoded = []
    for c in range(ncomp):
        members = [i for i in range(len(ids)) if comp[i] == c]
        enc, order = kernels.min_encoding(twin, snext, colors, members)
        encoded.append((enc, order))
    encoded.sort(key=lambda pair: pair[0])

    new = Chart(braid_index=chart.braid_index)
    old_to_new: dict[str, str] = {}
    offset = 0
    for enc, order in encoded:
        for i, old_idx in enumerate(order):
            old_to_new[ids[old_idx]] = f"d{offset + i}"
        offset += len(order)
    # Nodes are named in order of their first canonically-numbered dart.
    flat_order = []
    for enc, order in encoded:
        flat_order.extend(order)
    node_names: dict[str, str] = {}
    for i, old_idx in enumerate(flat_order):
        origin = chart.darts[ids[old_idx]].origin
        if origin not in node_names:
            node_names[origin] = f"v{len(node_names)}"
    for old_node, new_node in node_names.items():
        new.nodes[new_node] = chart.nodes[old_node]
    for i, old_idx in enumerate(flat_order):
        old = chart.darts[ids[old_idx]]
        new.darts[f"d{i}"] = Dart(
            id=f"d{i}",
            origin=node_names[old.origin],
            twin=old_to_new[old.twin],
            label=old.label,
            direction=old.direction,
        )
    # Rebuild each rotation starting from the node's smallest new dart.
    new_rank = {ids[old_idx]: i for i, old_idx in enumerate(flat_order)}
    for old_node, new_node in node_names.items():
        rot = chart.rotation[old_node]
        start = min(rot, key=lambda d: new_rank[d])
        i = rot.index(start)
        cyc = rot[i:] + rot[:i]
        new.rotation[new_node] = tuple(old_to_new[d] for d in cyc)
    if chart.infinity_face is not None:
        old_faces = face_walk(chart, check_euler=False)
        probe = old_faces[chart.infinity_face]
        if probe:
            mapped = old_to_new[probe[0]]
            new.infinity_face = face_of_dart(new, face_walk(new, check_euler=False))[mapped]
        else:
            new.infinity_face = 0
    return new


def canonical_key(chart: Chart) -> str:
    """Stable text key identifying the chart up to isomorphism."""
    return serialize_chart(canonical_form(chart))


# -- builder --------------------------------------------------------------


class ChartBuilder:
    """Assemble a chart by declaring nodes with fixed-degree germ slots
    and connecting slots pairwise.

    Each node is created with as many rotation slots as its kind's
    degree (counterclockwise order).  ``connect(u, i, v, j, label)``
    creates an edge oriented u -> v occupying slot i at u and slot j at
    v.  Self-edges (u == v) are allowed with distinct slots.
    """

    def __init__(self, n: int):
        self.n = n
        self._kinds: dict[str, str] = {}
        self._slots: dict[str, list[str | None]] = {}
        self._darts: dict[str, Dart] = {}
        self._counter = 0

    def node(self, kind: str, name: str | None = None, degree: int | None = None) -> str:
        if name is None:
            name = f"{kind[0]}{sum(1 for k in self._kinds.values() if k == kind)}"
        if name in self._kinds:
            raise SemanticError(f"duplicate node {name}")
        self._kinds[name] = kind
        self._slots[name] = [None] * (NODE_DEGREE[kind] if degree is None else degree)
        return name

    def connect(self, u: str, i: int, v: str, j: int, label: int) -> tuple[str, str]:
        """Edge oriented u -> v; returns (outward dart at u, inward dart at v)."""
        for node, slot in ((u, i), (v, j)):
            if self._slots[node][slot] is not None:
                raise SemanticError(f"slot {slot} at node {node} already used")
        a = f"d{self._counter}"
        b = f"d{self._counter + 1}"
        self._counter += 2
        self._darts[a] = Dart(id=a, origin=u, twin=b, label=label, direction=OUT)
        self._darts[b] = Dart(id=b, origin=v, twin=a, label=label, direction=IN)
        self._slots[u][i] = a
        self._slots[v][j] = b
        return a, b

    def build(self, infinity_face: int | None = None) -> Chart:
        chart = Chart(braid_index=self.n, infinity_face=infinity_face)
        for name, kind in self._kinds.items():
            chart.nodes[name] = kind
        chart.darts = dict(self._darts)
        for name in self._kinds:
            slots = self._slots[name]
            if any(s is None for s in slots):
                raise SemanticError(f"node {name} has unfilled rotation slots")
            chart.rotation[name] = tuple(s for s in slots if s is not None)
        check_structure(chart)
        return chart
