"""Bounded chart enumeration, corpus-wide lemma suites and export.

The enumerator generates every valid chart inside an explicit size
budget, exactly once up to canonical form and in a deterministic order,
so corpus counts can be pinned as regression constants.  The lemma
suites sweep a corpus for configurations that a tight chart is known
not to admit; a chart violating a suite's conclusion is never reported
as a counterexample, only as refuted (with a machine-checkable
certificate) or unresolved.  Export renders a chart to Graphviz dot or
to SVG with a barycentric planar layout.
"""

from __future__ import annotations

import hashlib
import math
import warnings
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

from chartcalc.core import (
    BLACK,
    CROSSING,
    IN,
    MARKER,
    OUT,
    WHITE,
    Chart,
    ChartBuilder,
    canonical_key,
    component_of_node,
    empty_chart,
    face_of_dart,
    face_walk,
)
from chartcalc.errors import (
    BudgetTooLarge,
    ChartError,
    LayoutFailure,
    SemanticError,
)
from chartcalc.moves import move_from_line, move_to_line, apply_move, search_reduction
from chartcalc.regions import (
    Region,
    angled_disks,
    associated_disk,
    complexity,
    count_w,
    detect_lenses,
    io_balance,
    node_corner_faces,
)
from chartcalc.subgraphs import component_white_count, detect_shapes, extract_subgraph
from chartcalc.validator import check_minimal_form

__all__ = [
    "EnumerationBudget",
    "LemmaCheckReport",
    "LemmaFinding",
    "SUITE_IDS",
    "enumerate_charts",
    "estimate_state_space",
    "export",
    "find_certificate",
    "minimal_proxy",
    "run_lemma_suite",
    "verify_certificate",
]


# -- enumeration -----------------------------------------------------------


@dataclass(frozen=True)
class EnumerationBudget:
    """Size bounds for exhaustive chart generation.

    ``move_depth`` and ``beam`` do not affect generation; they are the
    search bounds handed to the certificate machinery by callers that
    sweep the same corpus.
    """

    n_max: int = 3
    white_max: int = 2
    black_max: int = 4
    crossing_max: int = 2
    move_depth: int = 3
    beam: int = 16

    def __post_init__(self):
        for name in ("n_max", "white_max", "black_max", "crossing_max",
                     "move_depth", "beam"):
            if getattr(self, name) < 0:
                raise SemanticError(f"budget field {name} must be >= 0")
        if self.n_max < 2:
            raise SemanticError("n_max must be at least 2")


def _telephone(d: int) -> int:
    # Involutions of d elements = partial matchings of the dart set.
    a, b = 1, 1
    for k in range(2, d + 1):
        a, b = b, b + (k - 1) * a
    return b


def _white_configs(n: int) -> list[tuple[tuple[int, str], ...]]:
    # Local shapes up to cyclic rotation: labels alternate i, i+1 and the
    # directions form one in-run and one out-run of three.
    dirs = (IN, IN, IN, OUT, OUT, OUT)
    out = []
    for i in range(1, n - 1):
        for parity in (0, 1):
            labels = tuple(i + (s + parity) % 2 for s in range(6))
            out.append(tuple(zip(labels, dirs)))
    return out


def _crossing_configs(n: int) -> list[tuple[tuple[int, str], ...]]:
    # Two transverse strands, labels at distance >= 2, up to cyclic rotation.
    out = []
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            for d1 in (IN, OUT):
                cfg = ((i, IN), (j, d1), (i, OUT), (j, IN if d1 == OUT else OUT))
                out.append(cfg)
    return out


def estimate_state_space(budget: EnumerationBudget) -> int:
    """Upper bound on raw matching leaves explored by enumerate_charts."""
    wc = len(_white_configs(budget.n_max))
    cc = len(_crossing_configs(budget.n_max))
    total = 0
    for w in range(budget.white_max + 1):
        for c in range(budget.crossing_max + 1):
            if w == 0 and c == 0:
                continue
            if (w and not wc) or (c and not cc):
                continue
            cfgs = comb(wc + w - 1, w) if w else 1
            cfgs *= comb(cc + c - 1, c) if c else 1
            total += cfgs * _telephone(6 * w + 4 * c)
    return total


def _matchings(darts, black_max: int):
    # Yield (pairs, singles): a partial matching of compatible darts; the
    # singles become terminal black vertices.
    n = len(darts)

    def rec(i, used, singles, pairs):
        while i < n and i in used:
            i += 1
        if i == n:
            yield tuple(pairs), tuple(singles)
            return
        used.add(i)
        if len(singles) < black_max:
            singles.append(i)
            yield from rec(i + 1, used, singles, pairs)
            singles.pop()
        la, da = darts[i][2], darts[i][3]
        for j in range(i + 1, n):
            if j in used:
                continue
            if darts[j][2] == la and darts[j][3] != da:
                used.add(j)
                pairs.append((i, j))
                yield from rec(i + 1, used, singles, pairs)
                pairs.pop()
                used.discard(j)
        used.discard(i)

    yield from rec(0, set(), [], [])


def _assemble(n, kinds, darts, pairs, singles) -> Chart:
    b = ChartBuilder(n)
    names = [b.node(kind) for kind in kinds]
    for i, j in pairs:
        u, su, lab, du = darts[i]
        v, sv, _, _ = darts[j]
        if du == OUT:
            b.connect(names[u], su, names[v], sv, lab)
        else:
            b.connect(names[v], sv, names[u], su, lab)
    for i in singles:
        u, su, lab, du = darts[i]
        bk = b.node(BLACK)
        if du == OUT:
            b.connect(names[u], su, bk, 0, lab)
        else:
            b.connect(bk, 0, names[u], su, lab)
    return b.build()


def _connected(chart: Chart) -> bool:
    comp = component_of_node(chart)
    return len(set(comp.values())) <= 1


def enumerate_charts(budget: EnumerationBudget, state_cap: int = 2_000_000):
    """Yield every valid connected chart within the budget, plus the
    empty chart, exactly once up to canonical form, in canonical order.
    """
    est = estimate_state_space(budget)
    if est > state_cap:
        raise BudgetTooLarge(
            f"estimated state space {est} exceeds cap {state_cap}"
        )
    n = budget.n_max
    from chartcalc.validator import check_axioms

    found: dict[str, Chart] = {}

    def keep(chart: Chart) -> None:
        if not _connected(chart):
            return
        # Axioms are local; the strict face walk rejects rotation systems
        # that only close up on a higher-genus surface.
        face_walk(chart, check_euler=True)
        if not check_axioms(chart).ok:
            return
        found.setdefault(canonical_key(chart), chart)

    found[canonical_key(empty_chart(n))] = empty_chart(n)
    # Vertex-free closed curves (hoops) are excluded from the corpus:
    # the serialized normal form keeps them near infinity, so the only
    # white-free connected charts generated here are single free edges.
    for m in range(1, n):
        if budget.black_max >= 2:
            b = ChartBuilder(n)
            b1, b2 = b.node(BLACK), b.node(BLACK)
            b.connect(b1, 0, b2, 0, m)
            keep(b.build())

    wcfg = _white_configs(n)
    ccfg = _crossing_configs(n)
    for w in range(1, budget.white_max + 1):
        for c in range(budget.crossing_max + 1):
            if c and not ccfg:
                continue
            for wchoice in combinations_with_replacement(wcfg, w):
                for cchoice in combinations_with_replacement(ccfg, c):
                    kinds = [WHITE] * w + [CROSSING] * c
                    darts = []
                    for ni, cfg in enumerate(wchoice + cchoice):
                        for slot, (lab, direction) in enumerate(cfg):
                            darts.append((ni, slot, lab, direction))
                    for pairs, singles in _matchings(darts, budget.black_max):
                        try:
                            keep(_assemble(n, kinds, darts, pairs, singles))
                        except ChartError:
                            continue
    for key in sorted(found):
        yield found[key]


# -- minimality proxy and certificates -------------------------------------


def minimal_proxy(chart: Chart, beam: int = 16) -> bool:
    """Executable stand-in for minimality: axioms, normal-form lints and
    no one-step complexity-lowering move.  An under-approximation only.

    Only the white-pair annihilation can lower complexity in a single
    step: it is the one catalog move with a nonzero white delta, and no
    move changes black counts, so the free-edge count survives every
    other rewrite.  Scanning its sites alone keeps the proxy cheap.
    """
    if not check_minimal_form(chart).clean:
        return False
    from chartcalc.moves import CI_M2, INVERSE, enumerate_sites

    return not enumerate_sites(chart, CI_M2, INVERSE)


def find_certificate(chart: Chart, depth: int = 3, beam: int = 16) -> dict | None:
    """Look for machine-checkable evidence that the chart is not a tight
    form: a complexity-lowering move trace, or an in/out imbalance over a
    single face.  Returns None when the bounded search is exhausted.
    """
    trace = search_reduction(chart, depth=depth, beam=beam)
    if trace is not None:
        before, after = complexity(chart), complexity(trace.replay(chart))
        return {
            "kind": "reduction",
            "moves": [move_to_line(mv) for mv in trace.moves],
            "before": (before.w, before.neg_f),
            "after": (after.w, after.neg_f),
        }
    nfaces = len(face_walk(chart, check_euler=False))
    for f in range(nfaces):
        region = Region(frozenset({f}), closure=False)
        for k in range(1, chart.braid_index):
            try:
                inward, outward = io_balance(chart, region, k)
            except ChartError:
                continue
            if inward != outward:
                return {
                    "kind": "imbalance",
                    "faces": [f],
                    "label": k,
                    "counts": (inward, outward),
                }
    return None


def verify_certificate(chart: Chart, cert: dict) -> bool:
    """Re-check a certificate from scratch against the chart."""
    if cert["kind"] == "reduction":
        cur = chart
        for line in cert["moves"]:
            cur = apply_move(cur, move_from_line(line))
        return complexity(cur) < complexity(chart)
    if cert["kind"] == "imbalance":
        region = Region(frozenset(cert["faces"]), closure=False)
        inward, outward = io_balance(chart, region, cert["label"])
        return (inward, outward) == tuple(cert["counts"]) and inward != outward
    return False


# -- lemma suites ----------------------------------------------------------


@dataclass(frozen=True)
class LemmaFinding:
    """One conclusion breach on one corpus chart."""

    lemma: str
    chart: str
    detail: str
    status: str  # "refuted" or "unresolved"
    certificate: dict | None


@dataclass
class LemmaCheckReport:
    """Outcome of sweeping a corpus with a selection of lemma suites."""

    suite: tuple[str, ...]
    corpus_size: int
    counts: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings

    @property
    def unresolved(self) -> list:
        return [f for f in self.findings if f.status == "unresolved"]

    def render_text(self) -> str:
        lines = [f"suite: {' '.join(self.suite)}",
                 f"corpus: {self.corpus_size} charts"]
        for lemma in self.suite:
            c = self.counts[lemma]
            lines.append(
                f"{lemma}: vacuous {c['vacuous']}, clean {c['clean']}, "
                f"refuted {c['refuted']}, unresolved {c['unresolved']}"
            )
        for f in self.findings:
            lines.append(f"finding {f.lemma} {f.chart} {f.status}: {f.detail}")
        return "\n".join(lines) + "\n"


def _loops(chart: Chart):
    for m in range(1, chart.braid_index):
        for e in extract_subgraph(chart, m).edges:
            if e.kind == "loop":
                yield m, e


def _interior_whites(chart: Chart, faces: frozenset) -> list[str]:
    fo = face_of_dart(chart, face_walk(chart, check_euler=False))
    return sorted(
        node for node, kind in chart.nodes.items()
        if kind == WHITE and node_corner_faces(chart, fo, node) <= faces
    )


def _shape_violations(chart, shape):
    out = []
    for m in range(1, chart.braid_index):
        for hit in detect_shapes(chart, m):
            if hit["shape"] == shape:
                out.append(f"{shape} at label {m}: {hit['edges']}")
    return sorted(out)


def _v_no_loop(chart):
    return sorted(f"loop {e.describe()}" for _, e in _loops(chart))


def _v_no_lens(chart):
    return sorted(f"lens {lens['type']} at {lens['whites']}"
                  for lens in detect_lenses(chart))


def _v_lens_interior(chart):
    out = []
    for lens in detect_lenses(chart):
        inside = _interior_whites(chart, lens["region"].faces)
        if len(inside) < 3:
            out.append(
                f"lens {lens['type']} at {lens['whites']} holds "
                f"{len(inside)} interior whites"
            )
    return sorted(out)


def _v_component_whites(chart):
    out = []
    for m in range(1, chart.braid_index):
        for count in component_white_count(chart, m):
            if count == 1:
                out.append(f"label {m} component with a single white vertex")
    return sorted(out)


def _v_special_disk(chart):
    out = []
    for m in range(1, chart.braid_index):
        for disk in angled_disks(chart, m, max_k=2):
            if disk.k == 2 and disk.special:
                inside = _interior_whites(chart, disk.region.faces)
                if not inside:
                    out.append(
                        f"special 2-angled label-{m} disk with empty interior"
                    )
    return sorted(out)


def _v_eclipse_interior(chart):
    out = []
    for m in range(1, chart.braid_index):
        for hit in detect_shapes(chart, m):
            if hit["shape"] != "solar_eclipse":
                continue
            sub = extract_subgraph(chart, m)
            for e in sub.edges:
                if e.kind == "loop" and e.endpoints[0] == hit["white"]:
                    disk = associated_disk(chart, e)
                    inside = _interior_whites(chart, disk.faces)
                    if len(inside) < 3:
                        out.append(
                            f"solar eclipse loop disk at {hit['white']} holds "
                            f"{len(inside)} interior whites"
                        )
    return sorted(out)


def _v_outside_loop(chart):
    out = []
    for m, e in _loops(chart):
        disk = associated_disk(chart, e)
        sub = extract_subgraph(chart, m)
        whites = {w for edge in sub.edges for w in edge.endpoints
                  if chart.nodes.get(w) == WHITE}
        inside = set(_interior_whites(chart, disk.faces)) | {e.endpoints[0]}
        outside = whites - inside
        if len(outside) > 2:
            out.append(
                f"label-{m} loop leaves {len(outside)} whites outside its disk"
            )
    return sorted(out)


def _gate_tight(chart, beam):
    return minimal_proxy(chart, beam=beam)


def _gate_tight_seven(chart, beam):
    return count_w(chart) == 7 and minimal_proxy(chart, beam=beam)


# suite id -> (scope gate, conclusion violations)
_SUITES = {
    "component-whites": (_gate_tight, _v_component_whites),
    "eclipse-interior": (_gate_tight_seven, _v_eclipse_interior),
    "lens-interior": (_gate_tight, _v_lens_interior),
    "no-eyeglasses": (_gate_tight_seven,
                      lambda c: _shape_violations(c, "eyeglasses")),
    "no-lens": (_gate_tight_seven, _v_no_lens),
    "no-loop": (_gate_tight_seven, _v_no_loop),
    "no-skew-eyeglasses-2": (_gate_tight_seven,
                             lambda c: _shape_violations(c, "skew_eyeglasses_2")),
    "no-solar-eclipse": (_gate_tight_seven,
                         lambda c: _shape_violations(c, "solar_eclipse")),
    "outside-loop": (_gate_tight_seven, _v_outside_loop),
    "special-disk-interior": (_gate_tight, _v_special_disk),
}

SUITE_IDS = tuple(sorted(_SUITES))


def _chart_tag(index: int, key: str) -> str:
    digest = hashlib.sha1(key.encode()).hexdigest()[:10]
    return f"chart[{index}]#{digest}"


def run_lemma_suite(corpus, suite=None, move_depth: int = 3,
                    beam: int = 16) -> LemmaCheckReport:
    """Sweep a corpus with the selected suites.

    A chart inside a suite's scope whose conclusion fails is reported as
    refuted when the certificate search succeeds and unresolved
    otherwise; it is never accepted as a counterexample.
    """
    ids = tuple(sorted(suite)) if suite else SUITE_IDS
    for sid in ids:
        if sid not in _SUITES:
            raise SemanticError(f"unknown suite id {sid!r}")
    charts = sorted(((canonical_key(c), c) for c in corpus), key=lambda t: t[0])
    report = LemmaCheckReport(suite=ids, corpus_size=len(charts))
    report.counts = {
        sid: {"vacuous": 0, "clean": 0, "refuted": 0, "unresolved": 0}
        for sid in ids
    }
    proxy_cache: dict[str, bool] = {}
    for index, (key, chart) in enumerate(charts):
        cert = None
        cert_done = False
        for sid in ids:
            gate, violated = _SUITES[sid]
            # Both gates share the minimality proxy; compute it once.
            if key not in proxy_cache:
                proxy_cache[key] = minimal_proxy(chart, beam=beam)
            in_scope = proxy_cache[key] and (
                gate is _gate_tight or count_w(chart) == 7
            )
            if not in_scope:
                report.counts[sid]["vacuous"] += 1
                continue
            breaches = violated(chart)
            if not breaches:
                report.counts[sid]["clean"] += 1
                continue
            if not cert_done:
                cert = find_certificate(chart, depth=move_depth, beam=beam)
                cert_done = True
            status = "refuted" if cert is not None else "unresolved"
            report.counts[sid][status] += 1
            for detail in breaches:
                report.findings.append(
                    LemmaFinding(sid, _chart_tag(index, key), detail,
                                 status, cert)
                )
    return report


# -- export ----------------------------------------------------------------

_DOT_SHAPE = {WHITE: "circle", BLACK: "point", CROSSING: "diamond",
              MARKER: "square"}


def _edge_list(chart: Chart):
    # One entry per edge, keyed by the lexicographically smaller dart id.
    out = []
    for did in sorted(chart.darts):
        twin = chart.twin(did)
        if twin < did:
            continue
        d = chart.darts[did]
        out.append((did, d.origin, chart.darts[twin].origin, d.label))
    return out


def _dot(chart: Chart) -> str:
    lines = ["graph chart {"]
    for node in sorted(chart.nodes):
        kind = chart.nodes[node]
        lines.append(f'  "{node}" [shape={_DOT_SHAPE[kind]}, kind="{kind}"];')
    for did, u, v, label in _edge_list(chart):
        lines.append(f'  "{u}" -- "{v}" [label="{label}", dart="{did}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tutte_layout(chart: Chart) -> dict[str, tuple[float, float]]:
    if not chart.nodes:
        return {}
    faces = face_walk(chart, check_euler=False)
    fo = face_of_dart(chart, faces)
    if chart.infinity_face is not None and chart.infinity_face < len(faces):
        outer = chart.infinity_face
    else:
        outer = max(range(len(faces)), key=lambda i: (len(faces[i]), -i))
    ring = []
    for d in faces[outer]:
        origin = chart.darts[d].origin
        if origin not in ring:
            ring.append(origin)
    if len(ring) < 3:
        raise LayoutFailure("outer face touches fewer than three vertices")
    pos = {}
    for i, node in enumerate(ring):
        a = 2.0 * math.pi * i / len(ring)
        pos[node] = (math.cos(a), math.sin(a))
    inner = [n for n in sorted(chart.nodes) if n not in pos]
    for n in inner:
        pos[n] = (0.0, 0.0)
    nbrs = {n: [] for n in inner}
    for n in inner:
        for d in chart.rotation[n]:
            other = chart.darts[chart.twin(d)].origin
            if other != n:
                nbrs[n].append(other)
        if not nbrs[n]:
            raise LayoutFailure(f"vertex {n} has only self-edges")
    for _ in range(400):
        shift = 0.0
        for n in inner:
            xs = [pos[o][0] for o in nbrs[n]]
            ys = [pos[o][1] for o in nbrs[n]]
            nx, ny = sum(xs) / len(xs), sum(ys) / len(ys)
            shift = max(shift, abs(nx - pos[n][0]) + abs(ny - pos[n][1]))
            pos[n] = (nx, ny)
        if shift < 1e-12:
            break
    placed = sorted(pos.items())
    for i in range(len(placed)):
        for j in range(i + 1, len(placed)):
            (_, (x1, y1)), (_, (x2, y2)) = placed[i], placed[j]
            if abs(x1 - x2) + abs(y1 - y2) < 1e-6:
                raise LayoutFailure("layout collapsed two vertices")
    return pos


def _circular_layout(chart: Chart) -> dict[str, tuple[float, float]]:
    nodes = sorted(chart.nodes)
    pos = {}
    for i, node in enumerate(nodes):
        a = 2.0 * math.pi * i / max(1, len(nodes))
        pos[node] = (math.cos(a), math.sin(a))
    return pos


def _fmt(x: float) -> str:
    return f"{x:.4f}".rstrip("0").rstrip(".") or "0"


def _svg(chart: Chart, thick_labels=()) -> str:
    try:
        pos = _tutte_layout(chart)
    except LayoutFailure as exc:
        warnings.warn(f"planar layout failed ({exc}); using circular fallback")
        pos = _circular_layout(chart)
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.6 -1.6 3.2 3.2">',
        '<g stroke="black" fill="none" stroke-width="0.015">',
    ]
    loop_r = 0.3
    for did, u, v, label in _edge_list(chart):
        width = 0.045 if label in thick_labels else 0.015
        if u == v:
            x, y = pos[u]
            # Loop lobe pointed away from the origin so nested loops at
            # the same vertex stay distinguishable by radius.
            slots = [i for i, d in enumerate(chart.rotation[u])
                     if d in (did, chart.twin(did))]
            r = loop_r * (1.0 + 0.45 * min(slots))
            norm = math.hypot(x, y) or 1.0
            ux, uy = x / norm, y / norm
            cx, cy = x + ux * r, y + uy * r
            lines.append(
                f'<circle class="loop" data-label="{label}" '
                f'cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
                f'stroke-width="{_fmt(width)}"/>'
            )
        else:
            (x1, y1), (x2, y2) = pos[u], pos[v]
            lines.append(
                f'<path class="edge" data-label="{label}" '
                f'd="M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}" '
                f'stroke-width="{_fmt(width)}"/>'
            )
    for node in sorted(chart.nodes):
        kind = chart.nodes[node]
        x, y = pos[node]
        if kind == WHITE:
            lines.append(
                f'<circle class="white" cx="{_fmt(x)}" cy="{_fmt(y)}" '
                'r="0.07" fill="white"/>'
            )
        elif kind == BLACK:
            lines.append(
                f'<circle class="black" cx="{_fmt(x)}" cy="{_fmt(y)}" '
                'r="0.045" fill="black"/>'
            )
        elif kind == CROSSING:
            lines.append(
                f'<rect class="crossing" x="{_fmt(x - 0.05)}" '
                f'y="{_fmt(y - 0.05)}" width="0.1" height="0.1" '
                'transform="rotate(45 {} {})"/>'.format(_fmt(x), _fmt(y))
            )
        else:
            lines.append(
                f'<rect class="marker" x="{_fmt(x - 0.03)}" '
                f'y="{_fmt(y - 0.03)}" width="0.06" height="0.06" '
                'fill="black"/>'
            )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def export(chart: Chart, format: str, thick_labels=()) -> bytes:
    """Render the chart as Graphviz dot or SVG.  Deterministic for a
    given chart and options; SVG uses a barycentric planar layout with
    the infinity face outermost, falling back to a circular layout (with
    a warning) when the embedding degenerates.
    """
    if format == "dot":
        return _dot(chart).encode()
    if format == "svg":
        return _svg(chart, thick_labels=thick_labels).encode()
    raise SemanticError(f"unknown export format {format!r}")
