"""Hand-built charts exercising every feature of the toolkit.

Each function returns a freshly built chart (and, where useful, a
handle dictionary naming the interesting darts and nodes).  The charts
are desk-scale reconstructions: small enough to verify by hand, rich
enough to trigger each detector, move, and macro procedure.  End states
of macro procedures are pinned here as explicit constructions so the
procedures can be checked by canonical equality.
"""

from __future__ import annotations

from chartcalc.core import BLACK, CROSSING, MARKER, WHITE, Chart, ChartBuilder

__all__ = [
    "crossing_strands",
    "triangle_strands",
    "spoke_wheel",
    "white_with_terminals",
    "pinched_strands",
    "shift_fixture",
    "clear_fixture",
    "loop_disk",
    "dot_crossing",
    "io_imbalance",
    "lens_pair",
    "solar_eclipse",
    "eyeglasses",
    "skew_eyeglasses_1",
    "skew_eyeglasses_2",
    "hoop_only",
    "ring_crossings",
    "triangle_filled",
    "triangle_emptied",
    "triangle_reducible",
    "ciii_before",
    "ciii_after",
    "minimal_form_fixtures",
]


# -- elementary move sites -------------------------------------------------


def crossing_strands() -> Chart:
    """A label-1 strand crossing a label-4 strand once."""
    b = ChartBuilder(6)
    for nm in ("b1", "b2", "b3", "b4"):
        b.node(BLACK, nm)
    x = b.node(CROSSING, "x")
    b.connect("b1", 0, x, 0, 1)
    b.connect(x, 2, "b2", 0, 1)
    b.connect("b3", 0, x, 1, 4)
    b.connect(x, 3, "b4", 0, 4)
    return b.build()


def triangle_strands() -> Chart:
    """Three mutually crossing strands of labels 1, 3, 5."""
    b = ChartBuilder(7)
    for nm in ("bA1", "bA2", "bB1", "bB2", "bC1", "bC2"):
        b.node(BLACK, nm)
    xab = b.node(CROSSING, "xab")
    xac = b.node(CROSSING, "xac")
    xbc = b.node(CROSSING, "xbc")
    b.connect("bA1", 0, xab, 0, 1)
    b.connect(xab, 2, xac, 0, 1)
    b.connect(xac, 2, "bA2", 0, 1)
    b.connect(xab, 1, xbc, 3, 3)
    b.connect("bB1", 0, xab, 3, 3)
    b.connect(xbc, 1, "bB2", 0, 3)
    b.connect(xac, 1, xbc, 2, 5)
    b.connect("bC1", 0, xac, 3, 5)
    b.connect(xbc, 0, "bC2", 0, 5)
    return b.build()


def spoke_wheel() -> Chart:
    """A white vertex whose outgoing spokes are crossed by one strand."""
    b = ChartBuilder(6)
    w = b.node(WHITE, "w")
    cs = [b.node(CROSSING, f"c{k}") for k in (1, 2, 3)]
    es = [b.node(BLACK, f"E{k}") for k in (1, 2, 3)]
    fs = [b.node(BLACK, f"F{k}") for k in (1, 2, 3)]
    bs1 = b.node(BLACK, "bS1")
    bs2 = b.node(BLACK, "bS2")
    spoke_labels = [1, 2, 1]
    for k in range(3):
        b.connect(w, k, cs[k], 2, spoke_labels[k])
        b.connect(cs[k], 0, es[k], 0, spoke_labels[k])
    in_labels = [2, 1, 2]
    for k in range(3):
        b.connect(fs[k], 0, w, 3 + k, in_labels[k])
    b.connect(bs1, 0, cs[0], 3, 4)
    b.connect(cs[0], 1, cs[1], 3, 4)
    b.connect(cs[1], 1, cs[2], 3, 4)
    b.connect(cs[2], 1, bs2, 0, 4)
    return b.build()


def white_with_terminals() -> Chart:
    """A lone white vertex whose six edges all end at black vertices."""
    b = ChartBuilder(6)
    w = b.node(WHITE, "w")
    blk = b.node(BLACK, "blk")
    ends = [b.node(BLACK, f"t{k}") for k in range(5)]
    b.connect(w, 0, blk, 0, 2)
    b.connect(w, 1, ends[0], 0, 3)
    b.connect(w, 2, ends[1], 0, 2)
    b.connect(ends[2], 0, w, 3, 3)
    b.connect(ends[3], 0, w, 4, 2)
    b.connect(ends[4], 0, w, 5, 3)
    return b.build()


def pinched_strands() -> Chart:
    """Strands of labels 1, 2, 1 tied together by a label-5 strand."""
    b = ChartBuilder(7)
    ls = [b.node(BLACK, f"l{k}") for k in range(3)]
    rs = [b.node(BLACK, f"r{k}") for k in range(3)]
    xs = [b.node(CROSSING, f"x{k}") for k in range(3)]
    top = b.node(BLACK, "top")
    bot = b.node(BLACK, "bot")
    for k, lbl in enumerate((1, 2, 1)):
        b.connect(ls[k], 0, xs[k], 0, lbl)
        b.connect(xs[k], 2, rs[k], 0, lbl)
    b.connect(top, 0, xs[0], 1, 5)
    b.connect(xs[0], 3, xs[1], 1, 5)
    b.connect(xs[1], 3, xs[2], 1, 5)
    b.connect(xs[2], 3, bot, 0, 5)
    return b.build()


# -- macro move sites ------------------------------------------------------


def shift_fixture() -> tuple[Chart, dict]:
    """A white vertex whose first edge carries one crossing to clear."""
    b = ChartBuilder(7)
    w = b.node(WHITE, "w")
    p = b.node(CROSSING, "p")
    eb = b.node(BLACK, "eb")
    a1 = b.node(BLACK, "a1")
    a2 = b.node(BLACK, "a2")
    ss = [b.node(BLACK, f"s{k}") for k in range(1, 6)]
    e_dart, _ = b.connect(w, 0, p, 2, 3)
    b.connect(p, 0, eb, 0, 3)
    b.connect(a1, 0, p, 3, 1)
    b.connect(p, 1, a2, 0, 1)
    b.connect(w, 1, ss[0], 0, 4)
    b.connect(w, 2, ss[1], 0, 3)
    b.connect(ss[2], 0, w, 3, 4)
    b.connect(ss[3], 0, w, 4, 3)
    b.connect(ss[4], 0, w, 5, 4)
    return b.build(), {"white": w, "edge_dart": e_dart, "alpha_ends": ("a1", "a2")}


def clear_fixture() -> tuple[Chart, dict]:
    """An edge between two whites crossed once by a label-5 strand."""
    b = ChartBuilder(7)
    wm = b.node(WHITE, "wm")
    wp = b.node(WHITE, "wp")
    p = b.node(CROSSING, "p")
    a1 = b.node(BLACK, "a1")
    a2 = b.node(BLACK, "a2")
    ss = [b.node(BLACK, f"s{k}") for k in range(1, 6)]
    ts = [b.node(BLACK, f"t{k}") for k in range(1, 6)]
    e_dart, _ = b.connect(wm, 0, p, 2, 3)
    b.connect(p, 0, wp, 3, 3)
    b.connect(a1, 0, p, 3, 5)
    b.connect(p, 1, a2, 0, 5)
    b.connect(wm, 1, ss[0], 0, 2)
    b.connect(wm, 2, ss[1], 0, 3)
    b.connect(ss[2], 0, wm, 3, 2)
    b.connect(ss[3], 0, wm, 4, 3)
    b.connect(ss[4], 0, wm, 5, 2)
    b.connect(wp, 0, ts[0], 0, 4)
    b.connect(wp, 1, ts[1], 0, 3)
    b.connect(wp, 2, ts[2], 0, 4)
    b.connect(ts[3], 0, wp, 4, 4)
    b.connect(ts[4], 0, wp, 5, 3)
    return b.build(), {"edge_dart": e_dart, "whites": (wm, wp)}


# -- plate realizations ----------------------------------------------------


def loop_disk() -> tuple[Chart, dict]:
    """A loop whose disk holds two whites joined by parallel strands.

    Concrete realization of the P05a plate with base label 2; every leg
    of the plate is closed off with a terminal black vertex.
    """
    b = ChartBuilder(6)
    w1, wa, wb = (b.node(WHITE, n) for n in ("w1", "wa", "wb"))
    for n in ("b1", "ba", "bb", "bc", "be", "bw", "l3", "l4", "l5", "l6"):
        b.node(BLACK, n)
    b.connect("be", 0, w1, 0, 2)
    loop_dart, _ = b.connect(w1, 4, w1, 2, 2)
    b.connect("b1", 0, w1, 1, 3)
    b.connect(w1, 3, wa, 0, 3)
    b.connect(w1, 5, "bw", 0, 3)
    b.connect(wb, 0, wa, 2, 3)
    b.connect(wa, 4, "ba", 0, 3)
    b.connect(wb, 1, wa, 1, 4)
    b.connect(wa, 3, "l3", 0, 4)
    b.connect(wa, 5, "l4", 0, 4)
    b.connect(wb, 2, "bb", 0, 3)
    b.connect("bc", 0, wb, 4, 3)
    b.connect("l5", 0, wb, 3, 4)
    b.connect("l6", 0, wb, 5, 4)
    return b.build(), {"loop_dart": loop_dart, "loop_white": w1}


def dot_crossing() -> Chart:
    """A white vertex whose terminal edge passes through a crossing."""
    b = ChartBuilder(6)
    w = b.node(WHITE, "w")
    x = b.node(CROSSING, "x")
    for n in ("B0", "B2", "bt", "s1", "s2", "o1", "o3", "o5"):
        b.node(BLACK, n)
    b.connect("B0", 0, w, 0, 2)
    b.connect("B2", 0, w, 2, 2)
    b.connect(w, 4, x, 0, 2)
    b.connect(x, 2, "bt", 0, 2)
    b.connect("s1", 0, x, 1, 4)
    b.connect(x, 3, "s2", 0, 4)
    b.connect("o1", 0, w, 1, 3)
    b.connect(w, 3, "o3", 0, 3)
    b.connect(w, 5, "o5", 0, 3)
    return b.build()


def io_imbalance() -> tuple[Chart, dict]:
    """The partial loop-disk configuration whose in/out count is (1, 3).

    A loop of label 2 bounds a disk holding three whites; a coherently
    oriented two-angled disk hangs between the first two.  The two
    label-2 edges left open in the drawing are realized as degree-one
    crossing stubs: crossings carry no arc germs, so the count sees
    exactly the drawn configuration.  The third white's label-2 germs at
    its middle arc end inside the two-angled disk.  This chart is
    structurally sound but deliberately violates the vertex axioms at
    the stubs; it exists only for the in/out bookkeeping.
    """
    b = ChartBuilder(5)
    w1, w2, w3, w4 = (b.node(WHITE, n) for n in ("w1", "w2", "w3", "w4"))
    for n in ("bout", "b1", "b5", "bm3", "t2a", "t2c", "t4a", "t4b", "t4c",
              "t4d", "t4e", "t4f"):
        b.node(BLACK, n)
    xa = b.node(CROSSING, "xa", degree=1)
    xb = b.node(CROSSING, "xb", degree=1)
    # w1: loop white, in-run at slots 0..2.
    b.connect("bout", 0, w1, 0, 2)
    loop_dart, _ = b.connect(w1, 4, w1, 2, 2)
    b.connect("b1", 0, w1, 1, 3)
    e12, _ = b.connect(w1, 3, w2, 0, 3)
    b.connect(w1, 5, "b5", 0, 3)
    # w2: near corner of the two-angled disk; both of its edges leave.
    ga, _ = b.connect(w2, 2, w3, 2, 3)
    gb, _ = b.connect(w2, 4, w3, 0, 3)
    b.connect("t2a", 0, w2, 1, 4)
    b.connect(w2, 3, "t4b", 0, 4)
    b.connect("t2c", 0, w2, 5, 4)
    # w3: far corner; its middle label-2 germ ends inside the disk, its
    # outer pair runs open into the stubs.
    b.connect("bm3", 0, w3, 1, 2)
    b.connect(w3, 3, xa, 0, 2)
    e3, _ = b.connect(w3, 4, w4, 0, 3)
    b.connect(w3, 5, xb, 0, 2)
    # w4: chained white of the other raised label.
    b.connect("t4a", 0, w4, 1, 4)
    b.connect("t4c", 0, w4, 2, 3)
    b.connect(w4, 3, "t4d", 0, 4)
    b.connect(w4, 4, "t4e", 0, 3)
    b.connect(w4, 5, "t4f", 0, 4)
    chart = b.build()
    return chart, {
        "loop_dart": loop_dart,
        "loop_white": w1,
        "bigon_darts": (ga, gb),
        "label": 2,
    }


def lens_pair() -> tuple[Chart, dict]:
    """Two whites joined by adjacent label-2 and label-3 edges: a lens."""
    b = ChartBuilder(5)
    w1, w2 = b.node(WHITE, "w1"), b.node(WHITE, "w2")
    for n in ("a0", "a1", "a4", "a5", "c0", "c1", "c4", "c5"):
        b.node(BLACK, n)
    b.connect("a0", 0, w1, 0, 2)
    b.connect("a1", 0, w1, 1, 3)
    e1, _ = b.connect(w2, 2, w1, 2, 2)
    e2, _ = b.connect(w1, 3, w2, 1, 3)
    b.connect(w1, 4, "a4", 0, 2)
    b.connect(w1, 5, "a5", 0, 3)
    b.connect("c0", 0, w2, 0, 2)
    b.connect(w2, 3, "c1", 0, 3)
    b.connect(w2, 4, "c4", 0, 2)
    b.connect("c5", 0, w2, 5, 3)
    return b.build(), {"edges": (e1, e2), "whites": (w1, w2)}


def solar_eclipse() -> Chart:
    """A label-2 loop and a label-3 loop sharing one white vertex."""
    b = ChartBuilder(5)
    w = b.node(WHITE, "w")
    bi = b.node(BLACK, "bi")
    bo = b.node(BLACK, "bo")
    b.connect(w, 4, w, 0, 2)
    b.connect(w, 3, w, 1, 3)
    b.connect(bi, 0, w, 2, 2)
    b.connect(w, 5, bo, 0, 3)
    return b.build()


def eyeglasses() -> Chart:
    """Two label-2 loops joined by a label-2 edge."""
    b = ChartBuilder(5)
    w2, w3 = b.node(WHITE, "w2"), b.node(WHITE, "w3")
    for n in ("p1", "p3", "p5", "q1", "q3", "q5"):
        b.node(BLACK, n)
    b.connect(w2, 0, w3, 0, 2)
    b.connect(w2, 4, w2, 2, 2)
    b.connect(w3, 2, w3, 4, 2)
    b.connect("p1", 0, w2, 1, 3)
    b.connect("p3", 0, w2, 3, 3)
    b.connect(w2, 5, "p5", 0, 3)
    b.connect(w3, 1, "q1", 0, 3)
    b.connect(w3, 3, "q3", 0, 3)
    b.connect("q5", 0, w3, 5, 3)
    return b.build()


def skew_eyeglasses_1() -> Chart:
    """A loop, a two-angled disk, a joining edge, and a far terminal."""
    b = ChartBuilder(5)
    w2, w3, w4 = (b.node(WHITE, n) for n in ("w2", "w3", "w4"))
    for n in ("p1", "p3", "p5", "q1", "q3", "q5", "r1", "r3", "r5", "b4"):
        b.node(BLACK, n)
    b.connect(w2, 0, w3, 0, 2)
    b.connect(w2, 4, w2, 2, 2)
    b.connect(w3, 2, w4, 0, 2)
    b.connect(w4, 2, w3, 4, 2)
    b.connect("b4", 0, w4, 4, 2)
    b.connect("p1", 0, w2, 1, 3)
    b.connect("p3", 0, w2, 3, 3)
    b.connect(w2, 5, "p5", 0, 3)
    b.connect(w3, 1, "q1", 0, 3)
    b.connect(w3, 3, "q3", 0, 3)
    b.connect("q5", 0, w3, 5, 3)
    b.connect(w4, 1, "r1", 0, 3)
    b.connect(w4, 3, "r3", 0, 3)
    b.connect("r5", 0, w4, 5, 3)
    return b.build()


def skew_eyeglasses_2() -> Chart:
    """Two loops joined through a third white carrying a terminal."""
    b = ChartBuilder(5)
    w2, w3, w4 = (b.node(WHITE, n) for n in ("w2", "w3", "w4"))
    for n in ("p1", "p3", "p5", "q1", "q3", "q5", "r1", "r3", "r5", "b4"):
        b.node(BLACK, n)
    b.connect(w2, 0, w4, 0, 2)
    b.connect(w2, 4, w2, 2, 2)
    b.connect(w3, 0, w4, 2, 2)
    b.connect(w3, 4, w3, 2, 2)
    b.connect(w4, 4, "b4", 0, 2)
    b.connect("p1", 0, w2, 1, 3)
    b.connect("p3", 0, w2, 3, 3)
    b.connect(w2, 5, "p5", 0, 3)
    b.connect("q1", 0, w3, 1, 3)
    b.connect("q3", 0, w3, 3, 3)
    b.connect(w3, 5, "q5", 0, 3)
    b.connect("r1", 0, w4, 1, 3)
    b.connect(w4, 3, "r3", 0, 3)
    b.connect(w4, 5, "r5", 0, 3)
    return b.build()


def hoop_only() -> Chart:
    """A single hoop of label 2."""
    b = ChartBuilder(5)
    m = b.node(MARKER, "m")
    b.connect(m, 0, m, 1, 2)
    return b.build()


def ring_crossings() -> Chart:
    """A closed label-1 edge crossed twice by a label-4 strand."""
    b = ChartBuilder(6)
    x1, x2 = b.node(CROSSING, "x1"), b.node(CROSSING, "x2")
    bs1, bs2 = b.node(BLACK, "bS1"), b.node(BLACK, "bS2")
    b.connect(x1, 2, x2, 0, 1)
    b.connect(x2, 2, x1, 0, 1)
    b.connect(bs1, 0, x1, 1, 4)
    b.connect(x1, 3, x2, 3, 4)
    b.connect(x2, 1, bs2, 0, 4)
    return b.build()


# -- triangle lemma charts -------------------------------------------------


def _triangle_core(b: ChartBuilder):
    """Shared skeleton: label-3 triangle w1, w2, w3 with a chord."""
    w1, w2, w3 = (b.node(WHITE, n) for n in ("w1", "w2", "w3"))
    e31, _ = b.connect(w3, 2, w1, 0, 3)
    e12, _ = b.connect(w1, 2, w2, 0, 3)
    e23, _ = b.connect(w2, 2, w3, 0, 3)
    chord, _ = b.connect(w2, 1, w3, 1, 2)
    return (w1, w2, w3), (e31, e12, e23), chord


def triangle_filled() -> tuple[Chart, dict]:
    """A cleared three-angled disk holding one corner terminal.

    The corner w1 carries two label-4 terminal edges on its non-middle
    germs, one hanging into the disk and one outside; the deformation
    exchanges their far halves, carrying the interior black vertex out.
    """
    b = ChartBuilder(5)
    (w1, w2, w3), boundary, chord = _triangle_core(b)
    bt1 = b.node(BLACK, "bt1")
    bt2 = b.node(BLACK, "bt2")
    for n in ("o13", "o14", "t23", "t24", "t25", "t33", "t34", "t35"):
        b.node(BLACK, n)
    g1, _ = b.connect(bt1, 0, w1, 1, 4)
    b.connect(w1, 3, "o13", 0, 4)
    b.connect(w1, 4, "o14", 0, 3)
    g2, _ = b.connect(bt2, 0, w1, 5, 4)
    b.connect(w2, 3, "t23", 0, 2)
    b.connect("t24", 0, w2, 4, 3)
    b.connect("t25", 0, w2, 5, 2)
    b.connect(w3, 3, "t33", 0, 2)
    b.connect(w3, 4, "t34", 0, 3)
    b.connect("t35", 0, w3, 5, 2)
    chart = b.build()
    return chart, {"corners": ("w1", "w2", "w3"), "black": "bt1",
                   "germ_in": chart.twin(g1), "germ_out": chart.twin(g2)}


def triangle_emptied() -> tuple[Chart, dict]:
    """The deformation end state: the interior black vertex sits outside."""
    b = ChartBuilder(5)
    (w1, w2, w3), boundary, chord = _triangle_core(b)
    bt1 = b.node(BLACK, "bt1")
    bt2 = b.node(BLACK, "bt2")
    for n in ("o13", "o14", "t23", "t24", "t25", "t33", "t34", "t35"):
        b.node(BLACK, n)
    b.connect(bt2, 0, w1, 1, 4)
    b.connect(w1, 3, "o13", 0, 4)
    b.connect(w1, 4, "o14", 0, 3)
    b.connect(bt1, 0, w1, 5, 4)
    b.connect(w2, 3, "t23", 0, 2)
    b.connect("t24", 0, w2, 4, 3)
    b.connect("t25", 0, w2, 5, 2)
    b.connect(w3, 3, "t33", 0, 2)
    b.connect(w3, 4, "t34", 0, 3)
    b.connect("t35", 0, w3, 5, 2)
    chart = b.build()
    return chart, {"corners": ("w1", "w2", "w3")}


def triangle_reducible() -> tuple[Chart, dict]:
    """A triangle whose far corner pair sits in relator position.

    Besides the boundary, w2 and w3 are joined by two label-2 arcs
    parallel to their shared boundary edge; after the corner terminal at
    w1 is relocated, the pair annihilates and the white count drops.
    """
    b = ChartBuilder(5)
    w1, w2, w3 = (b.node(WHITE, n) for n in ("w1", "w2", "w3"))
    bt1 = b.node(BLACK, "bt1")
    bt2 = b.node(BLACK, "bt2")
    for n in ("o13", "o14", "t24", "t25", "t34", "t35"):
        b.node(BLACK, n)
    e31, _ = b.connect(w3, 4, w1, 0, 3)
    e12, _ = b.connect(w1, 2, w2, 0, 3)
    e23, _ = b.connect(w2, 2, w3, 2, 3)
    p1, _ = b.connect(w2, 1, w3, 3, 2)
    p2, _ = b.connect(w2, 3, w3, 1, 2)
    g1, _ = b.connect(bt1, 0, w1, 1, 2)
    b.connect(w1, 3, "o13", 0, 2)
    b.connect(w1, 4, "o14", 0, 3)
    b.connect(bt2, 0, w1, 5, 2)
    b.connect("t24", 0, w2, 4, 3)
    b.connect("t25", 0, w2, 5, 2)
    b.connect(w3, 0, "t34", 0, 3)
    b.connect(w3, 5, "t35", 0, 2)
    chart = b.build()
    return chart, {"corners": ("w1", "w2", "w3")}


def ciii_before() -> tuple[Chart, dict]:
    """Two whites one move away from forming a lens.

    The label-4 terminal at wx sits between the label-2 and label-4
    edges joining wx to wy; relocating it through wx leaves an empty
    two-edge disk of consecutive labels.
    """
    b = ChartBuilder(5)
    wx, wy = b.node(WHITE, "wx"), b.node(WHITE, "wy")
    bt = b.node(BLACK, "bt")
    for n in ("x0", "x1", "x4", "y1", "y2", "y3", "y4"):
        b.node(BLACK, n)
    b.connect("x0", 0, wx, 0, 3)
    b.connect("x1", 0, wx, 1, 4)
    e1, _ = b.connect(wy, 0, wx, 2, 3)
    g1, _ = b.connect(wx, 3, bt, 0, 4)
    b.connect(wx, 4, "x4", 0, 3)
    e2, _ = b.connect(wx, 5, wy, 5, 4)
    b.connect(wy, 1, "y1", 0, 4)
    b.connect(wy, 2, "y2", 0, 3)
    b.connect("y3", 0, wy, 3, 4)
    b.connect("y4", 0, wy, 4, 3)
    chart = b.build()
    return chart, {"anchor_dart": g1, "whites": (wx, wy), "edges": (e1, e2)}


def ciii_after() -> tuple[Chart, dict]:
    """The relocated configuration: the two joining edges bound a lens."""
    b = ChartBuilder(5)
    wx, wy = b.node(WHITE, "wx"), b.node(WHITE, "wy")
    bt = b.node(BLACK, "bt")
    for n in ("x0", "x1", "x4", "y1", "y2", "y3", "y4"):
        b.node(BLACK, n)
    b.connect("x0", 0, wx, 0, 3)
    b.connect("x1", 0, wx, 1, 4)
    e1, _ = b.connect(wy, 0, wx, 2, 3)
    e2, _ = b.connect(wx, 3, wy, 5, 4)
    b.connect(wx, 4, "x4", 0, 3)
    b.connect(wx, 5, bt, 0, 4)
    b.connect(wy, 1, "y1", 0, 4)
    b.connect(wy, 2, "y2", 0, 3)
    b.connect("y3", 0, wy, 3, 4)
    b.connect("y4", 0, wy, 4, 3)
    chart = b.build()
    return chart, {"whites": (wx, wy), "edges": (e1, e2)}


def minimal_form_fixtures() -> dict[str, Chart]:
    """The named fixtures that pass every minimal-form lint."""
    return {
        "loop_disk": loop_disk()[0],
        "eyeglasses": eyeglasses(),
        "skew_eyeglasses_1": skew_eyeglasses_1(),
        "skew_eyeglasses_2": skew_eyeglasses_2(),
        "solar_eclipse": solar_eclipse(),
        "lens_pair": lens_pair()[0],
        "white_with_terminals": white_with_terminals(),
    }
