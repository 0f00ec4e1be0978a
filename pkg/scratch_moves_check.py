"""Scratch verification of move surgeries (not part of the package)."""
import traceback

from chartcalc.core import (
    BLACK, CROSSING, WHITE, ChartBuilder, canonical_key, face_walk,
)
from chartcalc.moves import (
    CI_HOOP, CI_M2, CI_R2, CI_R3, CI_R4, C_II, C_III,
    FORWARD, INVERSE, ElementaryMove, apply_move, apply_move_detailed,
    enumerate_sites, move_from_line, move_to_line,
)
from chartcalc.validator import check_axioms

ok = fail = 0


def check(name, cond, extra=""):
    global ok, fail
    if cond:
        ok += 1
        print(f"PASS {name}")
    else:
        fail += 1
        print(f"FAIL {name} {extra}")


def roundtrip(name, chart, move):
    global fail
    try:
        mid, inv, _ = apply_move_detailed(chart, move)
        back = apply_move(mid, inv)
    except Exception as e:
        traceback.print_exc()
        check(name, False, f"raised {e!r}")
        return None
    check(name + " axioms-mid", check_axioms(mid).ok or not check_axioms(chart).ok)
    check(name + " roundtrip", canonical_key(back) == canonical_key(chart))
    return mid


# ---- crossing fixture: label-1 strand over label-4 strand ----------------
b = ChartBuilder(6)
b1 = b.node(BLACK, "b1"); b2 = b.node(BLACK, "b2")
b3 = b.node(BLACK, "b3"); b4 = b.node(BLACK, "b4")
x = b.node(CROSSING, "x")
a_in, _ = b.connect(b1, 0, x, 0, 1)
b.connect(x, 2, b2, 0, 1)
f_in, _ = b.connect(b3, 0, x, 1, 4)
b.connect(x, 3, b4, 0, 4)
cross = b.build()
check("cross faces", len(face_walk(cross)) == 1)

sites = enumerate_sites(cross, CI_R2, FORWARD)
check("r2 sites nonempty", len(sites) > 0, f"{len(sites)}")
for s in sites[:4]:
    roundtrip(f"r2 {s.anchor}", cross, s)

# forward then the enumerated inverse bigon
mid = apply_move(cross, sites[0])
inv_sites = enumerate_sites(mid, CI_R2, INVERSE)
check("r2 inverse site exists", len(inv_sites) >= 1, f"{len(inv_sites)}")
for s in inv_sites:
    roundtrip(f"r2 inv {s.anchor}", mid, s)

# hoop on the crossing fixture
roundtrip("hoop", cross, ElementaryMove(CI_HOOP, FORWARD, {"label": 3}))

# CII: black b1's dart pokes across the label-4 strand
cii_sites = enumerate_sites(cross, C_II, FORWARD)
check("cii sites nonempty", len(cii_sites) > 0, f"{len(cii_sites)}")
for s in cii_sites[:4]:
    roundtrip(f"cii {s.anchor}", cross, s)

# ---- R3 triangle fixture: strands 1, 3, 5 --------------------------------
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
tri = b.build()
check("tri valid", check_axioms(tri).ok, check_axioms(tri).render_text())
faces = face_walk(tri)
print("tri faces:", [len(f) for f in faces])
r3_sites = enumerate_sites(tri, CI_R3, FORWARD)
check("r3 site exists", len(r3_sites) >= 1, f"{len(r3_sites)}")
for s in r3_sites:
    roundtrip(f"r3 {s.anchor}", tri, s)

# ---- R4 spoke fixture ----------------------------------------------------
b = ChartBuilder(6)
w = b.node(WHITE, "w")
cs = [b.node(CROSSING, f"c{k}") for k in (1, 2, 3)]
es = [b.node(BLACK, f"E{k}") for k in (1, 2, 3)]
fs = [b.node(BLACK, f"F{k}") for k in (1, 2, 3)]
bs1 = b.node(BLACK, "bS1"); bs2 = b.node(BLACK, "bS2")
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
spoke = b.build()
check("spoke valid", check_axioms(spoke).ok, check_axioms(spoke).render_text())
r4_sites = enumerate_sites(spoke, CI_R4, FORWARD)
check("r4 site exists", len(r4_sites) >= 1, f"{len(r4_sites)}")
for s in r4_sites:
    roundtrip(f"r4 {s.anchor}", spoke, s)

# ---- CIII fixture: white with a terminal edge ----------------------------
b = ChartBuilder(6)
w = b.node(WHITE, "w")
blk = b.node(BLACK, "blk")
ends = [b.node(BLACK, f"t{k}") for k in range(5)]
# rot(w): slots 0..5 labels 2,3,2,3,2,3; dirs out,out,out,in,in,in
b.connect(w, 0, blk, 0, 2)
b.connect(w, 1, ends[0], 0, 3)
b.connect(w, 2, ends[1], 0, 2)
b.connect(ends[2], 0, w, 3, 3)
b.connect(ends[3], 0, w, 4, 2)
b.connect(ends[4], 0, w, 5, 3)
wfix = b.build()
check("wfix valid", check_axioms(wfix).ok, check_axioms(wfix).render_text())
c3_sites = enumerate_sites(wfix, C_III, FORWARD)
check("ciii sites", len(c3_sites) > 0, f"{len(c3_sites)}")
for s in c3_sites:
    roundtrip(f"ciii {s.anchor}", wfix, s)

# ---- M2 fixture: three parallel strands 2,3,2 ----------------------------
b = ChartBuilder(6)
ls = [b.node(BLACK, f"l{k}") for k in range(3)]
rs = [b.node(BLACK, f"r{k}") for k in range(3)]
m2_darts = []
for k, lbl in enumerate((2, 3, 2)):
    out, _ = b.connect(ls[k], 0, rs[k], 0, lbl)
    m2_darts.append(out)
# Connect the strands so the chart is one component: a label-5 strut is
# not possible without crossings; instead use crossings of a label-5 arc
# over all three strands?  Simpler: accept one component per strand is
# not allowed for fo equality, so cross a label-5 strand through.
strands = b.build()
m2_all = enumerate_sites(strands, CI_M2, FORWARD)
print("m2 sites on disconnected strands (expected 0):", len(m2_all))

# Connected variant: label-5 strand crossing all three.
b = ChartBuilder(7)
ls = [b.node(BLACK, f"l{k}") for k in range(3)]
rs = [b.node(BLACK, f"r{k}") for k in range(3)]
xs = [b.node(CROSSING, f"x{k}") for k in range(3)]
top = b.node(BLACK, "top"); bot = b.node(BLACK, "bot")
m2_darts = []
for k, lbl in enumerate((1, 2, 1)):
    b.connect(ls[k], 0, xs[k], 0, lbl)
    out, _ = b.connect(xs[k], 2, rs[k], 0, lbl)
    m2_darts.append(out)
# vertical label-5 strand top -> x0 -> x1 -> x2 -> bot crossing each
b.connect(top, 0, xs[0], 1, 5)
b.connect(xs[0], 3, xs[1], 1, 5)
b.connect(xs[1], 3, xs[2], 1, 5)
b.connect(xs[2], 3, bot, 0, 5)
m2fix = b.build()
check("m2fix valid", check_axioms(m2fix).ok, check_axioms(m2fix).render_text())
m2_sites = enumerate_sites(m2fix, CI_M2, FORWARD)
check("m2 sites", len(m2_sites) > 0, f"{len(m2_sites)}")
for s in m2_sites[:6]:
    mid = roundtrip(f"m2 {s.anchor}", m2fix, s)
    if mid is not None:
        inv2 = enumerate_sites(mid, CI_M2, INVERSE)
        check(f"m2 inverse site found {s.anchor}", len(inv2) >= 1)

# serialization of moves
mv = ElementaryMove(CI_R4, FORWARD, {"white": "w", "crossings": ("c1", "c2", "c3")})
check("move line roundtrip", move_from_line(move_to_line(mv)) == mv, move_to_line(mv))

print(f"\n{ok} passed, {fail} failed")
raise SystemExit(1 if fail else 0)
