"""Scratch verification of composite move procedures."""
from chartcalc.core import BLACK, CROSSING, WHITE, ChartBuilder, canonical_key
from chartcalc.moves import clear_edge_crossings, shift_white_vertex
from chartcalc.subgraphs import extract_subgraph
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


# ---- shift fixture: white (3,4) with label-1 strand across its edge ------
b = ChartBuilder(7)
w = b.node(WHITE, "w")
p = b.node(CROSSING, "p")
eb = b.node(BLACK, "eb")
a1 = b.node(BLACK, "a1"); a2 = b.node(BLACK, "a2")
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
fix = b.build()
check("shift fixture valid", check_axioms(fix).ok, check_axioms(fix).render_text())

sub = extract_subgraph(fix, 3)
e = sub.edge_of_dart(e_dart)
print("edge:", e.describe(), "through:", e.through_nodes)
new, trace = shift_white_vertex(fix, "w", e, 0)
check("shift ok", check_axioms(new).ok, check_axioms(new).render_text())
check("shift trace length 3", len(trace.moves) == 3, str(len(trace.moves)))
sub2 = extract_subgraph(new, 3)
e2 = sub2.edge_of_dart(e_dart)
crossings_on_e2 = [n for n in e2.through_nodes if new.nodes[n] == CROSSING]
check("edge cleared at w", len(crossings_on_e2) == 0, str(e2.through_nodes))
# alpha strand now crosses three label-4 spokes
sub1 = extract_subgraph(new, 1)
alpha = [x for x in sub1.edges if set(x.endpoints) == {"a1", "a2"}][0]
cross_labels = sorted(
    next(new.dart(d).label for d in new.rotation[c] if new.dart(d).label != 1)
    for c in alpha.through_nodes if new.nodes[c] == CROSSING
)
check("alpha crosses trailing spokes", cross_labels == [3, 3, 4, 4, 4], str(cross_labels))
check("replay matches", canonical_key(trace.replay(fix)) == canonical_key(new))
check(
    "backward replay restores",
    canonical_key(trace.replay_backward(new)) == canonical_key(fix),
)

# ---- clear fixture: edge between (2,3)- and (3,4)-whites, label-5 cross --
b = ChartBuilder(7)
wm = b.node(WHITE, "wm")
wp = b.node(WHITE, "wp")
p = b.node(CROSSING, "p")
a1 = b.node(BLACK, "a1"); a2 = b.node(BLACK, "a2")
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
fix2 = b.build()
check("clear fixture valid", check_axioms(fix2).ok, check_axioms(fix2).render_text())
sub = extract_subgraph(fix2, 3)
e = sub.edge_of_dart(e_dart)
check("edge joins wm wp", set(e.endpoints) == {"wm", "wp"}, str(e.endpoints))
new2, trace2 = clear_edge_crossings(fix2, e)
check("clear ok", check_axioms(new2).ok, check_axioms(new2).render_text())
e2 = extract_subgraph(new2, 3).edge_of_dart(e_dart)
crossings_on_e2 = [n for n in e2.through_nodes if new2.nodes[n] == CROSSING]
check("edge fully cleared", len(crossings_on_e2) == 0, str(e2.through_nodes))
check("clear replay", canonical_key(trace2.replay(fix2)) == canonical_key(new2))
check(
    "clear backward replay",
    canonical_key(trace2.replay_backward(new2)) == canonical_key(fix2),
)

print(f"\n{ok} passed, {fail} failed")
raise SystemExit(1 if fail else 0)
