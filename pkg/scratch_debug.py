from chartcalc.core import BLACK, CROSSING, WHITE, ChartBuilder, canonical_key, serialize_chart
from chartcalc.moves import apply_move, apply_move_detailed, shift_white_vertex
from chartcalc.subgraphs import extract_subgraph

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

e = extract_subgraph(fix, 3).edge_of_dart(e_dart)
new, trace = shift_white_vertex(fix, "w", e, 0)
for m, i in zip(trace.moves, trace.inverses):
    print("move:", m.kind, m.direction, m.anchor)
    print("  inv:", i.kind, i.direction, i.anchor)

# replay forward keeping intermediates
states = [fix]
cur = fix
for m in trace.moves:
    cur = apply_move(cur, m)
    states.append(cur)

# undo last move
undone, _, _ = apply_move_detailed(states[3], trace.inverses[2])
print("canon equal post-poke2:", canonical_key(undone) == canonical_key(states[2]))
s_a = serialize_chart(states[2])
s_b = serialize_chart(undone)
if s_a != s_b:
    import difflib
    for line in difflib.unified_diff(s_a.splitlines(), s_b.splitlines(), lineterm=""):
        print(line)
