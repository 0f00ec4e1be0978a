"""Scratch verification of the fixture charts and macro procedures."""
from chartcalc import fixtures as fx
from chartcalc.core import canonical_key, face_of_dart
from chartcalc.moves import (
    C_III,
    FORWARD,
    ElementaryMove,
    apply_move,
    triangle_deform,
    triangle_reduce,
    _disk_interior_nodes,
)
from chartcalc.regions import (
    Region,
    angled_disks,
    associated_disk,
    detect_lenses,
    io_balance,
    split_sides,
)
from chartcalc.subgraphs import detect_shapes, extract_subgraph
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


def axioms_ok(name, chart):
    rep = check_axioms(chart)
    check(f"{name} axioms", rep.ok, rep.render_text())


# -- simple builds ---------------------------------------------------------
for name in ("crossing_strands", "triangle_strands", "spoke_wheel",
             "white_with_terminals", "pinched_strands", "dot_crossing",
             "solar_eclipse", "eyeglasses", "skew_eyeglasses_1",
             "skew_eyeglasses_2", "hoop_only", "ring_crossings"):
    chart = getattr(fx, name)()
    axioms_ok(name, chart)

for name in ("shift_fixture", "clear_fixture", "loop_disk", "lens_pair"):
    chart, _h = getattr(fx, name)()
    axioms_ok(name, chart)

# -- detectors -------------------------------------------------------------
lens_chart, lh = fx.lens_pair()
lenses = detect_lenses(lens_chart)
check("lens detected", len(lenses) == 1, str(lenses))

# The plate realization carries a genuine (3, 4) lens between wa and wb.
check("loop_disk lens count", len(detect_lenses(fx.loop_disk()[0])) == 1)

shapes = detect_shapes(fx.solar_eclipse(), 2)
check("solar eclipse detected",
      any(s["shape"] == "solar_eclipse" for s in shapes), str(shapes))

shapes = detect_shapes(fx.eyeglasses(), 2)
check("eyeglasses detected",
      any(s["shape"] == "eyeglasses" for s in shapes), str(shapes))

shapes = detect_shapes(fx.skew_eyeglasses_1(), 2)
check("skew 1 detected",
      any(s["shape"] == "skew_eyeglasses_1" for s in shapes), str(shapes))

shapes = detect_shapes(fx.skew_eyeglasses_2(), 2)
check("skew 2 detected",
      any(s["shape"] == "skew_eyeglasses_2" for s in shapes), str(shapes))

hoop_edges = extract_subgraph(fx.hoop_only(), 2).edges
check("hoop detected", [e.kind for e in hoop_edges] == ["hoop"],
      str([e.kind for e in hoop_edges]))

ring_edges = extract_subgraph(fx.ring_crossings(), 1).edges
check("ring detected", [e.kind for e in ring_edges] == ["ring"],
      str([e.kind for e in ring_edges]))

# -- io imbalance ----------------------------------------------------------
io_chart, ih = fx.io_imbalance()
sub2 = extract_subgraph(io_chart, 2)
loop = sub2.edge_of_dart(ih["loop_dart"])
D = associated_disk(io_chart, loop)
ga, gb = ih["bigon_darts"]
barrier = set()
for d in (ga, gb):
    barrier |= {d, io_chart.twin(d)}
side_a, side_b = split_sides(io_chart, barrier)
inner = side_a if side_a <= set(D.faces) else side_b
check("bigon inner side inside disk", inner <= set(D.faces),
      f"a={side_a} b={side_b} D={sorted(D.faces)}")
F = Region(frozenset(set(D.faces) - inner))
counts = io_balance(io_chart, F, ih["label"])
check("io imbalance (1, 3)", counts == (1, 3), str(counts))

# -- triangle deform -------------------------------------------------------
tri, th = fx.triangle_filled()
axioms_ok("triangle_filled", tri)
disks = [d for d in angled_disks(tri, 3, max_k=3)
         if d.k == 3 and "bt1" in _disk_interior_nodes(tri, set(d.region.faces))]
check("filled triangle disk found", len(disks) == 1,
      f"{len(disks)} candidates")
if disks:
    disk = disks[0]
    check("filled disk has no feelers", not disk.feelers,
          str([f.describe() for f in disk.feelers]))
    new, trace = triangle_deform(tri, disk)
    target, _ = fx.triangle_emptied()
    axioms_ok("triangle_emptied", target)
    check("deform reaches pinned end state",
          canonical_key(new) == canonical_key(target))
    check("deform trace replays", canonical_key(trace.replay(tri)) == canonical_key(new))
    check("deform trace reverses",
          canonical_key(trace.replay_backward(new)) == canonical_key(tri))

# -- triangle reduce -------------------------------------------------------
red, rh = fx.triangle_reducible()
axioms_ok("triangle_reducible", red)
disks = [d for d in angled_disks(red, 3, max_k=3)
         if d.k == 3 and "bt1" in _disk_interior_nodes(red, set(d.region.faces))]
check("reducible triangle disk found", len(disks) == 1, f"{len(disks)} candidates")
if disks:
    from chartcalc.regions import count_w

    new, trace = triangle_reduce(red, disks[0])
    check("reduce lowers white count", count_w(new) <= count_w(red) - 2,
          f"{count_w(red)} -> {count_w(new)}")
    axioms_ok("reduced chart", new)
    check("reduce trace replays", canonical_key(trace.replay(red)) == canonical_key(new))
    check("reduce trace reverses",
          canonical_key(trace.replay_backward(new)) == canonical_key(red))

# -- the lens-forming relocation ------------------------------------------
before, bh = fx.ciii_before()
axioms_ok("ciii_before", before)
after, ah = fx.ciii_after()
axioms_ok("ciii_after", after)
check("no lens before", len(detect_lenses(before)) == 0,
      str(detect_lenses(before)))
moved = apply_move(before, ElementaryMove(C_III, FORWARD, {"dart": bh["anchor_dart"]}))
check("relocation reaches pinned end state",
      canonical_key(moved) == canonical_key(after))
check("lens after", len(detect_lenses(moved)) == 1, str(detect_lenses(moved)))

# -- minimal form fixtures -------------------------------------------------
from chartcalc.validator import check_minimal_form

for name, chart in fx.minimal_form_fixtures().items():
    rep = check_minimal_form(chart)
    check(f"{name} minimal lints", rep.ok, rep.render_text())

print(f"\n{ok} passed, {fail} failed")
raise SystemExit(1 if fail else 0)
