from chartcalc import fixtures as fx
from chartcalc.moves import triangle_reduce, _disk_interior_nodes, _fo
from chartcalc.regions import angled_disks

red, rh = fx.triangle_reducible()
disks = [d for d in angled_disks(red, 3, max_k=3)
         if d.k == 3 and "bt1" in _disk_interior_nodes(red, set(d.region.faces))]
new, trace = triangle_reduce(red, disks[0])
for mv in trace.moves:
    print(mv.move, mv.stage, mv.anchor.get("darts"), "inv:", mv.inverse.move,
          mv.inverse.stage, mv.inverse.anchor.get("darts"))

# last move's inverse is the M2 FORWARD that fails on replay_backward
m2 = trace.moves[-1].inverse
d1, d2, d3 = m2.anchor["darts"]
fo = _fo(new)
for d in (d1, d2, d3):
    t = new.twin(d)
    a = new.dart(d)
    print(d, "label", a.label, "dir", a.direction, "fo[d]", fo[d], "fo[t]", fo[t])
print("stack d1/t2:", fo[d1] == fo[new.twin(d2)])
print("stack d2/t3:", fo[d2] == fo[new.twin(d3)])
print("rev  d3/t2:", fo[d3] == fo[new.twin(d2)])
print("rev  d2/t1:", fo[d2] == fo[new.twin(d1)])
print("alt t1/d2:", fo[new.twin(d1)] == fo[d2])
