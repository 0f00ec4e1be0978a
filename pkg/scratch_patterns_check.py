"""Scratch verification of the pattern library and matcher."""
from chartcalc.core import BLACK, CROSSING, WHITE, ChartBuilder
from chartcalc.patterns import (
    match,
    parse_pattern,
    pattern_library,
    reflect,
    reverse_orientation,
    ro_family,
    serialize_pattern,
    _structural_key,
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


lib = pattern_library()
check("library size >= 25", len(lib) >= 25, str(len(lib)))
check("seven-disk family count", sum(1 for k in lib if k.startswith("P07")) == 5)
check("eight-disk family count", sum(1 for k in lib if k.startswith("P08")) == 2)

for name, p in lib.items():
    check(
        f"{name} reverse involution",
        _structural_key(reverse_orientation(reverse_orientation(p)))
        == _structural_key(p),
    )
    check(
        f"{name} reflect involution",
        _structural_key(reflect(reflect(p))) == _structural_key(p),
    )
    rt = parse_pattern(serialize_pattern(p))
    check(f"{name} serialization roundtrip", _structural_key(rt) == _structural_key(p))
    fam = ro_family(p)
    check(f"{name} family size", 1 <= fam.distinct() <= 4, str(fam.distinct()))

# ---- concrete realization of the two-white loop-disk plate ---------------
from chartcalc import fixtures as fx
f05a = fx.loop_disk()[0]
check("f05a axioms", check_axioms(f05a).ok, check_axioms(f05a).render_text())

hits = match(f05a, None, lib["P05a"])
check("P05a matches once", len(hits) == 1, str(len(hits)))
if hits:
    emb = hits[0]
    check("P05a base label", emb["k"] == 2, str(emb))
    check("P05a node image", emb["nodes"]["w1"] == "w1", str(emb["nodes"]))
check("P14c absent", len(match(f05a, None, lib["P14c"])) == 0)
check("P15a absent", len(match(f05a, None, lib["P15a"])) == 0)

# ---- terminal edge through a crossing (dot shorthand, wildcard walk) -----
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
dotfix = b.build()
check("dotfix axioms", check_axioms(dotfix).ok, check_axioms(dotfix).render_text())
h13a = match(dotfix, None, lib["P13a"])
check("P13a matches through crossing", len(h13a) >= 1, str(len(h13a)))
h13c = match(dotfix, None, lib["P13c"])
check("P13c dot matches", len(h13c) >= 1, str(len(h13c)))

print(f"\n{ok} passed, {fail} failed")
raise SystemExit(1 if fail else 0)
