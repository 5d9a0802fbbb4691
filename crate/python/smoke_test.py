"""Smoke test for the compiled extension: python python/smoke_test.py"""

import json

import jtlab

t = jtlab.HilbertFunction.from_dk(3, 2)
assert t.values == [1, 2, 3, 3, 2, 1]
assert len(t.partitions()) == 18
cijt = t.partitions(cijt_only=True)
assert len(cijt) == 8

p = jtlab.Partition("6,3,3")
assert p.is_cijt() and p.nonvanishing_hessians() == {0, 2}
assert t.partition_for_hessians({0, 2}) == p
assert p.hook_code()[0] == "1_3,1_4,2_5"
assert jtlab.Partition([3, 3, 3, 1, 1, 1]).is_cijt() is False

assert str(jtlab.jordan_type("x^2, y^3", "x+y")) == "4,2"
assert str(jtlab.jordan_type_of_dual("X^2*Y^3", "x+y")) == "6,4,2"
assert jtlab.annihilator_of("X^2*Y^3") == ["x^3", "y^4"]

name, gens, ok, checks = jtlab.realize(jtlab.Partition("6,2,2,2"))
assert ok and gens == ["x^2*y", "y^4 + x^4"] and len(checks) == 6
assert all(r[2] for r in jtlab.realize_every(t, 7))

table = json.loads(jtlab.table_json("9"))
assert table["kind"] == "jordan" and len(table["rows"]) == 18

try:
    jtlab.Partition("3,x")
except ValueError:
    pass
else:
    raise AssertionError("bad partition accepted")

print("smoke test passed")
