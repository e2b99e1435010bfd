"""
Property (P) is not enough
==========================

A 10-vertex graph where every vertex sees a degree-3 neighbor and property
(P) holds for k0 = 2, k1' = 3, yet adding one edge creates no P_5^1.
"""

from graphsat import is_h_free, is_h_saturated, satisfies_property_p
from graphsat.constructions import FIG4_LABELS, caterpillar_p5, fig4_gadget
from graphsat.graph import to_dot

g = fig4_gadget()
h = caterpillar_p5(1)
print("order", g.order, "size", g.size)
print("property (P):", bool(satisfies_property_p(g, 2, 3)))
print("P_5^1-free:", is_h_free(g, h))

verdict = is_h_saturated(g, h)
x, y = verdict.maximality_counterexample
print("saturated:", verdict.is_saturated, "- adding", FIG4_LABELS[x], FIG4_LABELS[y], "creates no copy")

print(to_dot(g, dict(enumerate(FIG4_LABELS)), name="fig4"))
