"""
Edge weights and lower bounds
=============================

Every bound in the package is driven by four integers read off the pattern's
edges. This walk-through computes them for a few patterns and evaluates the
resulting bounds exactly.
"""

from graphsat import best_lower_bound, all_lower_bounds, weight_summary
from graphsat.constructions import caterpillar_p5, double_star, paw

# The double star S_{4,5}: centers of degree 4 and 5 joined by an edge.
h = double_star(4, 5)
w = weight_summary(h)
print("S_{4,5}: k0 =", w.k0, "k1 =", w.k1, "k0' =", w.k0p, "k1' =", w.k1p)

# Per-edge table; the witness edges are the lexicographically least minimizers.
for e in w.per_edge:
    print("  edge", e.edge, "wt_cp", e.wt_cp, "wt0", e.wt0, "wt1", e.wt1)
print("  witnesses:", w.witnesses)

# All bounds at n = 18, as exact fractions. Inapplicable ones say why.
for r in all_lower_bounds(h, 18):
    if r.applicable:
        print(f"  {r.name:18s} slope {r.slope!s:6s} constant {r.constant!s:8s} value {r.value}")
    else:
        print(f"  {r.name:18s} not applicable: {r.reason}")

best = best_lower_bound(h, 18)
print("best explicit bound at n = 18:", best.name, "=", best.value)

# The triangle with a pendant vertex: the general bound's third case wins.
print("paw at n = 1000:", best_lower_bound(paw(), 1000).name)

# Caterpillars P_5^s have a single weight class, so k0 = k0' and k1 = k1'.
for s in range(1, 4):
    w = weight_summary(caterpillar_p5(s))
    print(f"P_5^{s}:", (w.k0, w.k1, w.k0p, w.k1p))
