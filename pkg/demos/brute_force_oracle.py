"""
Exact saturation numbers for small orders
=========================================

The oracle enumerates one graph per isomorphism class and sweeps edge counts
upward until it finds a saturated graph.
"""

from graphsat import brute_force_sat, best_lower_bound
from graphsat.graph import clique, cycle, emit_graph6, path, star
from graphsat.oracle import audit_bounds_against_oracle, count_graphs

# Sanity check on the enumerator: isomorphism classes per order.
print([count_graphs(n) for n in range(1, 8)])

# sat(n, C4) next to the best explicit lower bound.
for n in range(4, 8):
    res = brute_force_sat(n, cycle(4), audit=True)
    bound = best_lower_bound(cycle(4), n)
    print(f"n={n}: sat = {res.sat_value}, bound ceil = {bound.ceil_value}, "
          f"witnesses {[emit_graph6(w).decode() for w in res.witnesses]}")

# The audit harness runs the same comparison over a corpus.
report = audit_bounds_against_oracle({"P3": path(3), "K13": star(3), "K3": clique(3)}, 7)
for row in report.rows:
    print(row.pattern, row.n, row.sat_value, row.lower_bounds, row.upper_bounds)
print("violations:", report.violations)
