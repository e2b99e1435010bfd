"""
Explicit saturated graphs
=========================

Build the double-star and caterpillar constructions, check their audits and
confirm saturation with the verifier.
"""

from graphsat import is_h_saturated
from graphsat.bounds import double_star_bounds
from graphsat.constructions import (caterpillar_p5, double_star, saturated_double_star,
                                    saturated_shorty)

# An S_{4,5}-saturated graph on 18 vertices with 30 edges.
rep = saturated_double_star(4, 5, 18)
print(rep.name, rep.params, "edges:", rep.graph.size, "expected:", rep.expected_size)
print("property audit:", rep.properties_checked)
print("saturated:", is_h_saturated(rep.graph, double_star(4, 5)).is_saturated)

# The construction sits between the lower and upper bounds.
lower, upper, exact = double_star_bounds(4, 5, 18)
print(f"{lower.value} <= {rep.graph.size} <= {upper.value}; corollary value {exact.value}")

# Role labels record which vertex plays which part.
kinds = {}
for v, role in rep.role_labels.items():
    kinds.setdefault(role.kind, []).append(v)
print({k: len(v) for k, v in kinds.items()})

# Odd remainders bring in one special vertex wired by edge swaps.
for n in (19, 21, 23):
    rep = saturated_double_star(4, 5, n)
    special = [v for v, r in rep.role_labels.items() if r.kind == "special-v"]
    print(n, "edges", rep.graph.size, "special vertex", special)

# Caterpillar P_5^1: 23 edges on 19 vertices.
rep = saturated_shorty(2, 19)
print("shorty(2, 19):", rep.graph.size, "edges,",
      "saturated:", is_h_saturated(rep.graph, caterpillar_p5(1)).is_saturated)
