"""Saturation numbers of graphs: edge weights, exact bounds, explicit
saturated constructions, a saturation verifier and a brute-force oracle."""

from .bounds import (BoundError, BoundReport, all_lower_bounds, best_lower_bound, cp_lower_bound,
                     double_star_bounds, ehm_saturation_number, general_lower_bound, shorty_bounds,
                     triangle_free_lower_bound, warmup_min_avg_degree)
from .constructions import (ConstructionError, ConstructionReport, caterpillar_p5, double_star,
                            ehm_construction, example_kdelta_doublestar, example_kdelta_star,
                            fig4_gadget, paw, saturated_double_star, saturated_shorty)
from .graph import (Graph, Graph6Error, GraphError, add_edge, circulant, clique, complete_multipartite,
                    cycle, edge_neighborhood, emit_graph6, from_edge_list, is_triangle_free, non_edges,
                    parse_edge_list_text, parse_graph6, path, regular_bipartite, star, to_dot,
                    to_edge_list_text)
from .oracle import (OracleError, SatResult, audit_bounds_against_oracle, brute_force_sat,
                     canonical_form, enumerate_graphs)
from .saturation import (degree_partition, check_clique_propositions, find_embedding, is_h_free,
                         is_h_saturated, satisfies_property_p)
from .weights import PatternError, WeightSummary, weight_summary, wt0, wt1, wt_cp

__version__ = "0.1.0"
