from __future__ import annotations

import networkx as nx
from hypothesis import strategies as st

from graphsat.graph import Graph, from_edge_list


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 9) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def bipartite_graphs(draw, max_order: int = 12) -> Graph:
    n = draw(st.integers(2, max_order))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v]]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.order))
    out.add_edges_from(g.edges())
    return out


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edge_list(len(index), [(index[a], index[b]) for a, b in h.edges()])
