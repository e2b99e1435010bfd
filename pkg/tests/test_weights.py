from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import assume, given

from graphsat.constructions import caterpillar_p5, double_star, paw
from graphsat.graph import GraphError, clique, disjoint_union, is_triangle_free, path
from graphsat.weights import (PatternError, has_isolated_edge, weight_summary, wt0, wt1, wt_cp)
from strategies import bipartite_graphs, from_nx, graphs, permutations_of, to_nx


def naive_constants(h):
    """Independent recomputation from networkx neighborhoods."""
    g = to_nx(h)
    rows = []
    for u, v in g.edges():
        nbhd = (set(g[u]) | set(g[v])) - {u, v}
        rows.append((max(g.degree(u), g.degree(v)) - 1, max(g.degree(w) for w in nbhd)))
    k0 = min(a for a, _ in rows)
    k1 = min(b for _, b in rows)
    return k0, k1, min(a for a, b in rows if b == k1), min(b for a, b in rows if a == k0)


def valid(h) -> bool:
    return h.size > 0 and not has_isolated_edge(h)


def atlas_patterns(max_order=7):
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() <= max_order:
            h = from_nx(g)
            if valid(h):
                yield h


class TestEdgeWeights:
    def test_k2(self):
        k2 = clique(2)
        assert wt_cp(k2, (0, 1)) == 0
        assert wt0(k2, (0, 1)) == 0
        assert wt1(k2, (0, 1)) is None

    def test_paw_cp(self):
        # triangle 0-1-2 with a pendant at 0: edge (1,2) avoids the pendant vertex
        assert wt_cp(paw(), (1, 2)) == 2

    def test_double_star_edges(self):
        h = double_star(4, 5)
        assert (wt0(h, (0, 2)), wt1(h, (0, 2))) == (3, 5)
        assert (wt0(h, (0, 1)), wt1(h, (0, 1))) == (4, 1)

    def test_not_an_edge(self):
        for fn in (wt_cp, wt0, wt1):
            with pytest.raises(GraphError):
                fn(path(3), (0, 2))

    @given(bipartite_graphs())
    def test_triangle_free_reduction(self, h):
        assume(valid(h))
        for e in h.edges():
            assert wt_cp(h, e) == wt0(h, e)


class TestSummary:
    @pytest.mark.parametrize("s,t", [(s, t) for t in range(3, 9) for s in range(2, t)])
    def test_double_stars(self, s, t):
        w = weight_summary(double_star(s, t))
        assert (w.k0, w.k1, w.k0p, w.k1p) == (s - 1, 1, t - 1, t)

    @pytest.mark.parametrize("s", range(1, 6))
    def test_caterpillars(self, s):
        h = caterpillar_p5(s)
        for e in h.edges():
            assert (wt0(h, e), wt1(h, e)) == (s + 1, s + 2)
        w = weight_summary(h)
        assert (w.k0, w.k1, w.k0p, w.k1p) == (s + 1, s + 2, s + 1, s + 2)

    def test_path3(self):
        w = weight_summary(path(3))
        assert (w.k0, w.k1, w.k0p, w.k1p) == (1, 1, 1, 1)

    def test_paw(self):
        w = weight_summary(paw())
        assert (w.k0, w.k1, w.k0p, w.k1p, w.min_wt_cp) == (1, 2, 2, 3, 2)

    def test_witnesses_are_least_edges(self):
        w = weight_summary(double_star(4, 5))
        assert w.witnesses["k0"] == (0, 2)
        assert w.witnesses["k1"] == (0, 1)
        assert w.witnesses["k1p"] == (0, 2)
        assert w.witnesses["k0p"] == (0, 1)

    def test_errors(self):
        with pytest.raises(PatternError, match="no edges"):
            weight_summary(disjoint_union(path(1), path(1)))
        with pytest.raises(PatternError, match="isolated edge"):
            weight_summary(clique(2))

    def test_isolated_vertices_accepted(self):
        w = weight_summary(disjoint_union(path(3), path(1)))
        assert w.k0 == 1

    def test_json_shape(self):
        d = weight_summary(path(3)).to_dict()
        assert set(d) == {"k0", "k1", "k0p", "k1p", "min_wt_cp", "order", "witnesses", "per_edge"}
        assert d["per_edge"][0] == {"edge": [0, 1], "wt_cp": 1, "wt0": 1, "wt1": 1}


class TestIsolatedEdge:
    def test_examples(self):
        assert has_isolated_edge(clique(2))
        assert not has_isolated_edge(path(3))
        assert has_isolated_edge(disjoint_union(clique(2), clique(3)))


class TestInvariants:
    def test_exhaustive_small_patterns(self):
        count = 0
        for h in atlas_patterns():
            w = weight_summary(h)
            assert (w.k0, w.k1, w.k0p, w.k1p) == naive_constants(h)
            assert w.k0 <= w.k0p and w.k1 <= w.k1p
            assert (w.k0 < w.k0p) == (w.k1 < w.k1p)
            count += 1
        assert count > 900

    @given(graphs(max_order=10))
    def test_random_patterns(self, h):
        assume(valid(h))
        w = weight_summary(h)
        assert (w.k0, w.k1, w.k0p, w.k1p) == naive_constants(h)
        assert (w.k0 < w.k0p) == (w.k1 < w.k1p)
        if is_triangle_free(h):
            assert w.min_wt_cp == w.k0

    @given(graphs(min_order=3, max_order=9).flatmap(
        lambda g: permutations_of(g.order).map(lambda p: (g, p))))
    def test_relabel_invariance(self, pair):
        h, perm = pair
        assume(valid(h))
        a, b = weight_summary(h), weight_summary(h.relabel(perm))
        assert (a.k0, a.k1, a.k0p, a.k1p, a.min_wt_cp) == (b.k0, b.k1, b.k0p, b.k1p, b.min_wt_cp)
