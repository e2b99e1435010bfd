"""Subgraph search and the H-freeness / H-saturation verifiers.

Embeddings are *subgraph* embeddings (not induced): an injective map
``phi`` from pattern vertices to host vertices with ``phi(u) phi(v)`` a host
edge for every pattern edge ``uv``.

The search is a plain backtracking over a fixed pattern-vertex order with
three prunings that keep it fast on the tree-like patterns used here:

* candidates are intersected host neighborhoods, filtered by degree;
* false twins (pattern vertices with identical neighborhoods) are mapped in
  increasing host order, removing permutation symmetry;
* degree-1 pattern vertices are deferred and assigned together by bipartite
  matching against their parents' free neighbors.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import networkx as nx

from .graph import Edge, Graph, is_clique, iter_bits, non_edges
from .weights import WeightSummary

Embedding = tuple[int, ...]

_AUTOMORPHISM_CAP = 20000


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]          # pattern vertices handled by backtracking
    preds: tuple[tuple[int, ...], ...]  # for each position, positions of earlier neighbors
    twin_prev: tuple[int, ...]      # position of the previous twin, or -1
    degrees: tuple[int, ...]
    leaves: tuple[tuple[int, int], ...]  # (leaf, parent position)
    isolated: tuple[int, ...]
    n_fixed: int


class Matcher:
    """Reusable search state for one pattern graph."""

    def __init__(self, pattern: Graph):
        self.pattern = pattern
        self.deg = pattern.degrees()
        self.max_degree = max(self.deg, default=0)
        groups: dict[int, list[int]] = {}
        for v, r in enumerate(pattern.rows):
            groups.setdefault(r, []).append(v)
        self.twin_class = [0] * pattern.order
        for members in groups.values():
            for v in members:
                self.twin_class[v] = members[0]
        self._plans: dict[Optional[Edge], _Plan] = {}
        self._anchor_reps: Optional[list[Edge]] = None

    # -- planning ---------------------------------------------------------

    def plan(self, anchor: Optional[Edge] = None) -> _Plan:
        if anchor not in self._plans:
            self._plans[anchor] = self._build_plan(anchor)
        return self._plans[anchor]

    def _build_plan(self, anchor: Optional[Edge]) -> _Plan:
        h, deg = self.pattern, self.deg
        fixed = list(anchor) if anchor else []
        isolated = [v for v in range(h.order) if deg[v] == 0 and v not in fixed]
        leaves = [v for v in range(h.order)
                  if deg[v] == 1 and v not in fixed and deg[h.neighbors(v)[0]] >= 2]
        deferred = set(isolated) | set(leaves)
        order = list(fixed)
        remaining = [v for v in range(h.order) if v not in deferred and v not in fixed]
        placed = set(order)
        while remaining:
            def key(v):
                links = sum(1 for w in h.neighbors(v) if w in placed)
                return (-links, -deg[v], v)
            v = min(remaining, key=key)
            remaining.remove(v)
            order.append(v)
            placed.add(v)
        pos = {v: i for i, v in enumerate(order)}
        preds = tuple(tuple(sorted(pos[w] for w in h.neighbors(v) if pos.get(w, len(order)) < i))
                      for i, v in enumerate(order))
        last_twin: dict[int, int] = {}
        twin_prev = []
        for i, v in enumerate(order):
            if v in fixed:
                twin_prev.append(-1)
                continue
            c = self.twin_class[v]
            twin_prev.append(last_twin.get(c, -1))
            last_twin[c] = i
        leaf_plan = tuple((v, pos[h.neighbors(v)[0]]) for v in leaves)
        return _Plan(tuple(order), preds, tuple(twin_prev),
                     tuple(deg[v] for v in order), leaf_plan, tuple(isolated), len(fixed))

    def anchor_representatives(self) -> list[Edge]:
        """Oriented pattern edges, one per orbit of the automorphism group.

        Orbits are computed on the quotient by false-twin classes (weighted by
        class size), which is small for the patterns of interest. If the
        quotient has too many automorphisms, fall back to one representative
        per pair of twin classes.
        """
        if self._anchor_reps is None:
            self._anchor_reps = self._compute_anchor_reps()
        return self._anchor_reps

    def _compute_anchor_reps(self) -> list[Edge]:
        h = self.pattern
        classes = sorted(set(self.twin_class))
        size = {c: self.twin_class.count(c) for c in classes}
        oriented = sorted({(self.twin_class[u], self.twin_class[v])
                           for a, b in h.edges() for u, v in ((a, b), (b, a))})
        q = nx.Graph()
        for c in classes:
            q.add_node(c, size=size[c])
        q.add_edges_from((a, b) for a, b in oriented if a < b)
        matcher = nx.algorithms.isomorphism.GraphMatcher(
            q, q, node_match=lambda x, y: x["size"] == y["size"])
        seen: set[Edge] = set()
        reps: list[Edge] = []
        autos = []
        for i, m in enumerate(matcher.isomorphisms_iter()):
            if i >= _AUTOMORPHISM_CAP:
                autos = None
                break
            autos.append(m)
        for e in oriented:
            if e in seen:
                continue
            reps.append(e)
            if autos is None:
                seen.add(e)
            else:
                seen.update((m[e[0]], m[e[1]]) for m in autos)
        return reps

    # -- searching --------------------------------------------------------

    def search(self, rows: Sequence[int], order: int, anchor: Optional[Edge] = None,
               target: Optional[Edge] = None, degree_filter: bool = True) -> Optional[Embedding]:
        """Find an embedding into the host given by adjacency ``rows``.

        With ``anchor=(a, b)`` and ``target=(x, y)`` the pattern edge ``ab`` is
        forced onto the host pair ``xy`` (which must be a host edge).
        """
        plan = self.plan(anchor)
        n_pat = self.pattern.order
        if n_pat > order:
            return None
        full = (1 << order) - 1
        host_deg = [r.bit_count() for r in rows]
        if degree_filter:
            deg_mask = [0] * (self.max_degree + 1)
            for v, d in enumerate(host_deg):
                for k in range(min(d, self.max_degree) + 1):
                    deg_mask[k] |= 1 << v
        else:
            deg_mask = [full] * (self.max_degree + 1)
        steps = list(zip(plan.preds, plan.twin_prev, plan.degrees))
        m = len(plan.order)
        img = [0] * m
        used = 0
        if anchor is not None:
            x, y = target
            a, b = anchor
            if not rows[x] >> y & 1 or x == y:
                return None
            if degree_filter and (host_deg[x] < self.deg[a] or host_deg[y] < self.deg[b]):
                return None
            img[0], img[1] = x, y
            used = (1 << x) | (1 << y)
        leaves = plan.leaves
        n_isolated = len(plan.isolated)
        leaf_img: list[int] = []

        def finish(used_mask: int) -> bool:
            nonlocal leaf_img
            if leaves:
                cands = [rows[img[p]] & ~used_mask for _, p in leaves]
                got = _match(cands)
                if got is None:
                    return False
                leaf_img = got
                for v in got:
                    used_mask |= 1 << v
            return (full & ~used_mask).bit_count() >= n_isolated

        def rec(i: int, used_mask: int) -> bool:
            if i == m:
                return finish(used_mask)
            preds, tw, d = steps[i]
            cand = deg_mask[d] & ~used_mask
            for p in preds:
                cand &= rows[img[p]]
            if tw >= 0:
                cand &= ~((2 << img[tw]) - 1)
            while cand:
                low = cand & -cand
                img[i] = low.bit_length() - 1
                if rec(i + 1, used_mask | low):
                    return True
                cand ^= low
            return False

        if not rec(plan.n_fixed, used):
            return None
        phi = [-1] * n_pat
        for i, v in enumerate(plan.order):
            phi[v] = img[i]
        for (v, _), w in zip(leaves, leaf_img):
            phi[v] = w
        taken = 0
        for w in phi:
            if w >= 0:
                taken |= 1 << w
        spare = iter_bits(full & ~taken)
        for v in plan.isolated:
            phi[v] = next(spare)
        return tuple(phi)

    def find_anchored(self, rows: Sequence[int], order: int, x: int, y: int,
                      degree_filter: bool = True) -> Optional[Embedding]:
        """Any embedding using host edge ``xy``, trying each anchor orbit in both orientations."""
        for a, b in self.anchor_representatives():
            for tx, ty in ((x, y), (y, x)):
                phi = self.search(rows, order, (a, b), (tx, ty), degree_filter)
                if phi is not None:
                    return phi
        return None


def _match(cands: list[int]) -> Optional[list[int]]:
    """Distinct representatives for the candidate masks (Kuhn's augmenting paths)."""
    owner: dict[int, int] = {}
    assign = [-1] * len(cands)

    def augment(i: int, seen: list[int]) -> bool:
        c = cands[i] & ~seen[0]
        while c:
            low = c & -c
            c ^= low
            seen[0] |= low
            v = low.bit_length() - 1
            j = owner.get(v)
            if j is None or augment(j, seen):
                owner[v] = i
                assign[i] = v
                return True
        return False

    for i in range(len(cands)):
        if not augment(i, [0]):
            return None
    return assign


@lru_cache(maxsize=64)
def matcher_for(pattern: Graph) -> Matcher:
    return Matcher(pattern)


def _with_edge(g: Graph, x: int, y: int) -> list[int]:
    rows = list(g.rows)
    rows[x] |= 1 << y
    rows[y] |= 1 << x
    return rows


def find_embedding(host: Graph, pattern: Graph,
                   anchor: Optional[tuple[Edge, Edge]] = None) -> Optional[Embedding]:
    """Embedding of ``pattern`` into ``host``, or None.

    ``anchor=((a, b), (x, y))`` forces pattern edge ``ab`` onto host edge
    ``xy`` in exactly that orientation.
    """
    m = matcher_for(pattern)
    if anchor is None:
        return m.search(host.rows, host.order)
    (a, b), (x, y) = anchor
    if not pattern.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not a pattern edge")
    return m.search(host.rows, host.order, (a, b), (x, y))


def is_h_free(g: Graph, h: Graph) -> bool:
    return find_embedding(g, h) is None


@dataclass(frozen=True)
class SaturationVerdict:
    is_free: bool
    is_saturated: bool
    free_witness: Optional[Embedding] = None
    maximality_counterexample: Optional[Edge] = None
    witnesses: dict[Edge, Embedding] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "is_free": self.is_free,
            "is_saturated": self.is_saturated,
            "free_witness": None if self.free_witness is None else list(self.free_witness),
            "maximality_counterexample": (None if self.maximality_counterexample is None
                                          else list(self.maximality_counterexample)),
        }


def _first_failure(args) -> Optional[int]:
    rows, order, pattern, pairs, degree_filter = args
    m = matcher_for(pattern)
    for idx, (x, y) in pairs:
        r = list(rows)
        r[x] |= 1 << y
        r[y] |= 1 << x
        if m.find_anchored(r, order, x, y, degree_filter) is None:
            return idx
    return None


def is_h_saturated(g: Graph, h: Graph, *, prune: bool = True, workers: int = 1,
                   keep_witnesses: bool = False) -> SaturationVerdict:
    """Decide whether ``g`` is H-free and every added edge creates a copy of ``h``.

    ``prune=False`` disables degree filtering in the search (audit mode).
    With ``workers > 1`` the non-edge sweep is split across processes; the
    reported counterexample is always the lowest-indexed failing non-edge.
    """
    m = matcher_for(h)
    witness = m.search(g.rows, g.order, degree_filter=prune)
    if witness is not None:
        return SaturationVerdict(False, False, free_witness=witness)
    pairs = list(enumerate(non_edges(g)))
    if workers > 1 and len(pairs) > 4 * workers:
        chunks = [(g.rows, g.order, h, pairs[i::workers], prune) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            fails = [f for f in pool.map(_first_failure, chunks) if f is not None]
        if fails:
            return SaturationVerdict(True, False, maximality_counterexample=pairs[min(fails)][1])
        return SaturationVerdict(True, True)
    found: dict[Edge, Embedding] = {}
    for _, (x, y) in pairs:
        phi = m.find_anchored(_with_edge(g, x, y), g.order, x, y, prune)
        if phi is None:
            return SaturationVerdict(True, False, maximality_counterexample=(x, y))
        if keep_witnesses:
            found[(x, y)] = phi
    return SaturationVerdict(True, True, witnesses=found)


# --- structural checks ----------------------------------------------------

@dataclass(frozen=True)
class PropertyPResult:
    holds: bool
    counterexample: Optional[Edge] = None

    def __bool__(self) -> bool:
        return self.holds


def _p_side(g: Graph, x: int, y: int, k1p: int) -> bool:
    blocked = g.row(x) | (1 << y)
    return any((g.row(z) & ~blocked).bit_count() >= k1p for z in iter_bits(g.row(x)))


def satisfies_property_p(g: Graph, k0: int, k1p: int) -> PropertyPResult:
    """Every nonadjacent pair of vertices of degree at most ``k0`` has, on one
    side, a neighbor ``z`` of ``x`` with ``|N(z) - (N(x) + y)| >= k1p``."""
    low = [v for v in range(g.order) if g.degree(v) <= k0]
    for i, x in enumerate(low):
        for y in low[i + 1:]:
            if g.has_edge(x, y):
                continue
            if not (_p_side(g, x, y, k1p) or _p_side(g, y, x, k1p)):
                return PropertyPResult(False, (x, y))
    return PropertyPResult(True)


def _high_neighbors(g: Graph, v: int, threshold: int) -> list[int]:
    return [w for w in g.neighbors(v) if g.degree(w) >= threshold]


def check_clique_propositions(g: Graph, summary: WeightSummary,
                              triangle_free: bool) -> dict[str, Optional[bool]]:
    """Evaluate the vertex sets that must be cliques in an H-saturated graph.

    Keys map to None when the corresponding statement does not apply.
    """
    k0, k1, k1p = summary.k0, summary.k1, summary.k1p
    deg = g.degrees()
    low = [v for v in range(g.order) if deg[v] < k0]
    no_k1 = [v for v in range(g.order) if not _high_neighbors(g, v, k1)]
    low_no_k1p = [v for v in range(g.order)
                  if deg[v] <= k0 and not _high_neighbors(g, v, k1p)]
    out: dict[str, Optional[bool]] = {
        "low_degree": is_clique(g, low),
        "no_k1_neighbor": is_clique(g, no_k1),
        "low_degree_no_k1p_neighbor": is_clique(g, low_no_k1p),
        "triangle_free_low_degree": None,
    }
    if triangle_free and k0 < k1p:
        special = []
        for v in range(g.order):
            if deg[v] > k0:
                continue
            high = _high_neighbors(g, v, k1p)
            if not high:
                special.append(v)
            elif len(high) == 1 and deg[high[0]] == k1p and g.row(v) & g.row(high[0]):
                special.append(v)
        out["triangle_free_low_degree"] = is_clique(g, special)
    return out


@dataclass(frozen=True)
class DegreePartition:
    S: frozenset[int]
    M: frozenset[int]
    L: frozenset[int]
    XL: frozenset[int]
    d_L: Fraction
    d_XL: Fraction
    clique_A: frozenset[int]
    clique_B: frozenset[int]


def _avg(g: Graph, vs) -> Fraction:
    vs = list(vs)
    return Fraction(sum(g.degree(v) for v in vs), len(vs)) if vs else Fraction(0)


def degree_partition(g: Graph, k0: int, k1p: int, xl_threshold_strict: bool = True,
                     k0p: Optional[int] = None) -> DegreePartition:
    """Split vertices into low (S), middle (M), high (L) and extra-high (XL) degree.

    ``xl_threshold_strict`` puts degree exactly ``k1p`` in L and anything
    larger in XL. Otherwise L holds degrees in ``[k1p, k0p)`` and XL degrees
    ``>= k0p``; with no ``k0p`` every high vertex lands in L.
    """
    deg = g.degrees()
    V = range(g.order)
    S = [v for v in V if deg[v] <= k0]
    M = [v for v in V if k0 < deg[v] < k1p]
    if xl_threshold_strict:
        L = [v for v in V if deg[v] == k1p and deg[v] > k0]
        XL = [v for v in V if deg[v] > k1p and deg[v] > k0]
    elif k0p is not None:
        L = [v for v in V if k1p <= deg[v] < k0p and deg[v] > k0]
        XL = [v for v in V if deg[v] >= max(k0p, k1p) and deg[v] > k0]
    else:
        L = [v for v in V if deg[v] >= k1p and deg[v] > k0]
        XL = []
    A = [v for v in V if deg[v] < k0]
    if xl_threshold_strict:
        B = []
        for v in S:
            if v in A:
                continue
            high = _high_neighbors(g, v, k1p)
            if not high or (len(high) == 1 and deg[high[0]] == k1p and g.row(v) & g.row(high[0])):
                B.append(v)
    else:
        B = [v for v in S if v not in A and not _high_neighbors(g, v, k1p)]
    return DegreePartition(frozenset(S), frozenset(M), frozenset(L), frozenset(XL),
                           _avg(g, L), _avg(g, XL), frozenset(A), frozenset(B))
