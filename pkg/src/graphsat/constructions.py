"""Pattern families and explicit saturated graphs.

The two large constructions share one layout: a set ``L`` of hubs, each
owning a class of low-degree leaves; classes are paired into *blocks* that
carry a regular bipartite graph; leftover vertices ``R`` are absorbed by
enlarging the two classes of the first block; a clique ``B`` sits on the
highest indices. When the leftover count is odd, one vertex ``v`` is wired
separately (one or two hub neighbors plus edge swaps).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil
from typing import Optional

from .bounds import double_star_threshold, ehm_saturation_number, shorty_threshold, warmup_min_avg_degree
from .graph import (Edge, Graph, GraphError, circulant, complete_multipartite, from_edge_list,
                    is_clique, iter_bits, regular_bipartite_edges)


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class Role:
    kind: str  # "L", "S-leaf", "B", "R", "special-v"
    cls: Optional[int] = None  # index of the owning hub's class
    partner: Optional[int] = None  # partner hub index (hubs in matched pairs only)

    def label(self) -> str:
        parts = [self.kind]
        if self.cls is not None:
            parts.append(f"c{self.cls}")
        if self.partner is not None:
            parts.append(f"p{self.partner}")
        return ":".join(parts)


@dataclass
class ConstructionReport:
    name: str
    params: dict
    graph: Graph
    expected_size: int
    role_labels: dict[int, Role] = field(default_factory=dict)
    properties_checked: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.graph.size == self.expected_size and all(self.properties_checked.values())

    def labels(self) -> dict[int, str]:
        return {v: r.label() for v, r in self.role_labels.items()}

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "order": self.graph.order,
            "size": self.graph.size,
            "expected_size": self.expected_size,
            "properties_checked": self.properties_checked,
        }


def _audit(report: ConstructionReport) -> ConstructionReport:
    if report.graph.size != report.expected_size:
        raise ConstructionError(
            f"{report.name}{report.params}: built {report.graph.size} edges, "
            f"expected {report.expected_size}")
    failed = [k for k, v in report.properties_checked.items() if not v]
    if failed:
        raise ConstructionError(f"{report.name}{report.params}: property audit failed: {failed}")
    return report


# --- pattern families -----------------------------------------------------

def double_star(s: int, t: int) -> Graph:
    """``S_{s,t}``: centers 0 (degree s) and 1 (degree t); leaves of 0, then leaves of 1."""
    if s < 1 or t < 1:
        raise GraphError("double star needs s, t >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(s - 1)]
    edges += [(1, s + 1 + i) for i in range(t - 1)]
    return from_edge_list(s + t, edges)


def caterpillar_p5(s: int) -> Graph:
    """``P_5^s``: spine 0-1-2-3-4 with ``s`` pendants on each of 1, 2, 3."""
    if s < 0:
        raise GraphError("caterpillar needs s >= 0")
    edges = [(i, i + 1) for i in range(4)]
    nxt = 5
    for c in (1, 2, 3):
        for _ in range(s):
            edges.append((c, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def paw() -> Graph:
    """Triangle 0-1-2 with a pendant vertex 3 on vertex 0."""
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


# --- helpers --------------------------------------------------------------

def _has_independent_set(g: Graph, pool: int, w: int, size: int) -> bool:
    """Whether ``pool`` (a vertex mask containing ``w``) holds an independent
    set of ``size`` vertices that contains ``w``."""
    rows = g.rows

    def grow(avail: int, need: int) -> bool:
        if need <= 0:
            return True
        if avail.bit_count() < need:
            return False
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        if not rows[v] & rest:
            return grow(rest, need - 1)
        return grow(rest & ~rows[v], need - 1) or grow(rest, need)

    return grow(pool & ~(1 << w) & ~rows[w], size - 1)


def _pair_blocks(x_classes: list[int], y_classes: list[int]) -> list[tuple[int, int]]:
    """Blocks over matched hub pairs ``(X_j, Y_j)`` that never join partner classes.

    Pairs of double stars get blocks ``(X_j, X_j+1)`` and ``(Y_j, Y_j+1)``.
    An odd count starts with a triple ``(X0,Y2), (Y0,X1), (Y1,X2)``. A single
    double star joins its own two classes.
    """
    q = len(x_classes)
    if q == 1:
        return [(x_classes[0], y_classes[0])]
    blocks = []
    start = 0
    if q % 2:
        x, y = x_classes, y_classes
        blocks += [(x[0], y[2]), (y[0], x[1]), (y[1], x[2])]
        start = 3
    for j in range(start, q, 2):
        blocks.append((x_classes[j], x_classes[j + 1]))
        blocks.append((y_classes[j], y_classes[j + 1]))
    return blocks


# --- saturated double star ------------------------------------------------

def double_star_construction_size(s: int, t: int, n: int) -> int:
    """Edge count the double-star construction must reach on ``n`` vertices."""
    m = 2 * t + 4
    r = (n - s) % m
    if r % 2 == 0:
        val = Fraction(s * (t + 1) * n - s * (t - s + 2) + s * r, m)
    else:
        val = Fraction(s * (t + 1) * (n - 1) - s * (t - s + 2) + s * (r - 1), m) + ceil(Fraction(s, 2))
    if val.denominator != 1:
        raise ConstructionError(f"size formula not integral at s={s}, t={t}, n={n}")
    return int(val)


def saturated_double_star(s: int, t: int, n: int) -> ConstructionReport:
    """An ``S_{s,t}``-saturated graph on ``n`` vertices (``2 <= s < t``)."""
    if s < 2:
        raise ConstructionError("construction needs s >= 2 (leaves of degree s-1 must reach a hub)")
    if s >= t:
        raise ConstructionError(f"s >= t ({s} >= {t})")
    threshold = double_star_threshold(s, t)
    if n < threshold:
        raise ConstructionError(f"n = {n} below threshold {threshold}")
    m = 2 * t + 4
    n_pairs = (n - s) // m
    r = (n - s) % m
    n_hubs = 2 * n_pairs
    r_even = r - (r % 2)

    roles: dict[int, Role] = {}
    edges: list[Edge] = []
    hubs, classes = [], []
    nxt = 0
    for i in range(n_hubs):
        h = nxt
        leaves = list(range(h + 1, h + 2 + t))
        nxt = h + 2 + t
        hubs.append(h)
        classes.append(leaves)
        roles[h] = Role("L", cls=i)
        for w in leaves:
            roles[w] = Role("S-leaf", cls=i)
    R = list(range(nxt, nxt + r))
    nxt += r
    B = list(range(nxt, nxt + s))
    assert nxt + s == n

    blocks = [(2 * j, 2 * j + 1) for j in range(n_pairs)]
    half = r_even // 2
    for c, extra in zip(blocks[0], (R[:half], R[half:r_even])):
        classes[c].extend(extra)
        for w in extra:
            roles[w] = Role("R", cls=c)

    for i, h in enumerate(hubs):
        edges.extend((h, w) for w in classes[i])
    block_edges = {b: regular_bipartite_edges(classes[b[0]], classes[b[1]], s - 2) for b in blocks}
    for b in blocks:
        edges.extend(block_edges[b])
    edges.extend(combinations(B, 2))
    for w in B:
        roles[w] = Role("B")

    if r % 2:
        v = R[-1]
        roles[v] = Role("special-v")
        v_hubs = [0] if s % 2 == 0 else [0, 1]
        edges.extend((hubs[c], v) for c in v_hubs)
        swaps = s // 2 - 1
        # blocks away from v's hubs first, then the rest; one swap per block
        ordered = ([b for b in blocks if not set(b) & set(v_hubs)]
                   + [b for b in blocks if set(b) & set(v_hubs)])
        if swaps > len(ordered):
            raise ConstructionError("not enough blocks for the odd-remainder swaps")
        edge_set = set(edges)
        for b in ordered[:swaps]:
            a, c = block_edges[b][0]
            edge_set.discard((a, c))
            edge_set.update({(a, v), (c, v)})
        edges = sorted(edge_set)

    g = from_edge_list(n, edges)
    report = ConstructionReport(
        "saturated-double-star", {"s": s, "t": t, "n": n}, g,
        double_star_construction_size(s, t, n), roles,
    )
    report.properties_checked = _audit_double_star(g, roles, s, t)
    return _audit(report)


def _audit_double_star(g: Graph, roles: dict[int, Role], s: int, t: int) -> dict[str, bool]:
    L = [v for v in range(g.order) if roles[v].kind == "L"]
    S = [v for v in range(g.order) if roles[v].kind != "L"]
    B = [v for v in range(g.order) if roles[v].kind == "B"]
    Lmask = sum(1 << v for v in L)
    Smask = sum(1 << v for v in S)
    prop_i = (all(g.degree(v) == s - 1 for v in S) and all(g.degree(v) >= t + 1 for v in L))
    prop_ii = all(
        g.row(h) & ~Smask == 0
        and all(_has_independent_set(g, g.row(h), w, t + 1) for w in iter_bits(g.row(h)))
        for h in L
    )
    hub_counts = [(g.row(v) & Lmask).bit_count() for v in S]
    Bset = set(B)
    prop_iii = (len(B) == s and is_clique(g, B)
                and all(c >= 1 for v, c in zip(S, hub_counts) if v not in Bset)
                and sum(1 for c in hub_counts if c >= 2) <= 1)
    return {"i": prop_i, "ii": prop_ii, "iii": prop_iii}


# --- saturated shorty -----------------------------------------------------

def shorty_construction_size(s: int, n: int) -> int:
    """Edge count the caterpillar construction must reach on ``n`` vertices."""
    m = 2 * s + 4
    r = (n - s - 1) % m
    slope = s + Fraction(2, s + 2)
    if r % 2 == 0:
        val = slope * n / 2 - Fraction(s + 1, s + 2) + Fraction(r * s, m)
    else:
        val = (slope * (n - 1) / 2 - Fraction(s + 1, s + 2) + Fraction((r - 1) * s, m)
               + (s + 2) // 2)
    if val.denominator != 1:
        raise ConstructionError(f"size formula not integral at s={s}, n={n}")
    return int(val)


def saturated_shorty(s: int, n: int, relaxed: bool = False) -> ConstructionReport:
    """A ``P_5^{s-1}``-saturated graph on ``n`` vertices (``s >= 1``).

    For odd remainders the extra vertex ``v`` is wired by edge swaps. With
    only two or three double stars and ``s >= 5`` no swap choice keeps the
    partner condition (ii); those inputs raise unless ``relaxed`` is set,
    in which case (ii) is checked away from ``v`` and saturation is verified
    directly instead.
    """
    if s < 1:
        raise ConstructionError("s must be at least 1")
    threshold = shorty_threshold(s)
    if n < threshold:
        raise ConstructionError(f"n = {n} below threshold {threshold}")
    m = 2 * s + 4
    n_stars = (n - s - 1) // m
    r = (n - s - 1) % m
    n_hubs = 2 * n_stars
    r_even = r - (r % 2)

    roles: dict[int, Role] = {}
    edges: list[Edge] = []
    hubs, classes = [], []
    nxt = 0
    for i in range(n_hubs):
        h = nxt
        hubs.append(h)
        classes.append(list(range(h + 1, h + 2 + s)))
        nxt = h + 2 + s
    partner = [i ^ 1 for i in range(n_hubs)]
    for i, h in enumerate(hubs):
        roles[h] = Role("L", cls=i, partner=partner[i])
        for w in classes[i]:
            roles[w] = Role("S-leaf", cls=i)
    R = list(range(nxt, nxt + r))
    nxt += r
    B = list(range(nxt, nxt + s + 1))
    assert nxt + s + 1 == n

    blocks = _pair_blocks(list(range(0, n_hubs, 2)), list(range(1, n_hubs, 2)))
    half = r_even // 2
    for c, extra in zip(blocks[0], (R[:half], R[half:r_even])):
        classes[c].extend(extra)
        for w in extra:
            roles[w] = Role("R", cls=c)
    cls_of = {w: i for i, members in enumerate(classes) for w in members}
    used_relaxed = False

    for j in range(n_stars):
        edges.append((hubs[2 * j], hubs[2 * j + 1]))
    for i, h in enumerate(hubs):
        edges.extend((h, w) for w in classes[i])
    block_edges = {b: regular_bipartite_edges(classes[b[0]], classes[b[1]], s - 1) for b in blocks}
    for b in blocks:
        edges.extend(block_edges[b])
    edges.extend(combinations(B, 2))
    for w in B:
        roles[w] = Role("B")

    if r % 2:
        v = R[-1]
        roles[v] = Role("special-v")
        plan = _shorty_v_plan(s, n_hubs, partner, classes, blocks, block_edges, relaxed)
        if plan is None:
            raise ConstructionError(
                f"s={s}, n={n}: no edge swaps for the odd-remainder vertex keep property (ii); "
                "pass relaxed=True to allow swaps next to a partner class")
        v_hubs, chosen = plan
        edges.extend((hubs[c], v) for c in v_hubs)
        edge_set = set(edges)
        for a, c in chosen:
            edge_set.discard((a, c))
            edge_set.update({(a, v), (c, v)})
        edges = sorted(edge_set)
        used_relaxed = any(cls_of[a] in {partner[h] for h in v_hubs} or cls_of[c] in {partner[h] for h in v_hubs}
                           for a, c in chosen)

    g = from_edge_list(n, edges)
    report = ConstructionReport(
        "saturated-shorty", {"s": s, "n": n}, g, shorty_construction_size(s, n), roles,
    )
    report.properties_checked = _audit_shorty(g, roles, s, skip_v_in_ii=used_relaxed)
    if used_relaxed:
        from .saturation import is_h_saturated
        report.properties_checked["saturated"] = is_h_saturated(g, caterpillar_p5(s - 1)).is_saturated
    return _audit(report)


def _shorty_v_plan(s: int, n_hubs: int, partner: list[int], classes: list[list[int]],
                   blocks: list[tuple[int, int]], block_edges: dict, relaxed: bool):
    """Pick hub neighbors for ``v`` and the block edges to swap.

    Rules: ``v`` may not touch the class of a partner of its hubs (ii); it
    may take at most ``|class| - s`` neighbors in a class of its own hubs
    (iii); swapped edges form a matching. Blocks are used once each before
    any is reused. Hub choices are tried in order, the proof's default first.
    """
    swaps = (s - 1) // 2
    if s % 2:
        options = [[c] for c in range(n_hubs)]
    else:
        options = [[a, b] for a in range(n_hubs) for b in range(a + 1, n_hubs) if partner[a] != b]
        options.sort(key=lambda o: o != [0, 2])
    cls_of = {w: i for i, members in enumerate(classes) for w in members}

    def attempt(v_hubs, allow_partner):
        forbidden = set() if allow_partner else {partner[c] for c in v_hubs}
        room = {c: len(classes[c]) - s for c in v_hubs}
        usable = [b for b in blocks if not set(b) & forbidden]
        used: set[int] = set()
        chosen: list[Edge] = []
        progress = True
        while len(chosen) < swaps and progress:
            progress = False
            for b in usable:
                if len(chosen) == swaps:
                    break
                for a, c in block_edges[b]:
                    own = [cls_of[x] for x in (a, c) if cls_of[x] in room]
                    if a in used or c in used or any(room[k] < own.count(k) for k in own):
                        continue
                    for k in own:
                        room[k] -= 1
                    used.update((a, c))
                    chosen.append((a, c))
                    progress = True
                    break
        return chosen if len(chosen) == swaps else None

    for v_hubs in options:
        chosen = attempt(v_hubs, False)
        if chosen is not None:
            return v_hubs, chosen
    if relaxed:
        v_hubs = options[0]
        chosen = attempt(v_hubs, True)
        if chosen is not None:
            return v_hubs, chosen
    return None


def _audit_shorty(g: Graph, roles: dict[int, Role], s: int, skip_v_in_ii: bool = False) -> dict[str, bool]:
    L = [v for v in range(g.order) if roles[v].kind == "L"]
    S = [v for v in range(g.order) if roles[v].kind != "L"]
    B = [v for v in range(g.order) if roles[v].kind == "B"]
    Lmask = sum(1 << v for v in L)
    Smask = sum(1 << v for v in S)
    prop_i = all(g.degree(v) == s for v in S) and all(g.degree(v) >= s + 2 for v in L)
    prop_ii = True
    for u in L:
        hub_nbrs = list(iter_bits(g.row(u) & Lmask))
        if len(hub_nbrs) != 1:
            prop_ii = False
            break
        w = hub_nbrs[0]
        su, sw = g.row(u) & Smask, g.row(w) & Smask
        if skip_v_in_ii:
            vmask = sum(1 << x for x, r in roles.items() if r.kind == "special-v")
            su, sw = su & ~vmask, sw & ~vmask
        if g.row(u) & g.row(w) or any(g.row(a) & sw for a in iter_bits(su)):
            prop_ii = False
            break
    prop_iii = all(
        _has_independent_set(g, g.row(h) & Smask, w, s + 1)
        for h in L for w in iter_bits(g.row(h) & Smask)
    )
    hub_counts = [(g.row(v) & Lmask).bit_count() for v in S]
    Bset = set(B)
    prop_iv = (len(B) == s + 1 and is_clique(g, B)
               and all(c >= 1 for v, c in zip(S, hub_counts) if v not in Bset)
               and sum(1 for c in hub_counts if c >= 2) <= 1)
    return {"i": prop_i, "ii": prop_ii, "iii": prop_iii, "iv": prop_iv}


# --- minimum-average-degree examples --------------------------------------

def _leaf_regular_edges(classes: list[list[int]], r: int, blocks: list[tuple[int, int]]) -> list[Edge]:
    return [e for a, b in blocks for e in regular_bipartite_edges(classes[a], classes[b], r)]


def _kdelta_properties(g: Graph, delta: int, k: int, strengthened: bool) -> dict[str, bool]:
    deg = g.degrees()
    avg = Fraction(sum(deg), g.order)
    low_ok = all(any(deg[w] >= k for w in g.neighbors(v)) for v in range(g.order) if deg[v] == delta)
    props = {
        "min_degree": min(deg) == delta,
        "low_vertices_see_degree_k": low_ok,
        "average_degree_meets_bound": avg == warmup_min_avg_degree(delta, k, strengthened),
    }
    if strengthened:
        props["degrees_delta_or_k"] = set(deg) <= {delta, k}
        props["one_high_neighbor_each"] = all(
            sum(1 for w in g.neighbors(v) if deg[w] == k) == 1 for v in range(g.order))
    return props


def example_kdelta_star(delta: int, k: int, ell: int) -> ConstructionReport:
    """``ell`` copies of ``K_{1,k}`` with a ``(delta-1)``-regular graph on the leaves."""
    if not 0 < delta < k:
        raise ConstructionError(f"need 0 < delta < k, got delta={delta}, k={k}")
    if ell < 1:
        raise ConstructionError("ell must be positive")
    r = delta - 1
    if ell % 2 and k % 2 and r % 2:
        raise ConstructionError("delta-1, k and ell all odd: no regular leaf graph exists")
    n = (k + 1) * ell
    roles: dict[int, Role] = {}
    edges: list[Edge] = []
    classes = []
    for i in range(ell):
        h = i * (k + 1)
        classes.append(list(range(h + 1, h + k + 1)))
        roles[h] = Role("L", cls=i)
        for w in classes[-1]:
            roles[w] = Role("S-leaf", cls=i)
        edges.extend((h, w) for w in classes[-1])
    if ell % 2 == 0:
        edges += _leaf_regular_edges(classes, r, [(i, i + 1) for i in range(0, ell, 2)])
    elif r:
        # interleave stars so consecutive positions sit in different stars
        order = [classes[i][j] for j in range(k) for i in range(ell)]
        N = len(order)
        offsets = list(range(1, r // 2 + 1)) + ([N // 2] if r % 2 else [])
        c = circulant(N, offsets)
        edges += [(order[a], order[b]) for a, b in c.edges()]
    g = from_edge_list(n, edges)
    expected = (n * delta + ell * (k - delta)) // 2
    report = ConstructionReport("kdelta-star", {"delta": delta, "k": k, "ell": ell}, g,
                                expected, roles, _kdelta_properties(g, delta, k, False))
    return _audit(report)


def example_kdelta_doublestar(delta: int, k: int, ell: int) -> ConstructionReport:
    """``ell`` copies of ``S_{k,k}`` with a ``(delta-1)``-regular graph on the leaves."""
    if not 0 < delta < k:
        raise ConstructionError(f"need 0 < delta < k, got delta={delta}, k={k}")
    if ell < 1:
        raise ConstructionError("ell must be positive")
    n = 2 * k * ell
    roles: dict[int, Role] = {}
    edges: list[Edge] = []
    classes = []
    for i in range(2 * ell):
        h = i * k
        classes.append(list(range(h + 1, h + k)))
        roles[h] = Role("L", cls=i, partner=i ^ 1)
        for w in classes[-1]:
            roles[w] = Role("S-leaf", cls=i)
        edges.extend((h, w) for w in classes[-1])
        if i % 2:
            edges.append((h - k, h))
    blocks = _pair_blocks(list(range(0, 2 * ell, 2)), list(range(1, 2 * ell, 2)))
    edges += _leaf_regular_edges(classes, delta - 1, blocks)
    g = from_edge_list(n, edges)
    expected = ell * ((k - 1) * delta + k)
    report = ConstructionReport("kdelta-doublestar", {"delta": delta, "k": k, "ell": ell}, g,
                                expected, roles, _kdelta_properties(g, delta, k, True))
    return _audit(report)


def ehm_construction(t: int, n: int) -> ConstructionReport:
    """Complete ``t``-partite graph with ``t-1`` singleton parts: the minimum ``K_{t+1}``-saturated graph."""
    if t < 2:
        raise ConstructionError("t must be at least 2")
    if n < t + 1:
        raise ConstructionError(f"n = {n} too small for K_{t + 1}")
    g = complete_multipartite([1] * (t - 1) + [n - t + 1])
    roles = {v: Role("L" if v < t - 1 else "S-leaf") for v in range(n)}
    report = ConstructionReport("ehm", {"t": t, "n": n}, g, ehm_saturation_number(t, n), roles,
                                {"complete_multipartite": True})
    return _audit(report)


FIG4_LABELS = ("z", "z'", "h2", "h3", "l0", "l1", "x", "y", "l20", "l30")


def fig4_gadget() -> Graph:
    """The 10-vertex graph with property (P) for ``k0=2, k1'=3`` that is not ``P_5^1``-saturated.

    Vertex ``i`` carries the name ``FIG4_LABELS[i]``.
    """
    ix = {name: i for i, name in enumerate(FIG4_LABELS)}
    pairs = [("z", "x"), ("z'", "y"), ("h2", "l20"), ("h3", "l30"), ("z", "z'"), ("h2", "h3"),
             ("z", "l0"), ("h2", "l0"), ("z'", "l1"), ("h3", "l1"), ("x", "l20"), ("y", "l30")]
    return from_edge_list(10, [(ix[a], ix[b]) for a, b in pairs])
