"""Edge weight functions of a pattern graph and the constants derived from them.

For an edge ``uv`` of a pattern ``H``:

* ``wt_cp(uv) = 2|N(u) & N(v)| + |N(v) - N(u)| - 1`` with ``d(u) <= d(v)``
* ``wt0(uv) = max(d(u), d(v)) - 1``
* ``wt1(uv) = max degree over the edge neighborhood``, undefined when the
  edge neighborhood is empty (an isolated edge).

``k0``/``k1`` are the minima of ``wt0``/``wt1``; ``k0p`` is the least ``wt0``
among edges attaining ``k1`` and ``k1p`` the least ``wt1`` among edges
attaining ``k0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Edge, Graph, GraphError, edge_neighborhood_mask, iter_bits


class PatternError(ValueError):
    """The pattern is outside the regime the weight machinery covers."""


@dataclass(frozen=True)
class EdgeWeights:
    edge: Edge
    wt_cp: int
    wt0: int
    wt1: Optional[int]


@dataclass(frozen=True)
class WeightSummary:
    k0: int
    k1: int
    k0p: int
    k1p: int
    min_wt_cp: int
    order: int
    per_edge: tuple[EdgeWeights, ...]
    witnesses: dict[str, Edge] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "k0": self.k0,
            "k1": self.k1,
            "k0p": self.k0p,
            "k1p": self.k1p,
            "min_wt_cp": self.min_wt_cp,
            "order": self.order,
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
            "per_edge": [
                {"edge": list(e.edge), "wt_cp": e.wt_cp, "wt0": e.wt0, "wt1": e.wt1}
                for e in self.per_edge
            ],
        }


def _require_edge(h: Graph, u: int, v: int) -> None:
    if not (0 <= u < h.order and 0 <= v < h.order) or not h.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the pattern")


def wt_cp(h: Graph, edge: Edge) -> int:
    u, v = edge
    _require_edge(h, u, v)
    if h.degree(u) > h.degree(v):
        u, v = v, u
    nu, nv = h.row(u), h.row(v)
    return 2 * (nu & nv).bit_count() + (nv & ~nu).bit_count() - 1


def wt0(h: Graph, edge: Edge) -> int:
    u, v = edge
    _require_edge(h, u, v)
    return max(h.degree(u), h.degree(v)) - 1


def wt1(h: Graph, edge: Edge) -> Optional[int]:
    u, v = edge
    _require_edge(h, u, v)
    nbhd = edge_neighborhood_mask(h, u, v)
    if not nbhd:
        return None
    return max(h.degree(w) for w in iter_bits(nbhd))


def has_isolated_edge(h: Graph) -> bool:
    return any(not edge_neighborhood_mask(h, u, v) for u, v in h.edges())


def edge_weights(h: Graph) -> list[EdgeWeights]:
    return [EdgeWeights(e, wt_cp(h, e), wt0(h, e), wt1(h, e)) for e in h.edges()]


def weight_summary(h: Graph) -> WeightSummary:
    """Compute ``k0, k1, k0p, k1p`` and the least ``wt_cp`` of ``h``.

    Ties between witness edges go to the lexicographically least pair, which
    is automatic because edges are scanned in ascending order.
    """
    if h.size == 0:
        raise PatternError("pattern has no edges")
    table = edge_weights(h)
    isolated = [e.edge for e in table if e.wt1 is None]
    if isolated:
        raise PatternError(
            f"pattern has an isolated edge {isolated[0]}; its saturation number is O(1)"
        )

    def argmin(rows, key):
        best = min(key(r) for r in rows)
        return best, next(r.edge for r in rows if key(r) == best)

    k0, w_k0 = argmin(table, lambda r: r.wt0)
    k1, w_k1 = argmin(table, lambda r: r.wt1)
    k0p, w_k0p = argmin([r for r in table if r.wt1 == k1], lambda r: r.wt0)
    k1p, w_k1p = argmin([r for r in table if r.wt0 == k0], lambda r: r.wt1)
    min_cp, w_cp = argmin(table, lambda r: r.wt_cp)
    return WeightSummary(
        k0=k0, k1=k1, k0p=k0p, k1p=k1p, min_wt_cp=min_cp, order=h.order,
        per_edge=tuple(table),
        witnesses={"k0": w_k0, "k1": w_k1, "k0p": w_k0p, "k1p": w_k1p, "wt_cp": w_cp},
    )
