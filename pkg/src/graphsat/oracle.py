"""Exhaustive ground truth for small orders: canonical forms, isomorphism-class
enumeration and brute-force saturation numbers."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil
from typing import Iterator, Optional, Sequence

from .bounds import BoundError, all_lower_bounds, best_lower_bound, ehm_saturation_number
from .graph import Graph, GraphError, emit_graph6, is_clique
from .saturation import is_h_saturated
from .weights import PatternError

MAX_ORDER = 9


class OracleError(ValueError):
    pass


def _check_order(n: int) -> None:
    if n < 0 or n > MAX_ORDER:
        raise OracleError(f"order {n} outside the supported range 0..{MAX_ORDER}")


# --- canonical form -------------------------------------------------------

def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbor counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                groups.setdefault(tuple((rows[v] & m).bit_count() for m in masks), []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not changed:
            return cells


def _code(rows: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        ri = rows[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((ri >> order[j]) & 1)
    return code


def _twins(rows: Sequence[int], u: int, v: int) -> bool:
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order maximising the upper-triangle adjacency code.

    Individualization-refinement search; vertices that are twins of an
    already tried vertex in the same cell are skipped (swapping twins is an
    automorphism fixing the current partition).
    """
    _check_order(g.order)
    rows = g.rows
    best_code = -1
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(rows, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(rows, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(rows, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if g.order:
        search([list(range(g.order))])
    return best_order


def canonical_form(g: Graph) -> bytes:
    """A byte string shared exactly by isomorphic graphs (graph6 of the canonical relabeling)."""
    order = canonical_order(g)
    perm = [0] * g.order
    for new, old in enumerate(order):
        perm[old] = new
    return emit_graph6(g.relabel(perm))


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.order
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


# --- enumeration ----------------------------------------------------------

@lru_cache(maxsize=None)
def _level(n: int, m: int) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs of order ``n`` and size ``m``."""
    if m == 0:
        return (Graph(n, [0] * n),)
    seen: dict[bytes, Graph] = {}
    for g in _level(n, m - 1):
        rows = g.rows
        for u in range(n):
            for v in range(u + 1, n):
                if (rows[u] >> v) & 1:
                    continue
                r = list(rows)
                r[u] |= 1 << v
                r[v] |= 1 << u
                h = canonical_graph(Graph(n, r))
                key = emit_graph6(h)
                if key not in seen:
                    seen[key] = h
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(n: int, edge_count: int) -> Iterator[Graph]:
    """One representative per isomorphism class of order ``n`` and size ``edge_count``.

    Representatives are canonically labelled and yielded in canonical-form order.
    """
    _check_order(n)
    if edge_count < 0 or edge_count > n * (n - 1) // 2:
        return iter(())
    if edge_count > n * (n - 1) // 4:
        # complements of the sparse side are cheaper to reach
        return iter(sorted((canonical_graph(g.complement()) for g in _level(n, n * (n - 1) // 2 - edge_count)),
                           key=emit_graph6))
    return iter(_level(n, edge_count))


def count_graphs(n: int) -> int:
    """Number of isomorphism classes of order ``n``, summed over all sizes."""
    _check_order(n)
    return sum(sum(1 for _ in enumerate_graphs(n, m)) for m in range(n * (n - 1) // 2 + 1))


# --- saturation numbers ---------------------------------------------------

@dataclass
class SatResult:
    n: int
    pattern: Graph
    sat_value: int
    witnesses: list[Graph]
    graphs_examined: int
    start_m: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": emit_graph6(self.pattern).decode(),
            "sat_value": self.sat_value,
            "witnesses": [emit_graph6(w).decode() for w in self.witnesses],
            "graphs_examined": self.graphs_examined,
            "start_m": self.start_m,
        }


def _saturated_indices(args) -> list[int]:
    graphs, h = args
    return [i for i, g in graphs if is_h_saturated(g, h).is_saturated]


def sweep_start(n: int, h: Graph) -> int:
    """First edge count the default sweep examines: the best explicit lower bound, or 0."""
    try:
        return max(0, ceil(best_lower_bound(h, n).value))
    except (PatternError, BoundError, GraphError):
        return 0


def brute_force_sat(n: int, h: Graph, edge_cap: Optional[int] = None, *, audit: bool = False,
                    workers: int = 1) -> SatResult:
    """Smallest size of an ``h``-saturated graph of order ``n``, by exhaustive search.

    Edge counts are swept upward; every isomorphism class at each count is
    tested. By default the sweep starts at the best lower bound; ``audit``
    starts it at 0 so the result does not lean on the bound being tested.
    """
    _check_order(n)
    if h.size == 0:
        raise OracleError("pattern has no edges")
    if n < h.order:
        raise OracleError(f"n = {n} is below the pattern order {h.order}")
    top = n * (n - 1) // 2
    cap = top if edge_cap is None else min(edge_cap, top)
    start = 0 if audit else sweep_start(n, h)
    examined = 0
    for m in range(start, cap + 1):
        reps = list(enumerate(enumerate_graphs(n, m)))
        examined += len(reps)
        if workers > 1 and len(reps) > workers:
            chunks = [(reps[i::workers], h) for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                hits = sorted(i for part in pool.map(_saturated_indices, chunks) for i in part)
        else:
            hits = _saturated_indices((reps, h))
        if hits:
            return SatResult(n, h, m, [reps[i][1] for i in hits], examined, start)
    raise OracleError(f"no {emit_graph6(h).decode()}-saturated graph on {n} vertices "
                      f"with at most {cap} edges")


# --- soundness audit ------------------------------------------------------

def recognize_double_star(h: Graph) -> Optional[tuple[int, int]]:
    """``(s, t)`` with ``s <= t`` if ``h`` is a double star ``S_{s,t}``."""
    if h.size != h.order - 1 or h.order < 2:
        return None
    deg = h.degrees()
    centers = [v for v in range(h.order) if deg[v] > 1]
    if h.order == 2:
        return (1, 1)
    if len(centers) == 1:
        c = centers[0]
        return (1, deg[c]) if deg[c] == h.order - 1 else None
    if len(centers) == 2 and h.has_edge(*centers) and 0 not in deg:
        s, t = sorted(deg[c] for c in centers)
        return (s, t)
    return None


def recognize_caterpillar_p5(h: Graph) -> Optional[int]:
    """``s`` if ``h`` is the caterpillar ``P_5^s``."""
    if h.size != h.order - 1 or (h.order - 5) % 3 or h.order < 5:
        return None
    s = (h.order - 5) // 3
    from .constructions import caterpillar_p5
    return s if canonical_form(h) == canonical_form(caterpillar_p5(s)) else None


def construction_upper_bounds(h: Graph, n: int) -> dict[str, int]:
    """Sizes of the explicit saturated constructions that apply to ``h`` at order ``n``."""
    from .constructions import (ConstructionError, saturated_double_star,
                                saturated_shorty)
    out: dict[str, int] = {}
    if h.order >= 3 and is_clique(h, range(h.order)) and n >= h.order:
        out["ehm"] = ehm_saturation_number(h.order - 1, n)
    ds = recognize_double_star(h)
    if ds is not None and ds[0] >= 2 and ds[0] < ds[1]:
        try:
            out["saturated-double-star"] = saturated_double_star(ds[0], ds[1], n).graph.size
        except ConstructionError:
            pass
    cat = recognize_caterpillar_p5(h)
    if cat is not None:
        try:
            out["saturated-shorty"] = saturated_shorty(cat + 1, n).graph.size
        except ConstructionError:
            pass
    return out


@dataclass
class AuditRow:
    pattern: str
    n: int
    sat_value: int
    lower_bounds: dict[str, int]
    upper_bounds: dict[str, int]
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern, "n": self.n, "sat_value": self.sat_value,
            "lower_bounds": self.lower_bounds, "upper_bounds": self.upper_bounds,
            "violations": self.violations,
        }


@dataclass
class AuditReport:
    rows: list[AuditRow]

    @property
    def violations(self) -> list[str]:
        return [f"{r.pattern} n={r.n}: {v}" for r in self.rows for v in r.violations]

    def to_dict(self) -> dict:
        return {"rows": [r.to_dict() for r in self.rows], "violations": self.violations}


def audit_bounds_against_oracle(corpus: Sequence[tuple[str, Graph]] | dict[str, Graph],
                                n_max: int, n_min: Optional[int] = None) -> AuditReport:
    """Check ``ceil(lower) <= sat(n, H) <= construction size`` for every pattern and ``n``.

    Oracle values come from audit-mode sweeps; every lower bound with an
    explicit constant is checked, not only the best one.
    """
    _check_order(n_max)
    items = list(corpus.items()) if isinstance(corpus, dict) else list(corpus)
    rows = []
    for name, h in items:
        lo = max(h.order, n_min or 0)
        for n in range(lo, n_max + 1):
            sat = brute_force_sat(n, h, audit=True).sat_value
            lowers: dict[str, int] = {}
            try:
                for rep in all_lower_bounds(h, n):
                    if rep.applicable and rep.constant is not None and rep.kind == "lower":
                        lowers[rep.name] = rep.ceil_value
            except PatternError:
                pass
            uppers = construction_upper_bounds(h, n)
            row = AuditRow(name, n, sat, lowers, uppers)
            for k, v in lowers.items():
                if v > sat:
                    row.violations.append(f"lower bound {k} = {v} exceeds sat = {sat}")
            for k, v in uppers.items():
                if v < sat:
                    row.violations.append(f"construction {k} has {v} < sat = {sat} edges")
            rows.append(row)
    return AuditReport(rows)

