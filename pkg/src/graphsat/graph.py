"""Finite simple graphs stored as per-vertex adjacency bit rows.

Vertices are the integers ``0 .. order-1``. Row ``v`` is a Python int whose
bit ``w`` is set iff ``v`` and ``w`` are adjacent. Graph values are
immutable; every "modifying" operation returns a new graph.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input (loops, duplicates, bad indices)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("_order", "_rows", "_size")

    def __init__(self, order: int, rows: Sequence[int]):
        # Trusted constructor; use from_edge_list for validated input.
        self._order = order
        self._rows = tuple(rows)
        self._size = sum(r.bit_count() for r in self._rows) // 2

    @property
    def order(self) -> int:
        return self._order

    @property
    def size(self) -> int:
        return self._size

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def __len__(self) -> int:
        return self._order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._order, self._rows))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, size={self._size})"

    def row(self, v: int) -> int:
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in ascending order."""
        out = []
        for u, r in enumerate(self._rows):
            out.extend((u, v) for v in iter_bits(r >> (u + 1) << (u + 1)))
        return out

    def vertex_mask(self) -> int:
        return (1 << self._order) - 1

    def is_complete(self) -> bool:
        return self._size == self._order * (self._order - 1) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._order)):
            raise GraphError("relabeling must be a permutation of the vertices")
        rows = [0] * self._order
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self._order, rows)

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges()
                 if u in index and v in index]
        return from_edge_list(len(vertices), edges)

    def complement(self) -> Graph:
        full = self.vertex_mask()
        return Graph(self._order, [(full ^ r) & ~(1 << v) for v, r in enumerate(self._rows)])


def from_edge_list(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list, rejecting loops, duplicates and bad indices."""
    if order < 0:
        raise GraphError(f"order must be non-negative, got {order}")
    rows = [0] * order
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"endpoint out of range in edge ({u}, {v}) for order {order}")
        if rows[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, rows)


def empty_graph(order: int) -> Graph:
    return Graph(order, [0] * order)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def _check_edge(g: Graph, u: int, v: int) -> None:
    if not (0 <= u < g.order and 0 <= v < g.order) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")


def edge_neighborhood_mask(g: Graph, u: int, v: int) -> int:
    return (g.row(u) | g.row(v)) & ~((1 << u) | (1 << v))


def edge_neighborhood(g: Graph, u: int, v: int) -> set[int]:
    """Vertices other than ``u`` and ``v`` adjacent to ``u`` or ``v``."""
    _check_edge(g, u, v)
    return set(iter_bits(edge_neighborhood_mask(g, u, v)))


def non_edges(g: Graph) -> list[Edge]:
    """Unordered non-adjacent pairs ``(u, v)``, ``u < v``, ascending."""
    full = g.vertex_mask()
    out = []
    for u in range(g.order):
        missing = full & ~g.row(u) & ~((1 << (u + 1)) - 1)
        out.extend((u, v) for v in iter_bits(missing))
    return out


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    if not (0 <= u < g.order and 0 <= v < g.order):
        raise GraphError(f"endpoint out of range in edge ({u}, {v})")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.order, rows)


def is_triangle_free(g: Graph) -> bool:
    rows = g.rows
    for u, v in g.edges():
        if rows[u] & rows[v]:
            return False
    return True


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.order
    return from_edge_list(offset, edges)


# --- generators -----------------------------------------------------------
#
# Labelings are fixed: path and cycle run 0,1,2,...; star has center 0;
# complete_multipartite lists parts consecutively.

def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """``K_{1,k}``: center 0 joined to leaves ``1..k``."""
    if k < 0:
        raise GraphError("star needs k >= 0")
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def clique(n: int) -> Graph:
    if n < 0:
        raise GraphError("clique order must be non-negative")
    return from_edge_list(n, combinations(range(n), 2))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    if any(p < 0 for p in part_sizes):
        raise GraphError("part sizes must be non-negative")
    parts = []
    start = 0
    for p in part_sizes:
        parts.append(range(start, start + p))
        start += p
    edges = [(u, v) for a, b in combinations(parts, 2) for u in a for v in b]
    return from_edge_list(start, edges)


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    """Vertex ``i`` joined to ``i ± o (mod n)`` for each offset ``o``."""
    offs = sorted(set(offsets))
    if n < 1:
        raise GraphError("circulant needs n >= 1")
    if any(o < 1 or o > n // 2 for o in offs):
        raise GraphError(f"offsets must lie in [1, {n // 2}]")
    rows = [0] * n
    for i in range(n):
        for o in offs:
            j = (i + o) % n
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, rows)


def regular_bipartite_edges(left: Sequence[int], right: Sequence[int], r: int) -> list[Edge]:
    """Cyclic ``r``-regular wiring: ``left[i]`` joins ``right[i], ..., right[i+r-1]`` (mod size)."""
    a = len(left)
    if len(right) != a:
        raise GraphError("regular bipartite wiring needs equal sides")
    if r < 0 or r > a:
        raise GraphError(f"degree {r} out of range for sides of size {a}")
    return [(left[i], right[(i + j) % a]) for i in range(a) for j in range(r)]


def regular_bipartite(a: int, b: int, r: int) -> Graph:
    """``r``-regular bipartite graph with left side ``0..a-1``, right side ``a..2a-1``."""
    if a != b:
        raise GraphError("regular bipartite graph needs a == b")
    if r > a:
        raise GraphError(f"r = {r} exceeds side size {a}")
    return from_edge_list(2 * a, regular_bipartite_edges(range(a), range(a, 2 * a), r))


# --- text formats ---------------------------------------------------------

_G6_HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    pass


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error("graph too large for graph6")


def emit_graph6(g: Graph) -> bytes:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    n = g.order
    bits = []
    for j in range(1, n):
        rj = g.row(j)
        bits.extend(rj >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6]))
        for i in range(0, len(bits), 6)
    )
    return _g6_size(n) + body


def parse_graph6(text: bytes | str) -> Graph:
    """Decode a single graph6 record (optional header and trailing newline allowed)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty graph6 input")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("malformed graph6: byte outside 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated graph6 size field")
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size field")
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated graph6: expected {need} data bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error("trailing garbage after graph6 data")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("malformed graph6: nonzero padding bits")
    return Graph(n, rows)


def to_dot(g: Graph, labels: Mapping[int, str] | None = None, name: str = "G") -> str:
    """Render ``g`` as an undirected DOT graph; ``labels`` maps vertices to display names."""
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        if labels and v in labels:
            text = str(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {v} [label="{text}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list_text(g: Graph) -> str:
    """Plain fixture format: ``"n m"`` header, then one ``"u v"`` line per edge."""
    edges = g.edges()
    return "".join([f"{g.order} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def parse_edge_list_text(text: str) -> Graph:
    tokens = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not tokens or len(tokens[0]) != 2:
        raise GraphError("edge list text must start with 'n m'")
    n, m = (int(x) for x in tokens[0])
    body = tokens[1:]
    if len(body) != m:
        raise GraphError(f"edge list header promises {m} edges, found {len(body)}")
    if any(len(t) != 2 for t in body):
        raise GraphError("each edge line must hold exactly two integers")
    return from_edge_list(n, [(int(a), int(b)) for a, b in body])
