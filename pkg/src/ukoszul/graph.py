"""Simple undirected graphs on dense vertex indices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex: bit ``v`` of
``rows[u]`` is set iff ``u`` and ``v`` are adjacent.  Python integers are
unbounded, so the vertex cap is a policy check rather than a storage limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapExceeded, IndexOutOfRange, LoopEdge

DEFAULT_VERTEX_CAP = 64

VertexSet = frozenset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("rows must have exactly n entries")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise IndexOutOfRange(f"row {u} references a vertex >= {self.n}")
            if row >> u & 1:
                raise LoopEdge(f"vertex {u} is adjacent to itself")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"adjacency is not symmetric at ({u}, {v})")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee symmetric, loop-free rows
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_VERTEX_CAP if cap is None else cap
    if n > cap:
        raise CapExceeded(f"{n} vertices exceeds the vertex cap of {cap}")


def build_graph(n: int, edges: Iterable[tuple[int, int]], *, cap: int | None = None) -> Graph:
    """Build a graph from an edge list.  Duplicate pairs are merged."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    check_cap(n, cap)
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_columns(n: int, cols: list[int]) -> Graph:
    """Graph from upper-triangle columns: bit ``i`` of ``cols[j]`` (``i < j``) is edge ``ij``."""
    rows = list(cols)
    for j, col in enumerate(cols):
        if col >> j:
            raise IndexOutOfRange(f"column {j} has bits at or above the diagonal")
        bit = 1 << j
        for i in iter_bits(col):
            rows[i] |= bit
    return Graph._trusted(n, tuple(rows))


def graph_from_bits(n: int, bits: int) -> Graph:
    """Graph whose edge ``k`` (in graph6 pair order) is present iff bit ``k`` is set.

    Pair order runs column by column: (0,1), (0,2), (1,2), (0,3), ...
    """
    cols = [0] * n
    off = 0
    for j in range(1, n):
        cols[j] = bits >> off & ((1 << j) - 1)
        off += j
    return from_columns(n, cols)


def graph_to_bits(g: Graph) -> int:
    """Inverse of :func:`graph_from_bits`."""
    bits = 0
    off = 0
    for j in range(1, g.n):
        bits |= (g.rows[j] & ((1 << j) - 1)) << off
        off += j
    return bits


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def induced(g: Graph, w: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``w``.

    Returns the subgraph and ``labels`` where ``labels[i]`` is the original
    index of new vertex ``i``.  New indices preserve the original order.
    """
    labels = tuple(sorted(set(w)))
    for v in labels:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(labels)}
    rows = []
    for v in labels:
        row = 0
        for u in iter_bits(g.rows[v]):
            i = pos.get(u)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return Graph(len(labels), tuple(rows)), labels


def join(g1: Graph, g2: Graph, *, cap: int | None = None) -> Graph:
    """Disjoint union plus every edge between the two parts.

    Vertices of ``g2`` are shifted by ``g1.n``.
    """
    n1, n2 = g1.n, g2.n
    check_cap(n1 + n2, cap)
    block1 = (1 << n1) - 1
    block2 = ((1 << n2) - 1) << n1
    rows = [row | block2 for row in g1.rows]
    rows += [(row << n1) | block1 for row in g2.rows]
    return Graph(n1 + n2, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph, *, cap: int | None = None) -> Graph:
    check_cap(g1.n + g2.n, cap)
    return Graph(g1.n + g2.n, g1.rows + tuple(row << g1.n for row in g2.rows))


def remove_isolated(g: Graph) -> tuple[Graph, frozenset[int], tuple[int, ...]]:
    """Drop degree-0 vertices.

    Returns ``(core, removed, labels)`` with ``labels`` mapping core indices
    back to ``g``.
    """
    keep = [v for v in range(g.n) if g.rows[v]]
    core, labels = induced(g, keep)
    removed = frozenset(v for v in range(g.n) if not g.rows[v])
    return core, removed, labels


def maximal_independent_set(g: Graph) -> frozenset[int]:
    """Greedy maximal independent set, scanning vertices by ascending index."""
    chosen = 0
    blocked = 0
    for v in range(g.n):
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= g.rows[v] | (1 << v)
    return frozenset(iter_bits(chosen))


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.rows[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(g.n, tuple(rows))
