"""Induced pattern search, chordality certificates and join decomposition."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Union

from .errors import EquivalenceViolation, InternalInconsistency
from .graph import (
    Graph,
    complement,
    induced,
    iter_bits,
    maximal_independent_set,
    popcount,
    remove_isolated,
)


class PatternKind(str, enum.Enum):
    TWO_K2 = "2K2"
    P4 = "P4"
    C4 = "C4"
    CHORDLESS_CYCLE = "chordless_cycle"


@dataclass(frozen=True)
class PatternWitness:
    kind: PatternKind
    vertices: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        """True iff the vertices realize ``kind`` as an induced subgraph of ``g``."""
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        if self.kind is PatternKind.CHORDLESS_CYCLE:
            k = len(vs)
            if k < 4:
                return False
            for i in range(k):
                for j in range(i + 1, k):
                    cyclic = j == i + 1 or (i == 0 and j == k - 1)
                    if g.has_edge(vs[i], vs[j]) != cyclic:
                        return False
            return True
        if len(vs) != 4:
            return False
        a, b, c, d = vs
        want = _PATTERN_EDGES[self.kind]
        pairs = {(0, 1): (a, b), (0, 2): (a, c), (0, 3): (a, d),
                 (1, 2): (b, c), (1, 3): (b, d), (2, 3): (c, d)}
        return all(g.has_edge(*pairs[p]) == (p in want) for p in pairs)


_PATTERN_EDGES = {
    PatternKind.TWO_K2: {(0, 1), (2, 3)},
    PatternKind.P4: {(0, 1), (1, 2), (2, 3)},
    PatternKind.C4: {(0, 1), (1, 2), (2, 3), (0, 3)},
}


def find_induced(g: Graph, kind: PatternKind) -> PatternWitness | None:
    """Lexicographically least ordered 4-tuple realizing ``kind``, or None.

    Candidate tuples are generated in lexicographic order with the
    adjacency constraints applied as bitmask filters, so the first hit is
    the least one.
    """
    kind = PatternKind(kind)
    rows = g.rows
    for a in range(g.n):
        closed_a = rows[a] | (1 << a)
        for b in iter_bits(rows[a]):
            closed_b = rows[b] | (1 << b)
            if kind is PatternKind.TWO_K2:
                c_mask = g.full_mask & ~(closed_a | closed_b)
            else:
                c_mask = rows[b] & ~closed_a
            for c in iter_bits(c_mask):
                if kind is PatternKind.TWO_K2:
                    d_mask = rows[c] & ~(closed_a | closed_b)
                elif kind is PatternKind.P4:
                    d_mask = rows[c] & ~(closed_a | closed_b)
                elif kind is PatternKind.C4:
                    d_mask = rows[c] & rows[a] & ~closed_b
                else:
                    raise ValueError(f"find_induced does not search for {kind}")
                if d_mask:
                    d = (d_mask & -d_mask).bit_length() - 1
                    return PatternWitness(kind, (a, b, c, d))
    return None


def is_2k2_p4_free(g: Graph) -> tuple[bool, PatternWitness | None]:
    for kind in (PatternKind.TWO_K2, PatternKind.P4):
        w = find_induced(g, kind)
        if w is not None:
            return False, w
    return True, None


# -- chordality ---------------------------------------------------------------


@dataclass(frozen=True)
class ChordalityCertificate:
    """A perfect elimination ordering."""

    order: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        return is_perfect_elimination_order(g, self.order)


def is_perfect_elimination_order(g: Graph, order) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    later = g.full_mask
    for v in order:
        later &= ~(1 << v)
        nbrs = g.rows[v] & later
        for u in iter_bits(nbrs):
            if nbrs & ~g.rows[u] & ~(1 << u):
                return False
    return True


def mcs_order(g: Graph) -> tuple[int, ...]:
    """Maximum cardinality search; returns the reverse of the visit order.

    Ties go to the lowest index.
    """
    weight = [0] * g.n
    unvisited = g.full_mask
    visit = []
    while unvisited:
        best = -1
        best_w = -1
        for v in iter_bits(unvisited):
            if weight[v] > best_w:
                best, best_w = v, weight[v]
        visit.append(best)
        unvisited &= ~(1 << best)
        for u in iter_bits(g.rows[best] & unvisited):
            weight[u] += 1
    return tuple(reversed(visit))


def _shortest_path(g: Graph, allowed: int, src: int, dst: int) -> list[int] | None:
    parent = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while path[-1] != src:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in iter_bits(g.rows[u] & allowed):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def _normalize_cycle(cycle: list[int]) -> tuple[int, ...]:
    k = len(cycle)
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if k > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def _cycle_through(g: Graph, v: int, a: int, b: int) -> tuple[int, ...] | None:
    # interior vertices avoid N[v], so v sees only a and b on the cycle;
    # a shortest path is induced, so the cycle has no chords.
    blocked = (g.rows[v] | (1 << v)) & ~((1 << a) | (1 << b))
    path = _shortest_path(g, g.full_mask & ~blocked, a, b)
    if path is None:
        return None
    return _normalize_cycle([v] + path)


def is_chordal(g: Graph) -> ChordalityCertificate | PatternWitness:
    """Perfect elimination ordering, or a chordless cycle of length >= 4."""
    order = mcs_order(g)
    later = g.full_mask
    violations = []
    for v in order:
        later &= ~(1 << v)
        nbrs = g.rows[v] & later
        for a in iter_bits(nbrs):
            for b in iter_bits(nbrs & ~g.rows[a] & ~((2 << a) - 1)):
                violations.append((v, a, b))
    if not violations:
        return ChordalityCertificate(order)
    for v, a, b in violations:
        cycle = _cycle_through(g, v, a, b)
        if cycle is not None:
            return PatternWitness(PatternKind.CHORDLESS_CYCLE, cycle)
    # complete fallback: every chordless cycle passes through some vertex
    # whose two cycle neighbours are joined by a path avoiding its other
    # neighbours.
    for v in range(g.n):
        for a in iter_bits(g.rows[v]):
            for b in iter_bits(g.rows[v] & ~g.rows[a] & ~((2 << a) - 1)):
                cycle = _cycle_through(g, v, a, b)
                if cycle is not None:
                    return PatternWitness(PatternKind.CHORDLESS_CYCLE, cycle)
    raise InternalInconsistency("MCS order failed but no chordless cycle exists")


# -- complement remark --------------------------------------------------------


@dataclass(frozen=True)
class ComplementReport:
    graph_free: bool
    graph_witness: PatternWitness | None
    complement_free: bool
    complement_witness: PatternWitness | None


def complement_equivalence_check(g: Graph) -> ComplementReport:
    """Compare (2K2, P4)-freeness of ``g`` with (C4, P4)-freeness of its complement."""
    free, witness = is_2k2_p4_free(g)
    h = complement(g)
    c_witness = find_induced(h, PatternKind.C4) or find_induced(h, PatternKind.P4)
    report = ComplementReport(free, witness, c_witness is None, c_witness)
    if report.graph_free != report.complement_free:
        raise EquivalenceViolation(
            "(2K2,P4)-freeness of G disagrees with (C4,P4)-freeness of its complement",
            details={"graph": g.edges(), "report": report},
        )
    return report


# -- join decomposition -------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    vertex: int


@dataclass(frozen=True)
class IsolatedExtension:
    child: "JoinCertificate"
    isolated: tuple[int, ...]


@dataclass(frozen=True)
class Join:
    left: "JoinCertificate"
    right: "JoinCertificate"
    cross_edges: int


@dataclass(frozen=True)
class EmptyGraph:
    """Certificate of the graph with no vertices."""


JoinCertificate = Union[Leaf, IsolatedExtension, Join, EmptyGraph]


def certificate_vertices(cert: JoinCertificate) -> list[int]:
    if isinstance(cert, Leaf):
        return [cert.vertex]
    if isinstance(cert, IsolatedExtension):
        return certificate_vertices(cert.child) + list(cert.isolated)
    if isinstance(cert, Join):
        return certificate_vertices(cert.left) + certificate_vertices(cert.right)
    if isinstance(cert, EmptyGraph):
        return []
    raise TypeError(f"not a join certificate: {cert!r}")


def replay(cert: JoinCertificate, n: int | None = None) -> Graph:
    """Rebuild the graph a certificate describes.

    Raises ValueError when the tree is malformed: repeated vertices, a
    stored cross-edge count that does not match, or vertices that do not
    cover ``0..n-1``.
    """
    verts = certificate_vertices(cert)
    if len(set(verts)) != len(verts):
        raise ValueError("certificate repeats a vertex")
    if n is None:
        n = len(verts)
    if sorted(verts) != list(range(n)):
        raise ValueError(f"certificate vertices do not cover 0..{n - 1}")
    rows = [0] * n

    def walk(node) -> int:
        if isinstance(node, Leaf):
            return 1 << node.vertex
        if isinstance(node, EmptyGraph):
            return 0
        if isinstance(node, IsolatedExtension):
            mask = walk(node.child)
            for v in node.isolated:
                mask |= 1 << v
            return mask
        left, right = walk(node.left), walk(node.right)
        if node.cross_edges != popcount(left) * popcount(right):
            raise ValueError("join node cross-edge count does not match its blocks")
        for v in iter_bits(left):
            rows[v] |= right
        for v in iter_bits(right):
            rows[v] |= left
        return left | right

    walk(cert)
    return Graph(n, tuple(rows))


def join_decompose(g: Graph) -> JoinCertificate | PatternWitness:
    """Certificate that ``g`` is built from single vertices by adding
    isolated vertices and taking joins, or an induced 2K2/P4 blocking it.

    A split vertex ``v`` is taken from the greedy maximal independent set;
    the members are tried in ascending order and the first one whose
    neighbourhood is completely joined to its non-neighbourhood is used.
    """
    if g.n == 0:
        return EmptyGraph()
    return _decompose(g, tuple(range(g.n)))


def _decompose(g: Graph, labels: tuple[int, ...]):
    if g.n == 1:
        return Leaf(labels[0])
    core, removed, core_labels = remove_isolated(g)
    if removed:
        isolated = tuple(labels[v] for v in sorted(removed))
        if core.n == 0:
            return IsolatedExtension(Leaf(isolated[0]), isolated[1:])
        child = _decompose(core, tuple(labels[v] for v in core_labels))
        if isinstance(child, PatternWitness):
            return child
        return IsolatedExtension(child, isolated)

    full = g.full_mask
    for v in sorted(maximal_independent_set(g)):
        inside = g.rows[v]
        outside = full & ~inside
        if all(g.rows[u] & outside == outside for u in iter_bits(inside)):
            parts = []
            for side in (inside, outside):
                sub, sub_labels = induced(g, iter_bits(side))
                part = _decompose(sub, tuple(labels[i] for i in sub_labels))
                if isinstance(part, PatternWitness):
                    return part
                parts.append(part)
            return Join(parts[0], parts[1], popcount(inside) * popcount(outside))

    free, witness = is_2k2_p4_free(g)
    if free:
        raise InternalInconsistency("no join split found in a (2K2,P4)-free graph")
    return PatternWitness(witness.kind, tuple(labels[v] for v in witness.vertices))
