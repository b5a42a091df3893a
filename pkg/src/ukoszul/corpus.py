"""Graph corpora: every labeled graph, one graph per isomorphism class, or a seeded sample."""

from __future__ import annotations

import enum
import itertools
import random
from functools import lru_cache
from typing import Iterator

from .errors import CapExceeded
from .graph import Graph, check_cap, graph_from_bits, iter_bits, relabel

LABELED_MAX_N = 7
CANONICAL_MAX_N = 8


class Mode(str, enum.Enum):
    LABELED = "labeled"
    CANONICAL = "canonical"
    SAMPLE = "sample"


def _refine(g: Graph) -> list[int]:
    """Stable colouring by iterated degree refinement; colours are canonical ranks."""
    colors = [0] * g.n
    ncolors = 1
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(g.rows[v]))))
                for v in range(g.n)]
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return colors
        ncolors = len(ranking)


def _key(g: Graph, order: tuple[int, ...]) -> int:
    # order[i] is the old vertex placed at position i
    key = 0
    rows = g.rows
    for j in range(1, g.n):
        row = rows[order[j]]
        for i in range(j):
            key = key << 1 | (row >> order[i] & 1)
    return key


def canonical_form(g: Graph) -> tuple[int, Graph]:
    """Minimal adjacency bit-string over all colour-respecting relabelings.

    The colour classes come from an isomorphism-invariant refinement, so the
    minimum is the same for isomorphic inputs.
    """
    if g.n <= 1:
        return 0, g
    colors = _refine(g)
    cells = [[v for v in range(g.n) if colors[v] == c] for c in range(max(colors) + 1)]
    best = None
    best_order = None
    for choice in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        order = tuple(v for part in choice for v in part)
        k = _key(g, order)
        if best is None or k < best:
            best, best_order = k, order
    perm = [0] * g.n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return best, relabel(g, perm)


@lru_cache(maxsize=None)
def canonical_graphs(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class on ``n`` vertices, sorted by canonical key."""
    if n > CANONICAL_MAX_N:
        raise CapExceeded(f"canonical enumeration is limited to n <= {CANONICAL_MAX_N}")
    if n <= 1:
        return (Graph(n, (0,) * n),)
    found: dict[int, Graph] = {}
    for h in canonical_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(h.rows) + [nbrs]
            for u in iter_bits(nbrs):
                rows[u] |= 1 << (n - 1)
            key, canon = canonical_form(Graph(n, tuple(rows)))
            found.setdefault(key, canon)
    return tuple(found[k] for k in sorted(found))


def enumerate_graphs(n: int, mode: Mode | str = Mode.LABELED, *, k: int | None = None,
                     seed: int | None = None) -> Iterator[Graph]:
    mode = Mode(mode)
    if mode is Mode.LABELED:
        if n > LABELED_MAX_N:
            raise CapExceeded(f"labeled enumeration is limited to n <= {LABELED_MAX_N}")
        for bits in range(1 << (n * (n - 1) // 2)):
            yield graph_from_bits(n, bits)
    elif mode is Mode.CANONICAL:
        yield from canonical_graphs(n)
    else:
        if k is None or seed is None:
            raise ValueError("sample mode needs both k and seed")
        check_cap(n, None)
        rng = random.Random(seed)
        m = n * (n - 1) // 2
        for _ in range(k):
            yield graph_from_bits(n, rng.getrandbits(m) if m else 0)
