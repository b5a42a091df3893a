"""Graded Betti numbers of edge rings via Hochster's formula.

For the Stanley-Reisner ring of a complex D on vertex set V,

    beta_{i,j} = sum over W in V with |W| = j of dim H~_{j-i-1}(D_W; K).

For ``S/I(G)`` the complex is the independence complex of ``G`` and
``D_W`` is the independence complex of the induced subgraph on ``W``.  The
homological index is pinned by ``beta_{1,2} = |E|``: an edge ``W = {u, v}``
gives two points, whose only reduced homology sits in degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import CapExceeded, EquivalenceViolation
from .graph import Graph, complement, iter_bits, popcount
from .ideal import DEFAULT_COMPLEX_CAP, SimplicialComplex
from .linalg import rank_bareiss, rank_gf2, rank_mod_p
from .recognize import ChordalityCertificate, PatternWitness, is_chordal

DEFAULT_BETTI_CAP = DEFAULT_COMPLEX_CAP


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (_is_prime(self.p) and self.p < 2**31):
            raise ValueError(f"{self.p} is not a prime below 2^31")

    @property
    def tag(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def __str__(self) -> str:
        return "q" if self.p is None else ("gf2" if self.p == 2 else f"gfp:{self.p}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``q``, ``gf2`` or ``gfp:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls()
        if t == "gf2":
            return cls(2)
        if t.startswith("gfp:"):
            try:
                return cls(int(t[4:]))
            except ValueError as exc:
                raise ValueError(f"bad field {text!r}: {exc}") from None
        raise ValueError(f"unknown field {text!r}; use q, gf2 or gfp:<p>")


RATIONALS = FieldSpec()
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks for dimensions -1 .. len(ranks) - 2."""

    ranks: tuple[int, ...]

    def rank(self, k: int) -> int:
        i = k + 1
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def nonzero(self) -> dict[int, int]:
        return {k - 1: r for k, r in enumerate(self.ranks) if r}


def _boundary_rank(lower: list[int], upper: list[int], fld: FieldSpec) -> int:
    """Rank of the boundary map from faces ``upper`` onto faces ``lower`` (bitmasks)."""
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    if fld.p == 2:
        cols = []
        for f in upper:
            col = 0
            for v in iter_bits(f):
                col |= 1 << index[f ^ (1 << v)]
            cols.append(col)
        return rank_gf2(cols)
    # rows of the transpose: one per upper face; rank is unchanged
    rows = []
    width = len(lower)
    for f in upper:
        row = [0] * width
        sign = 1
        for v in iter_bits(f):
            row[index[f ^ (1 << v)]] = sign
            sign = -sign
        rows.append(row)
    if fld.p is None:
        return rank_bareiss(rows)
    return rank_mod_p(rows, fld.p)


def _homology_of_faces(faces_by_dim: list[list[int]], fld: FieldSpec) -> HomologyProfile:
    # faces_by_dim[k] holds the (k-1)-dimensional faces; index 0 is [empty face]
    ranks_d = [0] * (len(faces_by_dim) + 1)
    for k in range(1, len(faces_by_dim)):
        ranks_d[k] = _boundary_rank(faces_by_dim[k - 1], faces_by_dim[k], fld)
    out = []
    for k in range(len(faces_by_dim)):
        out.append(len(faces_by_dim[k]) - ranks_d[k] - ranks_d[k + 1])
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return HomologyProfile(tuple(out))


def reduced_homology(c: SimplicialComplex, fld: FieldSpec = RATIONALS) -> HomologyProfile:
    """Reduced homology ranks of ``c``, including the augmentation to the empty face."""
    faces_by_dim = [[sum(1 << v for v in f) for f in fs] for fs in c.faces]
    profile = _homology_of_faces(faces_by_dim, fld)
    # keep one entry per dimension of the complex
    ranks = list(profile.ranks) + [0] * (len(c.faces) - len(profile.ranks))
    return HomologyProfile(tuple(ranks))


def _independence_homology(rows: tuple[int, ...], within: int, fld: FieldSpec,
                           simplify: bool) -> HomologyProfile:
    """Reduced homology of the independence complex of the subgraph induced on ``within``."""
    if simplify:
        within = _fold(rows, within)
        if within is None:
            return HomologyProfile((0,))
    faces_by_dim: list[list[int]] = []
    for mask in _independent_masks(rows, within):
        k = popcount(mask)
        while len(faces_by_dim) <= k:
            faces_by_dim.append([])
        faces_by_dim[k].append(mask)
    return _homology_of_faces(faces_by_dim, fld)


def _independent_masks(rows: tuple[int, ...], within: int) -> list[int]:
    out = []
    stack = [(0, within)]
    while stack:
        current, candidates = stack.pop()
        out.append(current)
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            stack.append((current | low, candidates & ~rows[v]))
    return out


def _fold(rows: tuple[int, ...], within: int) -> int | None:
    """Shrink ``within`` without changing the homotopy type of its independence complex.

    An isolated vertex makes the complex a cone (returns None).  If
    ``N(u) <= N(w)`` for distinct ``u, w`` then deleting ``w`` is a homotopy
    equivalence.
    """
    changed = True
    while changed:
        changed = False
        for u in iter_bits(within):
            nu = rows[u] & within
            if not nu:
                return None
            for w in iter_bits(within & ~(1 << u) & ~nu):
                if nu & ~rows[w] == 0:
                    within &= ~(1 << w)
                    changed = True
                    break
            if changed:
                break
    return within


@dataclass
class BettiTable:
    """Nonzero graded Betti numbers ``beta_{i,j}`` of ``S/I`` for ``i >= 1``."""

    nvars: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    field: FieldSpec = RATIONALS

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.nvars == other.nvars and self.entries == other.entries

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def as_rows(self) -> list[list[int]]:
        """Macaulay2-style layout: row ``r`` holds ``beta_{i, i+r}`` for ``i = 0..pd``."""
        pd = self.projective_dimension
        reg = self.regularity
        grid = [[0] * (pd + 1) for _ in range(reg + 1)]
        grid[0][0] = 1
        for (i, j), b in self.entries.items():
            grid[j - i][i] = b
        return grid

    def format(self) -> str:
        grid = self.as_rows()
        width = max(len(str(b)) for row in grid for b in row) + 1
        cols = range(len(grid[0]))
        lines = ["      " + "".join(str(i).rjust(width) for i in cols),
                 "total:" + "".join(str(sum(row[i] for row in grid)).rjust(width) for i in cols)]
        for r, row in enumerate(grid):
            cells = "".join(("." if b == 0 else str(b)).rjust(width) for b in row)
            lines.append(f"{r:>4}: {cells}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "field": str(self.field),
            "entries": [[i, j, b] for (i, j), b in sorted(self.entries.items())],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        entries = {(i, j): b for i, j, b in data["entries"]}
        return cls(data["nvars"], entries, FieldSpec.parse(data["field"]))


def hochster_terms(g: Graph, fld: FieldSpec = RATIONALS, *, simplify: bool = True
                   ) -> Iterable[tuple[int, HomologyProfile]]:
    """Yield ``(W, homology of the induced independence complex)`` for ``|W| >= 2``.

    Subsets are visited by increasing size, then increasing bitmask.
    """
    by_size: list[list[int]] = [[] for _ in range(g.n + 1)]
    for w in range(1 << g.n):
        by_size[popcount(w)].append(w)
    for size in range(2, g.n + 1):
        for w in by_size[size]:
            yield w, _independence_homology(g.rows, w, fld, simplify)


def betti_table(g: Graph, fld: FieldSpec = RATIONALS, *, cap: int | None = None,
                simplify: bool = True) -> BettiTable:
    """Graded Betti numbers of ``S/I(g)`` over ``fld``.

    ``simplify`` prunes each Hochster term with homotopy-invariant
    reductions (cone and neighbourhood-domination); turning it off computes
    every induced independence complex in full.
    """
    cap = DEFAULT_BETTI_CAP if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the Betti cap of {cap}")
    entries: dict[tuple[int, int], int] = {}
    for w, profile in hochster_terms(g, fld, simplify=simplify):
        j = popcount(w)
        for k, r in profile.nonzero().items():
            i = j - k - 1
            if i >= 1:
                entries[(i, j)] = entries.get((i, j), 0) + r
    return BettiTable(g.n, entries, fld)


def is_linear_resolution(t: BettiTable) -> bool:
    return all(j == i + 1 for i, j in t.entries)


@dataclass(frozen=True)
class FrobergReport:
    linear: bool
    complement_chordal: bool
    chordality: ChordalityCertificate | PatternWitness
    table: BettiTable


def froberg_check(g: Graph, fld: FieldSpec = RATIONALS, *, cap: int | None = None) -> FrobergReport:
    """Linearity of the resolution of ``S/I(g)`` against chordality of the complement."""
    table = betti_table(g, fld, cap=cap)
    chordality = is_chordal(complement(g))
    report = FrobergReport(
        linear=is_linear_resolution(table),
        complement_chordal=isinstance(chordality, ChordalityCertificate),
        chordality=chordality,
        table=table,
    )
    if report.linear != report.complement_chordal:
        raise EquivalenceViolation(
            "linear resolution disagrees with chordality of the complement",
            details={"graph": g.edges(), "table": table.to_dict(), "chordality": chordality},
        )
    return report
