"""Edge ideals and the obstruction identity inside the edge ring.

Polynomials only ever appear as sums of distinct squarefree monomials with
coefficient 1, so a polynomial is passed around as a list of ``Monomial``.
Membership in a monomial ideal is then a termwise divisibility test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CapExceeded, IndexOutOfRange, WrongPatternKind
from .graph import DEFAULT_VERTEX_CAP, Graph, iter_bits
from .recognize import PatternKind, PatternWitness

DEFAULT_COMPLEX_CAP = 14


@dataclass(frozen=True, order=True)
class Monomial:
    support: tuple[int, ...]

    def __post_init__(self):
        s = self.support
        if not s:
            raise ValueError("monomials here have degree >= 1")
        if any(s[i] >= s[i + 1] for i in range(len(s) - 1)):
            raise ValueError(f"support {s} is not strictly increasing")
        if s[0] < 0:
            raise ValueError("negative variable index")

    @classmethod
    def of(cls, *variables: int) -> "Monomial":
        vs = sorted(variables)
        if len(set(vs)) != len(vs):
            raise ValueError(f"x^2 factor in {variables}; only squarefree monomials are allowed")
        return cls(tuple(vs))

    @property
    def degree(self) -> int:
        return len(self.support)

    def divides(self, other: "Monomial") -> bool:
        return set(self.support) <= set(other.support)

    def __str__(self) -> str:
        return "".join(f"x{i}" for i in self.support)


@dataclass(frozen=True)
class EdgeIdeal:
    nvars: int
    gens: frozenset[Monomial]

    def __post_init__(self):
        for m in self.gens:
            if m.degree != 2:
                raise ValueError(f"generator {m} is not quadratic")
            if m.support[-1] >= self.nvars:
                raise IndexOutOfRange(f"generator {m} uses a variable >= {self.nvars}")

    def sorted_gens(self) -> list[Monomial]:
        return sorted(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(str(m) for m in self.sorted_gens()) + ")"


@dataclass(frozen=True)
class LinearFormPair:
    """The linear form ``x_a + x_b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("a linear form pair needs two distinct variables")


@dataclass(frozen=True)
class ObstructionWitness:
    """``x_i1 x_i4`` kills ``z = x_i2 + x_i3`` while neither variable alone does."""

    outer: tuple[int, int]
    form: LinearFormPair
    case: str

    def __post_init__(self):
        if self.case not in ("a", "b"):
            raise ValueError(f"case must be 'a' or 'b', not {self.case!r}")
        idx = [*self.outer, self.form.a, self.form.b]
        if len(set(idx)) != 4:
            raise ValueError(f"obstruction indices {idx} are not pairwise distinct")


def edge_ideal(g: Graph) -> EdgeIdeal:
    return EdgeIdeal(g.n, frozenset(Monomial((u, v)) for u, v in g.edges()))


def fiber_product(i1: EdgeIdeal, i2: EdgeIdeal, *, cap: int | None = None) -> EdgeIdeal:
    """Generators of ``I + J + (x_i y_j)``, with ``i2``'s variables shifted past ``i1``'s."""
    n, m = i1.nvars, i2.nvars
    cap = DEFAULT_VERTEX_CAP if cap is None else cap
    if n + m > cap:
        raise CapExceeded(f"{n + m} variables exceeds the cap of {cap}")
    gens = set(i1.gens)
    gens.update(Monomial((a + n, b + n)) for a, b in (g.support for g in i2.gens))
    gens.update(Monomial((i, n + j)) for i in range(n) for j in range(m))
    return EdgeIdeal(n + m, frozenset(gens))


def contains_poly(ideal: EdgeIdeal, terms: Iterable[Monomial]) -> bool:
    """Membership of a unit-coefficient polynomial with distinct terms.

    A monomial ideal contains such a polynomial iff it contains every term.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("empty polynomial")
    return all(t in ideal for t in terms)


def obstruction_from_witness(w: PatternWitness) -> ObstructionWitness:
    if w.kind is PatternKind.TWO_K2:
        case = "a"
    elif w.kind is PatternKind.P4:
        case = "b"
    else:
        raise WrongPatternKind(f"no obstruction comes from a {w.kind.value} pattern")
    a, b, c, d = w.vertices
    return ObstructionWitness((a, d), LinearFormPair(b, c), case)


def verify_obstruction(ideal: EdgeIdeal, w: ObstructionWitness) -> bool:
    """Check ``x1 x4 z = 0`` in the edge ring while ``x1 z``, ``x4 z`` and ``x1 x4`` are nonzero.

    Here ``(x1, x4) = w.outer`` and ``z = w.form``.
    """
    i1, i4 = w.outer
    i2, i3 = w.form.a, w.form.b
    if max(i1, i2, i3, i4) >= ideal.nvars:
        raise IndexOutOfRange("obstruction uses a variable outside the ring")
    kills = contains_poly(ideal, [Monomial.of(i1, i4, i2), Monomial.of(i1, i4, i3)])
    first = contains_poly(ideal, [Monomial.of(i1, i2), Monomial.of(i1, i3)])
    last = contains_poly(ideal, [Monomial.of(i4, i2), Monomial.of(i4, i3)])
    return kills and not first and not last and Monomial.of(i1, i4) not in ideal


# -- independence complexes ---------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """All faces, grouped by dimension.

    ``faces[d + 1]`` lists the ``d``-dimensional faces as sorted tuples,
    so ``faces[0] == [()]`` is the empty face.
    """

    nverts: int
    faces: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.faces) - 2

    def faces_of_dim(self, d: int) -> tuple[tuple[int, ...], ...]:
        if -1 <= d <= self.dim:
            return self.faces[d + 1]
        return ()

    def f_vector(self) -> list[int]:
        return [len(fs) for fs in self.faces]

    @classmethod
    def from_faces(cls, nverts: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from an arbitrary face list, closing it under subsets."""
        closed = {()}
        for face in faces:
            face = tuple(sorted(set(face)))
            k = len(face)
            for mask in range(1 << k):
                closed.add(tuple(face[i] for i in range(k) if mask >> i & 1))
        by_dim: list[list[tuple[int, ...]]] = []
        for face in closed:
            while len(by_dim) <= len(face):
                by_dim.append([])
            by_dim[len(face)].append(face)
        return cls(nverts, tuple(tuple(sorted(fs)) for fs in by_dim))

    def is_closed(self) -> bool:
        present = {f for fs in self.faces for f in fs}
        if () not in present:
            return False
        return all(f[:i] + f[i + 1:] in present for f in present for i in range(len(f)))


def independent_sets(g: Graph, within: int | None = None) -> list[int]:
    """All independent sets of ``g`` inside the bitmask ``within``, as bitmasks."""
    out = []

    def grow(current: int, candidates: int) -> None:
        out.append(current)
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            grow(current | low, candidates & ~g.rows[v])

    grow(0, g.full_mask if within is None else within)
    return out


def independence_complex(g: Graph, *, cap: int | None = None) -> SimplicialComplex:
    cap = DEFAULT_COMPLEX_CAP if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the complex cap of {cap}")
    by_dim: list[list[tuple[int, ...]]] = []
    for mask in independent_sets(g):
        face = tuple(iter_bits(mask))
        while len(by_dim) <= len(face):
            by_dim.append([])
        by_dim[len(face)].append(face)
    return SimplicialComplex(g.n, tuple(tuple(sorted(fs)) for fs in by_dim))
