"""Exact matrix rank over the rationals and over prime fields."""

from __future__ import annotations


def rank_bareiss(matrix: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination.

    Every intermediate entry is a minor of the input, so the division by
    the previous pivot is exact and no fractions appear.
    """
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            a = row[col]
            if a:
                for j in range(col + 1, ncols):
                    row[j] = (p * row[j] - a * prow[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_mod_p(matrix: list[list[int]], p: int) -> int:
    """Rank over GF(p) by ordinary Gaussian elimination."""
    if p == 2:
        return rank_gf2([sum(1 << j for j, x in enumerate(r) if x & 1) for r in matrix])
    rows = [[x % p for x in r] for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        for j in range(col, ncols):
            prow[j] = prow[j] * inv % p
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            a = row[col]
            if a:
                for j in range(col, ncols):
                    row[j] = (row[j] - a * prow[j]) % p
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_gf2(vectors: list[int]) -> int:
    """Rank over GF(2) of vectors packed as integer bitmasks."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)
