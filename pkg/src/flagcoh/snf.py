"""Exact integer linear algebra: Smith normal form, cokernels, mod-p ranks.

Matrices are dense with arbitrary-precision integer entries.  The matrix
of a map is written row-per-domain-generator, so the cokernel of the map
lives in the column space.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix; dimensions are explicit so empty shapes like
    1x0 and 0x3 stay distinguishable."""

    nrows: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("column count mismatch")

    @staticmethod
    def from_rows(rows, ncols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        return IntMatrix(len(rows), ncols, rows)


@dataclass(frozen=True)
class CokernelStructure:
    """Finitely generated abelian group: Z^free_rank + sum Z/d_i."""

    free_rank: int
    invariant_factors: tuple[int, ...]  # each > 1, d_1 | d_2 | ...

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors


def smith(mat: IntMatrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors (including 1s) and rank, exact over Z.

    Pivots on a minimal-absolute-value nonzero entry, clears its row and
    column by Euclidean steps, then enforces that the pivot divides the
    remaining submatrix so the divisibility chain comes out for free.
    """
    a = [list(r) for r in mat.rows]
    nr, nc = mat.nrows, mat.ncols
    factors: list[int] = []
    for t in range(min(nr, nc)):
        best = None
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, piv = v, (i, j)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            col = next((i for i in range(t + 1, nr) if a[i][t]), None)
            if col is not None:
                q = a[col][t] // p
                for j in range(t, nc):
                    a[col][j] -= q * a[t][j]
                if a[col][t]:
                    a[t], a[col] = a[col], a[t]
                continue
            row = next((j for j in range(t + 1, nc) if a[t][j]), None)
            if row is not None:
                q = a[t][row] // p
                for i in range(t, nr):
                    a[i][row] -= q * a[i][t]
                if a[t][row]:
                    for r in a:
                        r[t], r[row] = r[row], r[t]
                continue
            bad = next(
                (
                    i
                    for i in range(t + 1, nr)
                    for j in range(t + 1, nc)
                    if a[i][j] % p
                ),
                None,
            )
            if bad is None:
                break
            for j in range(t, nc):
                a[t][j] += a[bad][j]
        factors.append(abs(a[t][t]))
    return tuple(factors), len(factors)


def cokernel(mat: IntMatrix) -> CokernelStructure:
    """Cokernel of the map whose matrix has one row per domain generator."""
    factors, rank = smith(mat)
    return CokernelStructure(
        free_rank=mat.ncols - rank,
        invariant_factors=tuple(f for f in factors if f > 1),
    )


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def rank_mod_p(mat: IntMatrix, p: int) -> int:
    """Rank over the field with p elements, by Gaussian elimination."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = [[v % p for v in r] for r in mat.rows]
    nr, nc = mat.nrows, mat.ncols
    rank = 0
    col = 0
    while rank < nr and col < nc:
        piv = next((i for i in range(rank, nr) if a[i][col]), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(v * inv) % p for v in a[rank]]
        for i in range(nr):
            if i != rank and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        col += 1
    return rank


def coker_dim_mod_p(mat: IntMatrix, p: int) -> int:
    return mat.ncols - rank_mod_p(mat, p)
