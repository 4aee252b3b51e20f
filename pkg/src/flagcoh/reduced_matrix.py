"""Reduced multinomial-coefficient matrices for the top cohomology.

For a dominant weight below the top weight (m+n-1)*omega_1, the weight
space of the top cohomology module of the line bundle on the partial
flag scheme is the cokernel of a small matrix indexed by bounded
compositions; the complementary kernel rank gives the degree-(d-1)
module.  The global sign of the entries is dropped: cokernels and
determinant magnitudes are unaffected.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .combinatorics import Composition, compositions, multinomial
from .lattice import Regime, Weight, is_dominant, omega_from_alpha, regime
from .snf import CokernelStructure, IntMatrix, cokernel, smith


class TriangularCase(Exception):
    """Raised when s_1 is below the regime threshold: the weight-space map
    is unitriangular and both kernel and cokernel vanish."""


def top_weight(m: int, n: int, d: int) -> Weight:
    return (m + n - 1,) + (0,) * (d - 1)


def h_profile(s) -> tuple[int, ...]:
    s = tuple(s)
    return tuple(s[i] - s[i + 1] for i in range(len(s) - 1)) + (s[-1],)


@dataclass(frozen=True)
class MatrixSpec:
    m: int
    n: int
    d: int
    k: int
    s: tuple[int, ...]
    h: tuple[int, ...]
    regime: Regime
    row_set: tuple[Composition, ...]  # compositions summing to n
    col_set: tuple[Composition, ...]  # compositions summing to k+n-m (m>=n) or k
    top: int  # upper multinomial index: m-k (m>=n) or n-k


def build_sets(m: int, n: int, d: int, s) -> MatrixSpec:
    """Index sets and parameters of the reduced matrix for the weight
    determined by s; raises TriangularCase below the regime threshold."""
    s = tuple(s)
    if len(s) != d:
        raise ValueError("s must have length d")
    nu = omega_from_alpha(top_weight(m, n, d), s)
    if not is_dominant(nu):
        raise ValueError(f"weight for s={s} is not dominant: {nu}")
    reg = regime(m, n)
    threshold = n if reg is not Regime.ABOVE else m
    if s[0] < threshold:
        raise TriangularCase(
            f"s_1={s[0]} < {threshold}: unitriangular case, weight space is zero"
        )
    k = s[0] - threshold
    h = h_profile(s)
    col_sum = k + n - m if reg is not Regime.ABOVE else k
    mat_top = m - k if reg is not Regime.ABOVE else n - k
    return MatrixSpec(
        m=m,
        n=n,
        d=d,
        k=k,
        s=s,
        h=h,
        regime=reg,
        row_set=tuple(compositions(d, h, n)),
        col_set=tuple(compositions(d, h, col_sum)),
        top=mat_top,
    )


def build_matrix(spec: MatrixSpec) -> IntMatrix:
    """|C| x |D| matrix with entry multinomial(top; b - b')."""
    rows = tuple(
        tuple(
            multinomial(spec.top, tuple(x - y for x, y in zip(b, bp)))
            for bp in spec.col_set
        )
        for b in spec.row_set
    )
    return IntMatrix(len(spec.row_set), len(spec.col_set), rows)


def _binom(top: int, r: int) -> int:
    return comb(top, r) if 0 <= r <= top else 0


@dataclass(frozen=True)
class Sl3Result:
    """Weight space of H^2 for SL_3: a banded binomial matrix when the
    displayed form applies, otherwise the known zero/free module."""

    matrix: IntMatrix | None
    free_rank: int  # only meaningful when matrix is None


def sl3_matrix(m: int, n: int, t: int, k: int) -> Sl3Result:
    """Banded binomial matrix of the (t,k) weight space for d=2.

    Rows and columns are in the displayed band order, which is the
    reverse of the lexicographic order used by build_matrix on both axes.
    """
    if min(m, n, t, k) < 0:
        raise ValueError("parameters must be nonnegative")
    if m >= n:
        if not m - n <= k <= t:
            return Sl3Result(matrix=None, free_rank=0)
        nrows, ncols = k + 1, k + n - m + 1
        rows = tuple(
            tuple(_binom(m - k, t - k + i - j) for j in range(ncols))
            for i in range(nrows)
        )
        return Sl3Result(matrix=IntMatrix(nrows, ncols, rows), free_rank=0)
    if k < n - m:
        return Sl3Result(matrix=None, free_rank=min(t, k) - max(0, t - m) + 1)
    nrows, ncols = k + m - n + 1, k + 1
    rows = tuple(
        tuple(_binom(n - k, t - k + n - m + i - j) for j in range(ncols))
        for i in range(nrows)
    )
    return Sl3Result(matrix=IntMatrix(nrows, ncols, rows), free_rank=0)


@dataclass(frozen=True)
class WeightSpaceReport:
    """Kernel rank and cokernel structure of one weight space."""

    m: int
    n: int
    d: int
    s: tuple[int, ...]
    nu: Weight
    k: int
    h: tuple[int, ...]
    n_rows: int
    n_cols: int
    kernel_rank: int
    cokernel: CokernelStructure


ZERO_COKERNEL = CokernelStructure(free_rank=0, invariant_factors=())


def weight_space_report(m: int, n: int, d: int, s) -> WeightSpaceReport:
    """Kernel rank and cokernel of the weight space determined by s.

    In the unitriangular case both vanish; otherwise the reduced matrix M
    gives kernel rank |C| - rank(M) (the unitriangular block contributes
    no kernel) and the cokernel via Smith normal form.
    """
    s = tuple(s)
    nu = omega_from_alpha(top_weight(m, n, d), s)
    h = h_profile(s)
    threshold = min(m, n)
    try:
        spec = build_sets(m, n, d, s)
    except TriangularCase:
        return WeightSpaceReport(
            m=m,
            n=n,
            d=d,
            s=s,
            nu=nu,
            k=s[0] - threshold,
            h=h,
            n_rows=0,
            n_cols=0,
            kernel_rank=0,
            cokernel=ZERO_COKERNEL,
        )
    mat = build_matrix(spec)
    _, rank = smith(mat)
    return WeightSpaceReport(
        m=m,
        n=n,
        d=d,
        s=s,
        nu=nu,
        k=spec.k,
        h=spec.h,
        n_rows=mat.nrows,
        n_cols=mat.ncols,
        kernel_rank=mat.nrows - rank,
        cokernel=cokernel(mat),
    )
