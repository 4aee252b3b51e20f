"""Closed-form determinant evaluation for the wall-case square matrices.

The product formulas are evaluated with exact rational intermediates and
a final integrality assertion; their signs depend on a compatible
ordering of the two composition sets, built explicitly by
complement_ordered_matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod

from .combinatorics import (
    complement_bijection,
    compositions,
    delta,
    multinomial,
    partial_sum_S,
)
from .snf import IntMatrix


def exact_det(mat: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if mat.nrows != mat.ncols:
        raise ValueError("determinant needs a square matrix")
    n = mat.nrows
    if n == 0:
        return 1
    a = [list(r) for r in mat.rows]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            piv = next((i for i in range(t + 1, n) if a[i][t]), None)
            if piv is None:
                return 0
            a[t], a[piv] = a[piv], a[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


def _wall_sign(d: int, h, k: int) -> int:
    """(-1)^{S_{k'}} with k' the largest odd integer <= k (sign +1 if k=0)."""
    kp = k if k % 2 == 1 else k - 1
    if kp < 0:
        return 1
    return -1 if partial_sum_S(d, h, kp) % 2 else 1


def _check_wall_params(n: int, k: int, d: int, h) -> tuple[int, ...]:
    h = tuple(h)
    if len(h) != d:
        raise ValueError("profile length must equal d")
    if sum(h) != n + k:
        raise ValueError("wall parameters need sum(h) = n + k")
    if not 0 <= k <= n - 2:
        raise ValueError("wall case forces 0 <= k <= n-2")
    return h


def proctor_det(n: int, k: int, d: int, h) -> int:
    """Signed determinant of the wall matrix by the hook-product formula.

    Zero entries of h are allowed: trailing zeros in the profile only pad
    every composition with zeros and do not change the value.
    """
    h = _check_wall_params(n, k, d, h)
    val = Fraction(1)
    for bp in compositions(d, h, k):
        val *= prod(factorial(x) for x in bp)
    for b in compositions(d, h, n):
        val /= prod(factorial(x) for x in b)
    for ell in range(k + 1):
        rising = prod(range(ell + 1, ell + n - k + 1))
        val *= Fraction(rising) ** delta(d, h, k - ell)
    if val.denominator != 1:
        raise AssertionError("hook-product formula produced a non-integer")
    return _wall_sign(d, h, k) * int(val)


def generalized_simplified_det(n: int, k: int, d: int, h, i: int = 1) -> int:
    """Multinomial-quotient form of the wall determinant, valid when
    h_i >= k; the n-k shift is applied at position i (1-based)."""
    h = _check_wall_params(n, k, d, h)
    if not 1 <= i <= d:
        raise ValueError("position i must be in 1..d")
    if h[i - 1] < k:
        raise ValueError(f"simplified formula needs h_{i} >= k")
    val = Fraction(1)
    for b in compositions(d, h, n):
        val *= multinomial(n, b)
    for bp in compositions(d, h, k):
        shifted = bp[: i - 1] + (bp[i - 1] + n - k,) + bp[i:]
        val /= multinomial(n, shifted)
    if val.denominator != 1:
        raise AssertionError("multinomial quotient produced a non-integer")
    return _wall_sign(d, h, k) * int(val)


def simplified_det(n: int, k: int, d: int, h) -> int:
    """generalized_simplified_det at position 1 (the h_1 >= k case)."""
    return generalized_simplified_det(n, k, d, h, i=1)


def krattenthaler_det(n: int, t: int, k: int) -> int:
    """Wall determinant for d=2: prod_{i=0}^{k} C(n,t-i)/C(n,i)."""
    if not 0 <= k <= t <= n:
        raise ValueError("need 0 <= k <= t <= n")
    val = Fraction(1)
    for i in range(k + 1):
        val *= Fraction(comb(n, t - i), comb(n, i))
    if val.denominator != 1:
        raise AssertionError("binomial quotient produced a non-integer")
    return int(val)


def complement_ordered_matrix(n: int, k: int, d: int, h) -> IntMatrix:
    """Wall matrix with rows ordered by the complement bijection.

    Columns run over C(d,h,k) in lexicographic order; row r is the
    complement of column r, so the determinant sign matches the product
    formulas.
    """
    h = tuple(h)
    cols = compositions(d, h, k)
    rows_idx = [complement_bijection(h, bp) for bp in cols]
    rows = tuple(
        tuple(
            multinomial(n - k, tuple(x - y for x, y in zip(b, bp)))
            for bp in cols
        )
        for b in rows_idx
    )
    return IntMatrix(len(rows_idx), len(cols), rows)
