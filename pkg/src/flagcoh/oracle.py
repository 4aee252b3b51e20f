"""Brute-force weight-space computation straight from monomial bases.

The degree-(d-1) and degree-d cohomology weight spaces are the kernel
and cokernel of multiplication by X_0*Y_0 + ... + X_d*Y_d between two
monomial modules.  This module enumerates the raw monomials and builds
that map directly, with no index-set reductions or changes of basis, so
it can serve as ground truth for the reduced-matrix pipeline.
"""

from __future__ import annotations

from .combinatorics import compositions
from .lattice import is_dominant, omega_from_alpha
from .reduced_matrix import top_weight
from .snf import CokernelStructure, IntMatrix, cokernel, smith

Monomial = tuple[int, ...]  # the b-tuple; the a-tuple is target - b


def weight_target(m: int, n: int, d: int, s) -> tuple[int, ...]:
    """Per-variable exponent totals a_i + b_i of the weight space."""
    s = tuple(s)
    if len(s) != d:
        raise ValueError("s must have length d")
    return (m + n - 1 - s[0],) + tuple(
        s[i] - s[i + 1] for i in range(d - 1)
    ) + (s[-1],)


def basis_E(m: int, n: int, d: int, s) -> list[Monomial]:
    """b-tuples of the domain-side monomials: sum b = n, b <= target."""
    t = weight_target(m, n, d, s)
    if any(x < 0 for x in t):
        return []
    return compositions(d + 1, t, n)


def basis_F(m: int, n: int, d: int, s) -> list[Monomial]:
    """b-tuples of the codomain-side monomials: sum b = n-1, b <= target."""
    t = weight_target(m, n, d, s)
    if any(x < 0 for x in t):
        return []
    return compositions(d + 1, t, n - 1)


def full_map_matrix(m: int, n: int, d: int, s) -> IntMatrix:
    """Matrix of the multiplication map on the weight space, one row per
    domain monomial.  The image of b is the sum of b - e_i over i with
    b_i >= 1 (terms with b_i = 0 die in the inverse-polynomial quotient).
    """
    dom = basis_E(m, n, d, s)
    cod = basis_F(m, n, d, s)
    col = {b: j for j, b in enumerate(cod)}
    rows = []
    for b in dom:
        row = [0] * len(cod)
        for i in range(d + 1):
            if b[i] >= 1:
                image = b[:i] + (b[i] - 1,) + b[i + 1 :]
                row[col[image]] += 1
        rows.append(tuple(row))
    return IntMatrix(len(dom), len(cod), tuple(rows))


def direct_cohomology(m: int, n: int, d: int, s) -> tuple[int, CokernelStructure]:
    """(kernel rank, cokernel structure) of the weight space, brute force."""
    mat = full_map_matrix(m, n, d, s)
    _, rank = smith(mat)
    return mat.nrows - rank, cokernel(mat)


def _revlex_key(b: Monomial) -> tuple[int, ...]:
    return tuple(reversed(b))


def triangularity_check(m: int, n: int, d: int, s) -> bool:
    """Assert the brute-force matrix is unitriangular below the threshold.

    With rows and columns sorted by the reversed-tuple order on the
    b-indices (codomain monomials keyed by b + e_0), every off-diagonal
    entry sits strictly below the diagonal and the diagonal is all ones.
    """
    s = tuple(s)
    if s[0] >= min(m, n):
        raise ValueError("triangularity applies only below the threshold")
    nu = omega_from_alpha(top_weight(m, n, d), s)
    if not is_dominant(nu):
        raise ValueError("s must give a dominant weight")
    dom = basis_E(m, n, d, s)
    cod = basis_F(m, n, d, s)
    e0 = (1,) + (0,) * d
    cod_keys = [tuple(x + y for x, y in zip(b, e0)) for b in cod]
    if sorted(cod_keys) != sorted(dom):
        return False
    mat = full_map_matrix(m, n, d, s)
    row_order = sorted(range(len(dom)), key=lambda i: _revlex_key(dom[i]))
    col_order = sorted(range(len(cod)), key=lambda j: _revlex_key(cod_keys[j]))
    for ri, i in enumerate(row_order):
        for rj, j in enumerate(col_order):
            v = mat.rows[i][j]
            if rj == ri and v != 1:
                return False
            if rj > ri and v != 0:
                return False
    return True
