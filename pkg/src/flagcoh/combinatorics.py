"""Multinomial coefficients and bounded-composition sets.

The multinomial here uses the vanishing convention (zero for negative
parts or a part-sum mismatch), which the matrix builders rely on
silently.  Composition sets are materialized eagerly and kept in
lexicographic order so downstream reports are byte-stable.
"""

from __future__ import annotations

from math import factorial

Composition = tuple[int, ...]
HProfile = tuple[int, ...]


def multinomial(top: int, parts) -> int:
    """top! / prod(parts_i!), or 0 for negative parts / sum mismatch."""
    if top < 0:
        raise ValueError("top index must be nonnegative")
    parts = tuple(parts)
    if any(p < 0 for p in parts) or sum(parts) != top:
        return 0
    out = factorial(top)
    for p in parts:
        out //= factorial(p)
    return out


def compositions(d: int, h, ell: int) -> list[Composition]:
    """All (b_1,...,b_d) with sum ell and b_i <= h_i, lex sorted.

    Empty for ell < 0 or ell > sum(h).
    """
    h = tuple(h)
    if len(h) != d:
        raise ValueError("profile length must equal d")
    out: list[Composition] = []
    if ell < 0:
        return out

    def rec(pos: int, left: int, cur: list[int]) -> None:
        if pos == d:
            if left == 0:
                out.append(tuple(cur))
            return
        if left > sum(h[pos:]):
            return
        for v in range(0, min(h[pos], left) + 1):
            rec(pos + 1, left - v, cur + [v])

    rec(0, ell, [])
    return out


def count_compositions(d: int, h, ell: int) -> int:
    return len(compositions(d, h, ell))


def delta(d: int, h, ell: int) -> int:
    """|C(d,h,ell)| - |C(d,h,ell-1)| with C(d,h,-1) empty."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    return count_compositions(d, h, ell) - count_compositions(d, h, ell - 1)


def partial_sum_S(d: int, h, ell: int) -> int:
    """|C(d,h,0)| + ... + |C(d,h,ell)|."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    return sum(count_compositions(d, h, i) for i in range(ell + 1))


def delta_via_slice(d: int, h, k: int, ell: int) -> int:
    """Count of b in C(d,h,k) with b_1 = ell; equals delta(d,h,k-ell) when
    h_1 >= k."""
    h = tuple(h)
    if h[0] < k:
        raise ValueError("slice formula needs h_1 >= k")
    if not 0 <= ell <= k:
        raise ValueError("need 0 <= ell <= k")
    return sum(1 for b in compositions(d, h, k) if b[0] == ell)


def complement_bijection(h, b) -> Composition:
    """(h_1-b_1,...,h_d-b_d); an involution between C(d,h,n) and C(d,h,k)
    when sum(h) = n+k."""
    h, b = tuple(h), tuple(b)
    if len(h) != len(b):
        raise ValueError("length mismatch")
    if any(not 0 <= x <= hi for x, hi in zip(b, h)):
        raise ValueError("composition exceeds profile bound")
    return tuple(hi - x for hi, x in zip(h, b))
