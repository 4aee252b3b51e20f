"""Weight and root arithmetic for the type A_d weight lattice.

Weights are stored in fundamental-weight coordinates (length-d integer
tuples).  Root-direction drops from a base weight are kept separately as
s-tuples (coefficients of the simple roots alpha_1..alpha_d).  All
functions here are pure and exact over Python integers.
"""

from __future__ import annotations

import itertools
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

Weight = tuple[int, ...]
STuple = tuple[int, ...]


class Regime(Enum):
    """Position of mu = (m,0,...,0,-n-d) relative to the reflection wall."""

    BELOW = "below"  # n < m
    WALL = "wall"    # n == m
    ABOVE = "above"  # n > m


def regime(m: int, n: int) -> Regime:
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if n < m:
        return Regime.BELOW
    if n == m:
        return Regime.WALL
    return Regime.ABOVE


def cartan_matrix(d: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of type A_d (symmetric tridiagonal, 2 on the diagonal)."""
    if d < 1:
        raise ValueError("rank must be >= 1")
    return tuple(
        tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(d))
        for i in range(d)
    )


def omega_from_alpha(base: Weight, s: STuple) -> Weight:
    """Return base - sum_i s_i * alpha_i in fundamental-weight coordinates."""
    d = len(base)
    if len(s) != d:
        raise ValueError(f"length mismatch: base has rank {d}, s has length {len(s)}")
    ext = (0, *s, 0)
    return tuple(base[j] + ext[j] - 2 * ext[j + 1] + ext[j + 2] for j in range(d))


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w)


def lift(w: Weight) -> tuple[int, ...]:
    """Epsilon-coordinate lift of a weight: suffix sums, last entry 0.

    The lift sends omega_j to (1,...,1,0,...,0) with j ones, so simple
    roots lift to e_{i-1} - e_i and the dominance order becomes the usual
    prefix-sum order on integer vectors of equal total.
    """
    d = len(w)
    out = [0] * (d + 1)
    for i in range(d - 1, -1, -1):
        out[i] = out[i + 1] + w[i]
    return tuple(out)


def _matched_lift(a: tuple[int, ...], nu: Weight) -> tuple[int, ...] | None:
    """Representative of nu with the same coordinate sum as a.

    Lifts are canonical only modulo the all-ones vector; two weights differ
    by a root-lattice element iff their lifts can be shifted to equal sums.
    """
    b = lift(nu)
    shift, rem = divmod(sum(a) - sum(b), len(a))
    if rem:
        return None
    return tuple(x + shift for x in b)


def s_from_weight(base: Weight, nu: Weight) -> STuple | None:
    """Solve base - nu = sum s_i alpha_i with s_i >= 0; None if impossible."""
    if len(base) != len(nu):
        raise ValueError("rank mismatch")
    a = lift(base)
    b = _matched_lift(a, nu)
    if b is None:
        return None
    s = []
    acc = 0
    for i in range(len(base)):
        acc += a[i] - b[i]
        if acc < 0:
            return None
        s.append(acc)
    return tuple(s)


def _nonincreasing_tuples(d: int, hi: int):
    if d == 0:
        yield ()
        return
    for v in range(hi + 1):
        for rest in _nonincreasing_tuples(d - 1, v):
            yield (v, *rest)


def enumerate_dominant_s(m: int, n: int, d: int) -> list[STuple]:
    """All s with (m+n-1)*omega_1 - sum s_i alpha_i dominant, lex sorted.

    Dominance forces s_1 >= s_2 >= ... >= s_d >= 0 and s_1 <= m+n-1, so a
    finite box suffices.
    """
    if d < 2:
        raise ValueError("rank must be >= 2")
    top = m + n - 1
    if top < 0:
        return []
    base = (top,) + (0,) * (d - 1)
    out = [
        s
        for s in _nonincreasing_tuples(d, top)
        if is_dominant(omega_from_alpha(base, s))
    ]
    out.sort()
    return out


def _dominant_lifts_below(a: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Weakly decreasing integer vectors <= a in the prefix-sum order."""
    n = len(a)
    total = sum(a)
    prefix = list(itertools.accumulate(a))
    lo, hi = a[-1], a[0]
    out: list[tuple[int, ...]] = []

    def rec(pos: int, acc: int, prev: int, cur: list[int]) -> None:
        if pos == n - 1:
            last = total - acc
            if lo <= last <= prev:
                out.append(tuple(cur + [last]))
            return
        remaining = n - 1 - pos
        for v in range(min(prev, prefix[pos] - acc), lo - 1, -1):
            # the tail is weakly decreasing, so it cannot exceed remaining*v
            if acc + v + remaining * v < total:
                break
            rec(pos + 1, acc + v, v, cur + [v])

    rec(0, 0, hi, [])
    return out


def dominant_weights_below(base: Weight) -> list[tuple[STuple, Weight]]:
    """All (s, nu) with nu = base - sum s_i alpha_i dominant, lex sorted by s."""
    d = len(base)
    a = lift(base)
    pairs = []
    for b in _dominant_lifts_below(a):
        nu = tuple(b[i] - b[i + 1] for i in range(d))
        s = s_from_weight(base, nu)
        assert s is not None
        pairs.append((s, nu))
    pairs.sort()
    return pairs


def _positive_roots(rank_plus_one: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(rank_plus_one):
        for j in range(i + 1, rank_plus_one):
            v = [0] * rank_plus_one
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
    return roots


def _dominates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    acc = 0
    for x, y in zip(a, b):
        acc += x - y
        if acc < 0:
            return False
    return acc == 0


@lru_cache(maxsize=None)
def _weight_table(lam: Weight) -> dict[tuple[int, ...], int]:
    """Multiplicities of all dominant weights of V(lam), keyed by lift."""
    if not is_dominant(lam):
        raise ValueError("highest weight must be dominant")
    d = len(lam)
    a = lift(lam)
    rho = tuple(range(d, -1, -1))
    roots = _positive_roots(d + 1)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    lam_rho = tuple(x + y for x, y in zip(a, rho))
    lam_norm = dot(lam_rho, lam_rho)

    doms = _dominant_lifts_below(a)
    # height of lam - mu, i.e. the total alpha-coordinate drop
    heights = {
        mu: sum(itertools.accumulate(x - y for x, y in zip(a, mu))) for mu in doms
    }
    table: dict[tuple[int, ...], int] = {}
    for mu in sorted(doms, key=lambda v: heights[v]):
        if mu == a:
            table[mu] = 1
            continue
        acc = 0
        height = heights[mu]
        for alpha in roots:
            for j in range(1, height + 1):
                w = tuple(x + j * y for x, y in zip(mu, alpha))
                rep = tuple(sorted(w, reverse=True))
                mult = table.get(rep, 0)
                if mult:
                    acc += mult * dot(w, alpha)
        mu_rho = tuple(x + y for x, y in zip(mu, rho))
        denom = lam_norm - dot(mu_rho, mu_rho)
        num = 2 * acc
        assert denom > 0 and num % denom == 0
        table[mu] = num // denom
    return table


def freudenthal_multiplicity(lam: Weight, nu: Weight) -> int:
    """Multiplicity of the weight nu in the Weyl module V(lam); 0 if nu is
    not below lam."""
    if len(lam) != len(nu):
        raise ValueError("rank mismatch")
    a = lift(lam)
    b = _matched_lift(a, nu)
    if b is None:
        return 0
    rep = tuple(sorted(b, reverse=True))
    if not _dominates(a, rep):
        return 0
    return _weight_table(lam).get(rep, 0)


def weyl_dimension(lam: Weight) -> int:
    """dim V(lam) by the dimension formula, exact."""
    if not is_dominant(lam):
        raise ValueError("weight must be dominant")
    d = len(lam)
    a = lift(lam)
    val = Fraction(1)
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            val *= Fraction(a[i] - a[j] + j - i, j - i)
    assert val.denominator == 1
    return int(val)


def orbit_size(nu: Weight) -> int:
    """Size of the Weyl orbit (symmetric group orbit of the lift)."""
    a = lift(nu)
    size = factorial(len(a))
    for v in set(a):
        size //= factorial(a.count(v))
    return size
