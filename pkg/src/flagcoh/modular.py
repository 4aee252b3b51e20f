"""Characteristic-p analysis of the cohomology modules.

Multiplicities over a field of characteristic p are always derived from
the integer Smith normal form (free rank plus the count of invariant
factors divisible by p), so one exact computation serves every prime;
mod-p Gaussian elimination is kept as an independent cross-check in the
tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .determinants import exact_det
from .lattice import (
    Weight,
    dominant_weights_below,
    enumerate_dominant_s,
    freudenthal_multiplicity,
    is_dominant,
    omega_from_alpha,
    s_from_weight,
)
from .reduced_matrix import (
    WeightSpaceReport,
    build_matrix,
    build_sets,
    top_weight,
    weight_space_report,
)
from .snf import is_prime


def p_adic_valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        v += 1
    return v


def hd_dim_mod_p(report: WeightSpaceReport, p: int) -> int:
    """dim of the top cohomology weight space over a field of char p."""
    return report.cokernel.free_rank + sum(
        1 for f in report.cokernel.invariant_factors if f % p == 0
    )


def hd1_dim_mod_p(report: WeightSpaceReport, p: int) -> int:
    """dim of the degree-(d-1) weight space over a field of char p; the
    torsion of the top module feeds back in through Tor."""
    return report.kernel_rank + sum(
        1 for f in report.cokernel.invariant_factors if f % p == 0
    )


@dataclass(frozen=True)
class WeightRecord:
    report: WeightSpaceReport
    mod_p: dict[int, tuple[int, int]]  # p -> (dim H^{d-1}, dim H^d)

    @property
    def nu(self) -> Weight:
        return self.report.nu


def multiplicity_report(m: int, n: int, d: int, primes=()) -> list[WeightRecord]:
    """One record per dominant weight, with invariant factors, free rank
    and per-prime dimensions; ordered lexicographically by s."""
    primes = tuple(primes)
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    records = []
    for s in enumerate_dominant_s(m, n, d):
        rep = weight_space_report(m, n, d, s)
        mod = {p: (hd1_dim_mod_p(rep, p), hd_dim_mod_p(rep, p)) for p in primes}
        records.append(WeightRecord(report=rep, mod_p=mod))
    return records


def no_p_torsion_check(n: int, d: int, p: int) -> bool:
    """True iff no invariant factor of the wall module m=n is divisible by
    p; only stated for primes p > n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= n:
        raise ValueError("statement requires p > n")
    return all(
        all(f % p for f in rec.report.cokernel.invariant_factors)
        for rec in multiplicity_report(n, n, d)
    )


def _lambda0(p: int, d: int) -> Weight:
    # (-1, p, 0, ..., 0) - alpha_2 in omega coordinates
    base = omega_from_alpha(top_weight(p, p, d), (p,) + (0,) * (d - 1))
    s2 = (0, 1) + (0,) * (d - 2)
    return omega_from_alpha(base, s2)


def epp_check(p: int, d: int) -> bool:
    """For m = n = p: the mod-p nonzero weights are exactly the dominant
    weights below (0, p-2, 1, 0, ..., 0), each of multiplicity 1, and the
    wall determinant there has p-adic valuation exactly 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    lam0 = _lambda0(p, d)
    expected = {nu for _, nu in dominant_weights_below(lam0)}
    seen = {}
    for rec in multiplicity_report(p, p, d, (p,)):
        dim = rec.mod_p[p][1]
        if dim:
            seen[rec.nu] = (dim, rec.report.s)
    if set(seen) != expected:
        return False
    for nu, (dim, s) in seen.items():
        if dim != 1:
            return False
        spec = build_sets(p, p, d, s)
        det = exact_det(build_matrix(spec))
        if p_adic_valuation(det, p) != 1:
            return False
    return True


def lambda_r_check(p: int, d: int, r: int) -> bool:
    """For m = n = p + r: the weight lambda_r carries mod-p multiplicity 1.

    Case (i) 0 <= r <= p-2: lambda_r = (-1,n,0,...,0) - (r+1)*alpha_2;
    case (ii) r = p-1 with d >= 3: subtract p*alpha_2 + alpha_3 instead.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not (0 <= r <= p - 2 or (r == p - 1 and d >= 3)):
        raise ValueError("r outside the admissible cases")
    n = p + r
    if r <= p - 2:
        s = (n, r + 1) + (0,) * (d - 2)
    else:
        s = (n, r + 1, 1) + (0,) * (d - 3)
    rep = weight_space_report(n, n, d, s)
    return hd_dim_mod_p(rep, p) == 1


def _digits(m: int, p: int) -> list[int]:
    if m == 0:
        return [0]
    out = []
    while m:
        m, r = divmod(m, p)
        out.append(r)
    return out


DotyTuple = tuple[int, ...]


def doty_E(m: int, p: int) -> list[DotyTuple]:
    """Digit tuples indexing the submodule lattice of H^0(m,0) for SL_3 in
    characteristic p: all a in {0,1,2}^d with
    0 <= c_u(m) + a_{u+1}*p - a_u <= 3(p-1) for u = 0..d, where d is the
    index of the highest nonzero p-adic digit of m."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 0:
        raise ValueError("m must be nonnegative")
    c = _digits(m, p)
    d = len(c) - 1
    out = []
    for a in product((0, 1, 2), repeat=d):
        ext = (0, *a, 0)
        if all(0 <= c[u] + ext[u + 1] * p - ext[u] <= 3 * (p - 1) for u in range(d + 1)):
            out.append(a)
    return out


def doty_factor_weight(a: DotyTuple, m: int, p: int) -> Weight:
    """Highest weight (2 coordinates) of the simple factor of H^0(m,0)
    indexed by the digit tuple a; callers dualize (swap coordinates) for
    the factors of the dual Weyl module."""
    c = _digits(m, p)
    d = len(c) - 1
    if len(a) != d:
        raise ValueError("digit tuple has wrong length")
    ext = (0, *a, 0)
    b = [0, 0, 0]
    for u in range(d + 1):
        nq, rq = divmod(c[u] + ext[u + 1] * p - ext[u], p - 1)
        for j in (1, 2, 3):
            if j <= nq:
                digit = p - 1
            elif j == nq + 1:
                digit = rq
            else:
                digit = 0
            b[j - 1] += digit * p**u
    return (b[0] - b[1], b[1] - b[2])


def wall_nu(n: int, t: int, k: int) -> Weight:
    """Dominant weight (t-2k-1, n+k-2t) of the SL_3 wall weight space with
    drops s = (n+k, t)."""
    return (t - 2 * k - 1, n + k - 2 * t)


@dataclass(frozen=True)
class Main3Report:
    p: int
    a: int
    dexp: int
    r: int
    n: int
    deficits: dict[Weight, int]
    support_weight: Weight | None  # the expected top of the deficit (a >= 2)
    ok: bool
    failures: tuple[str, ...]


def main3_deficit_check(p: int, a: int, dexp: int, r: int) -> Main3Report:
    """Character-level check of the wall module for SL_3 at n = a*p^dexp + r.

    The deficit of a dominant weight is its Weyl-module multiplicity in
    V(r, n-2r-2) minus its mod-p multiplicity in the top cohomology.  The
    deficit must be nonnegative, vanish identically when a = 1, and for
    a >= 2 be supported below (p^dexp - 1, (a-2)*p^dexp + r) with value 1
    at that weight.  At n = p^2 - 1 the whole module must vanish.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not (1 <= a <= p - 1 and 0 <= r <= p - 1 and dexp >= 1):
        raise ValueError("parameters out of range")
    n = a * p**dexp + r
    h2 = {
        rec.nu: rec.mod_p[p][1]
        for rec in multiplicity_report(n, n, 2, (p,))
        if rec.mod_p[p][1]
    }
    lam = (r, n - 2 * r - 2)
    weyl: dict[Weight, int] = {}
    if is_dominant(lam):
        weyl = {nu: freudenthal_multiplicity(lam, nu) for _, nu in dominant_weights_below(lam)}
    deficits = {
        nu: weyl.get(nu, 0) - h2.get(nu, 0) for nu in set(weyl) | set(h2)
    }
    failures = []
    if any(v < 0 for v in deficits.values()):
        failures.append("negative deficit")
    support = None
    if a == 1:
        if any(deficits.values()):
            failures.append("nonzero deficit with a = 1")
    else:
        support = (p**dexp - 1, (a - 2) * p**dexp + r)
        if deficits.get(support) != 1:
            failures.append("deficit at the support weight is not 1")
        for nu, v in deficits.items():
            if v and s_from_weight(support, nu) is None:
                failures.append(f"deficit outside the support cone at {nu}")
    if n == p**2 - 1 and h2:
        failures.append("module does not vanish at n = p^2 - 1")
    return Main3Report(
        p=p,
        a=a,
        dexp=dexp,
        r=r,
        n=n,
        deficits=deficits,
        support_weight=support,
        ok=not failures,
        failures=tuple(failures),
    )
