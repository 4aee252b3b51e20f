"""Survey the wall case m = n: determinants, closed forms and valuations.

For every square weight space the direct determinant is compared against
the hook-product formula, and p-adic valuations are printed for the
requested primes.

Example:
    python scripts/wall_determinant_survey.py --d 3 --max-n 7 --p 2 --p 3
"""

import argparse

from flagcoh.determinants import exact_det, proctor_det
from flagcoh.lattice import enumerate_dominant_s
from flagcoh.modular import p_adic_valuation
from flagcoh.reduced_matrix import build_matrix, build_sets


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--p", type=int, action="append", default=[])
    args = ap.parse_args()

    header = ["n", "s", "k", "h", "det", "closed form"]
    header += [f"v_{p}" for p in args.p]
    print("\t".join(header))
    mismatches = 0
    for n in range(1, args.max_n + 1):
        for s in enumerate_dominant_s(n, n, args.d):
            if s[0] < n:
                continue
            spec = build_sets(n, n, args.d, s)
            direct = exact_det(build_matrix(spec))
            closed = proctor_det(n, spec.k, args.d, spec.h)
            if abs(direct) != abs(closed):
                mismatches += 1
            row = [
                str(n),
                ",".join(map(str, s)),
                str(spec.k),
                ",".join(map(str, spec.h)),
                str(direct),
                str(closed),
            ]
            row += [
                str(p_adic_valuation(direct, p)) if direct else "inf"
                for p in args.p
            ]
            print("\t".join(row))
    if mismatches:
        raise SystemExit(f"{mismatches} closed-form mismatches")


if __name__ == "__main__":
    main()
