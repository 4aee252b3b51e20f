"""Scan a (m, n) grid and tabulate every nonzero cohomology weight space.

Example:
    python scripts/torsion_scan.py --d 3 --max-m 6 --max-n 6 --p 2 --p 3
"""

import argparse

from flagcoh.lattice import enumerate_dominant_s
from flagcoh.modular import hd1_dim_mod_p, hd_dim_mod_p
from flagcoh.reduced_matrix import weight_space_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--p", type=int, action="append", default=[])
    args = ap.parse_args()

    header = ["m", "n", "s", "omega", "kernel", "free", "torsion"]
    header += [f"dims mod {p}" for p in args.p]
    print("\t".join(header))
    for m in range(args.max_m + 1):
        for n in range(args.max_n + 1):
            for s in enumerate_dominant_s(m, n, args.d):
                rep = weight_space_report(m, n, args.d, s)
                if (
                    rep.kernel_rank == 0
                    and rep.cokernel.is_zero
                ):
                    continue
                row = [
                    str(m),
                    str(n),
                    ",".join(map(str, s)),
                    ",".join(map(str, rep.nu)),
                    str(rep.kernel_rank),
                    str(rep.cokernel.free_rank),
                    ",".join(map(str, rep.cokernel.invariant_factors)) or "-",
                ]
                row += [
                    f"{hd1_dim_mod_p(rep, p)},{hd_dim_mod_p(rep, p)}"
                    for p in args.p
                ]
                print("\t".join(row))


if __name__ == "__main__":
    main()
