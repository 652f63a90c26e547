#!/usr/bin/env python3
"""Four ways to embed permutations as a point locus, four distributions.

Each Hilbert series comes from the evaluation-span engine; the right-hand
columns are independent direct statistic counts over S_n.
"""

import argparse

from covg import hilbert_series, kostant_locus, permmatrix_locus, permutohedral_locus
from covg import braid_com, tope_locus
from covg import permstats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    args = parser.parse_args()

    rows = [
        ("braid tope locus", lambda n: tope_locus(braid_com(n)), lambda n: permstats.cycle_defect(n)),
        ("one-line locus", kostant_locus, permstats.mahonian),
        ("prefix-drop locus", permutohedral_locus, permstats.eulerian),
        ("matrix locus", permmatrix_locus, permstats.lis_defect),
    ]
    for n in range(2, args.max_n + 1):
        print(f"n = {n}")
        for name, locus, stat in rows:
            series = list(hilbert_series(locus(n)).coeffs)
            expected = stat(n)
            mark = "ok" if series == expected else "MISMATCH"
            print(f"  {name:<18} {series}  direct count {expected}  [{mark}]")


if __name__ == "__main__":
    main()
