#!/usr/bin/env python3
"""Survey the exact minimum balancing additions for every high-degree tree
of each order and compare with the closed forms.

For a given order n the trees with maximum degree >= n-3 are exactly the
recognized family instances: the star (m = n-1), the one-long-branch tree
(m = n-2), and the three order-(m+3) families (m = n-3).  Each instance is
solved by the exhaustive search, naive up to a configurable order and with
the regular-candidate prune beyond it, and checked against the formula.
"""

import argparse
import sys
import time

from distbalance import (
    FamilyTag,
    SearchConfig,
    TreeFamily,
    canonical_family_tree,
    minimum_additions_formula,
    search_minimum_additions,
)


def instances_of_order(n):
    if n >= 2:
        yield FamilyTag.STAR, n - 1
    if n >= 4:
        yield FamilyTag.S2, n - 2
    if n >= 5:
        yield FamilyTag.S22, n - 3
    if n >= 6:
        yield FamilyTag.S3, n - 3
        yield FamilyTag.BROOM, n - 3


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--naive-limit", type=int, default=7,
                        help="largest order solved without the regular prune")
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    print(f"{'family':<7}{'m':>3}{'n':>4}{'formula':>9}{'search':>8}"
          f"{'mode':>9}{'explored':>10}{'seconds':>9}")
    ok = True
    for n in range(2, args.max_n + 1):
        for tag, m in instances_of_order(n):
            tree = canonical_family_tree(tag, m)
            mode = "naive" if n <= args.naive_limit else "regular"
            t0 = time.perf_counter()
            result = search_minimum_additions(
                tree, SearchConfig(prune_mode=mode, threads=args.threads))
            elapsed = time.perf_counter() - t0
            formula = minimum_additions_formula(TreeFamily(tag, m, None))
            match = result.min_additions == formula
            ok = ok and match
            print(f"{tag.value:<7}{m:>3}{n:>4}{formula:>9}"
                  f"{result.min_additions:>8}{mode:>9}{result.explored:>10}"
                  f"{elapsed:>9.2f}" + ("" if match else "  MISMATCH"))
    print("all values match the closed forms" if ok else "MISMATCHES FOUND")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
