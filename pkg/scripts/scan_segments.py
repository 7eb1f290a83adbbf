#!/usr/bin/env python3
"""Scan reverse-lex final-segment sums for Schur-negativity.

Every final segment [mu, (1^n)] of the reverse-lexicographic order is
summed and expanded; any negative or non-integral multiplicity is listed.
None are expected.
"""

import argparse

from symcon.characters import to_schur
from symcon.partitions import partitions_of, pretty
from symcon.symfunc import PExpr


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    total = violations = 0
    for n in range(1, args.max_n + 1):
        parts = partitions_of(n)
        tail = PExpr.zero()
        for mu in reversed(parts):
            tail = tail + PExpr.term(mu)
            se = to_schur(tail, n)
            total += 1
            bad = [nu for nu in parts if se.mult(nu) < 0 or se.mult(nu).denominator != 1]
            if bad:
                violations += 1
                print(f"n={n} segment from {pretty(mu)}: negative at "
                      + ", ".join(pretty(nu) for nu in bad))
        print(f"n={n}: {len(parts)} segments scanned")
    print(f"total {total} segments, {violations} violations")


if __name__ == "__main__":
    main()
