#!/usr/bin/env python3
"""List the conjugacy classes whose single-orbit piece hits every irreducible.

For each degree, prints the classes lam for which the induced centralizer
module (symmetric variant h, sign-twisted variant e) contains every
irreducible of S_n.
"""

import argparse

from symcon.characters import to_schur
from symcon.partitions import partitions_of, pretty
from symcon.repmodels import foulkes_series
from symcon.symfunc import E_lambda, H_lambda


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()

    F = foulkes_series(0, args.max_n)
    for n in range(1, args.max_n + 1):
        full_h, full_e = [], []
        for lam in partitions_of(n):
            if to_schur(H_lambda(lam, F), n).verdict == "POSITIVE":
                full_h.append(pretty(lam))
            if to_schur(E_lambda(lam, F), n).verdict == "POSITIVE":
                full_e.append(pretty(lam))
        print(f"n={n:2d}  h: {', '.join(full_h) or '-'}   e: {', '.join(full_e) or '-'}")


if __name__ == "__main__":
    main()
