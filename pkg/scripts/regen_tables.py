#!/usr/bin/env python3
"""Regenerate the four decomposition tables from scratch and print them."""

import argparse

from symcon.partitions import partitions_of, pretty
from symcon.verify import table_decomposition

TITLES = {
    "t1": "conjugation action",
    "t2": "sign-twisted conjugation action",
    "t3": "conjugation action on the even/odd cosets",
    "t4": "twisted conjugation action on the even/odd cosets",
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--kinds", default="t1,t2,t3,t4")
    args = ap.parse_args()

    for kind in args.kinds.split(","):
        print(f"== {kind}: {TITLES[kind]} ==")
        lo = 1 if kind in ("t1", "t2") else 2
        for n in range(lo, args.max_n + 1):
            blocks = table_decomposition(kind, n)
            for name, se in blocks.items():
                row = ", ".join(
                    f"{pretty(nu)}:{int(se.mult(nu))}"
                    for nu in partitions_of(n)
                    if se.mult(nu)
                )
                label = f" {name}" if len(blocks) > 1 else ""
                print(f"n={n}{label}: {row}")
        print()


if __name__ == "__main__":
    main()
