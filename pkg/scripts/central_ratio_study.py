#!/usr/bin/env python3
"""Central-coefficient ratio study.

Tracks the ratio of the exact central coefficient to its Gaussian
prediction (q+1)**n / sqrt(2*pi*n*q*(q+2)/12) as n doubles.  The gap to
unity should shrink like c/n, so the last column should level off at
the constant c (0.1875 for q = 2).
"""

from __future__ import annotations

import argparse

from extbinom import central_ratio


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=2)
    parser.add_argument("--n-start", type=int, default=25)
    parser.add_argument("--doublings", type=int, default=6)
    args = parser.parse_args()

    q = args.q
    print(f"{'n':>6} {'ratio':>20} {'|ratio-1|':>12} {'n*|ratio-1|':>12}")
    n = args.n_start
    for _ in range(args.doublings):
        if (n * q) % 2 == 0:
            ratio = central_ratio(n, q)
            gap = abs(ratio - 1)
            print(f"{n:>6} {ratio:>20.15f} {gap:>12.3e} {n * gap:>12.6f}")
        n *= 2


if __name__ == "__main__":
    main()
