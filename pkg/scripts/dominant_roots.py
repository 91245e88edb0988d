#!/usr/bin/env python3
"""Tabulate certified dominant roots of the k-step recurrences.

For each k the table shows rho_k to the requested number of digits, the
certified error bound, and whether the interval sits strictly inside the
window (2 - 2**(1-k), 2).
"""

import argparse
from fractions import Fraction

from kfib.dominant_root import rho


def dec(x: Fraction, digits: int) -> str:
    scaled = round(x * 10**digits)
    body = str(abs(scaled)).rjust(digits + 1, "0")
    sign = "-" if scaled < 0 else ""
    return f"{sign}{body[:-digits]}.{body[-digits:]}"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=16)
    ap.add_argument("--bits", type=int, default=96)
    ap.add_argument("--digits", type=int, default=25)
    args = ap.parse_args()

    print(f"{'k':>3}  {'rho_k':<{args.digits + 3}}  {'err <=':<10}  window")
    for k in range(2, args.k_max + 1):
        r = rho(k, args.bits)
        lower = Fraction(2) - Fraction(1, 2 ** (k - 1))
        inside = lower < r.lo and r.hi < 2
        print(f"{k:>3}  {dec(r.approx, args.digits)}  {float(r.err):<10.2e}  "
              f"{'inside' if inside else 'VIOLATED'}")


if __name__ == "__main__":
    main()
