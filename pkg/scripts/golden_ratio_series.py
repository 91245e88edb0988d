#!/usr/bin/env python3
"""Watch the golden-ratio series converge, with its certified tail bounds.

Prints the exact partial sums of phi = 2 - sum_el binom(3*el+1, el) /
((el+1) * 2**(3*el+2)) together with the certified tail bound and, for
comparison, the true error against a 60-digit integer-square-root
reference.  The tail bound must dominate the true error on every row.
"""

import argparse
from fractions import Fraction
from math import isqrt

from kfib.series import rho_power_partial


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--terms", type=int, default=24, help="rows to print")
    args = ap.parse_args()

    digits = 60
    scale = 10**digits
    phi = Fraction(scale + isqrt(5 * scale * scale), 2 * scale)

    print(f"{'L':>3}  {'partial sum':<22}  {'tail bound':<12}  true error")
    for terms in range(1, args.terms + 1):
        p = rho_power_partial(2, 1, terms)
        true_err = abs(p.value - phi)
        assert true_err <= p.tail_bound + Fraction(1, scale)
        print(f"{terms:>3}  {float(p.value):<22.18f}  {float(p.tail_bound):<12.3e}  "
              f"{float(true_err):.3e}")
    print(f"\nreference phi = {float(phi):.18f}... (60-digit isqrt oracle)")


if __name__ == "__main__":
    main()
