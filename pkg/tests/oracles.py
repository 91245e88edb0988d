"""Independent reference computations used only by the test suite.

Nothing here shares code paths with the package: factorials are computed
by a local loop, the golden ratio comes from an integer square root, and
dominant roots come from sign-change bisection on the degree-(k+1)
polynomial.  Each oracle returns exact rationals with explicit error
intervals so comparisons against certified package output stay rigorous.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def plain_factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def factorial_binom(a: int, b: int) -> int:
    """a! / (b! (a-b)!) for 0 <= b <= a, via the local factorial only."""
    assert 0 <= b <= a
    return plain_factorial(a) // (plain_factorial(b) * plain_factorial(a - b))


def phi_reference(digits: int = 60) -> tuple[Fraction, Fraction]:
    """(approx, err) for the golden ratio via isqrt(5 * 10**(2*digits)).

    The floor square root gives phi - 10**-digits/2 < approx <= phi.
    """
    scale = 10**digits
    root5 = isqrt(5 * scale * scale)
    approx = Fraction(scale + root5, 2 * scale)
    return approx, Fraction(1, 2 * scale)


def bisect_dominant_root(k: int, iters: int = 300) -> tuple[Fraction, Fraction]:
    """(approx, err) for the dominant root by exact-sign bisection.

    Bisects p(x) = x**(k+1) - 2*x**k + 1 on (2 - 2**(1-k), 2), where the
    dominant root is the only zero; polynomial signs are evaluated in
    exact rational arithmetic, so the bracket is rigorous.
    """

    def p(x: Fraction) -> Fraction:
        return x ** (k + 1) - 2 * x**k + 1

    lo = Fraction(2) - Fraction(1, 2 ** (k - 1))
    hi = Fraction(2)
    assert p(lo) < 0 < p(hi)
    for _ in range(iters):
        mid = (lo + hi) / 2
        v = p(mid)
        if v < 0:
            lo = mid
        elif v > 0:
            hi = mid
        else:
            return mid, Fraction(0)
    return (lo + hi) / 2, (hi - lo) / 2


def fib_pair(n: int) -> tuple[int, int]:
    """(F[n], F[n-1]) for the classical Fibonacci numbers, n >= 1."""
    a, b = 0, 1  # F[0], F[1]
    for _ in range(n - 1):
        a, b = b, a + b
    return b, a
