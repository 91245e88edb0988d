"""Certified computation of the dominant characteristic root.

The k-step recurrence has characteristic polynomial x**k - x**(k-1) - ... - 1,
equivalently x**(k+1) - 2*x**k + 1 after multiplying by (x - 1).  Its unique
root of modulus > 1, written rho_k, is real and satisfies
2 - 2**(1-k) < rho_k < 2; for k = 2 it is the golden ratio.  The gap
eps_k = 2 - rho_k obeys the fixed-point equation eps = (2 - eps)**(-k)
on (0, 2**(1-k)), where the iteration map is a contraction with the
explicit constant k * (2 - 2**(1-k))**(-(k+1)).  Everything here returns
CertifiedReal values whose bounds come from the standard a-posteriori
contraction estimate, evaluated in exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .certified import CertifiedReal
from .core import check_k, kfib_order_k
from .errors import DomainError

MIN_BITS = 8

#: extra binary digits of the rounding grid relative to the requested bits
_GRID_FACTOR = 4


def _check_bits(bits: int) -> int:
    if not isinstance(bits, int) or bits < MIN_BITS:
        raise DomainError(f"bits must be an integer >= {MIN_BITS}, got {bits!r}")
    return bits


def contraction_factor(k: int) -> Fraction:
    """Lipschitz constant of eps -> (2 - eps)**(-k) on [0, 2**(1-k)].

    Exactly k * (2 - 2**(1-k))**(-(k+1)); less than 1 for every k >= 2
    (the worst case is k = 2 with 2 / 1.5**3).
    """
    check_k(k)
    base = Fraction(2**k - 1, 2 ** (k - 1))  # 2 - 2**(1-k)
    return Fraction(k) / base ** (k + 1)


def _round_to_grid(x: Fraction, grid_bits: int) -> Fraction:
    scale = 1 << grid_bits
    return Fraction(round(x * scale), scale)


def epsilon(k: int, bits: int) -> CertifiedReal:
    """The gap eps_k = 2 - rho_k with certified error at most 2**-bits.

    Iterates eps <- (2 - eps)**(-k) from eps = 2**-k in exact rationals,
    re-rounding each iterate to a dyadic grid of 4*bits + k + 8 binary
    digits so denominators stay bounded (the k term keeps the grid far
    below the scale 2**-k of the value itself).  Stops once the
    a-posteriori bound L * |step| / (1 - L) drops below 2**-(bits+1),
    then inflates the bound by the rounding term delta / (1 - L).
    """
    check_k(k)
    _check_bits(bits)
    grid_bits = _GRID_FACTOR * bits + k + 8
    delta = Fraction(1, 1 << grid_bits)
    lip = contraction_factor(k)
    one_minus = 1 - lip
    upper = Fraction(1, 1 << (k - 1))  # 2**(1-k)
    threshold = Fraction(1, 1 << (bits + 1))

    eps = Fraction(1, 1 << k)
    while True:
        nxt = _round_to_grid(1 / (2 - eps) ** k, grid_bits)
        # the map sends (0, 2**(1-k)) into itself with ample margin; the
        # grid is far too fine to push an iterate out
        assert 0 < nxt < upper
        step = abs(nxt - eps)
        eps = nxt
        post = lip * step / one_minus
        if post <= threshold:
            return CertifiedReal(eps, post + delta / one_minus)


def rho(k: int, bits: int) -> CertifiedReal:
    """The dominant root rho_k = 2 - eps_k with certified error <= 2**-bits."""
    gap = epsilon(k, bits)
    return CertifiedReal(2 - gap.approx, gap.err)


def _dominant_term(k: int, idx: int, bits: int) -> CertifiedReal:
    """(rho-1) / ((k+1)*rho - 2k) * rho**(idx-1) for any integer idx.

    Internal root precision is raised until the propagated bound is at
    most 2**-bits relative to max(1, |value|).
    """
    target = Fraction(1, 1 << bits)
    working = bits + abs(idx) + 16
    while True:
        r = rho(k, working)
        value = ((r - 1) / ((k + 1) * r - 2 * k)) * r ** (idx - 1)
        if value.err <= target * max(Fraction(1), abs(value.approx)):
            return value
        working *= 2


def asymptotic(k: int, n: int, bits: int) -> CertifiedReal:
    """The dominant-term value (rho-1)/((k+1)rho - 2k) * rho**(n-1).

    Note the index alignment: under this package's initial values the
    quantity approximates F[n+k-2], not F[n] (the two coincide at k = 2).
    It is exactly the limit of the series evaluated by
    ``series.asymptotic_series_partial``.
    """
    check_k(k)
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    _check_bits(bits)
    return _dominant_term(k, n, bits)


def asymptotic_ratio(k: int, n: int, bits: int) -> CertifiedReal:
    """F[n] divided by its matched dominant-term approximation.

    The denominator is the dominant term at index n-k+2, the alignment
    under which the ratio tends to 1 as n grows.
    """
    check_k(k)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    _check_bits(bits)
    fib = CertifiedReal.exact(kfib_order_k(k, n))
    target = Fraction(1, 1 << bits)
    working = bits + 16
    while True:
        ratio = fib / _dominant_term(k, n - k + 2, working)
        if ratio.err <= target * max(Fraction(1), abs(ratio.approx)):
            return ratio
        working *= 2
