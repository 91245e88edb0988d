"""Exact partial sums of the three binomial series, with certified tails.

All three series have consecutive-term magnitude ratios that approach
r_k = (k+1)**(k+1) / (k**k * 2**(k+1)) < 1, so beyond a stabilization
index a plain geometric majorant with ratio theta_k = (1 + r_k)/2 bounds
the tail.  Early terms can vanish, alternate in sign, or transiently grow
(the binomial tops only become ordinary once the summation index is large
enough), so the tail rule bridges any not-yet-stable terms explicitly by
absolute value and anchors the geometric bound on a window of observed
ratios, every one of which must sit under theta_k.

Partial sums are exact rationals throughout; the harmonic factors in the
root-power series leave the dyadic lattice, so plain Fraction is the
value type here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .binomial import binom
from .certified import CertifiedReal
from .core import check_k
from .errors import DomainError

#: consecutive observed ratios required under theta before the geometric
#: bound is trusted (rides out the transient hump past the sign region)
_RATIO_WINDOW = 3

_MAX_PROBE = 100_000


def term_ratio_limit(k: int) -> Fraction:
    """Limit r_k of consecutive-term magnitude ratios, (k+1)**(k+1) / (k**k * 2**(k+1))."""
    check_k(k)
    return Fraction((k + 1) ** (k + 1), k**k * 2 ** (k + 1))


def _theta(k: int) -> Fraction:
    return (1 + term_ratio_limit(k)) / 2


@dataclass(frozen=True)
class SeriesPartialSum:
    """Exact sum of the first ``terms_used`` terms plus a certified tail bound."""

    terms_used: int
    value: Fraction
    tail_bound: Fraction


class _TailSeries:
    """A series with cached terms and the windowed geometric tail rule."""

    def __init__(self, term: Callable[[int], Fraction], floor: int, k: int,
                 base: Fraction = Fraction(0)):
        self._term = term
        self.floor = floor  # first index of the all-positive ordinary regime
        self.theta = _theta(k)
        self.base = base
        self._cache: dict[int, Fraction] = {}

    def term(self, el: int) -> Fraction:
        t = self._cache.get(el)
        if t is None:
            t = self._cache[el] = self._term(el)
        return t

    def _gate(self, m: int) -> bool:
        # certifies |sum over el >= m| <= |t[m-1]| * theta / (1 - theta):
        # the window of _RATIO_WINDOW ratios ending at t[m-1] lies in the
        # ordinary regime, has no zero term, and every ratio is <= theta
        j0 = m - 1 - _RATIO_WINDOW
        if j0 < self.floor or j0 < 0:
            return False
        window = [self.term(j) for j in range(j0, m)]
        if any(t == 0 for t in window):
            return False
        return all(
            abs(window[i + 1]) <= self.theta * abs(window[i])
            for i in range(_RATIO_WINDOW)
        )

    def tail_bound(self, terms_used: int) -> Fraction:
        m = terms_used
        bridge = Fraction(0)
        while not self._gate(m):
            bridge += abs(self.term(m))
            m += 1
            if m > terms_used + _MAX_PROBE:
                raise RuntimeError("tail bound failed to stabilize")
        return bridge + abs(self.term(m - 1)) * self.theta / (1 - self.theta)

    def partial(self, terms_used: int) -> SeriesPartialSum:
        value = self.base + sum(self.term(el) for el in range(terms_used))
        return SeriesPartialSum(terms_used, value, self.tail_bound(terms_used))


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _rho_power_series(k: int, n: int) -> _TailSeries:
    factor = -n * Fraction(2) ** (n - k - 1)

    def term(el: int) -> Fraction:
        c = binom(k * (el + 1) + el - n, el)
        return factor * Fraction(c, (el + 1) * 2 ** ((k + 1) * el))

    return _TailSeries(term, max(0, _ceil_div(n - k, k)), k, base=Fraction(2) ** n)


def _hermite_series(k: int, a: int) -> _TailSeries:
    def term(el: int) -> Fraction:
        return Fraction(binom((k + 1) * el + a, el), 2 ** ((k + 1) * el))

    return _TailSeries(term, max(0, _ceil_div(-a, k)), k)


def _asymptotic_series(k: int, n: int) -> _TailSeries:
    def term(el: int) -> Fraction:
        top = (k + 1) * el - n
        c = binom(top, el) - binom(top, el - 1)
        return c * Fraction(2) ** (n - 2 - (k + 1) * el)

    return _TailSeries(term, max(0, _ceil_div(n, k - 1)), k)


def _check_terms(terms: int) -> int:
    if not isinstance(terms, int) or terms < 0:
        raise DomainError(f"term count must be a nonnegative integer, got {terms!r}")
    return terms


def rho_power_partial(k: int, n: int, terms: int) -> SeriesPartialSum:
    """Partial sum for rho_k**n: 2**n minus a weighted binomial series.

    With zero terms the value is exactly 2**n.  The limit is rho_k**n;
    at n = 1 the k = 2 case is the classical golden-ratio series.
    """
    check_k(k)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    _check_terms(terms)
    return _rho_power_series(k, n).partial(terms)


def hermite_sum_partial(k: int, a: int, terms: int) -> SeriesPartialSum:
    """Partial sum of sum_el binom((k+1)el + a, el) / 2**((k+1)el).

    The limit equals 2**(a+1) * rho_k**(-a) / ((k+1) rho_k - 2k) for every
    integer a.
    """
    check_k(k)
    if not isinstance(a, int):
        raise DomainError(f"a must be an integer, got {a!r}")
    _check_terms(terms)
    return _hermite_series(k, a).partial(terms)


def asymptotic_series_partial(k: int, n: int, terms: int) -> SeriesPartialSum:
    """Partial sum of the dominant-term series at index n (n != 1).

    The limit equals the dominant-term value computed by
    ``dominant_root.asymptotic``; truncating at floor((n-1)/(k+1)) + 1
    terms gives exactly the integer F[n+k-2].  The index n = 1 is refused:
    the first term of the series degenerates there and the identity's
    derivation relies on it.
    """
    check_k(k)
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if n == 1:
        raise DomainError("n = 1 is excluded from the dominant-term series")
    _check_terms(terms)
    return _asymptotic_series(k, n).partial(terms)


def adaptive_partial(partial: Callable[[int], SeriesPartialSum],
                     tol: Fraction, start: int = 4) -> SeriesPartialSum:
    """Double the term count from ``start`` until the tail bound is <= tol."""
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    terms = start
    while True:
        p = partial(terms)
        if p.tail_bound <= tol:
            return p
        terms *= 2


def rho_power_via_series(k: int, n: int, tol) -> CertifiedReal:
    """rho_k**n summed adaptively until the certified tail is <= tol."""
    tol = Fraction(tol)
    p = adaptive_partial(lambda terms: rho_power_partial(k, n, terms), tol)
    return CertifiedReal(p.value, p.tail_bound)
