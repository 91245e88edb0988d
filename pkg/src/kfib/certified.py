"""Approximations that carry exact absolute-error bounds.

A CertifiedReal is a pair (approx, err) of exact rationals guaranteeing
|approx - true| <= err.  All arithmetic is performed exactly on the
rationals and the bound is propagated conservatively, interval-style, so
any comparison derived from certified values stays rigorous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class CertifiedReal:
    approx: Fraction
    err: Fraction

    def __post_init__(self):
        object.__setattr__(self, "approx", _frac(self.approx))
        object.__setattr__(self, "err", _frac(self.err))
        if self.err < 0:
            raise ValueError("error bound must be nonnegative")

    @classmethod
    def exact(cls, value) -> "CertifiedReal":
        return cls(_frac(value), Fraction(0))

    # -- interval endpoints --------------------------------------------

    @property
    def lo(self) -> Fraction:
        return self.approx - self.err

    @property
    def hi(self) -> Fraction:
        return self.approx + self.err

    def contains(self, value) -> bool:
        return self.lo <= _frac(value) <= self.hi

    def agrees_with(self, other: "CertifiedReal", slack=0) -> bool:
        """True when the two certified values are compatible: the gap
        between approximations is within the combined bounds plus slack."""
        return abs(self.approx - other.approx) <= self.err + other.err + _frac(slack)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CertifiedReal):
            return other
        if isinstance(other, (int, Fraction)):
            return CertifiedReal.exact(other)
        return None

    def __neg__(self):
        return CertifiedReal(-self.approx, self.err)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CertifiedReal(self.approx + other.approx, self.err + other.err)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CertifiedReal(self.approx - other.approx, self.err + other.err)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        err = (
            abs(self.approx) * other.err
            + abs(other.approx) * self.err
            + self.err * other.err
        )
        return CertifiedReal(self.approx * other.approx, err)

    __rmul__ = __mul__

    def reciprocal(self) -> "CertifiedReal":
        margin = abs(self.approx) - self.err
        if margin <= 0:
            raise ZeroDivisionError("certified interval contains zero")
        # |1/x - 1/y| = |x - y| / |x y| <= err / (|approx| * margin)
        return CertifiedReal(1 / self.approx, self.err / (abs(self.approx) * margin))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, m: int):
        """Integer power with the bound m * B**(m-1) * err, B = |approx| + err."""
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return (self ** (-m)).reciprocal()
        if m == 0:
            return CertifiedReal.exact(1)
        if m == 1:
            return self
        bound_base = abs(self.approx) + self.err
        return CertifiedReal(self.approx**m, m * bound_base ** (m - 1) * self.err)
