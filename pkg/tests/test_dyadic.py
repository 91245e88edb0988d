from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kfib.dyadic import Dyadic
from kfib.errors import IntegralityError

dyadics = st.builds(Dyadic, st.integers(-10**9, 10**9), st.integers(0, 40))


def test_canonical_form():
    assert (Dyadic(4, 2).num, Dyadic(4, 2).exp) == (1, 0)
    assert (Dyadic(6, 1).num, Dyadic(6, 1).exp) == (3, 0)
    assert (Dyadic(0, 7).num, Dyadic(0, 7).exp) == (0, 0)
    assert (Dyadic(3, 0).num, Dyadic(3, 0).exp) == (3, 0)
    # negative exponent means scaling up
    assert (Dyadic(3, -2).num, Dyadic(3, -2).exp) == (12, 0)


def test_integer_conversion():
    assert Dyadic(12, 2).as_integer() == 3
    with pytest.raises(IntegralityError):
        Dyadic(3, 1).as_integer()


def test_decimal_rendering():
    assert Dyadic(65, 4).decimal() == "4.0625"
    assert Dyadic(-3, 1).decimal() == "-1.5"
    assert Dyadic(7).decimal() == "7"
    assert Dyadic(1, 10).decimal() == "0.0009765625"


def test_comparisons():
    assert Dyadic(1, 1) < Dyadic(3, 2) < Dyadic(1)
    assert Dyadic(55) == 55
    assert Dyadic(65, 4) == Fraction(65, 16)
    assert Dyadic(65, 4) != 4


@given(dyadics)
def test_canonical_invariant(d):
    assert d.exp >= 0
    if d.num == 0:
        assert d.exp == 0
    elif d.exp > 0:
        assert d.num % 2 == 1


@given(dyadics, dyadics)
def test_arithmetic_matches_fractions(a, b):
    assert (a + b).as_fraction() == a.as_fraction() + b.as_fraction()
    assert (a - b).as_fraction() == a.as_fraction() - b.as_fraction()
    assert (a * b).as_fraction() == a.as_fraction() * b.as_fraction()


@given(dyadics, st.integers(-30, 30))
def test_pow2_scaling(d, e):
    assert d.scale_pow2(e).as_fraction() == d.as_fraction() * Fraction(2) ** e


@given(dyadics, dyadics)
def test_ordering_matches_fractions(a, b):
    assert (a < b) == (a.as_fraction() < b.as_fraction())
    assert (a == b) == (a.as_fraction() == b.as_fraction())


@given(dyadics)
def test_decimal_roundtrip(d):
    assert Fraction(d.decimal()) == d.as_fraction()
