import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfib.core import (
    count_compositions,
    kfib_order_k,
    kfib_order_k1,
    kfib_table,
)
from kfib.errors import DomainError, OracleCapError

# unrolled by hand from 0, 0, 1
TRIBONACCI = [0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81]


def test_order_k_known_values():
    assert kfib_order_k(3, 2) == 1
    assert kfib_order_k(3, 5) == 4  # 2**(n-k) on the doubling segment
    assert kfib_order_k(3, 6) == 7  # 2**k - 1 at n = 2k
    assert kfib_order_k(3, 9) == 44
    assert kfib_order_k(2, 10) == 55


def test_order_k1_known_values():
    assert kfib_order_k1(2, 10) == 55
    assert kfib_order_k1(4, 7) == 8
    assert kfib_order_k1(5, 10) == 31


def test_table_known_values():
    assert kfib_table(2, 5).values == (0, 1, 1, 2, 3, 5)
    assert kfib_table(3, 2).values == (0, 0, 1)
    assert kfib_table(2, 0).values == (0,)
    assert kfib_table(3, 10).values == tuple(TRIBONACCI)


def test_table_matches_pointwise_engine():
    for k in (2, 3, 5):
        table = kfib_table(k, 60)
        for n in range(61):
            assert table[n] == kfib_order_k(k, n)


def test_table_windows_satisfy_recurrence():
    # every window of k+1 consecutive entries must close under the sum rule
    for k in range(2, 7):
        table = kfib_table(k, 120)
        for n in range(len(table) - k):
            assert table[n + k] == sum(table.values[n : n + k]), (k, n)


def test_engines_agree():
    for k in range(2, 9):
        table = kfib_table(k, 400)
        for n in range(401):
            assert kfib_order_k1(k, n) == table[n], (k, n)


def test_doubling_segment():
    for k in range(2, 11):
        for n in range(k, 2 * k):
            assert kfib_order_k(k, n) == 2 ** (n - k)
        assert kfib_order_k(k, 2 * k) == 2**k - 1


def test_compositions_known_values():
    assert count_compositions(2, 4) == 5  # 1111 112 121 211 22
    assert count_compositions(3, 3) == 4  # 111 12 21 3
    assert count_compositions(2, 1) == 1


def test_compositions_match_engine():
    for k in range(2, 6):
        table = kfib_table(k, 20 + k)
        for n in range(1, 15):
            assert count_compositions(k, n) == table[n + k - 1], (k, n)


def test_composition_cap():
    with pytest.raises(OracleCapError):
        count_compositions(2, 26)
    assert count_compositions(2, 26, cap=26) == kfib_order_k(2, 27)


@pytest.mark.parametrize("bad_k", [1, 0, -3])
def test_k_validation(bad_k):
    with pytest.raises(DomainError):
        kfib_order_k(bad_k, 5)
    with pytest.raises(DomainError):
        kfib_table(bad_k, 5)


def test_n_validation():
    with pytest.raises(DomainError):
        kfib_order_k(2, -1)
    with pytest.raises(DomainError):
        count_compositions(2, 0)


@given(st.integers(2, 7), st.integers(0, 120))
@settings(max_examples=80)
def test_engines_agree_property(k, n):
    assert kfib_order_k(k, n) == kfib_order_k1(k, n)
