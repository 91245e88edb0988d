from fractions import Fraction

import pytest

from kfib.binomial import binom
from kfib.closed_forms import kfib_binomial_shifted
from kfib.dominant_root import asymptotic, rho
from kfib.errors import DomainError
from kfib.series import (
    adaptive_partial,
    asymptotic_series_partial,
    hermite_sum_partial,
    rho_power_partial,
    rho_power_via_series,
    term_ratio_limit,
)

from oracles import bisect_dominant_root, fib_pair, phi_reference

# exact 128-bit-grade references for the series limits
ROOTS = {k: bisect_dominant_root(k, 450) for k in (2, 3, 4, 5)}


def _rho_ref(k):
    return ROOTS[k]


def test_ratio_limit_values():
    assert term_ratio_limit(2) == Fraction(27, 32)
    for k in range(2, 12):
        assert 0 < term_ratio_limit(k) < 1


def test_power_series_empty_sum_is_power_of_two():
    for k in (2, 3, 5, 8):
        for n in (1, 2, 7, 30):
            assert rho_power_partial(k, n, 0).value == 2**n


def test_power_series_first_terms():
    p = rho_power_partial(2, 1, 1)
    assert p.value == Fraction(7, 4)  # 2 - 1/4


def test_power_series_tail_soundness():
    for k in (2, 3, 4, 5):
        root, root_err = _rho_ref(k)
        for n in (1, 2, 5, 10):
            limit = root**n
            for terms in (0, 1, 2, 3, 5, 8, 13, 21, 34, 55):
                p = rho_power_partial(k, n, terms)
                assert abs(p.value - limit) <= p.tail_bound + (n + 1) * root_err, (
                    k, n, terms,
                )


def test_golden_ratio_partial_sums_monotone_and_sound():
    phi, phi_err = phi_reference(60)
    prev = None
    for terms in range(1, 41):
        p = rho_power_partial(2, 1, terms)
        # all terms are negative: the partial sums decrease onto phi
        if prev is not None:
            assert p.value < prev
        assert p.value > phi - phi_err
        assert abs(p.value - phi) <= p.tail_bound + phi_err
        prev = p.value


def test_power_series_squared_golden_ratio():
    phi, phi_err = phi_reference(60)
    p = adaptive_partial(lambda t: rho_power_partial(2, 2, t), Fraction(1, 10**9))
    assert abs(p.value - (phi + 1)) <= p.tail_bound + 3 * phi_err


def test_hermite_first_terms():
    p = hermite_sum_partial(2, 0, 4)
    assert p.value == 1 + Fraction(3, 8) + Fraction(15, 64) + Fraction(84, 512)
    assert hermite_sum_partial(3, -1, 1).value == binom(-1, 0) == 1


def test_hermite_limit_identity():
    for k in (2, 3, 4, 5):
        root, root_err = _rho_ref(k)
        denom = (k + 1) * root - 2 * k
        for a in range(-3, 4):
            limit = Fraction(2) ** (a + 1) * root ** (-a) / denom
            p = adaptive_partial(lambda t: hermite_sum_partial(k, a, t),
                                 Fraction(1, 10**11))
            assert abs(p.value - limit) <= p.tail_bound + Fraction(1, 10**20), (k, a)


def test_hermite_k2_known_limit():
    # limit for a = 0 is 2 / (3 phi - 4)
    p = adaptive_partial(lambda t: hermite_sum_partial(2, 0, t), Fraction(1, 10**10))
    assert abs(p.value - Fraction("2.34164079")) < Fraction(1, 10**7)


def test_asymptotic_series_n1_excluded():
    with pytest.raises(DomainError):
        asymptotic_series_partial(2, 1, 5)


def test_asymptotic_series_first_term():
    p = asymptotic_series_partial(2, 0, 1)
    assert p.value == Fraction(1, 4)


def test_asymptotic_series_limit_matches_dominant_term():
    for k in (2, 3):
        for n in (0, 2, 5, 10, 20):
            tol = Fraction(max(1, 2**n), 10**10)
            p = adaptive_partial(lambda t: asymptotic_series_partial(k, n, t), tol)
            ref = asymptotic(k, n, 64)
            assert abs(p.value - ref.approx) <= p.tail_bound + ref.err, (k, n)


def test_asymptotic_series_truncation_is_exact_integer():
    for k in range(2, 7):
        for n in range(2, 101):
            cut = (n - 1) // (k + 1) + 1
            p = asymptotic_series_partial(k, n, cut)
            assert p.value == kfib_binomial_shifted(k, n), (k, n)


def test_term_ratios_approach_limit_and_stay_under_theta():
    # beyond the stabilization window the observed ratios must sit under
    # theta = (1 + r)/2 and drift toward r
    for k in (2, 3, 4, 5):
        r = term_ratio_limit(k)
        theta = (1 + r) / 2
        for n in (0, 2, 5, 10, 25):
            series_fns = [lambda t: asymptotic_series_partial(k, n, t)]
            if n >= 1:
                series_fns.append(lambda t: rho_power_partial(k, n, t))
            for fn in series_fns:
                # recover terms by differencing successive partials
                partials = [fn(t).value for t in range(40, 91)]
                terms = [b - a for a, b in zip(partials, partials[1:])]
                ratios = [abs(t2) / abs(t1) for t1, t2 in zip(terms, terms[1:])]
                assert all(q <= theta for q in ratios), (k, n)
                assert abs(ratios[-1] - r) < Fraction(1, 10)


def test_adaptive_power_sum_agrees_with_root():
    for k in (2, 3, 4, 5):
        via_series = rho_power_via_series(k, 1, Fraction(1, 10**12))
        direct = rho(k, 128)
        assert via_series.agrees_with(direct), k


def test_adaptive_power_sum_k3_vs_bisection():
    root, root_err = _rho_ref(3)
    v = rho_power_via_series(3, 1, Fraction(1, 10**10))
    assert abs(v.approx - root) <= v.err + root_err


def test_phi_fifth_power_identity():
    # phi**n = F[n] phi + F[n-1]
    phi, phi_err = phi_reference(60)
    f5, f4 = fib_pair(5)
    v = rho_power_via_series(2, 5, Fraction(1, 10**9))
    assert abs(v.approx - (f5 * phi + f4)) <= v.err + 6 * phi_err


def test_domain_validation():
    with pytest.raises(DomainError):
        rho_power_partial(2, 0, 4)  # n must be positive
    with pytest.raises(DomainError):
        rho_power_partial(1, 1, 4)
    with pytest.raises(DomainError):
        hermite_sum_partial(2, 0, -1)
    with pytest.raises(DomainError):
        rho_power_via_series(2, 1, Fraction(0))
