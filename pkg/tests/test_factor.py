"""Trial division plus budgeted Pollard-Brent"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import isprime

from badprimes.errors import ArgumentError
from badprimes.linalg.factor import factorize

P30 = 1_000_000_007
Q30 = 1_000_000_009


class TestFactorize:
    """Complete and partial factorisations"""

    def test_small(self):
        result = factorize(72)
        assert result.factors == [(2, 3), (3, 2)]
        assert result.cofactor == 1
        assert result.primes == [2, 3]

    def test_units(self):
        assert factorize(1).factors == []
        assert factorize(-1).value() == 1

    def test_sign_ignored(self):
        assert factorize(-12).factors == [(2, 2), (3, 1)]

    def test_prime(self):
        assert factorize(2).factors == [(2, 1)]
        assert factorize(P30).factors == [(P30, 1)]

    def test_zero(self):
        with pytest.raises(ArgumentError):
            factorize(0)

    def test_trial_bound_too_small(self):
        with pytest.raises(ArgumentError):
            factorize(10, trial_bound=1)

    def test_leftover_below_trial_bound_is_prime(self):
        assert factorize(97, trial_bound=100).factors == [(97, 1)]

    def test_pollard_splits_semiprime(self):
        result = factorize(P30 * Q30 * 8, trial_bound=1000)
        assert result.factors == [(2, 3), (P30, 1), (Q30, 1)]
        assert result.cofactor == 1

    def test_perfect_power(self):
        assert factorize(P30**3, trial_bound=1000).factors == [(P30, 3)]

    def test_exhausted_budget_leaves_cofactor(self):
        result = factorize(6 * P30 * Q30, trial_bound=1000, pollard_budget=1)
        assert result.factors == [(2, 1), (3, 1)]
        assert result.cofactor == P30 * Q30
        assert result.value() == 6 * P30 * Q30

    def test_seeded(self):
        a = factorize(P30 * Q30, trial_bound=1000, seed=5)
        b = factorize(P30 * Q30, trial_bound=1000, seed=5)
        assert a == b

    @settings(max_examples=200, deadline=None)
    @given(N=st.integers(1, 10**12))
    def test_value_and_primality(self, N):
        result = factorize(N, trial_bound=1000)
        assert result.value() == N
        assert all(isprime(p) for p in result.primes)
        assert result.primes == sorted(set(result.primes))
