# badprimes/linalg/factor.py
"""
Partial integer factorisation
=============================
Trial division up to a bound, then Pollard rho with Brent's cycle detection
under an iteration budget. Whatever is not split within the budget comes
back as the cofactor; an exhausted budget is never an error.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from sympy import isprime, perfect_power, primerange

from ..errors import ArgumentError

logger = logging.getLogger(__name__)


@dataclass
class FactorResult:
    factors: list[tuple[int, int]] = field(default_factory=list)   # (prime, exponent), primes ascending
    cofactor: int = 1                                               # composite or unproven remainder

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def value(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out


@lru_cache(maxsize=4)
def _small_primes(bound: int) -> tuple[int, ...]:
    return tuple(primerange(2, bound + 1))


class _Budget:
    def __init__(self, iterations: int):
        self.left = iterations

    def spend(self, k: int) -> bool:
        self.left -= k
        return self.left >= 0


def _brent(n: int, rng: random.Random, budget: _Budget) -> int | None:
    """A nontrivial factor of the odd composite n, or None when the budget runs out"""
    while budget.left > 0:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            if not budget.spend(r):
                return None
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                if not budget.spend(steps):
                    return None
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            # backtrack one step at a time from the last saved y
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                if not budget.spend(1):
                    return None
        if g != n:
            return g
        logger.debug(f"Brent cycle collapsed for c={c}; retrying")
    return None


def _split(n: int, rng: random.Random, budget: _Budget, found: dict[int, int], leftover: list[int]) -> None:
    if n == 1:
        return
    if isprime(n):
        found[n] = found.get(n, 0) + 1
        return
    pp = perfect_power(n)
    if pp:
        base, exp = pp
        for _ in range(exp):
            _split(base, rng, budget, found, leftover)
        return
    d = _brent(n, rng, budget)
    if d is None:
        leftover.append(n)
        return
    _split(d, rng, budget, found, leftover)
    _split(n // d, rng, budget, found, leftover)


def factorize(N: int, trial_bound: int = 1_000_000, pollard_budget: int = 10_000_000, seed: int | str = 0) -> FactorResult:
    """Factor |N| as far as the limits allow; N must be nonzero"""
    if N == 0:
        raise ArgumentError("cannot factor 0")
    if trial_bound < 2:
        raise ArgumentError(f"trial bound must be at least 2, got {trial_bound}")
    n = abs(N)
    found: dict[int, int] = {}
    for p in _small_primes(trial_bound):
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1 and n <= trial_bound:
        # below the bound, anything left after trial division is prime
        found[n] = found.get(n, 0) + 1
        n = 1

    leftover: list[int] = []
    _split(n, random.Random(f"factor:{seed}"), _Budget(pollard_budget), found, leftover)

    cofactor = 1
    for m in leftover:
        cofactor *= m
    if cofactor > 1:
        logger.info(f"Pollard budget {pollard_budget} exhausted; unresolved cofactor has {cofactor.bit_length()} bits")
    return FactorResult(sorted(found.items()), cofactor)
