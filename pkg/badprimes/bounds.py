# badprimes/bounds.py
"""
Explicit upper bounds on bad primes
===================================
bound5 = C! * prod_i binom(i+n-2, n-2)^binom(d-i+n-2, n-2)
bound6 = C! * (product of the C largest entries of the sorted b multiset)

Both are exact integers; the factored strings and digit counts are what gets
printed for n >= 5, where the expanded values run to thousands of digits.
"""

from __future__ import annotations

import logging
from math import comb, factorial, log10

from .algebra.macaulay import degree_data
from .errors import ArgumentError
from .schemas import BoundReport, BRun

logger = logging.getLogger(__name__)

_LOG10_2 = log10(2)


def decimal_digits(x: int) -> int:
    """Number of decimal digits of |x| without converting it to text"""
    x = abs(x)
    if x == 0:
        return 1
    t = int((x.bit_length() - 1) * _LOG10_2)
    return t + 2 if x >= 10 ** (t + 1) else t + 1


def b_runs(n: int) -> list[BRun]:
    """Run-length form of the b multiset, ascending in value"""
    data = degree_data(n)
    return [
        BRun(i=i, value=comb(i + n - 2, n - 2), multiplicity=comb(data.d - i + n - 2, n - 2))
        for i in range(1, n)
    ]


def _product(runs: list[tuple[int, int]]) -> int:
    out = 1
    for value, mult in runs:
        out *= value**mult
    return out


def _factored(C: int, runs: list[tuple[int, int]]) -> str:
    return " * ".join([f"{C}!", *(f"{v}^{e}" for v, e in runs if e)])


def _top_runs(runs: list[BRun], keep: int) -> list[tuple[int, int]]:
    """(value, multiplicity) of the `keep` largest entries"""
    out = []
    for run in reversed(runs):
        if keep <= 0:
            break
        take = min(run.multiplicity, keep)
        out.append((run.value, take))
        keep -= take
    return list(reversed(out))


def upper_bound(n: int) -> int:
    if n < 2:
        raise ArgumentError(f"degree must be at least 2, got {n}")
    data = degree_data(n)
    return factorial(data.C) * _product([(r.value, r.multiplicity) for r in b_runs(n)])


def improved_bound(n: int) -> BoundReport:
    if n < 2:
        raise ArgumentError(f"degree must be at least 2, got {n}")
    data = degree_data(n)
    runs = b_runs(n)
    full = [(r.value, r.multiplicity) for r in runs]
    top = _top_runs(runs, data.C)

    # b_{D-C+1} is the smallest of the C kept entries
    threshold_index = next(r.i for r in runs if r.value == top[0][0])

    c_fact = factorial(data.C)
    bound5 = c_fact * _product(full)
    bound6 = c_fact * _product(top)
    logger.debug(f"Degree {n}: threshold index {threshold_index}, bound6 has {decimal_digits(bound6)} digits")
    return BoundReport(
        n=n,
        C=data.C,
        D=data.D,
        b_runs=runs,
        threshold_index=threshold_index,
        bound5=bound5,
        bound6=bound6,
        bound5_factored=_factored(data.C, full),
        bound6_factored=_factored(data.C, top),
        bound5_digits=decimal_digits(bound5),
        bound6_digits=decimal_digits(bound6),
    )
