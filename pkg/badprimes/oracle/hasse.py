# badprimes/oracle/hasse.py
"""
Hasse derivatives and the brute-force Casas-Alvero oracle
=========================================================
H_i(sum a_m x^m) = sum binom(m, i) a_m x^(m-i). A polynomial f of degree n is
"Casas-Alvero" when gcd(f, H_i f) is non-constant for every i in [1, n-1]; a
vanishing H_i f shares every factor with f.

search_counterexamples enumerates all monic degree-n polynomials over F_q and
keeps the Casas-Alvero ones that are not (x - b)^n. It is sound but not
complete: witnesses whose roots live outside F_q are never seen.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from math import comb

from ..errors import ArgumentError, SearchBudgetExceeded
from ..linalg.exact import binomial_mod_p
from ..pool import run_tasks
from ..schemas import WitnessReport
from .fields import FiniteField, FpUniPoly, get_field

logger = logging.getLogger(__name__)


def hasse_coefficients(coeffs: Sequence[int], i: int) -> list[int]:
    """Integer Hasse derivative, coefficients highest degree first"""
    if i < 0:
        raise ArgumentError(f"Hasse order must be non-negative, got {i}")
    deg = len(coeffs) - 1
    if i > deg:
        return []
    return [comb(deg - k, i) * c for k, c in enumerate(coeffs[: deg - i + 1])]


def hasse_derivative(f: FpUniPoly, i: int) -> FpUniPoly:
    if not 1 <= i <= f.degree:
        raise ArgumentError(f"Hasse order {i} outside [1, {f.degree}]")
    F = f.field
    deg = f.degree
    out = [F.mul(binomial_mod_p(deg - k, i, F.p), c) for k, c in enumerate(f.coeffs[: deg - i + 1])]
    return FpUniPoly(F, out)


def is_casas_alvero(f: FpUniPoly) -> bool:
    if f.degree < 2:
        raise ArgumentError(f"need degree at least 2, got {f.degree}")
    if not f.is_monic():
        raise ArgumentError(f"{f} is not monic")
    for i in range(1, f.degree):
        h = hasse_derivative(f, i)
        # gcd(f, 0) = f, which is non-constant
        if f.gcd(h).degree < 1:
            return False
    return True


def counterexample_family(p: int, k: int = 1) -> FpUniPoly:
    """x^(p+1) - x^p over F_q, Casas-Alvero without being a pure power"""
    F = get_field(p, k)
    return FpUniPoly.from_ints(F, [1, -1] + [0] * p)


def _search_slice(args: tuple[int, int, int, int]) -> tuple[int, list[list[int]]]:
    """All witnesses whose x^(n-1) coefficient is `a1`"""
    n, p, k, a1 = args
    F = get_field(p, k)
    q = F.q
    pure = {FpUniPoly.linear_power(F, b, n).coeffs for b in F.elements()}
    found = []
    rest = n - 1
    for idx in range(q**rest):
        tail = []
        for _ in range(rest):
            idx, r = divmod(idx, q)
            tail.append(r)
        coeffs = (1, a1, *reversed(tail))
        if coeffs in pure:
            continue
        if is_casas_alvero(FpUniPoly(F, coeffs)):
            found.append(list(coeffs))
    return a1, found


def search_counterexamples(n: int, p: int, k: int = 1, budget: int = 100_000_000, jobs: int = 1) -> WitnessReport:
    if n < 2:
        raise ArgumentError(f"degree must be at least 2, got {n}")
    F: FiniteField = get_field(p, k)
    required = F.q**n
    if required > budget:
        raise SearchBudgetExceeded(required, budget)
    logger.info(f"Searching {required} monic polynomials of degree {n} over F_{F.q}")
    slices = [(n, p, k, a1) for a1 in F.elements()]
    results = run_tasks(_search_slice, slices, jobs=jobs, desc=f"search n={n} q={F.q}")
    witnesses = [w for _, ws in sorted(results) for w in ws]
    logger.info(f"Found {len(witnesses)} witnesses for n={n} over F_{F.q}")
    return WitnessReport(n=n, p=p, k=k, q=F.q, modulus=list(F.modulus), searched=required, witnesses=witnesses)
