# badprimes/algebra/polycore.py
"""
Sparse multivariate polynomials over the integers
=================================================
Exact arithmetic for the polynomials G_{T,i}: elementary symmetric
polynomials, the substitutions Phi_j and monomial shifts.

Terms are kept in graded reverse lexicographic order (x1 > x2 > ...), largest
monomial first, so two polynomials are equal exactly when their term tuples are.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from types import MappingProxyType

from ..errors import ArgumentError

logger = logging.getLogger(__name__)

ExponentVector = tuple[int, ...]
GTable = Mapping[tuple[int, int], "MultiPoly"]


def grevlex_key(exponents: ExponentVector) -> tuple[int, tuple[int, ...]]:
    """Sort key placing larger monomials (graded reverse lex) first"""
    return (-sum(exponents), tuple(reversed(exponents)))


def _check_exponents(exponents: ExponentVector, n_vars: int) -> None:
    if len(exponents) != n_vars:
        raise ArgumentError(f"exponent vector {exponents} has length {len(exponents)}, expected {n_vars}")
    if any(e < 0 for e in exponents):
        raise ArgumentError(f"exponent vector {exponents} has a negative entry")


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial in x1..x_{n_vars} with nonzero integer coefficients"""

    n_vars: int
    terms: tuple[tuple[ExponentVector, int], ...]

    @classmethod
    def from_dict(cls, n_vars: int, mapping: Mapping[ExponentVector, int]) -> MultiPoly:
        if n_vars < 1:
            raise ArgumentError(f"n_vars must be positive, got {n_vars}")
        items = []
        for exponents, coeff in mapping.items():
            exponents = tuple(exponents)
            _check_exponents(exponents, n_vars)
            if coeff:
                items.append((exponents, int(coeff)))
        items.sort(key=lambda t: grevlex_key(t[0]))
        return cls(n_vars, tuple(items))

    @classmethod
    def zero(cls, n_vars: int) -> MultiPoly:
        return cls(n_vars, ())

    @classmethod
    def constant(cls, n_vars: int, value: int) -> MultiPoly:
        return cls.from_dict(n_vars, {(0,) * n_vars: value})

    @classmethod
    def variable(cls, n_vars: int, k: int) -> MultiPoly:
        """The variable x_k (1-indexed)"""
        if not 1 <= k <= n_vars:
            raise ArgumentError(f"variable index {k} outside [1, {n_vars}]")
        exponents = tuple(1 if v == k - 1 else 0 for v in range(n_vars))
        return cls(n_vars, ((exponents, 1),))

    def as_dict(self) -> dict[ExponentVector, int]:
        return dict(self.terms)

    def coefficient(self, exponents: ExponentVector) -> int:
        for e, c in self.terms:
            if e == exponents:
                return c
        return 0

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e, _ in self.terms}) <= 1

    def max_abs_coefficient(self) -> int:
        return max((abs(c) for _, c in self.terms), default=0)

    def _same_ring(self, other: MultiPoly) -> None:
        if self.n_vars != other.n_vars:
            raise ArgumentError(f"cannot combine polynomials in {self.n_vars} and {other.n_vars} variables")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._same_ring(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return MultiPoly.from_dict(self.n_vars, acc)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.n_vars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly | int) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly.from_dict(self.n_vars, {e: c * other for e, c in self.terms})
        self._same_ring(other)
        acc: dict[ExponentVector, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2, strict=True))
                acc[e] = acc.get(e, 0) + c1 * c2
        return MultiPoly.from_dict(self.n_vars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ArgumentError("negative powers are not polynomials")
        result = MultiPoly.constant(self.n_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for idx, (exponents, coeff) in enumerate(self.terms):
            factors = [
                f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}" for k, e in enumerate(exponents) if e
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            if idx == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)


def elementary_symmetric(n_vars: int, i: int) -> MultiPoly:
    """Sum of all squarefree degree-i monomials in n_vars variables"""
    if n_vars < 1:
        raise ArgumentError(f"n_vars must be positive, got {n_vars}")
    if not 1 <= i <= n_vars:
        raise ArgumentError(f"elementary symmetric index {i} outside [1, {n_vars}]")
    terms = {}
    for support in itertools.combinations(range(n_vars), i):
        terms[tuple(1 if k in support else 0 for k in range(n_vars))] = 1
    return MultiPoly.from_dict(n_vars, terms)


def _phi_images(n_vars: int, j: int) -> list[MultiPoly]:
    xj = MultiPoly.variable(n_vars, j)
    images = []
    for k in range(1, n_vars + 1):
        xk = MultiPoly.variable(n_vars, k)
        images.append(-xj if k == j else xk - xj)
    return images


def phi_apply(f: MultiPoly, j: int, n: int) -> MultiPoly:
    """Apply Phi_j: x_i -> x_i - x_j (i != j), x_j -> -x_j; Phi_n is the identity"""
    if f.n_vars != n - 1:
        raise ArgumentError(f"degree {n} works in {n - 1} variables, polynomial has {f.n_vars}")
    if not 1 <= j <= n:
        raise ArgumentError(f"substitution index {j} outside [1, {n}]")
    if j == n:
        return f
    images = _phi_images(f.n_vars, j)
    powers: dict[tuple[int, int], MultiPoly] = {}
    acc: dict[ExponentVector, int] = {}
    for exponents, coeff in f.terms:
        product = MultiPoly.constant(f.n_vars, coeff)
        for k, e in enumerate(exponents):
            if e:
                if (k, e) not in powers:
                    powers[(k, e)] = images[k] ** e
                product = product * powers[(k, e)]
        for e, c in product.terms:
            acc[e] = acc.get(e, 0) + c
    return MultiPoly.from_dict(f.n_vars, acc)


def build_G(n: int, j: int, i: int) -> MultiPoly:
    """G = Phi_j(sigma_i(x1, ..., x_{n-1})), homogeneous of degree i"""
    if n < 2:
        raise ArgumentError(f"degree must be at least 2, got {n}")
    return phi_apply(elementary_symmetric(n - 1, i), j, n)


def mul_monomial(f: MultiPoly, alpha: ExponentVector) -> MultiPoly:
    """Shift every exponent vector of f by alpha"""
    alpha = tuple(alpha)
    _check_exponents(alpha, f.n_vars)
    # Shifting by a common vector preserves the grevlex order of the terms.
    return MultiPoly(
        f.n_vars,
        tuple((tuple(a + b for a, b in zip(e, alpha, strict=True)), c) for e, c in f.terms),
    )


@lru_cache(maxsize=16)
def build_g_table(n: int) -> GTable:
    """Read-only table {(j, i): G_{j,i}} for j in [1, n], i in [1, n-1]"""
    if n < 2:
        raise ArgumentError(f"degree must be at least 2, got {n}")
    table = {(j, i): build_G(n, j, i) for j in range(1, n + 1) for i in range(1, n)}
    logger.debug(f"Built G table for degree {n}: {len(table)} polynomials")
    return MappingProxyType(table)


def coefficient_maxima(n: int) -> list[tuple[int, int, int, int]]:
    """(j, i, observed max |coefficient|, binom(i+n-2, n-2)) for every G of degree n"""
    table = build_g_table(n)
    return [
        (j, i, table[(j, i)].max_abs_coefficient(), comb(i + n - 2, n - 2))
        for (j, i) in sorted(table)
    ]
