# badprimes/oracle/fields.py
"""
Finite fields F_q (q = p^k) and univariate polynomials over them
================================================================
Field elements are plain ints in [0, q); the base-p digits of an element are
its coefficients in F_p[t] / (modulus), lowest degree first. For k = 1 this is
ordinary arithmetic mod p.

The modulus for k > 1 is the lexicographically smallest monic irreducible of
degree k (coefficients compared highest degree first), so witness coordinates
are reproducible.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from sympy import isprime

from ..errors import ArgumentError

logger = logging.getLogger(__name__)

# multiplication tables are precomputed up to this field size
_TABLE_LIMIT = 256


# --- F_p[t] helpers on low-first coefficient lists ---------------------------
def _trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    r = a[:]
    inv = pow(b[-1], -1, p)
    n = len(b)
    for i in range(len(r) - n, -1, -1):
        if len(r) >= i + n:
            q_i = r[-1] * inv % p
            for j in range(n):
                r[i + j] = (r[i + j] - q_i * b[j]) % p
            _trim(r)
    return r


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(coeffs_low_first: Sequence[int], p: int) -> bool:
    """Ben-Or: a of degree k is irreducible iff gcd(t^(p^i) - t, a) = 1 for i <= k/2"""
    a = _trim([c % p for c in coeffs_low_first])
    k = len(a) - 1
    if k <= 0:
        return False
    b = [0, 1]
    for _ in range(k // 2):
        b = _ppowmod(b, p, a, p)
        if len(_pgcd(_psub(b, [0, 1], p), a, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k, highest degree first, smallest in lexicographic order"""
    if k == 1:
        return (1, 0)
    for tail in itertools.product(range(p), repeat=k):
        if tail[-1] == 0:
            continue
        if is_irreducible([*reversed(tail), 1], p):
            return (1, *tail)
    raise ArgumentError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable for prime p


@dataclass
class FiniteField:
    p: int
    k: int = 1
    modulus: tuple[int, ...] = ()
    _mul_table: list[list[int]] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise ArgumentError(f"field characteristic {self.p} is not prime")
        if self.k < 1:
            raise ArgumentError(f"extension degree must be positive, got {self.k}")
        if not self.modulus:
            self.modulus = smallest_irreducible(self.p, self.k)
        self._mod_low = list(reversed(self.modulus))
        if self.k > 1 and self.q <= _TABLE_LIMIT:
            self._mul_table = [[self._mul_slow(a, b) for b in range(self.q)] for a in range(self.q)]

    @property
    def q(self) -> int:
        return self.p**self.k

    def elements(self) -> range:
        return range(self.q)

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.p + d % self.p
        return a

    def from_int(self, m: int) -> int:
        """Image of the integer m in the prime subfield"""
        return m % self.p

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b), strict=True)])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _pmul(_trim(self.digits(a)), _trim(self.digits(b)), self.p)
        return self.from_digits(_pmod(prod, self._mod_low, self.p)) if prod else 0

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.k == 1:
            return pow(a, -1, self.p)
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


@lru_cache(maxsize=32)
def get_field(p: int, k: int = 1) -> FiniteField:
    return FiniteField(p, k)


class FpUniPoly:
    """Polynomial over F_q, coefficients highest degree first, no leading zeros (empty = 0)"""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Sequence[int]):
        q = field.q
        bad = [c for c in coeffs if not 0 <= c < q]
        if bad:
            raise ArgumentError(f"coefficients {bad} outside [0, {q})")
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        self.field = field
        self.coeffs = tuple(coeffs[start:])

    @classmethod
    def from_ints(cls, field: FiniteField, coeffs: Sequence[int]) -> FpUniPoly:
        """Reduce integer coefficients into the prime subfield"""
        return cls(field, [field.from_int(c) for c in coeffs])

    @classmethod
    def linear_power(cls, field: FiniteField, b: int, n: int) -> FpUniPoly:
        """(x - b)^n"""
        out = cls(field, [1])
        lin = cls(field, [1, field.neg(b)])
        for _ in range(n):
            out = out * lin
        return out

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] == 1

    def _check(self, other: FpUniPoly) -> None:
        if self.field is not other.field and (self.field.p, self.field.modulus) != (other.field.p, other.field.modulus):
            raise ArgumentError("polynomials live over different fields")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpUniPoly):
            return NotImplemented
        return self.field.q == other.field.q and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.q, self.coeffs))

    def __repr__(self) -> str:
        return f"FpUniPoly(q={self.field.q}, {list(self.coeffs)})"

    def __add__(self, other: FpUniPoly) -> FpUniPoly:
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        width = max(len(a), len(b))
        a = (0,) * (width - len(a)) + a
        b = (0,) * (width - len(b)) + b
        return FpUniPoly(F, [F.add(x, y) for x, y in zip(a, b, strict=True)])

    def __neg__(self) -> FpUniPoly:
        return FpUniPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: FpUniPoly) -> FpUniPoly:
        return self + (-other)

    def __mul__(self, other: FpUniPoly) -> FpUniPoly:
        self._check(other)
        F = self.field
        if not self.coeffs or not other.coeffs:
            return FpUniPoly(F, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return FpUniPoly(F, out)

    def scale(self, c: int) -> FpUniPoly:
        return FpUniPoly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: FpUniPoly) -> tuple[FpUniPoly, FpUniPoly]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        r = list(self.coeffs)
        n = len(other.coeffs)
        if len(r) < n:
            return FpUniPoly(F, []), self
        inv = F.inv(other.coeffs[0])
        quot = [0] * (len(r) - n + 1)
        for i in range(len(quot)):
            c = F.mul(r[i], inv)
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[i + j] = F.sub(r[i + j], F.mul(c, b))
        return FpUniPoly(F, quot), FpUniPoly(F, r[len(quot):])

    def __mod__(self, other: FpUniPoly) -> FpUniPoly:
        return divmod(self, other)[1]

    def monic(self) -> FpUniPoly:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.coeffs[0]))

    def gcd(self, other: FpUniPoly) -> FpUniPoly:
        """Monic gcd; gcd(0, 0) = 0"""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        deg = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            e = deg - k
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)
