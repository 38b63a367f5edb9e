# badprimes/linalg/exact.py
"""
Exact rank and minors of sparse integer matrices
================================================
- Fraction-free (Bareiss) elimination over Z with Markowitz or seeded random
  pivoting. Rows that do not meet a pivot column are rescaled lazily: a row
  last updated at step s is brought to step k by multiplying with p_k / p_s,
  which is exact, so every stored entry is a Bareiss entry (a minor).
- Rank over F_p, vectorised with numpy for p < 2^31.
- Exhaustive gcd of all maximal minors for small matrices.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from math import comb, gcd
from typing import Literal

import numpy as np
from sympy import isprime

from ..errors import ArgumentError, BareissDivisionError, MinorLimitExceeded
from .sparse import SparseIntMatrix

logger = logging.getLogger(__name__)

Strategy = Literal["markowitz", "random"]

# p * p must fit in int64 for the vectorised path
_NUMPY_PRIME_LIMIT = 2**31


def _as_sparse(M) -> SparseIntMatrix:
    return M.entries if hasattr(M, "entries") else M


@dataclass(frozen=True)
class MinorCertificate:
    """One C x C minor: the determinant of the rows `pivot_rows` (ascending) over all columns"""

    value: int
    rank: int
    pivot_rows: tuple[int, ...]
    pivot_order: tuple[int, ...]
    pivot_cols: tuple[int, ...]
    pivot_values: tuple[int, ...]
    strategy: Strategy

    @property
    def is_zero(self) -> bool:
        return self.value == 0


def _permutation_sign(seq: Sequence[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inversions % 2 else 1


def _lift(row: dict[int, int], step: int, target: int, pivots: list[int]) -> dict[int, int]:
    if step == target:
        return row
    num, den = pivots[target], pivots[step]
    lifted = {}
    for j, v in row.items():
        q, r = divmod(v * num, den)
        if r:
            raise BareissDivisionError(f"lazy rescale of column {j} from step {step} to {target} is inexact")
        lifted[j] = q
    return lifted


def _choose_markowitz(
    rows: dict[int, dict[int, int]], steps: dict[int, int], pivots: list[int]
) -> tuple[int, int]:
    col_count: Counter[int] = Counter()
    for row in rows.values():
        col_count.update(row.keys())
    best_cost = None
    candidates: list[tuple[int, int]] = []
    for i, row in rows.items():
        row_cost = len(row) - 1
        for j in row:
            cost = row_cost * (col_count[j] - 1)
            if best_cost is None or cost < best_cost:
                best_cost = cost
                candidates = [(i, j)]
            elif cost == best_cost:
                candidates.append((i, j))
    k = len(pivots) - 1

    # fill first, then smallest true magnitude, then lowest row and column
    def magnitude(cand: tuple[int, int]) -> tuple[int, int, int]:
        i, j = cand
        v = abs(rows[i][j])
        if steps[i] != k:
            v = v * abs(pivots[k]) // abs(pivots[steps[i]])
        return (v, i, j)

    return min(candidates, key=magnitude)


def _choose_random(rows: dict[int, dict[int, int]], priority: dict[int, int]) -> tuple[int, int]:
    col_count: Counter[int] = Counter()
    for row in rows.values():
        col_count.update(row.keys())
    col = min(col_count, key=lambda j: (col_count[j], j))
    row = min((i for i, r in rows.items() if col in r), key=lambda i: priority[i])
    return row, col


def _bareiss(matrix: SparseIntMatrix, strategy: Strategy, seed: int | str = 0) -> MinorCertificate:
    rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in enumerate(matrix.rows) if r}
    steps = dict.fromkeys(rows, 0)
    pivots = [1]
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    priority: dict[int, int] = {}
    if strategy == "random":
        order = list(range(matrix.n_rows))
        random.Random(f"pivot:{seed}").shuffle(order)
        priority = {row: pos for pos, row in enumerate(order)}

    while rows:
        if strategy == "markowitz":
            r, c = _choose_markowitz(rows, steps, pivots)
        else:
            r, c = _choose_random(rows, priority)
        k = len(pivots)
        prow = _lift(rows.pop(r), steps.pop(r), k - 1, pivots)
        pv = prow[c]
        prev = pivots[k - 1]
        for i in [i for i, row in rows.items() if c in row]:
            row = _lift(rows[i], steps[i], k - 1, pivots)
            a = row.pop(c)
            combined = {j: pv * v for j, v in row.items()}
            for j, v in prow.items():
                if j != c:
                    combined[j] = combined.get(j, 0) - a * v
            updated = {}
            for j, v in combined.items():
                if v:
                    q, rem = divmod(v, prev)
                    if rem:
                        raise BareissDivisionError(f"step {k}: entry ({i}, {j}) not divisible by previous pivot")
                    updated[j] = q
            if updated:
                rows[i] = updated
                steps[i] = k
            else:
                del rows[i]
                del steps[i]
        pivots.append(pv)
        pivot_rows.append(r)
        pivot_cols.append(c)

    rank = len(pivot_rows)
    value = 0
    if rank == matrix.n_cols and rank > 0:
        # Bareiss' last pivot is det of rows/cols in pivot order; reorder both to ascending
        value = pivots[-1] * _permutation_sign(pivot_rows) * _permutation_sign(pivot_cols)
    elif matrix.n_cols == 0:
        value = 1
    return MinorCertificate(
        value=value,
        rank=rank,
        pivot_rows=tuple(sorted(pivot_rows)),
        pivot_order=tuple(pivot_rows),
        pivot_cols=tuple(pivot_cols),
        pivot_values=tuple(pivots[1:]),
        strategy=strategy,
    )


def rank_over_rationals(M) -> int:
    """Exact rank over Q by one fraction-free elimination"""
    return _bareiss(_as_sparse(M), "markowitz").rank


def nonzero_maximal_minor(M, strategy: Strategy = "markowitz", seed: int | str = 0) -> MinorCertificate:
    """A nonzero C x C minor with its row selection, or the zero flag when rank < C"""
    cert = _bareiss(_as_sparse(M), strategy, seed)
    if cert.is_zero:
        logger.debug(f"Rank {cert.rank} below column count; no nonzero maximal minor")
    return cert


def maximal_minors(M, count: int, seed: int | str = 0) -> list[MinorCertificate]:
    """Up to `count` nonzero maximal minors: one Markowitz pass, then seeded random pivot orders"""
    matrix = _as_sparse(M)
    first = _bareiss(matrix, "markowitz")
    if first.is_zero:
        return []
    minors = [first]
    seen = {first.pivot_rows}
    attempts = 0
    while len(minors) < count and attempts < 4 * count:
        attempts += 1
        cert = _bareiss(matrix, "random", f"{seed}:{attempts}")
        if cert.pivot_rows not in seen:
            seen.add(cert.pivot_rows)
            minors.append(cert)
    return minors


def candidate_gcd(minors: Sequence[MinorCertificate]) -> int:
    g = 0
    for m in minors:
        g = gcd(g, m.value)
    return g


def _rank_mod_p_sparse(matrix: SparseIntMatrix, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for raw in matrix.rows:
        row = {j: v % p for j, v in raw if v % p}
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], -1, p)
                pivots[c] = {j: v * inv % p for j, v in row.items()}
                break
            factor = row[c]
            for j, v in pivots[c].items():
                w = (row.get(j, 0) - factor * v) % p
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
    return len(pivots)


def _rank_mod_p_dense(matrix: SparseIntMatrix, p: int) -> int:
    A = np.zeros((matrix.n_rows, matrix.n_cols), dtype=np.int64)
    for i, row in enumerate(matrix.rows):
        for j, v in row:
            A[i, j] = v % p
    n_rows, n_cols = A.shape
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        below = np.flatnonzero(A[r + 1 :, c])
        if below.size:
            idx = r + 1 + below
            A[idx] = (A[idx] - np.outer(A[idx, c], A[r])) % p
        r += 1
    return r


def rank_mod_p(M, p: int) -> int:
    """Rank over the field with p elements"""
    if not isprime(p):
        raise ArgumentError(f"{p} is not prime")
    matrix = _as_sparse(M)
    if matrix.n_rows == 0 or matrix.n_cols == 0:
        return 0
    if p < _NUMPY_PRIME_LIMIT:
        return _rank_mod_p_dense(matrix, p)
    return _rank_mod_p_sparse(matrix, p)


def bareiss_determinant(dense: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination with row swaps"""
    a = [list(r) for r in dense]
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ArgumentError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                q, rem = divmod(akk * row_i[j] - aik * row_k[j], prev)
                if rem:
                    raise BareissDivisionError(f"step {k + 1}: entry ({i}, {j}) not divisible by previous pivot")
                row_i[j] = q
        prev = akk
    return sign * a[n - 1][n - 1]


def minor_gcd_exhaustive(M, limit: int) -> int:
    """gcd of all C x C minors (0 when every minor vanishes)"""
    matrix = _as_sparse(M)
    n_rows, n_cols = matrix.n_rows, matrix.n_cols
    if n_rows < n_cols:
        return 0
    count = comb(n_rows, n_cols)
    if count > limit:
        raise MinorLimitExceeded(count, limit)
    dense = matrix.to_dense()
    g = 0
    for selection in itertools.combinations(range(n_rows), n_cols):
        g = gcd(g, bareiss_determinant([dense[i] for i in selection]))
        if g == 1:
            break
    return g


def binomial_mod_p(m: int, k: int, p: int) -> int:
    """binom(m, k) mod p for prime p by Lucas' theorem, digit by digit in base p"""
    if m < 0 or k < 0:
        raise ArgumentError(f"binomial arguments must be non-negative, got ({m}, {k})")
    result = 1
    while m or k:
        mi, ki = m % p, k % p
        if ki > mi:
            return 0
        result = result * comb(mi, ki) % p
        m //= p
        k //= p
    return result
