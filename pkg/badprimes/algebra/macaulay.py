# badprimes/algebra/macaulay.py
"""
Macaulay coefficient matrices
=============================
Degree combinatorics (d, C, D), monomial bases, the sparse D x C matrix M_T
whose rows are the coefficient vectors of G_{T,i} * x^alpha, and the
relabeling orbits of the tuple set {1..n}^{n-1}.
"""

from __future__ import annotations

import hashlib
import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from math import comb, factorial
from pathlib import Path

from ..errors import ArgumentError
from ..linalg.sparse import SparseIntMatrix
from ..schemas import DegreeData
from .polycore import ExponentVector, GTable, build_g_table, grevlex_key, mul_monomial

logger = logging.getLogger(__name__)

TupleT = tuple[int, ...]
RowLabel = tuple[int, ExponentVector]


def degree_data(n: int) -> DegreeData:
    """d = (n^2-3n+4)/2, C = binom((n^2-n)/2, n-2), D = sum_i binom(d-i+n-2, n-2)"""
    if n < 2:
        raise ArgumentError(f"degree must be at least 2, got {n}")
    d = (n * n - 3 * n + 4) // 2
    C = comb((n * n - n) // 2, n - 2)
    D = sum(comb(d - i + n - 2, n - 2) for i in range(1, n))
    return DegreeData(n=n, d=d, C=C, D=D)


def enumerate_monomials(n_vars: int, deg: int) -> list[ExponentVector]:
    """All exponent vectors of total degree deg, largest (graded reverse lex) first"""
    if n_vars < 1:
        raise ArgumentError(f"n_vars must be positive, got {n_vars}")
    if deg < 0:
        raise ArgumentError(f"degree must be non-negative, got {deg}")
    monomials = []
    # stars and bars: bar positions among deg + n_vars - 1 slots
    for bars in itertools.combinations(range(deg + n_vars - 1), n_vars - 1):
        prev = -1
        exponents = []
        for b in bars:
            exponents.append(b - prev - 1)
            prev = b
        exponents.append(deg + n_vars - 1 - prev - 1)
        monomials.append(tuple(exponents))
    monomials.sort(key=grevlex_key)
    return monomials


def validate_tuple(n: int, T: Sequence[int]) -> TupleT:
    if n < 2:
        raise ArgumentError(f"degree must be at least 2, got {n}")
    T = tuple(int(t) for t in T)
    if len(T) != n - 1:
        raise ArgumentError(f"tuple {T} has length {len(T)}, degree {n} needs {n - 1}")
    bad = [t for t in T if not 1 <= t <= n]
    if bad:
        raise ArgumentError(f"tuple {T} has entries {bad} outside [1, {n}]")
    return T


@dataclass(frozen=True)
class MacaulayMatrix:
    data: DegreeData
    tuple: TupleT
    columns: tuple[ExponentVector, ...]
    row_labels: tuple[RowLabel, ...]
    entries: SparseIntMatrix

    @property
    def n_rows(self) -> int:
        return self.entries.n_rows

    @property
    def n_cols(self) -> int:
        return self.entries.n_cols

    def to_dense(self) -> list[list[int]]:
        return self.entries.to_dense()

    def to_triplets(self) -> str:
        """Header `D C n tuple`, then one 1-indexed `row col value` line per nonzero"""
        lines = [f"{self.n_rows} {self.n_cols} {self.data.n} {','.join(map(str, self.tuple))}"]
        for r, row in enumerate(self.entries.rows, start=1):
            lines.extend(f"{r} {c + 1} {v}" for c, v in row)
        return "\n".join(lines) + "\n"

    def content_hash(self) -> str:
        return hashlib.sha256(self.to_triplets().encode("utf-8")).hexdigest()

    def export(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_triplets(), encoding="utf-8")
        logger.info(f"Exported {self.n_rows}x{self.n_cols} matrix for T={self.tuple} to {path}")
        return path


def build_matrix(n: int, T: Sequence[int], G_table: GTable | None = None) -> MacaulayMatrix:
    """Rows (i ascending, then alpha in canonical order) are G_{T,i} * x^alpha in the degree-d basis"""
    T = validate_tuple(n, T)
    data = degree_data(n)
    table = G_table if G_table is not None else build_g_table(n)
    n_vars = n - 1
    columns = enumerate_monomials(n_vars, data.d)
    col_index = {m: c for c, m in enumerate(columns)}

    labels: list[RowLabel] = []
    rows = []
    for i in range(1, n):
        G = table[(T[i - 1], i)]
        for alpha in enumerate_monomials(n_vars, data.d - i):
            shifted = mul_monomial(G, alpha)
            rows.append(tuple(sorted((col_index[e], c) for e, c in shifted.terms)))
            labels.append((i, alpha))

    entries = SparseIntMatrix(len(rows), len(columns), tuple(rows))
    assert entries.n_rows == data.D and entries.n_cols == data.C
    return MacaulayMatrix(data, T, tuple(columns), tuple(labels), entries)


def canonical_form(n: int, T: Sequence[int]) -> TupleT:
    """Relabel entries != n in order of first occurrence (the orbit's lexicographic minimum)"""
    relabel: dict[int, int] = {}
    out = []
    for t in T:
        if t == n:
            out.append(n)
            continue
        if t not in relabel:
            relabel[t] = len(relabel) + 1
        out.append(relabel[t])
    return tuple(out)


def orbit_size(n: int, T: Sequence[int]) -> int:
    k = len({t for t in T if t != n})
    return factorial(n - 1) // factorial(n - 1 - k)


def all_tuples(n: int) -> list[TupleT]:
    if n < 2:
        raise ArgumentError(f"degree must be at least 2, got {n}")
    return [tuple(T) for T in itertools.product(range(1, n + 1), repeat=n - 1)]


def schedule_key(n: int, T: TupleT) -> tuple[int, TupleT]:
    return (sum(1 for t in T if t != n), T)


def canonical_tuples(n: int) -> list[tuple[TupleT, int]]:
    """One representative per relabeling orbit with its orbit size, in scheduling order"""
    counts: dict[TupleT, int] = {}
    for T in all_tuples(n):
        rep = canonical_form(n, T)
        counts[rep] = counts.get(rep, 0) + 1
    orbits = sorted(counts.items(), key=lambda item: schedule_key(n, item[0]))
    for rep, size in orbits:
        assert size == orbit_size(n, rep), (rep, size)
    logger.debug(f"Degree {n}: {n ** (n - 1)} tuples in {len(orbits)} orbits")
    return orbits


def verbatim_tuples(n: int) -> list[tuple[TupleT, int]]:
    """Every tuple of {1..n}^{n-1} with multiplicity 1, in scheduling order"""
    return [(T, 1) for T in sorted(all_tuples(n), key=lambda T: schedule_key(n, T))]


def schedule(n: int, tuples: Sequence[Sequence[int]]) -> list[TupleT]:
    """Fewest non-n entries first, then lexicographic"""
    return sorted((tuple(T) for T in tuples), key=lambda T: schedule_key(n, T))
