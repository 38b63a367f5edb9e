# badprimes/linalg/sparse.py
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

Row = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SparseIntMatrix:
    """Row-major sparse integer matrix; each row lists (column, value) with value != 0, columns ascending"""

    n_rows: int
    n_cols: int
    rows: tuple[Row, ...]

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], n_cols: int | None = None) -> SparseIntMatrix:
        width = n_cols if n_cols is not None else (len(dense[0]) if dense else 0)
        rows = []
        for line in dense:
            if len(line) != width:
                raise ValueError(f"ragged matrix: row of length {len(line)}, expected {width}")
            rows.append(tuple((j, int(v)) for j, v in enumerate(line) if v))
        return cls(len(rows), width, tuple(rows))

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.n_cols for _ in range(self.n_rows)]
        for i, row in enumerate(self.rows):
            for j, v in row:
                dense[i][j] = v
        return dense

    def select_rows(self, indices: Sequence[int]) -> SparseIntMatrix:
        return SparseIntMatrix(len(indices), self.n_cols, tuple(self.rows[i] for i in indices))

    def append_rows(self, extra: Sequence[Row]) -> SparseIntMatrix:
        return SparseIntMatrix(self.n_rows + len(extra), self.n_cols, self.rows + tuple(extra))

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)
