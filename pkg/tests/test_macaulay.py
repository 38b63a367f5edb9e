"""Degree combinatorics, monomial bases, Macaulay matrices and tuple orbits"""

from math import comb

import pytest

from badprimes.algebra.macaulay import (
    all_tuples,
    build_matrix,
    canonical_form,
    canonical_tuples,
    degree_data,
    enumerate_monomials,
    orbit_size,
    schedule,
    validate_tuple,
    verbatim_tuples,
)
from badprimes.algebra.polycore import build_g_table
from badprimes.errors import ArgumentError


class TestDegreeData:
    """d, C and D"""

    @pytest.mark.parametrize(
        "n, d, C, D",
        [(2, 1, 1, 1), (3, 2, 3, 3), (4, 4, 15, 19), (5, 7, 120, 195), (6, 11, 1365, 2751)],
    )
    def test_values(self, n, d, C, D):
        data = degree_data(n)
        assert (data.d, data.C, data.D) == (d, C, D)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_strictly_more_rows_from_four_on(self, n):
        data = degree_data(n)
        assert data.D > data.C

    def test_rejects_small_degree(self):
        with pytest.raises(ArgumentError):
            degree_data(1)


class TestEnumerateMonomials:
    """Graded reverse lex bases"""

    def test_two_variables(self):
        assert enumerate_monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]

    def test_three_variables(self):
        assert enumerate_monomials(3, 2) == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_degree_zero(self, k):
        assert enumerate_monomials(k, 0) == [(0,) * k]

    def test_count(self):
        assert len(enumerate_monomials(3, 7)) == comb(9, 2) == 36

    def test_deterministic_and_distinct(self):
        mons = enumerate_monomials(4, 5)
        assert mons == enumerate_monomials(4, 5)
        assert len(set(mons)) == len(mons) == comb(8, 3)
        assert all(sum(m) == 5 for m in mons)


class TestBuildMatrix:
    """M_T rows are the coefficient vectors of G_{T,i} * x^alpha"""

    def test_identity_tuple_n3(self, m33):
        assert m33.to_dense() == [[1, 1, 0], [0, 1, 1], [0, 1, 0]]

    def test_tuple_13(self, m13):
        assert m13.to_dense() == [[-2, 1, 0], [0, -2, 1], [0, 1, 0]]
        assert m13.columns == ((2, 0), (1, 1), (0, 2))
        assert m13.row_labels == ((1, (1, 0)), (1, (0, 1)), (2, (0, 0)))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_shape(self, n):
        data = degree_data(n)
        for T in [(n,) * (n - 1), tuple(range(1, n))]:
            M = build_matrix(n, T)
            assert (M.n_rows, M.n_cols) == (data.D, data.C)

    @pytest.mark.parametrize("n", [3, 4])
    def test_row_sparsity_matches_generator(self, n):
        table = build_g_table(n)
        for T in all_tuples(n):
            M = build_matrix(n, T, table)
            for (i, _), row in zip(M.row_labels, M.entries.rows):
                assert len(row) == len(table[(T[i - 1], i)])

    def test_deterministic(self):
        a = build_matrix(4, (1, 2, 4))
        b = build_matrix(4, (1, 2, 4))
        assert a.entries == b.entries
        assert a.content_hash() == b.content_hash()

    def test_triplets(self, m13):
        assert m13.to_triplets() == "3 3 3 1,3\n1 1 -2\n1 2 1\n2 2 -2\n2 3 1\n3 2 1\n"

    def test_export(self, m13, tmp_path):
        path = m13.export(tmp_path / "out" / "m13.txt")
        assert path.read_text(encoding="utf-8") == m13.to_triplets()

    def test_hash_differs_between_tuples(self, m13, m33):
        assert m13.content_hash() != m33.content_hash()


class TestValidateTuple:
    """Tuple shape and range"""

    def test_valid(self):
        assert validate_tuple(3, [1, 3]) == (1, 3)

    @pytest.mark.parametrize("T", [(1, 9), (0, 1), (1,), (1, 2, 3)])
    def test_invalid(self, T):
        with pytest.raises(ArgumentError):
            validate_tuple(3, T)


class TestOrbits:
    """Relabeling orbits of {1..n}^{n-1}"""

    def test_degree_three(self):
        assert canonical_tuples(3) == [((3, 3), 1), ((1, 3), 2), ((3, 1), 2), ((1, 1), 2), ((1, 2), 2)]

    @pytest.mark.parametrize("n, orbits", [(2, 2), (3, 5), (4, 15), (5, 52)])
    def test_orbit_counts(self, n, orbits):
        reps = canonical_tuples(n)
        assert len(reps) == orbits
        assert sum(size for _, size in reps) == n ** (n - 1)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_identity_tuple_is_singleton_and_first(self, n):
        reps = canonical_tuples(n)
        assert reps[0] == ((n,) * (n - 1), 1)

    @pytest.mark.parametrize("n", [3, 4])
    def test_canonical_form_is_orbit_minimum(self, n):
        groups = {}
        for T in all_tuples(n):
            groups.setdefault(canonical_form(n, T), []).append(T)
        for rep, members in groups.items():
            assert rep == min(members)
            assert len(members) == orbit_size(n, rep)

    def test_relabeling_permutes_rows_and_columns(self):
        # (1,2,4) and (2,1,4) swap x1 and x2, so the matrices agree up to row and column order
        a = build_matrix(4, (1, 2, 4))
        b = build_matrix(4, (2, 1, 4))
        rows_a = sorted(sorted(v for _, v in r) for r in a.entries.rows)
        rows_b = sorted(sorted(v for _, v in r) for r in b.entries.rows)
        assert rows_a == rows_b

    def test_verbatim_schedule(self):
        tuples = verbatim_tuples(3)
        assert [T for T, _ in tuples] == [(3, 3), (1, 3), (2, 3), (3, 1), (3, 2), (1, 1), (1, 2), (2, 1), (2, 2)]
        assert all(size == 1 for _, size in tuples)

    def test_schedule(self):
        assert schedule(3, [(1, 2), (3, 3), (3, 1)]) == [(3, 3), (3, 1), (1, 2)]
