"""Sparse polynomial arithmetic, elementary symmetric polynomials and the substitutions Phi_j"""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from badprimes.algebra.polycore import (
    MultiPoly,
    build_G,
    build_g_table,
    coefficient_maxima,
    elementary_symmetric,
    mul_monomial,
    phi_apply,
)
from badprimes.errors import ArgumentError


def poly(n_vars, mapping):
    return MultiPoly.from_dict(n_vars, mapping)


def polys(n_vars, max_exp=3):
    exps = st.tuples(*[st.integers(0, max_exp)] * n_vars)
    return st.dictionaries(exps, st.integers(-20, 20), max_size=6).map(lambda d: MultiPoly.from_dict(n_vars, d))


class TestMultiPoly:
    """Canonical form and ring operations"""

    def test_zero_coefficients_dropped(self):
        p = poly(2, {(1, 0): 3, (0, 1): 0})
        assert p.terms == (((1, 0), 3),)

    def test_equality_is_term_equality(self):
        assert poly(2, {(1, 0): 1, (0, 1): 1}) == poly(2, {(0, 1): 1, (1, 0): 1})

    def test_grevlex_order(self):
        p = poly(3, {(0, 0, 2): 1, (1, 1, 0): 1, (2, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (0, 2, 0): 1})
        assert [e for e, _ in p.terms] == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]

    def test_arithmetic(self):
        x1 = MultiPoly.variable(2, 1)
        x2 = MultiPoly.variable(2, 2)
        assert (x1 + x2) * (x1 - x2) == x1 ** 2 - x2 ** 2
        assert (x1 - x1).is_zero()
        assert 3 * x1 == x1 + x1 + x1

    def test_rejects_bad_exponents(self):
        with pytest.raises(ArgumentError):
            poly(2, {(1, 0, 0): 1})
        with pytest.raises(ArgumentError):
            poly(2, {(-1, 0): 1})

    def test_rejects_mixed_rings(self):
        with pytest.raises(ArgumentError):
            MultiPoly.variable(2, 1) + MultiPoly.variable(3, 1)

    def test_str(self):
        assert str(build_G(3, 1, 1)) == "-2*x1 + x2"
        assert str(build_G(3, 1, 2)) == "x1^2 - x1*x2"
        assert str(MultiPoly.zero(2)) == "0"


class TestElementarySymmetric:
    """sigma_i(x1, ..., x_n)"""

    def test_examples(self):
        assert elementary_symmetric(2, 1) == poly(2, {(1, 0): 1, (0, 1): 1})
        assert elementary_symmetric(3, 2) == poly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
        assert elementary_symmetric(4, 4) == poly(4, {(1, 1, 1, 1): 1})

    @pytest.mark.parametrize("n_vars", [1, 2, 3, 4, 5, 6])
    def test_term_count(self, n_vars):
        for i in range(1, n_vars + 1):
            assert len(elementary_symmetric(n_vars, i)) == comb(n_vars, i)

    def test_out_of_range(self):
        with pytest.raises(ArgumentError):
            elementary_symmetric(3, 0)
        with pytest.raises(ArgumentError):
            elementary_symmetric(3, 4)


class TestPhi:
    """Phi_j: x_i -> x_i - x_j, x_j -> -x_j"""

    def test_examples(self):
        x1, x2 = MultiPoly.variable(2, 1), MultiPoly.variable(2, 2)
        assert phi_apply(x1 + x2, 1, 3) == poly(2, {(1, 0): -2, (0, 1): 1})
        assert phi_apply(x1 * x2, 1, 3) == poly(2, {(2, 0): 1, (1, 1): -1})

    def test_identity_for_j_equal_n(self):
        f = poly(2, {(2, 1): 5, (0, 3): -1})
        assert phi_apply(f, 3, 3) == f

    def test_out_of_range(self):
        f = MultiPoly.variable(2, 1)
        with pytest.raises(ArgumentError):
            phi_apply(f, 0, 3)
        with pytest.raises(ArgumentError):
            phi_apply(f, 4, 3)
        with pytest.raises(ArgumentError):
            phi_apply(f, 1, 4)

    @settings(max_examples=200, deadline=None)
    @given(f=polys(3), j=st.integers(1, 3))
    def test_involution(self, f, j):
        assert phi_apply(phi_apply(f, j, 4), j, 4) == f

    @settings(max_examples=200, deadline=None)
    @given(f=polys(3), g=polys(3), j=st.integers(1, 4))
    def test_additive(self, f, g, j):
        assert phi_apply(f + g, j, 4) == phi_apply(f, j, 4) + phi_apply(g, j, 4)

    @settings(max_examples=100, deadline=None)
    @given(f=polys(2, max_exp=2), g=polys(2, max_exp=2), j=st.integers(1, 3))
    def test_multiplicative(self, f, g, j):
        assert phi_apply(f * g, j, 3) == phi_apply(f, j, 3) * phi_apply(g, j, 3)


class TestBuildG:
    """G_{j,i} = Phi_j(sigma_i)"""

    def test_examples(self):
        assert build_G(3, 1, 1) == poly(2, {(1, 0): -2, (0, 1): 1})
        assert build_G(3, 1, 2) == poly(2, {(2, 0): 1, (1, 1): -1})

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_identity_substitution(self, n):
        for i in range(1, n):
            assert build_G(n, n, i) == elementary_symmetric(n - 1, i)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_homogeneous_of_degree_i(self, n):
        table = build_g_table(n)
        for (j, i), G in table.items():
            assert G.is_homogeneous()
            assert G.total_degree() == i

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_coefficient_bound(self, n):
        for j, i, observed, bound in coefficient_maxima(n):
            assert 1 <= observed <= bound

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_distinguished_coefficient(self, n):
        table = build_g_table(n)
        for j in range(1, n):
            for i in range(1, n):
                exponents = tuple(i if k == j - 1 else 0 for k in range(n - 1))
                assert table[(j, i)].coefficient(exponents) == (-1) ** i * comb(n - 1, i)

    def test_table_is_read_only(self):
        table = build_g_table(3)
        assert len(table) == 6
        with pytest.raises(TypeError):
            table[(1, 1)] = MultiPoly.zero(2)

    def test_maximum_is_not_always_attained(self):
        rows = {(j, i): (obs, bound) for j, i, obs, bound in coefficient_maxima(3)}
        assert rows[(1, 2)] == (1, 3)


class TestMulMonomial:
    """Exponent shifts"""

    def test_examples(self):
        x1, x2 = MultiPoly.variable(2, 1), MultiPoly.variable(2, 2)
        assert mul_monomial(x1 + x2, (1, 0)) == x1 ** 2 + x1 * x2
        f = x1 ** 2 - x1 * x2
        assert mul_monomial(f, (0, 0)) == f
        assert mul_monomial(f, (0, 2)) == poly(2, {(2, 2): 1, (1, 3): -1})

    def test_length_mismatch(self):
        with pytest.raises(ArgumentError):
            mul_monomial(MultiPoly.variable(2, 1), (1, 0, 0))

    @settings(max_examples=100, deadline=None)
    @given(f=polys(3), alpha=st.tuples(*[st.integers(0, 3)] * 3))
    def test_matches_multiplication(self, f, alpha):
        assert mul_monomial(f, alpha) == f * poly(3, {alpha: 1})
