from fractions import Fraction as F

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from anticommuting.errors import IrrationalSpectrum
from anticommuting.exactmat import Polynomial, RatMatrix, inverse
from anticommuting.layered import jordan_block, jordan_matrix
from anticommuting.spectral import (JordanData, Partition, is_diagonalizable,
                                    jordan_data, jordan_type, partitions,
                                    rational_roots, squarefree_part,
                                    transpose_partition)

from conftest import invertible_matrices, jordan_datas_st, partitions_st


class TestSquarefree:
    def test_x_squared(self):
        assert squarefree_part(Polynomial.from_coeffs([0, 0, 1])) == \
            Polynomial.from_coeffs([0, 1])

    def test_already_squarefree(self):
        p = Polynomial.from_coeffs([-1, 0, 1])
        assert squarefree_part(p) == p

    def test_against_gcd_oracle(self):
        # (X-1)^2 (X+2): squarefree part must be (X-1)(X+2), checked by
        # expanding and dividing.
        p = Polynomial.from_roots([1, 1, -2])
        sf = squarefree_part(p)
        assert sf == Polynomial.from_roots([1, -2])
        q, rem = p.divmod(sf)
        assert rem.is_zero() and q == Polynomial.from_roots([1])

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_part(Polynomial(()))


class TestRationalRoots:
    def test_two_roots(self):
        rr = rational_roots(Polynomial.from_coeffs([-1, 0, 1]))
        assert rr.as_dict() == {F(1): 1, F(-1): 1}
        assert rr.splits

    def test_triple_zero(self):
        rr = rational_roots(Polynomial.from_coeffs([0, 0, 0, 1]))
        assert rr.roots == ((F(0), 3),)
        assert rr.splits

    def test_irreducible(self):
        rr = rational_roots(Polynomial.from_coeffs([-2, 0, 1]))
        assert rr.roots == ()
        assert not rr.splits

    def test_fractional_roots(self):
        p = Polynomial.from_roots([F(2, 3), F(-5, 7), F(2, 3)])
        rr = rational_roots(p)
        assert rr.as_dict() == {F(2, 3): 2, F(-5, 7): 1}
        assert rr.splits

    @given(st.lists(st.sampled_from([F(0), F(1), F(-2), F(1, 2), F(3)]),
                    min_size=1, max_size=5))
    def test_from_planted_roots(self, roots):
        rr = rational_roots(Polynomial.from_roots(roots))
        expected = {r: roots.count(r) for r in set(roots)}
        assert rr.as_dict() == expected
        assert rr.splits


class TestDiagonalizable:
    def test_diagonal(self):
        assert is_diagonalizable(RatMatrix.diagonal([1, -1]))

    def test_nilpotent_block(self):
        assert not is_diagonalizable(jordan_block(2, 0))

    def test_companion_of_irreducible(self):
        # Distinct irrational eigenvalues: squarefree charpoly implies
        # diagonalizable even though nothing splits over Q.
        C = RatMatrix.from_rows([[0, 2], [1, 0]])  # X^2 - 2
        assert is_diagonalizable(C)


class TestJordanType:
    def test_jordan_form_is_its_own_type(self):
        data = JordanData.of([(0, (2, 1))])
        assert jordan_type(jordan_matrix(data), 0) == Partition((2, 1))

    def test_grouped_block(self):
        from anticommuting.layered import jbold
        assert jordan_type(jbold(2, 2, 0), 0) == Partition((2, 2))

    def test_semisimple(self):
        assert jordan_type(RatMatrix.diagonal([1, 1, 2]), 1) == Partition((1, 1))

    def test_non_eigenvalue_empty(self):
        assert jordan_type(RatMatrix.diagonal([1, 2]), 5) == Partition(())

    @given(partitions_st(max_weight=5))
    def test_roundtrip_with_jordan_matrix(self, lam):
        A = jordan_matrix(JordanData.of([(0, lam)]))
        assert jordan_type(A, 0) == lam


class TestJordanData:
    def test_two_eigenvalues(self):
        A = RatMatrix.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, -1]])
        data = jordan_data(A)
        assert data.partition_at(F(1)) == Partition((2,))
        assert data.partition_at(F(-1)) == Partition((1,))

    def test_zero_matrix(self):
        data = jordan_data(RatMatrix.zeros(3, 3))
        assert data.blocks == ((F(0), Partition((1, 1, 1))),)

    @given(st.data())
    @settings(max_examples=25)
    def test_conjugation_invariant(self, data):
        jd = data.draw(jordan_datas_st(max_total=4))
        A = jordan_matrix(jd)
        g = data.draw(invertible_matrices(A.rows))
        conj = jordan_data(g * A * inverse(g))
        assert set(conj.blocks) == set(jd.blocks)

    def test_irrational_spectrum_raises(self):
        C = RatMatrix.from_rows([[0, 2], [1, 0]])
        with pytest.raises(IrrationalSpectrum):
            jordan_data(C)

    @given(jordan_datas_st(max_total=5))
    @settings(max_examples=40)
    def test_weights_sum_to_n(self, jd):
        A = jordan_matrix(jd)
        assert jordan_data(A).total == A.rows

    @given(jordan_datas_st(max_total=4))
    @settings(max_examples=30)
    def test_diagonalizable_iff_all_parts_one(self, jd):
        A = jordan_matrix(jd)
        expected = all(p == 1 for _, part in jd.blocks for p in part)
        assert is_diagonalizable(A) == expected


class TestTranspose:
    def test_self_conjugate(self):
        assert transpose_partition(Partition((2, 1))) == Partition((2, 1))

    def test_column(self):
        assert transpose_partition(Partition((3,))) == Partition((1, 1, 1))

    def test_enumeration_oracle(self):
        # nu'_k = #{i : nu_i >= k} checked entry by entry.
        nu = Partition((4, 2, 1))
        expected = tuple(
            sum(1 for p in nu.parts if p >= k) for k in range(1, 5))
        assert transpose_partition(nu).parts == expected == (3, 2, 1, 1)

    @given(partitions_st(max_weight=8))
    def test_involution(self, lam):
        assert transpose_partition(transpose_partition(lam)) == lam


def test_partitions_enumeration():
    assert [p.parts for p in partitions(4)] == \
        [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert sum(1 for _ in partitions(7)) == 15


def test_block_multiplicities():
    assert Partition((3, 2, 2)).block_multiplicities() == (0, 2, 1)
    assert Partition(()).block_multiplicities() == ()
