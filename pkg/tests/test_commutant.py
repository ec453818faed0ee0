from fractions import Fraction as F

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from anticommuting.commutant import (commutant_dim_formula, detblock_check,
                                     nilpotent_commutant_dim, sigma_commutant,
                                     verify_commutant_structure)
from anticommuting.errors import NotInCommutant
from anticommuting.exactmat import RatMatrix, charpoly, inverse, rank, rref, vec, vstack
from anticommuting.layered import jordan_block, jordan_matrix
from anticommuting.sampler import SampleConfig, SplitMix64, sample_nilpotent_pair
from anticommuting.spectral import JordanData, Partition, partitions

from conftest import invertible_matrices, jordan_datas_st


def span_matrix(mats):
    return rref(vstack([vec(M).transpose() for M in mats])).reduced


def brute_force_anticommutant(A):
    """Independent route: the matrix of B -> AB + BA in the standard basis
    E_uv, assembled entry by entry, then its kernel."""
    from anticommuting.exactmat import kernel, unvec
    n = A.rows
    columns = []
    for v in range(n):
        for u in range(n):
            E = RatMatrix.from_rows(
                [[F(int(i == u and j == v)) for j in range(n)] for i in range(n)])
            columns.append(vec(A * E + E * A))
    big = RatMatrix(n * n, n * n, tuple(
        tuple(columns[c].entries[r][0] for c in range(n * n))
        for r in range(n * n)))
    return [unvec(w, n, n) for w in kernel(big)]


class TestSigmaCommutant:
    def test_zero_matrix(self):
        assert sigma_commutant(RatMatrix.zeros(2, 2), -1).dim == 4

    def test_identity(self):
        # 2B = 0 forces B = 0 away from characteristic 2.
        assert sigma_commutant(RatMatrix.identity(2), -1).dim == 0

    def test_nilpotent_block_against_brute_force(self):
        A = jordan_block(2, 0)
        cb = sigma_commutant(A, -1)
        assert cb.dim == 2
        expected_span = span_matrix(
            [RatMatrix.from_rows([[1, 0], [0, -1]]),
             RatMatrix.from_rows([[0, 1], [0, 0]])])
        assert span_matrix(cb.basis) == expected_span
        assert span_matrix(brute_force_anticommutant(A)) == expected_span

    def test_semisimple_pair_solutions_antidiagonal(self):
        # Direct 2x2 expansion: AB + BA = [[2x, 0], [0, -2w]].
        cb = sigma_commutant(RatMatrix.diagonal([1, -1]), -1)
        assert cb.dim == 2
        for E in cb.basis:
            assert E.entries[0][0] == 0 and E.entries[1][1] == 0

    @given(jordan_datas_st(max_total=4), st.sampled_from([1, -1]))
    @settings(max_examples=30)
    def test_dim_matches_formula(self, data, sigma):
        A = jordan_matrix(data)
        assert sigma_commutant(A, sigma).dim == commutant_dim_formula(data, sigma)

    @given(jordan_datas_st(max_total=3), st.sampled_from([1, -1]), st.data())
    @settings(max_examples=20)
    def test_conjugation_equivariance(self, jd, sigma, data):
        A = jordan_matrix(jd)
        g = data.draw(invertible_matrices(A.rows))
        conj = g * A * inverse(g)
        assert sigma_commutant(conj, sigma).dim == sigma_commutant(A, sigma).dim


class TestDimFormula:
    def test_nilpotent_two_one(self):
        # Ordered block pairs of (2,1) at eigenvalue 0: 2+1+1+1.
        data = JordanData.of([(0, (2, 1))])
        assert commutant_dim_formula(data, -1) == 5

    def test_plus_sigma_gives_classical_dimension(self):
        data = JordanData.of([(0, (2, 1))])
        assert commutant_dim_formula(data, 1) == \
            nilpotent_commutant_dim(Partition((2, 1))) == 5

    def test_no_pairing(self):
        data = JordanData.of([(1, (1,)), (2, (1,))])
        assert commutant_dim_formula(data, -1) == 0

    def test_nilpotent_identity_all_partitions(self):
        # Zero eigenvalues pair with themselves under both signs, and the
        # dimension is the sum of squared transposed parts.
        for n in range(1, 8):
            for lam in partitions(n):
                data = JordanData.of([(0, lam)])
                squares = sum(k * k for k in lam.transpose().parts)
                assert commutant_dim_formula(data, -1) == squares
                assert commutant_dim_formula(data, 1) == squares
                assert nilpotent_commutant_dim(lam) == squares


class TestStructure:
    def test_paired_blocks_layered(self):
        report = verify_commutant_structure(
            JordanData.of([(1, (2,)), (-1, (1,))]), -1)
        assert report.ok
        assert report.dim == 2  # min(2,1) for each off-diagonal pair

    def test_single_nilpotent_block(self):
        report = verify_commutant_structure(JordanData.of([(0, (3,))]), -1)
        assert report.ok and report.dim == 3

    def test_unpaired_dim_zero(self):
        report = verify_commutant_structure(
            JordanData.of([(2, (2,)), (3, (1,))]), -1)
        assert report.ok and report.dim == 0


class TestDetblock:
    def test_trivial_single_block(self):
        B = RatMatrix.from_rows([[F(7, 3)]])
        assert detblock_check((1,), B)

    def test_j2_case_direct_expansion(self):
        # A = J_2(0), B = [[a, b], [0, -a]]: charpoly (X-a)(X+a).
        a, b = F(3), F(5)
        B = RatMatrix.from_rows([[a, b], [0, -a]])
        assert charpoly(B) == charpoly(RatMatrix.diagonal([a, -a]))
        assert detblock_check((0, 1), B)

    def test_mixed_sampled(self):
        sample = sample_nilpotent_pair((1, 1, 1), SampleConfig(seed=5))
        assert detblock_check((1, 1, 1), sample.B)

    def test_not_in_commutant(self):
        with pytest.raises(NotInCommutant):
            detblock_check((0, 1), RatMatrix.identity(2))

    def test_random_kernel_combinations(self):
        rng = SplitMix64(99)
        for n in range(1, 6):
            for lam in partitions(n):
                mults = lam.block_multiplicities()
                sample = sample_nilpotent_pair(mults, SampleConfig(seed=7 * n))
                A = sample.A
                combo = RatMatrix.zeros(A.rows, A.cols)
                for E in sigma_commutant(A, -1).basis:
                    combo = combo + E.scale(rng.rational(5))
                assert detblock_check(mults, sample.B)
                assert detblock_check(mults, combo)


def test_basis_elements_satisfy_equation_exactly():
    data = JordanData.of([(0, (2,)), (2, (1,)), (-2, (1,))])
    A = jordan_matrix(data)
    for sigma in (1, -1):
        for E in sigma_commutant(A, sigma).basis:
            assert (A * E - (E * A).scale(sigma)).is_zero()


def test_rank_of_flattened_basis_equals_dim():
    data = JordanData.of([(0, (2, 1))])
    cb = sigma_commutant(jordan_matrix(data), -1)
    stacked = vstack([vec(E).transpose() for E in cb.basis])
    assert rank(stacked) == cb.dim
