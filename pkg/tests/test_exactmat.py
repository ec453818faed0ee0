from fractions import Fraction as F

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from anticommuting.errors import ShapeError
from anticommuting.exactmat import (Polynomial, RatMatrix, charpoly, hstack,
                                    inverse, kernel, kron, poly_gcd, rank,
                                    rref, solve_exact, unvec, vec)

from conftest import invertible_matrices, matrices, rationals, square_matrices


def det_cofactor(M: RatMatrix) -> F:
    """Independent determinant oracle by first-row cofactor expansion."""
    n = M.rows
    if n == 1:
        return M.entries[0][0]
    total = F(0)
    for j in range(n):
        a = M.entries[0][j]
        if not a:
            continue
        minor = RatMatrix.from_rows(
            [[row[c] for c in range(n) if c != j] for row in M.entries[1:]])
        total += (-1) ** j * a * det_cofactor(minor)
    return total


class TestRref:
    def test_identity(self):
        res = rref(RatMatrix.identity(3))
        assert res.reduced == RatMatrix.identity(3)
        assert res.rank == 3
        assert res.pivots == (0, 1, 2)

    def test_single_pivot(self):
        res = rref(RatMatrix.from_rows([[0, 1], [0, 0]]))
        assert res.rank == 1
        assert res.pivots == (1,)

    @given(matrices(4, 4, st.builds(F, st.integers(-5, 5))))
    @settings(max_examples=60)
    def test_rank_against_determinant_oracle(self, M):
        assert (rank(M) == 4) == (det_cofactor(M) != 0)

    @given(square_matrices(max_n=4))
    def test_idempotent(self, M):
        once = rref(M).reduced
        assert rref(once).reduced == once

    @given(st.integers(2, 4), st.integers(2, 5), st.data())
    @settings(max_examples=60)
    def test_rank_nullity(self, m, n, data):
        M = data.draw(matrices(m, n))
        assert rank(M) + len(kernel(M)) == n


class TestKernel:
    def test_single_relation(self):
        basis = kernel(RatMatrix.from_rows([[1, 1]]))
        assert len(basis) == 1
        assert basis[0] == RatMatrix.from_rows([[-1], [1]])

    def test_zero_map(self):
        assert len(kernel(RatMatrix.zeros(2, 2))) == 2

    def test_injective(self):
        assert kernel(RatMatrix.identity(3)) == []

    @given(matrices(3, 4))
    def test_vectors_annihilated(self, M):
        for v in kernel(M):
            assert (M * v).is_zero()

    @given(matrices(3, 4))
    def test_matches_rref_basis(self, M):
        res = rref(M)
        free = [j for j in range(M.cols) if j not in res.pivots]
        for f, v in zip(free, kernel(M)):
            assert v.entries[f][0] == 1
            for i, p in enumerate(res.pivots):
                assert v.entries[p][0] == -res.reduced.entries[i][f]


class TestKron:
    def test_identity_factor(self):
        M = RatMatrix.from_rows([[1, 2], [3, 4]])
        K = kron(RatMatrix.identity(2), M)
        assert K.submatrix(0, 2, 0, 2) == M
        assert K.submatrix(2, 4, 2, 4) == M
        assert K.submatrix(0, 2, 2, 4).is_zero()

    def test_scalar_factor(self):
        M = RatMatrix.from_rows([[1, 2], [3, 4]])
        assert kron(M, RatMatrix.identity(1)) == M

    @given(matrices(2, 3), matrices(3, 2))
    @settings(max_examples=30)
    def test_definition_unrolling(self, A, B):
        K = kron(A, B)
        assert K.shape == (6, 6)
        for i in range(A.rows):
            for j in range(A.cols):
                for k in range(B.rows):
                    for l in range(B.cols):
                        assert K.entries[i * 3 + k][j * 2 + l] == \
                            A.entries[i][j] * B.entries[k][l]

    @given(matrices(2, 2), matrices(2, 3), matrices(3, 2))
    @settings(max_examples=30)
    def test_vec_identity(self, A, X, B):
        assert vec(A * X * B) == kron(B.transpose(), A) * vec(X)


class TestCharpoly:
    def test_nilpotent_block(self):
        J = RatMatrix.from_rows([[0, 1], [0, 0]])
        assert charpoly(J) == Polynomial.from_coeffs([0, 0, 1])

    def test_diagonal(self):
        assert charpoly(RatMatrix.diagonal([1, -1])) == \
            Polynomial.from_coeffs([-1, 0, 1])

    def test_companion_matrix(self):
        # Companion of X^3 - 2X + 1 reproduces its polynomial.
        p = Polynomial.from_coeffs([1, -2, 0, 1])
        C = RatMatrix.from_rows([[0, 0, -1], [1, 0, 2], [0, 1, 0]])
        assert charpoly(C) == p

    def test_non_square_rejected(self):
        with pytest.raises(ShapeError):
            charpoly(RatMatrix.zeros(2, 3))

    @given(square_matrices(max_n=3), st.data())
    @settings(max_examples=40)
    def test_similarity_invariant(self, A, data):
        g = data.draw(invertible_matrices(A.rows))
        assert charpoly(g * A * inverse(g)) == charpoly(A)


class TestPolynomial:
    def test_divmod_roundtrip(self):
        p = Polynomial.from_roots([1, 1, -2])
        q, r = p.divmod(Polynomial.from_roots([1]))
        assert r.is_zero()
        assert q == Polynomial.from_roots([1, -2])

    @given(st.lists(rationals, min_size=1, max_size=5),
           st.lists(rationals, min_size=1, max_size=4))
    def test_divmod_identity(self, a_coeffs, b_coeffs):
        a = Polynomial.from_coeffs(a_coeffs)
        b = Polynomial.from_coeffs(b_coeffs)
        if b.is_zero():
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree

    def test_gcd(self):
        a = Polynomial.from_roots([1, 1, 2])
        b = Polynomial.from_roots([1, 3])
        assert poly_gcd(a, b) == Polynomial.from_roots([1])


class TestSolve:
    @given(st.integers(2, 4), st.data())
    @settings(max_examples=30)
    def test_solves_invertible_systems(self, n, data):
        A = data.draw(invertible_matrices(n))
        b = data.draw(matrices(n, 1))
        x = solve_exact(A, b)
        assert x is not None and A * x == b

    def test_inconsistent(self):
        A = RatMatrix.from_rows([[1, 1], [1, 1]])
        b = RatMatrix.from_rows([[0], [1]])
        assert solve_exact(A, b) is None


def test_vec_unvec_roundtrip():
    M = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert unvec(vec(M), 2, 3) == M
    assert vec(M).entries[1][0] == F(4)  # column-major: (1,0) comes second


def test_hstack_shape_mismatch():
    with pytest.raises(ShapeError):
        hstack([RatMatrix.zeros(2, 2), RatMatrix.zeros(3, 2)])
