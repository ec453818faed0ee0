"""Exact solution spaces of A B = sigma B A and their structure checks.

The solver lifts the equation through the column-major vec identity to an
n^2 x n^2 kernel computation. The predicted dimension and block structure
for Jordan-form A (zero blocks between unpaired eigenvalues, sign-layered
blocks between sigma-paired ones) are implemented independently so the two
routes can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotInCommutant, ShapeError
from .exactmat import RatMatrix, charpoly, kernel, kron, unvec
from .layered import check_sigma, jbold_sum, jordan_matrix, match_layered
from .spectral import JordanData


@dataclass(frozen=True)
class CommutantBasis:
    """Basis of {B : A B = sigma B A}; every element satisfies the equation
    exactly and dim == len(basis)."""

    A: RatMatrix
    sigma: int
    basis: tuple[RatMatrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def sigma_commutant(A: RatMatrix, sigma: int) -> CommutantBasis:
    """Canonical kernel basis of B -> A B - sigma B A.

    sigma = -1 gives the anti-commutant, sigma = +1 the ordinary commutant.
    """
    check_sigma(sigma)
    if not A.is_square():
        raise ShapeError("commutant of a non-square matrix")
    n = A.rows
    ident = RatMatrix.identity(n)
    lift = kron(ident, A) - kron(A.transpose(), ident).scale(sigma)
    basis = tuple(unvec(v, n, n) for v in kernel(lift))
    for E in basis:
        if not (A * E - (E * A).scale(sigma)).is_zero():
            raise AssertionError("kernel element fails the defining equation")
    return CommutantBasis(A, sigma, basis)


def commutant_dim_formula(data: JordanData, sigma: int) -> int:
    """Predicted dimension: sum of min(m_i, m_j) over ordered Jordan-block
    pairs whose eigenvalues satisfy alpha_i = sigma * alpha_j."""
    check_sigma(sigma)
    blocks = data.flatten()
    return sum(min(mi, mj)
               for ai, mi in blocks for aj, mj in blocks if ai == sigma * aj)


@dataclass(frozen=True)
class StructureReport:
    """Outcome of checking a commutant basis against the block-pattern
    prediction. Violations are expected to be empty."""

    data: JordanData
    sigma: int
    dim: int
    formula_dim: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations and self.dim == self.formula_dim


def verify_commutant_structure(data: JordanData, sigma: int,
                               basis: CommutantBasis | None = None) -> StructureReport:
    """Computes the commutant of the Jordan matrix of `data` and checks every
    basis element blockwise: zero where alpha_i != sigma*alpha_j, layered
    where alpha_i = sigma*alpha_j."""
    check_sigma(sigma)
    if basis is None:
        basis = sigma_commutant(jordan_matrix(data), sigma)
    blocks = data.flatten()
    offsets = [0]
    for _, m in blocks:
        offsets.append(offsets[-1] + m)
    violations: list[str] = []
    for idx, E in enumerate(basis.basis):
        for i, (ai, mi) in enumerate(blocks):
            for j, (aj, mj) in enumerate(blocks):
                sub = E.submatrix(offsets[i], offsets[i + 1],
                                  offsets[j], offsets[j + 1])
                if ai == sigma * aj:
                    if match_layered(sigma, mi, mj, sub) is None:
                        violations.append(
                            f"element {idx}: block ({i},{j}) not layered")
                elif not sub.is_zero():
                    violations.append(
                        f"element {idx}: block ({i},{j}) nonzero for "
                        f"unpaired eigenvalues {ai}, {aj}")
    return StructureReport(data, sigma, basis.dim,
                           commutant_dim_formula(data, sigma),
                           tuple(violations))


def _leading_inner_blocks(multiplicities: Sequence[int], B: RatMatrix) -> list[tuple[int, RatMatrix]]:
    """(i, top-left n_i x n_i corner of the (i,i) diagonal block) for each
    nonzero multiplicity."""
    out = []
    offset = 0
    for i, n_i in enumerate(multiplicities, start=1):
        if n_i:
            out.append((i, B.submatrix(offset, offset + n_i, offset, offset + n_i)))
            offset += i * n_i
    return out


def detblock_check(multiplicities: Sequence[int], B: RatMatrix) -> bool:
    """Characteristic-polynomial factorization test for B anti-commuting with
    the grouped nilpotent diag(jbold(1, n_1, 0), ..., jbold(s, n_s, 0)):

        charpoly(B) = prod_i charpoly(C_i)^ceil(i/2) * charpoly(-C_i)^floor(i/2)

    where C_i is the leading inner block of the (i,i) diagonal block of B.
    """
    A = jbold_sum(multiplicities)
    if B.shape != A.shape:
        raise ShapeError(f"expected {A.shape}, got {B.shape}")
    if not (A * B + B * A).is_zero():
        raise NotInCommutant("B does not anti-commute with the grouped nilpotent")
    product = None
    for i, C in _leading_inner_blocks(multiplicities, B):
        factor = charpoly(C) ** ((i + 1) // 2) * charpoly(-C) ** (i // 2)
        product = factor if product is None else product * factor
    assert product is not None
    return charpoly(B) == product


def nilpotent_commutant_dim(partition) -> int:
    """lambda_1 + 3*lambda_2 + ... + (2l-1)*lambda_l: the dimension of the
    solution space of J_lambda(0) B = sigma B J_lambda(0) for either sign,
    equal to the sum of squared transposed parts."""
    return sum((2 * i - 1) * part for i, part in enumerate(partition, start=1))
