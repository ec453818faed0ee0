"""Component classification for anti-commuting pairs.

A pair (A, B) with AB + BA = 0 lands in the component indexed by
(p, m, r), 2p + m + r = n, read off from the Jordan structure of A alone:
the nilpotent part contributes p0 = sum n_i * floor(i/2) and the r count,
each pair {a, -a} of nonzero eigenvalues contributes via the transposed
block partitions, and unpaired nonzero eigenvalues feed m. Also hosts the
exact genericity test, the direct-sum and flip laws on triples, and the
squaring bridges into commuting pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAntiCommuting, ShapeError
from .exactmat import Polynomial, RatMatrix, charpoly, rank
from .spectral import (JordanData, Partition, is_diagonalizable, jordan_data,
                       squarefree_part)


@dataclass(frozen=True)
class ComponentTriple:
    p: int
    m: int
    r: int

    def __post_init__(self):
        if self.p < 0 or self.m < 0 or self.r < 0:
            raise ValueError(f"negative component index: {self}")

    @property
    def n(self) -> int:
        return 2 * self.p + self.m + self.r

    def __str__(self) -> str:
        return f"({self.p},{self.m},{self.r})"


def enumerate_components(n: int) -> list[ComponentTriple]:
    """All triples with 2p + m + r = n, sorted lexicographically by (p, m).

    There are (k+1)^2 of them for n = 2k and k(k+1) for n = 2k-1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return [ComponentTriple(p, m, n - 2 * p - m)
            for p in range(n // 2 + 1) for m in range(n - 2 * p + 1)]


def direct_sum(t1: ComponentTriple, t2: ComponentTriple) -> ComponentTriple:
    return ComponentTriple(t1.p + t2.p, t1.m + t2.m, t1.r + t2.r)


def flip(t: ComponentTriple) -> ComponentTriple:
    """Index of the image component under (A, B) -> (B, A)."""
    return ComponentTriple(t.p, t.r, t.m)


@dataclass(frozen=True)
class PairedEigenvalues:
    """One {a, -a} pair of nonzero eigenvalues of A; a is the positive
    representative, nu its Jordan type, mu the type at -a."""

    a: Fraction
    nu: Partition
    mu: Partition
    p: int
    m: int


@dataclass(frozen=True)
class ClassificationReport:
    triple: ComponentTriple
    nilpotent_partition: Partition
    nilpotent_p: int
    nilpotent_r: int
    paired: tuple[PairedEigenvalues, ...]
    singles: tuple[tuple[Fraction, int], ...]


def _paired_p(nu: Partition, mu: Partition) -> int:
    nut, mut = nu.transpose().parts, mu.transpose().parts
    return sum(min(a, b) for a, b in zip(nut, mut))


def component_of(A: RatMatrix, B: RatMatrix | None = None) -> ClassificationReport:
    """Constructive component of (A, B) for every B anti-commuting with A.

    The classification depends only on A; pass B to additionally validate
    AB + BA = 0. Requires the characteristic polynomial of A to split
    over Q (IrrationalSpectrum otherwise).
    """
    if not A.is_square():
        raise ShapeError("classification of a non-square matrix")
    if B is not None:
        if B.shape != A.shape:
            raise ShapeError(f"pair shape mismatch: {A.shape} vs {B.shape}")
        if not (A * B + B * A).is_zero():
            raise NotAntiCommuting("AB + BA != 0")
    data = jordan_data(A)
    zero_part = data.partition_at(Fraction(0))
    p0 = sum(n_i * (i // 2)
             for i, n_i in enumerate(zero_part.block_multiplicities(), start=1))
    r = zero_part.weight - 2 * p0

    spectrum = {e for e, _ in data.blocks}
    paired: list[PairedEigenvalues] = []
    singles: list[tuple[Fraction, int]] = []
    for e, part in data.blocks:
        if e == 0:
            continue
        if -e in spectrum:
            if e > 0:
                nu, mu = part, data.partition_at(-e)
                p_a = _paired_p(nu, mu)
                paired.append(PairedEigenvalues(
                    e, nu, mu, p_a, nu.weight + mu.weight - 2 * p_a))
        else:
            singles.append((e, part.weight))

    p = p0 + sum(x.p for x in paired)
    m = sum(x.m for x in paired) + sum(mult for _, mult in singles)
    report = ClassificationReport(
        ComponentTriple(p, m, r), zero_part, p0, r, tuple(paired), tuple(singles))
    assert report.triple.n == A.rows
    return report


def _strip_zero_root(poly: Polynomial) -> tuple[int, Polynomial]:
    """Write poly = X^e * q with q(0) != 0."""
    coeffs = poly.coeffs
    e = 0
    while e < len(coeffs) - 1 and coeffs[e] == 0:
        e += 1
    return e, Polynomial(coeffs[e:])


def _distinct_nonzero_eigenvalues(M: RatMatrix) -> tuple[bool, int]:
    """(nonzero part of charpoly is squarefree, number of distinct nonzero
    complex eigenvalues). Needs no root extraction."""
    _, q = _strip_zero_root(charpoly(M))
    if q.degree == 0:
        return True, 0
    sf = squarefree_part(q)
    return sf == q.monic(), sf.degree


def is_generic_pair(A: RatMatrix, B: RatMatrix, t: ComponentTriple) -> bool:
    """Exact test for the dense-open genericity conditions of a component:

    - rank(A) = 2p + m and rank(B) = 2p + r;
    - A and B diagonalizable;
    - the nonzero eigenvalues of A (and of B) are simple;
    - A^2 has exactly p + m distinct nonzero eigenvalues and B^2 exactly
      p + r (ties the eigenvalue pairing of the pair to the claimed p).
    """
    if not A.is_square() or A.shape != B.shape:
        raise ShapeError(f"pair shape mismatch: {A.shape} vs {B.shape}")
    if not (A * B + B * A).is_zero():
        raise NotAntiCommuting("AB + BA != 0")
    if rank(A) != 2 * t.p + t.m or rank(B) != 2 * t.p + t.r:
        return False
    if not (is_diagonalizable(A) and is_diagonalizable(B)):
        return False
    simple_a, _ = _distinct_nonzero_eigenvalues(A)
    simple_b, _ = _distinct_nonzero_eigenvalues(B)
    if not (simple_a and simple_b):
        return False
    _, distinct_a2 = _distinct_nonzero_eigenvalues(A * A)
    _, distinct_b2 = _distinct_nonzero_eigenvalues(B * B)
    return distinct_a2 == t.p + t.m and distinct_b2 == t.p + t.r


def _require_anticommuting(A: RatMatrix, B: RatMatrix) -> None:
    if A.shape != B.shape or not A.is_square():
        raise ShapeError(f"pair shape mismatch: {A.shape} vs {B.shape}")
    if not (A * B + B * A).is_zero():
        raise NotAntiCommuting("AB + BA != 0")


def bridge_square(A: RatMatrix, B: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    """(A, B) -> (A^2, B); the output is a commuting pair."""
    _require_anticommuting(A, B)
    return A * A, B


def bridge_square2(A: RatMatrix, B: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    """(A, B) -> (A^2, B^2); the output is a commuting pair."""
    _require_anticommuting(A, B)
    return A * A, B * B
