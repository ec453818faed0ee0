"""Polynomial and spectral structure over Q.

Squarefree parts, exact rational roots with multiplicities, Jordan types
from rank sequences, and full Jordan data for matrices whose characteristic
polynomial splits over Q. Diagonalizability and squarefree-based tests do
not need a split spectrum; anything that extracts eigenvalues does, and
fails loudly with IrrationalSpectrum otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import IrrationalSpectrum, ShapeError
from .exactmat import Polynomial, RatMatrix, charpoly, poly_gcd, rank


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; the empty partition is allowed."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"nonpositive part in {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(
            sum(1 for p in self.parts if p >= k)
            for k in range(1, self.parts[0] + 1)))

    def block_multiplicities(self) -> tuple[int, ...]:
        """(n_1, ..., n_s): n_i = number of parts equal to i, s = largest part."""
        if not self.parts:
            return ()
        counts = [0] * self.parts[0]
        for p in self.parts:
            counts[p - 1] += 1
        return tuple(counts)


def transpose_partition(p: Partition) -> Partition:
    """Conjugate partition: k-th part counts the parts of p that are >= k."""
    return p.transpose()


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, largest-part-first order."""
    def gen(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))
    yield from gen(n, n, ())


@dataclass(frozen=True)
class JordanData:
    """Jordan structure: pairwise distinct eigenvalues with their block partitions."""

    blocks: tuple[tuple[Fraction, Partition], ...]

    def __post_init__(self):
        eigs = [e for e, _ in self.blocks]
        if len(set(eigs)) != len(eigs):
            raise ValueError("repeated eigenvalue in Jordan data")
        if any(not part for _, part in self.blocks):
            raise ValueError("empty partition in Jordan data")

    @classmethod
    def of(cls, blocks: Iterable[tuple]) -> "JordanData":
        return cls(tuple(
            (Fraction(e), part if isinstance(part, Partition) else Partition.of(part))
            for e, part in blocks))

    @property
    def total(self) -> int:
        return sum(part.weight for _, part in self.blocks)

    def flatten(self) -> tuple[tuple[Fraction, int], ...]:
        """Individual Jordan blocks (eigenvalue, size), sizes decreasing within
        each eigenvalue, eigenvalues in listed order."""
        return tuple((e, m) for e, part in self.blocks for m in part.parts)

    def partition_at(self, eigenvalue: Fraction) -> Partition:
        for e, part in self.blocks:
            if e == eigenvalue:
                return part
        return Partition(())


@dataclass(frozen=True)
class RationalRoots:
    """Rational roots with exact multiplicities; splits is true when the
    multiplicities account for the full degree."""

    roots: tuple[tuple[Fraction, int], ...]
    splits: bool

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.roots)


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic generator of p / gcd(p, p')."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    q, rem = p.divmod(g)
    assert rem.is_zero()
    return q.monic()


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fast for smooth inputs)."""
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in _factorize(n).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return divs


def rational_roots(p: Polynomial) -> RationalRoots:
    """All rational roots with multiplicities, by candidate testing on the
    integer-cleared polynomial and repeated exact division."""
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    scale = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * scale) for c in p.coeffs]
    e = 0
    while e < len(ints) - 1 and ints[e] == 0:
        e += 1
    roots: list[tuple[Fraction, int]] = []
    if e > 0:
        roots.append((Fraction(0), e))
    trailing, leading = abs(ints[e]), abs(ints[-1])
    reduced = p
    if len(ints) - 1 > e:
        candidates = sorted({
            sign * Fraction(num, den)
            for num in _divisors(trailing) for den in _divisors(leading)
            for sign in (1, -1)})
        for cand in candidates:
            if reduced(cand) != 0:
                continue
            mult = 0
            factor = Polynomial.from_coeffs([-cand, 1])
            while True:
                q, rem = reduced.divmod(factor)
                if not rem.is_zero():
                    break
                reduced = q
                mult += 1
            roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0])
    found = sum(m for _, m in roots)
    return RationalRoots(tuple(roots), found == p.degree)


def is_diagonalizable(A: RatMatrix) -> bool:
    """True iff the squarefree part of the characteristic polynomial kills A
    (equivalent to diagonalizability over the complex numbers)."""
    if not A.is_square():
        raise ShapeError("diagonalizability of a non-square matrix")
    q = squarefree_part(charpoly(A))
    return q.eval_matrix(A).is_zero()


def jordan_type(A: RatMatrix, alpha) -> Partition:
    """Partition of Jordan block sizes of A at alpha, from the rank sequence
    of powers of A - alpha*I; empty when alpha is not an eigenvalue."""
    if not A.is_square():
        raise ShapeError("jordan type of a non-square matrix")
    n = A.rows
    N = A - RatMatrix.identity(n).scale(alpha)
    # blocks_ge[k] = number of blocks of size >= k+1; this sequence is the
    # transposed partition.
    blocks_ge = []
    prev_rank = n
    power = RatMatrix.identity(n)
    for _ in range(n):
        power = power * N
        r = rank(power)
        count = prev_rank - r
        if count == 0:
            break
        blocks_ge.append(count)
        prev_rank = r
    return Partition(tuple(blocks_ge)).transpose()


def jordan_data(A: RatMatrix) -> JordanData:
    """Complete Jordan structure; requires the characteristic polynomial to
    split over Q."""
    rr = rational_roots(charpoly(A))
    if not rr.splits:
        raise IrrationalSpectrum(
            "characteristic polynomial does not split over Q")
    blocks = []
    for root, mult in rr.roots:
        part = jordan_type(A, root)
        assert part.weight == mult
        blocks.append((root, part))
    return JordanData(tuple(blocks))
