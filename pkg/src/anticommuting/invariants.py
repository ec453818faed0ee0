"""Conjugation invariants of matrix pairs and the plane-point map.

Trace words Tr(A^i B^j) generate the invariant ring of a pair under
simultaneous conjugation; their differentials give an exact rank probe of
the invariant-theory quotient dimension. A generic anti-commuting pair is
also sent to n points of the plane: (a, eigenvalue of B^2 on the
a-eigenline) for each eigenvalue pair {a, -a} of A, (a, 0) for unpaired
nonzero eigenvalues, and (0, b) for the eigenvalues of B on ker A. That
assignment is constant on conjugation orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .classify import component_of, is_generic_pair
from .errors import IrrationalSpectrum, NotGeneric, ShapeError
from .exactmat import RatMatrix, charpoly, hstack, kernel, rank, solve_exact
from .lifts import anticommutator_tangent_system
from .spectral import rational_roots

_ZERO = Fraction(0)


@dataclass(frozen=True)
class InvariantVector:
    """Exact values of Tr(A^i B^j) for i + j <= degree_bound."""

    degree_bound: int
    values: dict

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.values[ij]


def _powers(M: RatMatrix, d: int) -> list[RatMatrix]:
    out = [RatMatrix.identity(M.rows)]
    for _ in range(d):
        out.append(out[-1] * M)
    return out


def _trace_product(P: RatMatrix, Q: RatMatrix) -> Fraction:
    """Tr(P Q) without forming the product."""
    return sum((p * q
                for prow, qcol in zip(P.entries, zip(*Q.entries))
                for p, q in zip(prow, qcol) if p), _ZERO)


def trace_invariants(A: RatMatrix, B: RatMatrix, d: int | None = None) -> InvariantVector:
    """All Tr(A^i B^j) with i + j <= d; d defaults to 2n."""
    if not A.is_square() or A.shape != B.shape:
        raise ShapeError(f"pair shape mismatch: {A.shape} vs {B.shape}")
    if d is None:
        d = 2 * A.rows
    apow = _powers(A, d)
    bpow = _powers(B, d)
    values = {}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            values[(i, j)] = _trace_product(apow[i], bpow[j])
    return InvariantVector(d, values)


def invariant_jacobian_rank(A: RatMatrix, B: RatMatrix, d: int | None = None) -> int:
    """Rank of the differential of all Tr(A^i B^j), i + j <= d, restricted
    to directions tangent to the defining equation at (A, B).

    The derivative of Tr(A^i B^j) in direction (X, Y) is
    sum_{k<i} Tr(A^k X A^(i-1-k) B^j) + sum_{l<j} Tr(A^i B^l Y B^(j-1-l)).
    Both the differential rows (over the 2n^2 coordinates) and the tangent
    directions are exact; at a generic point of a component the rank equals
    the quotient dimension."""
    if not A.is_square() or A.shape != B.shape:
        raise ShapeError(f"pair shape mismatch: {A.shape} vs {B.shape}")
    n = A.rows
    if d is None:
        d = 2 * n
    apow = _powers(A, d)
    bpow = _powers(B, d)
    rows = []
    for i in range(d + 1):
        for j in range(d + 1 - i):
            if i + j == 0:
                continue
            mx = RatMatrix.zeros(n, n)
            for k in range(i):
                mx = mx + apow[i - 1 - k] * bpow[j] * apow[k]
            my = RatMatrix.zeros(n, n)
            for l in range(j):
                my = my + bpow[j - 1 - l] * apow[i] * bpow[l]
            # Coefficient of X[u,v] is mx[v,u]; in column-major vec
            # coordinates that is the row-major flattening of mx.
            rows.append(tuple(x for row in mx.entries for x in row)
                        + tuple(y for row in my.entries for y in row))
    jacobian = RatMatrix(len(rows), 2 * n * n, tuple(rows))
    tangent_basis = kernel(anticommutator_tangent_system(A, B))
    if not tangent_basis:
        return 0
    return rank(jacobian * hstack(tangent_basis))


@dataclass(frozen=True)
class PlanePointMultiset:
    """Multiset of n rational plane points, stored sorted."""

    points: tuple[tuple[Fraction, Fraction], ...]

    @classmethod
    def of(cls, points: Iterable[tuple]) -> "PlanePointMultiset":
        pts = sorted((Fraction(x), Fraction(y)) for x, y in points)
        return cls(tuple(pts))

    def __len__(self) -> int:
        return len(self.points)


def eta(A: RatMatrix, B: RatMatrix) -> PlanePointMultiset:
    """Plane-point multiset of a generic anti-commuting pair.

    Requires the pair to be generic for its classified triple, the spectrum
    of A to be rational, and the spectrum of B on ker A to be rational.
    """
    report = component_of(A)
    if not is_generic_pair(A, B, report.triple):
        raise NotGeneric(f"pair is not generic for {report.triple}")
    n = A.rows
    ident = RatMatrix.identity(n)
    points: list[tuple[Fraction, Fraction]] = []
    for block in report.paired:
        eigvecs = kernel(A - ident.scale(block.a))
        assert len(eigvecs) == 1
        v = eigvecs[0]
        w = B * (B * v)
        pivot = next(i for i in range(n) if v.entries[i][0])
        kappa = w.entries[pivot][0] / v.entries[pivot][0]
        if w != v.scale(kappa):
            raise NotGeneric("B^2 does not act as a scalar on an eigenline of A")
        points.append((block.a, kappa))
        points.append((-block.a, kappa))
    for a, mult in report.singles:
        points.extend([(a, _ZERO)] * mult)
    if report.triple.r:
        kernel_basis = hstack(kernel(A))
        image = B * kernel_basis
        restriction = solve_exact(kernel_basis, image)
        assert restriction is not None
        roots = rational_roots(charpoly(restriction))
        if not roots.splits:
            raise IrrationalSpectrum("spectrum of B on ker A is not rational")
        for b, mult in roots.roots:
            points.extend([(_ZERO, b)] * mult)
    result = PlanePointMultiset.of(points)
    assert len(result) == n
    return result


def omega(u: Sequence[tuple], v: Sequence[tuple]) -> Fraction:
    """Symplectic pairing of two ordered tuples of plane points:
    sum_k (x_k y'_k - x'_k y_k)."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    total = _ZERO
    for (x, y), (xp, yp) in zip(u, v):
        total += Fraction(x) * Fraction(yp) - Fraction(xp) * Fraction(y)
    return total
