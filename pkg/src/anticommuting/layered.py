"""Constructors and recognizers for the structured normal forms.

Jordan matrices, grouped Jordan-block matrices with identity superdiagonal
blocks, and the sign-layered (banded, right- or top-justified) matrices
that solve J_m(a) B = sigma * B J_n(sigma*a). Recognizers return the
defining vector when a matrix matches the pattern, None otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ShapeError
from .exactmat import RatMatrix, block_diag
from .spectral import JordanData

_ZERO = Fraction(0)


def check_sigma(sigma: int) -> int:
    if sigma not in (1, -1):
        raise ValueError(f"sigma must be +1 or -1, got {sigma!r}")
    return sigma


def jordan_block(size: int, alpha) -> RatMatrix:
    """Single Jordan block with superdiagonal ones."""
    a = Fraction(alpha)
    return RatMatrix(size, size, tuple(
        tuple(a if i == j else (Fraction(1) if j == i + 1 else _ZERO)
              for j in range(size))
        for i in range(size)))


def jordan_matrix(data: JordanData) -> RatMatrix:
    """Block-diagonal Jordan matrix; eigenvalues in listed order, block sizes
    decreasing within each eigenvalue."""
    return block_diag([jordan_block(m, e) for e, m in data.flatten()])


def jbold(s: int, n: int, alpha) -> RatMatrix:
    """The sn x sn matrix in s x s blocks of size n: alpha on the diagonal,
    identity blocks on the block superdiagonal. jbold(1, n, 0) is the n x n
    zero matrix; jbold(s, n, a) is similar to n Jordan blocks J_s(a)."""
    if s < 1 or n < 1:
        raise ValueError("jbold needs s >= 1 and n >= 1")
    a = Fraction(alpha)
    size = s * n
    grid = [[_ZERO] * size for _ in range(size)]
    for i in range(size):
        grid[i][i] = a
    for b in range(s - 1):
        for i in range(n):
            grid[b * n + i][(b + 1) * n + i] = Fraction(1)
    return RatMatrix(size, size, tuple(tuple(row) for row in grid))


def jbold_sum(multiplicities: Sequence[int], alpha=0) -> RatMatrix:
    """diag(jbold(1, n_1, a), ..., jbold(s, n_s, a)); zero multiplicities
    contribute no block."""
    blocks = [jbold(i, n_i, alpha)
              for i, n_i in enumerate(multiplicities, start=1) if n_i]
    if not blocks:
        raise ValueError("all multiplicities are zero")
    return block_diag(blocks)


def layered_matrix(sigma: int, m: int, n: int, v: Sequence) -> RatMatrix:
    """The m x n sign-layered matrix over the vector v of length min(m, n).

    Layers sit on the descending diagonals: right-justified when m <= n,
    top-justified when m >= n, with row i scaled by sigma**i.
    """
    check_sigma(sigma)
    vals = [Fraction(x) for x in v]
    if len(vals) != min(m, n):
        raise ShapeError(f"need {min(m, n)} layer values, got {len(vals)}")
    d = n - min(m, n)
    rows = []
    for i in range(m):
        sign = sigma ** i
        rows.append(tuple(
            sign * vals[j - i - d] if j - i - d >= 0 else _ZERO
            for j in range(n)))
    return RatMatrix(m, n, tuple(rows))


def layered_block(sigma: int, s: int, t: int, blocks: Sequence[RatMatrix]) -> RatMatrix:
    """Block analogue of layered_matrix: an s x t grid whose (i, j) block is
    sigma**i times the (j - i - d)-th inner block, d = t - min(s, t)."""
    check_sigma(sigma)
    if len(blocks) != min(s, t):
        raise ShapeError(f"need {min(s, t)} inner blocks, got {len(blocks)}")
    p, q = blocks[0].shape
    if any(b.shape != (p, q) for b in blocks):
        raise ShapeError("inner blocks must share a shape")
    d = t - min(s, t)
    zero = RatMatrix.zeros(p, q)
    grid = []
    for i in range(s):
        row = []
        for j in range(t):
            k = j - i - d
            if k >= 0:
                row.append(blocks[k] if sigma ** i == 1 else -blocks[k])
            else:
                row.append(zero)
        grid.append(row)
    data = tuple(
        tuple(x for blk in row for x in blk.entries[r])
        for row in grid for r in range(p))
    return RatMatrix(s * p, t * q, data)


def match_layered(sigma: int, m: int, n: int, M: RatMatrix) -> tuple[Fraction, ...] | None:
    """The unique v with layered_matrix(sigma, m, n, v) == M, else None."""
    check_sigma(sigma)
    if M.shape != (m, n):
        raise ShapeError(f"expected {m}x{n}, got {M.shape}")
    k = min(m, n)
    d = n - k
    v = tuple(M.entries[0][d + j] for j in range(k))
    return v if layered_matrix(sigma, m, n, v) == M else None


def match_layered_block(sigma: int, s: int, t: int, shape: tuple[int, int],
                        M: RatMatrix) -> tuple[RatMatrix, ...] | None:
    """Block analogue of match_layered; shape is the inner block shape."""
    check_sigma(sigma)
    p, q = shape
    if M.shape != (s * p, t * q):
        raise ShapeError(f"expected {s * p}x{t * q}, got {M.shape}")
    k = min(s, t)
    d = t - k
    blocks = tuple(M.submatrix(0, p, (d + j) * q, (d + j + 1) * q) for j in range(k))
    return blocks if layered_block(sigma, s, t, blocks) == M else None
