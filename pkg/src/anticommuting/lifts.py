"""Kronecker lifts of the bilinear maps used for exact rank probes.

Column-major vec convention throughout: vec(AXB) = kron(B^T, A) vec(X).
"""

from __future__ import annotations

from .exactmat import RatMatrix, hstack, kron, vstack


def anticommutator_tangent_system(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    """Matrix of (X, Y) -> vec(XB + BX + AY + YA), the differential of
    (A, B) -> AB + BA; shape n^2 x 2n^2."""
    n = A.rows
    ident = RatMatrix.identity(n)
    x_part = kron(B.transpose(), ident) + kron(ident, B)
    y_part = kron(A.transpose(), ident) + kron(ident, A)
    return hstack([x_part, y_part])


def stabilizer_system(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    """Matrix of X -> (vec(XA - AX), vec(XB - BX)); shape 2n^2 x n^2."""
    n = A.rows
    ident = RatMatrix.identity(n)
    return vstack([kron(A.transpose(), ident) - kron(ident, A),
                   kron(B.transpose(), ident) - kron(ident, B)])
