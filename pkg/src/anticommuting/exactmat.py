"""Exact dense linear algebra over the rationals.

Entries are `fractions.Fraction` throughout (always reduced, positive
denominator), so every result in this module is exact. Row reduction uses
an integer forward-elimination core: each row is scaled to clear
denominators, updated by cross-multiplication, and trimmed by its gcd.
This keeps the hot path in machine/bigint arithmetic; canonical rational
values are recovered afterwards by exact back-substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RatMatrix:
    """Immutable dense matrix of Fractions, row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RatMatrix":
        data = tuple(tuple(_as_rat(x) for x in row) for row in rows)
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(row) != ncols for row in data):
            raise ShapeError("ragged rows")
        return cls(nrows, ncols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        row = (_ZERO,) * cols
        return cls(rows, cols, (row,) * rows)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(
            tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMatrix":
        vals = [_as_rat(v) for v in values]
        n = len(vals)
        return cls(n, n, tuple(
            tuple(vals[i] if i == j else _ZERO for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"add: {self.shape} vs {other.shape}")
        return RatMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"sub: {self.shape} vs {other.shape}")
        return RatMatrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMatrix":
        return self.scale(-1)

    def scale(self, c) -> "RatMatrix":
        c = _as_rat(c)
        return RatMatrix(self.rows, self.cols, tuple(
            tuple(c * x for x in row) for row in self.entries))

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ShapeError(f"mul: {self.shape} vs {other.shape}")
        bt = tuple(zip(*other.entries)) if other.rows else ((),) * other.cols
        return RatMatrix(self.rows, other.cols, tuple(
            tuple(sum((a * b for a, b in zip(arow, bcol) if a), _ZERO) for bcol in bt)
            for arow in self.entries))

    def __rmul__(self, c) -> "RatMatrix":
        return self.scale(c)

    def __pow__(self, k: int) -> "RatMatrix":
        if not self.is_square():
            raise ShapeError("pow: non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, tuple(zip(*self.entries))
                         if self.rows else ((),) * self.cols)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ShapeError("trace: non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), _ZERO)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "RatMatrix":
        return RatMatrix(r1 - r0, c1 - c0, tuple(
            row[c0:c1] for row in self.entries[r0:r1]))

    def column(self, j: int) -> "RatMatrix":
        return RatMatrix(self.rows, 1, tuple((row[j],) for row in self.entries))

    def __str__(self) -> str:
        return "\n".join("[" + "  ".join(str(x) for x in row) + "]"
                         for row in self.entries)


def hstack(blocks: Sequence[RatMatrix]) -> RatMatrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ShapeError("hstack: row mismatch")
    data = tuple(tuple(x for b in blocks for x in b.entries[i]) for i in range(rows))
    return RatMatrix(rows, sum(b.cols for b in blocks), data)


def vstack(blocks: Sequence[RatMatrix]) -> RatMatrix:
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ShapeError("vstack: column mismatch")
    return RatMatrix(sum(b.rows for b in blocks), cols,
                     tuple(row for b in blocks for row in b.entries))


def block_diag(blocks: Sequence[RatMatrix]) -> RatMatrix:
    total_r = sum(b.rows for b in blocks)
    total_c = sum(b.cols for b in blocks)
    grid = [[_ZERO] * total_c for _ in range(total_r)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.entries):
            grid[r0 + i][c0:c0 + b.cols] = row
        r0 += b.rows
        c0 += b.cols
    return RatMatrix(total_r, total_c, tuple(tuple(row) for row in grid))


def vec(M: RatMatrix) -> RatMatrix:
    """Column-major vectorization: stacks the columns of M."""
    data = tuple((M.entries[i][j],) for j in range(M.cols) for i in range(M.rows))
    return RatMatrix(M.rows * M.cols, 1, data)


def unvec(v: RatMatrix, rows: int, cols: int) -> RatMatrix:
    if v.cols != 1 or v.rows != rows * cols:
        raise ShapeError(f"unvec: {v.shape} into {rows}x{cols}")
    flat = [row[0] for row in v.entries]
    return RatMatrix(rows, cols, tuple(
        tuple(flat[j * rows + i] for j in range(cols)) for i in range(rows)))


def kron(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    """Kronecker product: entry ((i*p+k), (j*q+l)) = A[i,j] * B[k,l]."""
    p, q = B.rows, B.cols
    data = []
    for arow in A.entries:
        for brow in B.entries:
            data.append(tuple(a * b if a else _ZERO for a in arow for b in brow))
    return RatMatrix(A.rows * p, A.cols * q, tuple(data))


# ---------------------------------------------------------------------------
# Row reduction

@dataclass(frozen=True)
class RrefResult:
    reduced: RatMatrix
    rank: int
    pivots: tuple[int, ...]


def _integer_rows(M: RatMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (kernel/row space kept)."""
    out = []
    for row in M.entries:
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row] if scale != 1
                   else [x.numerator for x in row])
    return out


def _forward_eliminate(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """In-place integer row echelon form; returns (rows, pivot columns).

    Row updates are cross-multiplications r <- p*r - f*p_row followed by a
    gcd trim, so entries stay integral and bounded in practice.
    """
    nrows = len(rows)
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        if pr >= nrows:
            break
        best = -1
        best_abs = 0
        for i in range(pr, nrows):
            v = rows[i][pc]
            if v and (best < 0 or abs(v) < best_abs):
                best, best_abs = i, abs(v)
                if best_abs == 1:
                    break
        if best < 0:
            continue
        if best != pr:
            rows[pr], rows[best] = rows[best], rows[pr]
        prow = rows[pr]
        p = prow[pc]
        for i in range(pr + 1, nrows):
            irow = rows[i]
            f = irow[pc]
            if not f:
                continue
            new = irow[:pc]
            new.extend(p * a - f * b for a, b in zip(irow[pc:], prow[pc:]))
            g = math.gcd(*new[pc:])
            if g > 1:
                new[pc:] = [a // g for a in new[pc:]]
            rows[i] = new
        pivots.append(pc)
        pr += 1
    return rows, pivots


def _echelon(M: RatMatrix) -> tuple[list[list[int]], list[int]]:
    return _forward_eliminate(_integer_rows(M), M.cols)


def rank(M: RatMatrix) -> int:
    return len(_echelon(M)[1])


def _back_substitute_column(ref: list[list[int]], pivots: list[int], col: int) -> list[Fraction]:
    """Entries of the given column of the RREF, one per pivot row."""
    r = len(pivots)
    out = [_ZERO] * r
    for i in range(r - 1, -1, -1):
        row = ref[i]
        acc = Fraction(row[col])
        for k in range(i + 1, r):
            c = row[pivots[k]]
            if c:
                acc -= c * out[k]
        out[i] = acc / row[pivots[i]]
    return out


def rref(M: RatMatrix) -> RrefResult:
    """Unique reduced row echelon form with rank and pivot columns."""
    ref, pivots = _echelon(M)
    r = len(pivots)
    reduced = [[_ZERO] * M.cols for _ in range(M.rows)]
    # Reduce bottom-up: each pivot row is normalized and cleared against
    # the already-reduced rows below it.
    for i in range(r - 1, -1, -1):
        p = Fraction(ref[i][pivots[i]])
        row = [Fraction(x) / p for x in ref[i]]
        for k in range(i + 1, r):
            f = row[pivots[k]]
            if f:
                below = reduced[k]
                row = [a - f * b for a, b in zip(row, below)]
        reduced[i] = row
    return RrefResult(
        RatMatrix(M.rows, M.cols, tuple(tuple(row) for row in reduced)),
        r, tuple(pivots))


def kernel(M: RatMatrix) -> list[RatMatrix]:
    """Canonical null-space basis (free columns set to unit values, in order).

    Returns cols - rank(M) column vectors; identical to reading the basis
    off rref(M).
    """
    ref, pivots = _echelon(M)
    pivot_set = set(pivots)
    free = [j for j in range(M.cols) if j not in pivot_set]
    basis = []
    for f in free:
        coeffs = _back_substitute_column(ref, pivots, f)
        v = [_ZERO] * M.cols
        v[f] = _ONE
        for i, pc in enumerate(pivots):
            v[pc] = -coeffs[i]
        basis.append(RatMatrix(M.cols, 1, tuple((x,) for x in v)))
    return basis


def solve_exact(A: RatMatrix, b: RatMatrix) -> RatMatrix | None:
    """One solution of A x = b (multi-column b allowed), or None."""
    if A.rows != b.rows:
        raise ShapeError(f"solve: {A.shape} vs {b.shape}")
    aug = hstack([A, b])
    res = rref(aug)
    if any(p >= A.cols for p in res.pivots):
        return None
    sol = [[_ZERO] * b.cols for _ in range(A.cols)]
    for i, p in enumerate(res.pivots):
        sol[p] = list(res.reduced.entries[i][A.cols:])
    return RatMatrix(A.cols, b.cols, tuple(tuple(row) for row in sol))


def is_invertible(M: RatMatrix) -> bool:
    return M.is_square() and rank(M) == M.rows


def inverse(M: RatMatrix) -> RatMatrix:
    if not M.is_square():
        raise ShapeError("inverse: non-square matrix")
    inv = solve_exact(M, RatMatrix.identity(M.rows))
    if inv is None:
        raise ValueError("matrix is singular")
    return inv


# ---------------------------------------------------------------------------
# Polynomials

@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over Q, coefficients lowest degree first.

    The zero polynomial is the empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "Polynomial":
        cs = [_as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def x_power(cls, k: int, coeff=1) -> "Polynomial":
        return cls.from_coeffs([0] * k + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls.from_coeffs([1])
        for r in roots:
            p = p * cls.from_coeffs([-_as_rat(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        lead = self.leading()
        if lead == 1:
            return self
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial.from_coeffs(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial(())
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Polynomial.from_coeffs(out)

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.from_coeffs([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(()), self
        quot = [_ZERO] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return Polynomial.from_coeffs(quot), Polynomial.from_coeffs(rem)

    def derivative(self) -> "Polynomial":
        return Polynomial.from_coeffs(
            [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x) -> Fraction:
        x = _as_rat(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, M: RatMatrix) -> RatMatrix:
        if not M.is_square():
            raise ShapeError("polynomial of a non-square matrix")
        acc = RatMatrix.zeros(M.rows, M.rows)
        ident = RatMatrix.identity(M.rows)
        for c in reversed(self.coeffs):
            acc = acc * M + ident.scale(c)
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else (f"{c}*X^{i}" if i > 1 else f"{c}*X"))
        return " + ".join(terms)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q (Euclid)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def charpoly(A: RatMatrix) -> Polynomial:
    """Monic characteristic polynomial det(X*I - A), Faddeev-LeVerrier."""
    if not A.is_square():
        raise ShapeError("charpoly: non-square matrix")
    n = A.rows
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    M = RatMatrix.identity(n)
    ident = RatMatrix.identity(n)
    for k in range(1, n + 1):
        M = A * M
        c = -M.trace() / k
        coeffs[n - k] = c
        M = M + ident.scale(c)
    return Polynomial(tuple(coeffs))
