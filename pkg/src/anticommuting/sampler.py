"""Deterministic exact samplers for component points, and rank-based
dimension probes (tangent space, orbit, stabilizer, invariant fiber).

Randomness comes from a self-contained splitmix64 stream, so a sample is a
pure function of (inputs, seed) and golden outputs are portable. Genericity
constraints are enforced by rejection with a retry cap, and every sampler
re-checks its guarantees exactly before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .classify import ComponentTriple, component_of, flip, is_generic_pair
from .errors import NotAntiCommuting, RetriesExhausted
from .exactmat import (RatMatrix, block_diag, hstack, inverse, rank, vstack)
from .layered import jbold_sum, layered_block
from .lifts import anticommutator_tangent_system, stabilizer_system

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 generator: the k-th output is a fixed function of the seed,
    independent of Python version or platform."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next_u64() % (hi - lo + 1)

    def nonzero_int(self, bound: int) -> int:
        while True:
            v = self.randint(-bound, bound)
            if v:
                return v

    def rational(self, bound: int) -> Fraction:
        return Fraction(self.randint(-bound, bound), self.randint(1, bound))

    def nonzero_rational(self, bound: int) -> Fraction:
        return Fraction(self.nonzero_int(bound), self.randint(1, bound))

    def matrix(self, rows: int, cols: int, bound: int) -> RatMatrix:
        return RatMatrix.from_rows(
            [[self.rational(bound) for _ in range(cols)] for _ in range(rows)])

    def int_matrix(self, rows: int, cols: int, bound: int) -> RatMatrix:
        return RatMatrix.from_rows(
            [[Fraction(self.randint(-bound, bound)) for _ in range(cols)]
             for _ in range(rows)])


@dataclass(frozen=True)
class SampleConfig:
    seed: int
    coeff_bound: int = 8
    retries: int = 64

    def __post_init__(self):
        if self.coeff_bound < 2:
            raise ValueError("coeff_bound must be at least 2")


def _ensure(condition: bool, message: str) -> None:
    # Sampler guarantees hold by construction; a failure here is a bug.
    if not condition:
        raise RuntimeError(f"sampler postcondition failed: {message}")


def invertible_matrix(rng: SplitMix64, n: int, bound: int, retries: int) -> RatMatrix:
    for _ in range(retries):
        g = rng.int_matrix(n, n, bound)
        if rank(g) == n:
            return g
    raise RetriesExhausted(f"no invertible {n}x{n} draw in {retries} tries")


@dataclass(frozen=True)
class ComponentDraw:
    """Normal-form parameters of a component point: p blocks
    antidiag(b_i, c_i) paired with eigenvalues (a_i, -a_i), m unpaired
    eigenvalues with zero B rows, and r nonzero B values on ker A."""

    triple: ComponentTriple
    paired: tuple[tuple[Fraction, Fraction, Fraction], ...]  # (a_i, b_i, c_i)
    single_a: tuple[Fraction, ...]
    single_b: tuple[Fraction, ...]

    def normal_form(self) -> tuple[RatMatrix, RatMatrix]:
        a_blocks = [RatMatrix.diagonal([a, -a]) for a, _, _ in self.paired]
        b_blocks = [RatMatrix.from_rows([[0, b], [c, 0]]) for _, b, c in self.paired]
        m, r = self.triple.m, self.triple.r
        a_tail = RatMatrix.diagonal(list(self.single_a) + [Fraction(0)] * r)
        b_tail = RatMatrix.diagonal([Fraction(0)] * m + list(self.single_b))
        if a_tail.rows:
            a_blocks.append(a_tail)
            b_blocks.append(b_tail)
        return block_diag(a_blocks), block_diag(b_blocks)


def draw_component(t: ComponentTriple, cfg: SampleConfig,
                   flippable: bool = False) -> ComponentDraw:
    """Rejection-sample normal-form parameters satisfying every genericity
    constraint. With flippable=True, uses c_i = 1 and b_i a square so the
    second matrix has rational spectrum."""
    rng = SplitMix64(cfg.seed)
    bound = cfg.coeff_bound
    p, m, r = t.p, t.m, t.r
    for _ in range(cfg.retries):
        a_vals = [rng.nonzero_rational(bound) for _ in range(p + m)]
        if flippable:
            roots = [rng.nonzero_rational(bound) for _ in range(p)]
            pairs = [(a_vals[i], roots[i] ** 2, Fraction(1)) for i in range(p)]
        else:
            pairs = [(a_vals[i], rng.nonzero_rational(bound),
                      rng.nonzero_rational(bound)) for i in range(p)]
        single_b = [rng.nonzero_rational(bound) for _ in range(r)]

        squares_a = [a * a for a in a_vals]
        if len(set(squares_a)) != p + m:
            continue
        products = [b * c for _, b, c in pairs]
        squares_b = [s * s for s in single_b]
        if len(set(products)) != p or len(set(squares_b)) != r:
            continue
        if set(products) & set(squares_b):
            continue
        return ComponentDraw(t, tuple(pairs), tuple(a_vals[p:]), tuple(single_b))
    raise RetriesExhausted(
        f"no admissible draw for {t} within {cfg.retries} tries")


def _conjugated(A: RatMatrix, B: RatMatrix, cfg: SampleConfig,
                rng: SplitMix64) -> tuple[RatMatrix, RatMatrix]:
    g = invertible_matrix(rng, A.rows, cfg.coeff_bound, cfg.retries)
    ginv = inverse(g)
    return g * A * ginv, g * B * ginv


def sample_component(t: ComponentTriple, cfg: SampleConfig,
                     conjugate: bool = True) -> tuple[RatMatrix, RatMatrix]:
    """Exact point of the component indexed by t: anti-commutes exactly,
    classifies back to t, and is generic."""
    draw = draw_component(t, cfg)
    A, B = draw.normal_form()
    if conjugate:
        A, B = _conjugated(A, B, cfg, SplitMix64(cfg.seed ^ 0xC0FFEE))
    _ensure((A * B + B * A).is_zero(), "pair does not anti-commute")
    _ensure(component_of(A).triple == t, "classification mismatch")
    _ensure(is_generic_pair(A, B, t), "pair not generic")
    return A, B


def sample_component_flippable(t: ComponentTriple, cfg: SampleConfig,
                               conjugate: bool = True) -> tuple[RatMatrix, RatMatrix]:
    """Like sample_component, with B given rational spectrum so that the
    flipped pair (B, A) classifies to the flipped triple."""
    draw = draw_component(t, cfg, flippable=True)
    A, B = draw.normal_form()
    if conjugate:
        A, B = _conjugated(A, B, cfg, SplitMix64(cfg.seed ^ 0xC0FFEE))
    _ensure((A * B + B * A).is_zero(), "pair does not anti-commute")
    _ensure(component_of(A).triple == t, "classification mismatch")
    _ensure(component_of(B).triple == flip(t), "flipped classification mismatch")
    _ensure(is_generic_pair(A, B, t), "pair not generic")
    return A, B


def jordan_type_sizes_expected(s: int) -> tuple[int, int]:
    """Jordan block sizes of a generic anti-commutant element of the grouped
    nilpotent with s block rows: size ceil(s/2) at each prescribed
    eigenvalue b and floor(s/2) at -b."""
    return (s + 1) // 2, s // 2


@dataclass(frozen=True)
class NilpotentSample:
    """Anti-commuting pair with A the grouped nilpotent of the multiplicity
    vector; spectra records the prescribed eigenvalues of the leading inner
    block for each block size."""

    A: RatMatrix
    B: RatMatrix
    multiplicities: tuple[int, ...]
    spectra: tuple[tuple[int, tuple[Fraction, ...]], ...]


def sample_nilpotent_pair(multiplicities: Sequence[int],
                          cfg: SampleConfig) -> NilpotentSample:
    """A = diag(jbold(1, n_1, 0), ..., jbold(s, n_s, 0)) and B a random
    element of its anti-commutant, built blockwise from sign-layered block
    matrices. Leading inner diagonal blocks get prescribed rational spectra
    (all values and their negatives distinct across blocks)."""
    mults = tuple(multiplicities)
    if not any(mults) or any(v < 0 for v in mults):
        raise ValueError(f"bad multiplicity vector {mults}")
    rng = SplitMix64(cfg.seed)
    bound = cfg.coeff_bound
    active = [(i, n_i) for i, n_i in enumerate(mults, start=1) if n_i]

    for _ in range(cfg.retries):
        values = [rng.nonzero_rational(bound)
                  for _ in range(sum(n for _, n in active))]
        if len({v * v for v in values}) == len(values):
            break
    else:
        raise RetriesExhausted("no distinct spectrum draw")
    spectra = []
    pos = 0
    for i, n_i in active:
        spectra.append((i, tuple(values[pos:pos + n_i])))
        pos += n_i
    spectrum_of = dict(spectra)

    grid = []
    for i, n_i in active:
        row = []
        for j, n_j in active:
            inner = [rng.matrix(n_i, n_j, bound) for _ in range(min(i, j))]
            if i == j:
                g = invertible_matrix(rng, n_i, bound, cfg.retries)
                inner[0] = g * RatMatrix.diagonal(spectrum_of[i]) * inverse(g)
            row.append(layered_block(-1, i, j, inner))
        grid.append(row)
    B = vstack([hstack(row) for row in grid])
    A = jbold_sum(mults)
    _ensure((A * B + B * A).is_zero(), "pair does not anti-commute")
    return NilpotentSample(A, B, mults, tuple(spectra))


# ---------------------------------------------------------------------------
# Dimension probes

@dataclass(frozen=True)
class DimReport:
    """Exact-rank dimensions at a point: tangent space of the defining
    equation, conjugation orbit, stabilizer, and invariant-map fiber
    (tangent minus orbit)."""

    tangent_dim: int
    orbit_dim: int
    stabilizer_dim: int
    fiber_dim: int


def _check_pair(A: RatMatrix, B: RatMatrix) -> None:
    if not (A * B + B * A).is_zero():
        raise NotAntiCommuting("AB + BA != 0")


def tangent_dim(A: RatMatrix, B: RatMatrix) -> int:
    """Kernel dimension of (X, Y) -> XB + BX + AY + YA, the differential of
    the defining equation at (A, B)."""
    _check_pair(A, B)
    n = A.rows
    return 2 * n * n - rank(anticommutator_tangent_system(A, B))


def stabilizer_dim(A: RatMatrix, B: RatMatrix) -> int:
    """Dimension of {X : XA = AX and XB = BX}."""
    _check_pair(A, B)
    n = A.rows
    return n * n - rank(stabilizer_system(A, B))


def orbit_dim(A: RatMatrix, B: RatMatrix) -> DimReport:
    """Full dimension report; orbit = n^2 - stabilizer, fiber = tangent - orbit."""
    n = A.rows
    stab = stabilizer_dim(A, B)
    tan = tangent_dim(A, B)
    orbit = n * n - stab
    return DimReport(tan, orbit, stab, tan - orbit)
