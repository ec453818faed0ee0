from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from anticommuting.exactmat import RatMatrix
from anticommuting.spectral import JordanData, Partition

settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_rationals = rationals.filter(bool)


def matrices(rows: int, cols: int, entries=rationals):
    return st.lists(
        st.lists(entries, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows).map(RatMatrix.from_rows)


@st.composite
def square_matrices(draw, max_n=4, entries=rationals):
    n = draw(st.integers(1, max_n))
    return draw(matrices(n, n, entries))


@st.composite
def invertible_matrices(draw, n: int):
    # Product of unit triangular matrices: determinant 1 by construction.
    below = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2))
    lower = [[draw(below) if i > j else Fraction(int(i == j))
              for j in range(n)] for i in range(n)]
    upper = [[draw(below) if i < j else Fraction(int(i == j))
              for j in range(n)] for i in range(n)]
    return RatMatrix.from_rows(lower) * RatMatrix.from_rows(upper)


@st.composite
def partitions_st(draw, max_weight=6):
    parts = []
    remaining = draw(st.integers(1, max_weight))
    cap = remaining
    while remaining:
        part = draw(st.integers(1, min(cap, remaining)))
        parts.append(part)
        cap = part
        remaining -= part
    return Partition(tuple(parts))


@st.composite
def jordan_datas_st(draw, max_total=5, pool=(0, 1, -1, 2, -2, 3)):
    total = draw(st.integers(1, max_total))
    eigs = draw(st.permutations(list(pool)))
    blocks = []
    idx = 0
    while total:
        weight = draw(st.integers(1, total))
        parts = []
        remaining, cap = weight, weight
        while remaining:
            part = draw(st.integers(1, min(cap, remaining)))
            parts.append(part)
            cap = part
            remaining -= part
        blocks.append((Fraction(eigs[idx]), Partition(tuple(parts))))
        idx += 1
        total -= weight
    return JordanData(tuple(blocks))
