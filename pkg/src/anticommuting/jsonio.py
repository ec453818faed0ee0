"""JSON encodings for the shared file formats.

Rationals travel as strings "p/q" or "p"; non-reduced inputs like "4/6"
are normalized, never rejected. Matrices are {"rows": r, "cols": c,
"entries": [[...row...], ...]}. Encoders produce plain dicts with a fixed
key order so serialized output is byte-deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .classify import ClassificationReport, ComponentTriple
from .commutant import CommutantBasis
from .errors import ShapeError
from .exactmat import RatMatrix
from .invariants import InvariantVector, PlanePointMultiset
from .sampler import DimReport
from .spectral import JordanData, Partition


def rat_to_str(x: Fraction) -> str:
    return str(x)


def rat_from_str(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {s!r}") from exc


def matrix_to_json(M: RatMatrix) -> dict:
    return {"rows": M.rows, "cols": M.cols,
            "entries": [[str(x) for x in row] for row in M.entries]}


def matrix_from_json(obj) -> RatMatrix:
    if not isinstance(obj, dict) or not {"rows", "cols", "entries"} <= set(obj):
        raise ValueError("matrix JSON needs keys rows, cols, entries")
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not (isinstance(rows, int) and isinstance(cols, int)):
        raise ValueError("rows and cols must be integers")
    if len(entries) != rows or any(len(row) != cols for row in entries):
        raise ShapeError(f"entries do not form a {rows}x{cols} grid")
    return RatMatrix.from_rows(
        [[rat_from_str(x) for x in row] for row in entries])


def pair_from_json(obj) -> tuple[RatMatrix, RatMatrix]:
    if not isinstance(obj, dict) or not {"A", "B"} <= set(obj):
        raise ValueError("pair JSON needs keys A and B")
    return matrix_from_json(obj["A"]), matrix_from_json(obj["B"])


def pair_to_json(A: RatMatrix, B: RatMatrix) -> dict:
    return {"A": matrix_to_json(A), "B": matrix_to_json(B)}


def partition_to_json(p: Partition) -> list[int]:
    return list(p.parts)


def partition_from_json(obj) -> Partition:
    return Partition(tuple(int(x) for x in obj))


def jordan_data_to_json(data: JordanData) -> list[dict]:
    return [{"eigenvalue": str(e), "partition": partition_to_json(part)}
            for e, part in data.blocks]


def jordan_data_from_json(obj) -> JordanData:
    return JordanData(tuple(
        (rat_from_str(item["eigenvalue"]), partition_from_json(item["partition"]))
        for item in obj))


def triple_to_json(t: ComponentTriple) -> dict:
    return {"p": t.p, "m": t.m, "r": t.r, "n": t.n}


def triple_from_json(obj) -> ComponentTriple:
    t = ComponentTriple(int(obj["p"]), int(obj["m"]), int(obj["r"]))
    if "n" in obj and int(obj["n"]) != t.n:
        raise ValueError(f"inconsistent triple {obj}")
    return t


def classification_to_json(report: ClassificationReport) -> dict:
    return {
        "triple": triple_to_json(report.triple),
        "nilpotent": {
            "partition": partition_to_json(report.nilpotent_partition),
            "p": report.nilpotent_p,
            "r": report.nilpotent_r,
        },
        "paired": [{
            "a": str(block.a),
            "nu": partition_to_json(block.nu),
            "mu": partition_to_json(block.mu),
            "p": block.p,
            "m": block.m,
        } for block in report.paired],
        "singles": [{"a": str(a), "multiplicity": mult}
                    for a, mult in report.singles],
    }


def commutant_to_json(cb: CommutantBasis) -> dict:
    return {"sigma": cb.sigma, "dim": cb.dim,
            "A": matrix_to_json(cb.A),
            "basis": [matrix_to_json(E) for E in cb.basis]}


def dim_report_to_json(report: DimReport) -> dict:
    return {"tangent": report.tangent_dim, "orbit": report.orbit_dim,
            "stabilizer": report.stabilizer_dim, "fiber": report.fiber_dim}


def invariant_vector_to_json(vec: InvariantVector) -> dict:
    items = [{"i": i, "j": j, "t": str(vec.values[(i, j)])}
             for (i, j) in sorted(vec.values)]
    return {"d": vec.degree_bound, "values": items}


def plane_points_to_json(points: PlanePointMultiset) -> list[list[str]]:
    return [[str(x), str(y)] for x, y in points.points]
