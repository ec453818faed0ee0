"""Command-line interface: JSON in, JSON out, deterministic bytes.

Subcommands: commutant, classify, sample, tangent, invariants, eta,
enumerate, verify. All payloads go to stdout as JSON; diagnostics go to
stderr. Exit codes: 0 success, 2 parse/usage error, 3 shape error,
4 irrational spectrum, 5 invalid component triple, 6 pair does not
anti-commute, 7 pair not generic, 1 verification failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import jsonio
from .classify import ComponentTriple, component_of, enumerate_components
from .commutant import sigma_commutant
from .errors import (IrrationalSpectrum, NotAntiCommuting, NotGeneric,
                     ShapeError)
from .invariants import eta, invariant_jacobian_rank, trace_invariants
from .sampler import SampleConfig, orbit_dim, sample_component
from .verify import SUITE_NAMES, VerifyReport, run_suite

EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_IRRATIONAL = 4
EXIT_BAD_TRIPLE = 5
EXIT_NOT_ANTICOMMUTING = 6
EXIT_NOT_GENERIC = 7


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _load_json(path: str):
    return json.loads(Path(path).read_text())


def _iter_jsonl(path: str):
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line:
            yield json.loads(line)


def _parse_sigma(text: str) -> int:
    if text in ("+1", "1", "+"):
        return 1
    if text in ("-1", "-"):
        return -1
    raise ValueError(f"sigma must be +1 or -1, got {text!r}")


def cmd_commutant(args) -> int:
    M = jsonio.matrix_from_json(_load_json(args.matrix))
    cb = sigma_commutant(M, _parse_sigma(args.sigma))
    _emit(jsonio.commutant_to_json(cb))
    return 0


def cmd_classify(args) -> int:
    if args.batch:
        for obj in _iter_jsonl(args.batch):
            A, B = jsonio.pair_from_json(obj)
            report = component_of(A, B)
            print(json.dumps(jsonio.classification_to_json(report)))
        return 0
    A = jsonio.matrix_from_json(_load_json(args.matrix))
    _emit(jsonio.classification_to_json(component_of(A)))
    return 0


def cmd_sample(args) -> int:
    t = ComponentTriple(args.p, args.m, args.r)
    if t.n != args.n:
        print(f"invalid triple: 2*{args.p}+{args.m}+{args.r} != {args.n}",
              file=sys.stderr)
        return EXIT_BAD_TRIPLE
    cfg = SampleConfig(seed=args.seed, coeff_bound=args.coeff_bound)
    if args.flippable:
        from .sampler import sample_component_flippable
        A, B = sample_component_flippable(t, cfg)
    else:
        A, B = sample_component(t, cfg)
    report = orbit_dim(A, B)
    payload = {
        "triple": jsonio.triple_to_json(t),
        "seed": args.seed,
        "coeff_bound": args.coeff_bound,
        "A": jsonio.matrix_to_json(A),
        "B": jsonio.matrix_to_json(B),
        "dims": jsonio.dim_report_to_json(report),
        "checks": {
            "anticommutes": "ok",
            "classification": "ok",
            "generic": "ok",
        },
    }
    _emit(payload)
    return 0


def cmd_tangent(args) -> int:
    A, B = jsonio.pair_from_json(_load_json(args.pair))
    _emit(jsonio.dim_report_to_json(orbit_dim(A, B)))
    return 0


def cmd_invariants(args) -> int:
    if args.batch:
        for obj in _iter_jsonl(args.batch):
            A, B = jsonio.pair_from_json(obj)
            vec = trace_invariants(A, B, args.degree)
            print(json.dumps(jsonio.invariant_vector_to_json(vec)))
        return 0
    A, B = jsonio.pair_from_json(_load_json(args.pair))
    vec = trace_invariants(A, B, args.degree)
    payload = jsonio.invariant_vector_to_json(vec)
    if args.jacobian_rank:
        payload["jacobian_rank"] = invariant_jacobian_rank(A, B, args.degree)
    _emit(payload)
    return 0


def cmd_eta(args) -> int:
    A, B = jsonio.pair_from_json(_load_json(args.pair))
    _emit({"points": jsonio.plane_points_to_json(eta(A, B))})
    return 0


def cmd_enumerate(args) -> int:
    triples = enumerate_components(args.n)
    _emit({"n": args.n, "count": len(triples),
           "triples": [jsonio.triple_to_json(t) for t in triples]})
    return 0


def _verify_report_json(report: VerifyReport) -> dict:
    return {
        "suite": report.suite,
        "cases": report.cases,
        "failures": [{"case": f.case, "expected": f.expected, "got": f.got}
                     for f in report.failures],
        "wall_time_s": round(report.wall_time_s, 3),
    }


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n)
    _emit(_verify_report_json(report))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anticommuting",
        description="Exact computations on anti-commuting matrix pairs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("commutant", help="basis of {B : AB = sigma BA}")
    p.add_argument("matrix", help="matrix JSON file")
    p.add_argument("--sigma", default="-1", help="+1 or -1 (default -1)")
    p.set_defaults(func=cmd_commutant)

    p = sub.add_parser("classify", help="component triple of a matrix")
    p.add_argument("matrix", nargs="?", help="matrix JSON file")
    p.add_argument("--batch", help="JSON-lines file of {A, B} pairs")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sample", help="exact generic point of a component")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coeff-bound", type=int, default=8)
    p.add_argument("--flippable", action="store_true",
                   help="give B rational spectrum as well")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("tangent", help="tangent/orbit/stabilizer/fiber dims")
    p.add_argument("pair", help="pair JSON file with keys A and B")
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("invariants", help="trace invariants Tr(A^i B^j)")
    p.add_argument("pair", nargs="?", help="pair JSON file")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--jacobian-rank", action="store_true")
    p.add_argument("--batch", help="JSON-lines file of {A, B} pairs")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("eta", help="plane-point multiset of a generic pair")
    p.add_argument("pair", help="pair JSON file")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("enumerate", help="component triples for given n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify" and not args.matrix and not args.batch:
        parser.error("classify needs a matrix file or --batch")
    if args.command == "invariants" and not args.pair and not args.batch:
        parser.error("invariants needs a pair file or --batch")
    try:
        return args.func(args)
    except ShapeError as exc:
        print(f"shape error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except IrrationalSpectrum as exc:
        print(f"irrational spectrum: {exc}", file=sys.stderr)
        return EXIT_IRRATIONAL
    except NotAntiCommuting as exc:
        print(f"not anti-commuting: {exc}", file=sys.stderr)
        return EXIT_NOT_ANTICOMMUTING
    except NotGeneric as exc:
        print(f"not generic: {exc}", file=sys.stderr)
        return EXIT_NOT_GENERIC
    except (json.JSONDecodeError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
