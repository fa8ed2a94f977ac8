"""Command-line front end.

Exit codes: 0 success / equiangular, 1 well-formed but failed verification,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from . import abelian, constructions, framecore, weylheisenberg
from .exprs import ExpressionError, parse_constant
from .scalars import Scalar

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _resolve_rds(ref: str) -> abelian.RelativeDifferenceSet:
    if ref.startswith("builtin:"):
        try:
            d = int(ref.split(":", 1)[1])
        except ValueError:
            raise CliError(f"bad builtin RDS reference {ref!r}")
        try:
            return abelian.builtin_rds(d)
        except (abelian.UnsupportedDimension, abelian.RdsError) as exc:
            raise CliError(str(exc))
    if ref.startswith("file:"):
        path = ref.split(":", 1)[1]
        try:
            with open(path) as fh:
                data = json.load(fh)
            rds = abelian.rds_from_json(data)
            abelian.rds_verify(rds)
            return rds
        except OSError as exc:
            raise CliError(f"cannot read RDS file: {exc}")
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise CliError(f"invalid RDS: {exc}")
    raise CliError(f"RDS reference must be builtin:<d> or file:<path>, got {ref!r}")


def _parse_perm(text: str, d: int) -> tuple[int, ...]:
    try:
        perm = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise CliError(f"bad permutation {text!r}")
    if sorted(perm) != list(range(1, d + 1)):
        raise CliError(f"{text!r} is not a permutation of 1..{d}")
    return perm


def _parse_v(text: str) -> Scalar:
    try:
        z = parse_constant(text)
    except ExpressionError as exc:
        raise CliError(str(exc))
    if z.real == int(z.real) and z.imag == int(z.imag):
        return Scalar.gauss(int(z.real), int(z.imag))
    return Scalar.from_complex(z)


def _emit(data: dict, out_path: str | None) -> None:
    if out_path:
        framecore.dump_json(data, out_path)
    else:
        json.dump(data, sys.stdout, indent=1, sort_keys=True)
        sys.stdout.write("\n")


def _report_summary(report: framecore.GramReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        verdict = "equiangular" if report.equiangular else "NOT equiangular"
        clusters = ", ".join(
            f"{mag:.12g} x{mult}" for mag, mult in report.angle_clusters
        )
        print(f"{report.size} vectors: {verdict}; angle clusters: {clusters}")


def cmd_mubs(args) -> int:
    rds = _resolve_rds(args.rds)
    try:
        family = constructions.mubs_from_rds(rds)
    except constructions.InvalidRds as exc:
        raise CliError(str(exc))
    ok = framecore.verify_mubs(list(family.bases), args.tol)
    payload = {
        "dim": family.dim,
        "rds": abelian.rds_to_json(rds),
        "bases": [framecore.lineset_to_json(b) for b in family.bases],
        "verified": ok,
    }
    _emit(payload, args.out)
    print(f"{family.dim} MUBs in C^{family.dim}: verify_mubs = {ok}",
          file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


def _build_lines(args) -> framecore.LineSet:
    kind = args.kind
    if kind == "c1":
        family = constructions.mubs_from_rds(
            _resolve_rds(args.rds or f"builtin:{args.d}")
        )
        if args.perm is None or args.v is None:
            raise CliError("construct c1 requires --perm and --v")
        spec = constructions.ScalingSpec(
            _parse_perm(args.perm, family.dim), _parse_v(args.v)
        )
        return constructions.l_block(family, spec)
    if kind == "c2":
        return constructions.construction2_family(args.a if args.a is not None else 0.0)
    if kind == "c3":
        family = constructions.mubs_from_rds(
            _resolve_rds(args.rds or f"builtin:{args.d}")
        )
        if args.perm is None:
            raise CliError("construct c3 requires --perm")
        if args.a is None or args.b is None:
            a, b = constructions.construction3_solve(family.dim)[0]
        else:
            a, b = args.a, args.b
        spec = constructions.BlockPairSpec(
            _parse_perm(args.perm, family.dim), a, b, args.variant
        )
        return constructions.construction3_pair(family, spec)
    if kind == "c3ext":
        return constructions.construction3_d4_extension()
    if kind == "hoggar":
        return constructions.hoggar_tensor_orbit()
    if kind == "wh":
        return weylheisenberg.wh_orbit(_resolve_fiducial(args.fiducial))
    raise CliError(f"unknown construction kind {kind!r}")


def cmd_construct(args) -> int:
    lines = _build_lines(args)
    report = framecore.gram_analyze(lines, args.tol)
    _emit(framecore.lineset_to_json(lines), args.out)
    _report_summary(report, args.format)
    return EXIT_OK if report.equiangular else EXIT_FAILED


def cmd_verify(args) -> int:
    try:
        with open(args.input) as fh:
            data = json.load(fh)
        lines = framecore.lineset_from_json(data)
    except OSError as exc:
        raise CliError(f"cannot read line set: {exc}")
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise CliError(f"malformed line set: {exc}")
    try:
        report = framecore.gram_analyze(lines, args.tol)
    except (framecore.ZeroVectorError, ValueError) as exc:
        raise CliError(str(exc))
    print(json.dumps(report.to_json(), sort_keys=True))
    return EXIT_OK if report.equiangular else EXIT_FAILED


def cmd_search(args) -> int:
    if args.what != "c1":
        raise CliError(f"unknown search kind {args.what!r}")
    family = constructions.mubs_from_rds(
        _resolve_rds(args.rds or f"builtin:{args.d}")
    )
    budget = args.budget
    if args.force:
        budget = max(
            budget,
            math.factorial(family.dim) * args.phase_roots
            * len(constructions.c1_magnitudes(family.dim)),
        )
    try:
        hits = constructions.c1_search(family, args.phase_roots, budget, args.tol)
    except constructions.BudgetExceeded as exc:
        raise CliError(f"{exc} (pass --force to override)")
    for spec, report in hits:
        print(json.dumps({
            "perm": list(spec.perm),
            "v": [spec.v.re, spec.v.im],
            "common_angle": report.common_angle,
        }, sort_keys=True))
    perms = sorted({spec.perm for spec, _ in hits})
    print(f"{len(hits)} equiangular hits over {len(perms)} permutations",
          file=sys.stderr)
    return EXIT_OK


def cmd_bounds(args) -> int:
    d = args.d
    if d < 1:
        raise CliError("d must be >= 1")
    payload = {
        "d": d,
        "max_lines": d * d,
        "special_bound_f": framecore.special_bound_f(d),
        "block_pair_angle": 1.0 / (1.0 + math.sqrt(d)),
    }
    if d >= 2:
        payload["mub_bound"] = framecore.mub_bound(d)
        payload["max_angle"] = framecore.max_angle(d)
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _resolve_fiducial(ref: str | None) -> weylheisenberg.Fiducial:
    ref = ref or "builtin:d4"
    if ref == "builtin:d4":
        return weylheisenberg.fiducial_d4()
    if ref.startswith("file:"):
        path = ref.split(":", 1)[1]
        try:
            with open(path) as fh:
                data = json.load(fh)
            vec = framecore.CVector.make(
                [complex(re, im) for re, im in data["vector"]]
            )
            return weylheisenberg.Fiducial(vec, source="user")
        except OSError as exc:
            raise CliError(f"cannot read fiducial: {exc}")
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise CliError(f"malformed fiducial: {exc}")
    raise CliError(f"fiducial must be builtin:d4 or file:<path>, got {ref!r}")


def cmd_wh(args) -> int:
    lines = weylheisenberg.wh_orbit(_resolve_fiducial(args.fiducial))
    report = framecore.gram_analyze(lines, args.tol)
    _emit(framecore.lineset_to_json(lines), args.out)
    _report_summary(report, args.format)
    return EXIT_OK if report.equiangular else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mublines",
        description="Construct and verify complex equiangular lines and MUBs",
    )
    parser.add_argument("--tol", type=float, default=framecore.DEFAULT_TOL)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--out", default=None, help="write JSON output here")
    parser.add_argument("--format", choices=["json", "summary"],
                        default="summary")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mubs", help="build MUBs from a relative difference set")
    p.add_argument("--rds", required=True)
    p.set_defaults(func=cmd_mubs)

    p = sub.add_parser("construct", help="run one of the line constructions")
    p.add_argument("kind", choices=["c1", "c2", "c3", "c3ext", "hoggar", "wh"])
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--rds", default=None)
    p.add_argument("--perm", default=None, help="e.g. 1,3,4,2")
    p.add_argument("--v", default=None, help='e.g. "sqrt(2+sqrt(5))"')
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--variant", choices=["default", "i-twist"],
                   default="default")
    p.add_argument("--fiducial", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="analyze a line-set JSON file")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive Construction-1 search")
    p.add_argument("what", choices=["c1"])
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--rds", default=None)
    p.add_argument("--phase-roots", type=int, default=4)
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="print the line and MUB bounds for d")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("wh", help="Weyl-Heisenberg orbit of a fiducial")
    p.add_argument("--fiducial", default="builtin:d4")
    p.set_defaults(func=cmd_wh)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (abelian.RdsError, constructions.InvalidRds,
            framecore.DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
