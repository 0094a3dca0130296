"""Command-line front end.

Every subcommand prints exactly one JSON document to stdout (scan can emit
CSV instead), so output pipes cleanly into jq or a spreadsheet.  Exit codes
separate the failure modes scripts care about:

    0  success
    1  --expect-optimal was given and the code is not proven optimal
    2  bad parameters (including argparse-level errors)
    3  the requested exponent collides with a factor already in the generator
    4  a supplied polynomial is not primitive
    5  the job exceeds a size limit and was refused
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .codes import construct_code
from .distance import brute_force_min_distance, min_distance
from .errors import CosetOverlapError, LimitError, ParameterError, PrimitivityError
from .explorer import (
    DEFAULT_SCAN_LIMIT,
    optimal_flag,
    probe_open_problem,
    probe_to_json,
    scan,
    scan_to_csv,
    scan_to_json,
    write_probe_outputs,
    write_scan_outputs,
)
from .extfield import get_field
from .theorems import OPEN_PROBLEM_IDS, THEOREM_IDS, run_checker


def _parse_pi(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"--pi wants comma-separated integers, constant term first, got {text!r}"
        )


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _field(args):
    return get_field(args.p, args.m) if args.pi is None else get_field(args.p, args.m, pi=args.pi)


def cmd_construct(args) -> int:
    code = construct_code(args.e, _field(args))
    _emit(code.descriptor())
    return 0


def cmd_verify(args) -> int:
    code = construct_code(args.e, _field(args))
    if args.brute:
        report = brute_force_min_distance(code)
    else:
        report = min_distance(code, threads=args.threads)
    flag = optimal_flag(report.d, report.exact, code.n, code.k, code.field.p)
    body = code.descriptor()
    body["distance"] = report.to_json()
    body["optimal"] = flag
    _emit(body)
    if args.expect_optimal and flag is not True:
        return 1
    return 0


def cmd_check_theorem(args) -> int:
    params = {
        name: getattr(args, name)
        for name in ("p", "m", "e", "h", "k")
        if getattr(args, name) is not None
    }
    verdict = run_checker(args.theorem_id, **params)
    _emit(verdict.to_json())
    return 0


def cmd_scan(args) -> int:
    result = scan(
        args.p,
        args.m,
        pi=args.pi,
        threads=args.threads,
        scan_limit=args.scan_limit,
        journal_path=args.journal,
    )
    if args.out is not None:
        manifest = write_scan_outputs(result, args.out)
        _emit({"outputs": manifest, "totals": result.totals()})
    elif args.format == "csv":
        sys.stdout.write(scan_to_csv(result))
    else:
        sys.stdout.write(scan_to_json(result))
    return 0


def cmd_open_problem(args) -> int:
    report = probe_open_problem(args.problem_id, args.m, threads=args.threads)
    if args.out is not None:
        manifest = write_probe_outputs(report, args.out)
        _emit({"outputs": manifest, "all_d4": report.all_d4})
    else:
        sys.stdout.write(probe_to_json(report))
    return 0


def cmd_field_info(args) -> int:
    field = _field(args)
    info = field.describe()
    info["s"] = field.n // 2
    _emit(info)
    return 0


def _add_field_args(sp, with_e: bool) -> None:
    sp.add_argument("-p", type=int, required=True, help="odd prime characteristic")
    sp.add_argument("-m", type=int, required=True, help="extension degree")
    if with_e:
        sp.add_argument("-e", type=int, required=True, help="defining exponent of the third factor")
    sp.add_argument(
        "--pi",
        type=_parse_pi,
        default=None,
        metavar="C0,C1,...",
        help="primitive polynomial, ascending coefficients including the leading 1",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclopt",
        description="Construct p-ary cyclic codes with three-factor generators, "
        "verify their minimum distance, and test optimality criteria.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="print the generator polynomial and code parameters")
    _add_field_args(sp, with_e=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="measure the minimum distance of one code")
    _add_field_args(sp, with_e=True)
    sp.add_argument("--threads", type=int, default=None, help="worker threads (or CYCLOPT_THREADS)")
    sp.add_argument("--brute", action="store_true", help="use the exhaustive search instead")
    sp.add_argument(
        "--expect-optimal",
        action="store_true",
        help="exit 1 unless the code is proven distance-4 optimal",
    )
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("check-theorem", help="run one optimality checker")
    sp.add_argument("theorem_id", choices=THEOREM_IDS)
    sp.add_argument("-p", type=int, default=None, help="characteristic, where the checker takes one")
    sp.add_argument("-m", type=int, default=None, help="extension degree")
    sp.add_argument("-e", type=int, default=None, help="exponent, for per-exponent checkers")
    sp.add_argument("--h", type=int, default=None, help="power-of-p parameter")
    sp.add_argument("--k", type=int, default=None, help="second power parameter (congruence families)")
    sp.set_defaults(func=cmd_check_theorem)

    sp = sub.add_parser("scan", help="measure every candidate exponent class of a field")
    _add_field_args(sp, with_e=False)
    sp.add_argument("--threads", type=int, default=None, help="worker threads (or CYCLOPT_THREADS)")
    sp.add_argument(
        "--scan-limit",
        type=int,
        default=DEFAULT_SCAN_LIMIT,
        help=f"refuse fields larger than this many elements (default {DEFAULT_SCAN_LIMIT})",
    )
    sp.add_argument("--journal", default=None, metavar="PATH", help="JSON-lines checkpoint file")
    sp.add_argument("--out", default=None, metavar="DIR", help="write JSON, CSV and figures here")
    sp.add_argument("--format", choices=("json", "csv"), default="json", help="stdout format")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("open-problem", help="gather evidence for one open question")
    sp.add_argument("problem_id", choices=OPEN_PROBLEM_IDS)
    sp.add_argument("-m", type=int, required=True, help="extension degree over F_5")
    sp.add_argument("--threads", type=int, default=None, help="worker threads (or CYCLOPT_THREADS)")
    sp.add_argument("--out", default=None, metavar="DIR", help="write JSON and a figure here")
    sp.set_defaults(func=cmd_open_problem)

    sp = sub.add_parser("field-info", help="show the field a construction would use")
    _add_field_args(sp, with_e=False)
    sp.set_defaults(func=cmd_field_info)

    return parser


def _fail(exc: Exception, code: int) -> int:
    sys.stderr.write(
        json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"
    )
    return code


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CosetOverlapError as exc:
        return _fail(exc, 3)
    except PrimitivityError as exc:
        return _fail(exc, 4)
    except LimitError as exc:
        return _fail(exc, 5)
    except ParameterError as exc:
        return _fail(exc, 2)


if __name__ == "__main__":
    sys.exit(main())
