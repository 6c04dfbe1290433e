"""Command line entry point: ``hooklab <subcommand> [flags]``.

Every subcommand writes one JSON value per line to stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import genfuns as gf
from .abacus import check_sc_properties, decompose, encode
from .partitions import (
    Partition,
    a_star_oracle,
    enumerate_partitions,
    enumerate_self_conjugate,
    hook_lengths,
    is_self_conjugate,
)
from .verify import TARGETS, reproduce_table_1, run_suite

QMAX_ENV = "HOOKLAB_QMAX_DEFAULT"
SERIES = ("sc", "hstar", "thm11", "a_star", "han", "gks", "gen1", "d1", "d2")


def _positive(text: str) -> int:
    value = _nonnegative(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _t_list(text: str) -> list[int]:
    return [_positive(tok) for tok in text.split(",") if tok]


def _default_qmax() -> int | None:
    raw = os.environ.get(QMAX_ENV)
    if raw is None:
        return None
    try:
        return _nonnegative(raw)
    except argparse.ArgumentTypeError:
        raise SystemExit(f"{QMAX_ENV} must be a non-negative integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hooklab",
        description="Hook lengths, Littlewood decompositions and q-series for self-conjugate partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream partitions of n")
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--class", dest="family", choices=("sc", "all"), default="all")
    p.add_argument("--hooks", action="store_true", help="include the hook-length multiset")

    p = sub.add_parser("decompose", help="Littlewood decomposition with abacus words")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--t", type=_positive, required=True)

    p = sub.add_parser("count", help="number of t-hooks over self-conjugate partitions of n")
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--method", choices=("oracle", "formula", "series"), default="formula")

    p = sub.add_parser("series", help="print a truncated generating function")
    p.add_argument("--which", choices=SERIES, required=True)
    p.add_argument("--t", type=_positive)
    p.add_argument("--qmax", type=_nonnegative)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--target", choices=("all",) + TARGETS, default="all")
    p.add_argument("--t", type=_t_list, help="comma-separated values of t")
    p.add_argument("--qmax", type=_nonnegative)
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("table", help="a_t*(n) for every t")
    p.add_argument("--n", type=_nonnegative, default=16)
    p.add_argument("--method", choices=("oracle", "formula", "series"), default="oracle")
    return parser


def _emit(value, out) -> None:
    out.write(json.dumps(value) + "\n")


def _cmd_enumerate(args, out) -> int:
    gen = enumerate_self_conjugate if args.family == "sc" else enumerate_partitions
    for p in gen(args.n):
        record = {"partition": str(p), "size": p.size}
        if args.hooks:
            record["hooks"] = sorted(hook_lengths(p).elements(), reverse=True)
        _emit(record, out)
    return 0


def _cmd_decompose(args, out) -> int:
    img = decompose(args.partition, args.t)
    record = {"partition": str(args.partition), **img.to_dict()}
    record["words"] = {
        "partition": str(encode(args.partition)),
        "core": str(encode(img.core)),
        "quotient": [str(encode(nu)) for nu in img.quotient],
    }
    if is_self_conjugate(args.partition):
        check = check_sc_properties(args.partition, args.t)
        record["self_conjugate_check"] = "pass" if check.ok else check.failed
    _emit(record, out)
    return 0


def _cmd_count(args, out) -> int:
    if args.method == "oracle":
        value = a_star_oracle(args.t, args.n)
    elif args.method == "formula":
        value = gf.a_star_formula(args.t, args.n)
    else:
        value = gf.a_star_series(args.t, args.n).coefficient(args.n)
    _emit(value, out)
    return 0


def _cmd_series(args, parser, out) -> int:
    N = args.qmax
    if N is None:
        N = _default_qmax()
    if N is None:
        N = 30
    needs_t = {"thm11", "a_star", "han", "gks"}
    if args.which in needs_t and args.t is None:
        parser.error(f"--which {args.which} needs --t")
    builders = {
        "sc": lambda: gf.sc_series(N),
        "hstar": lambda: gf.h_star(N) if args.t is None else gf.h_star_at(args.t, N),
        "thm11": lambda: gf.thm11_rhs(args.t, N),
        "a_star": lambda: gf.a_star_series(args.t, N),
        "han": lambda: gf.han_rhs(args.t, N),
        "gks": lambda: gf.gks_core_genfun(args.t, N),
        "gen1": lambda: gf.gen1_series(N),
        "d1": lambda: gf.d_type_series(1, N),
        "d2": lambda: gf.d_type_series(2, N),
    }
    _emit(builders[args.which]().to_json(), out)
    return 0


def _cmd_verify(args, out, err) -> int:
    targets = TARGETS if args.target == "all" else (args.target,)
    qmax = args.qmax if args.qmax is not None else _default_qmax()
    reports = run_suite(targets, ts=args.t, qmax=qmax, jobs=args.jobs)
    failed = False
    for report in reports:
        _emit(report.to_dict(), out)
        if not report.passed:
            failed = True
            _emit({"target": report.target, "parameters": report.parameters,
                   "mismatch": report.mismatch}, err)
    return 1 if failed else 0


def _cmd_table(args, out) -> int:
    rows = reproduce_table_1(args.n, args.method)
    # past t = n every value is 0; fold the zero tail into one ">= t" row
    last = len(rows)
    while last > 0 and rows[last - 1][1] == 0:
        last -= 1
    for t, value in rows[:last]:
        _emit({"t": t, "a_star": value}, out)
    _emit({"t": f">={last + 1}", "a_star": 0}, out)
    return 0


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args, out)
        if args.command == "decompose":
            return _cmd_decompose(args, out)
        if args.command == "count":
            return _cmd_count(args, out)
        if args.command == "series":
            return _cmd_series(args, parser, out)
        if args.command == "verify":
            return _cmd_verify(args, out, err)
        return _cmd_table(args, out)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValueError as exc:
        _emit({"error": str(exc)}, err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
