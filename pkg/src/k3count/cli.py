"""Command-line entry point.

Exit status: 0 on success, 1 when a cross-check or verification fails,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .counting import ng_fast, ng_via_convolution, ng_via_jacobi
from .partitions import partition_p
from .schain import (
    InvalidConfig,
    MuConfig,
    delta_lower_bound,
    enumerate_lambda_configs,
    enumerate_mu_configs,
    is_admissible_mu,
    is_valid_mu,
)
from .verify import run_verification

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# the convolution path is quadratic-ish; beyond this it only covers a prefix
CONVOLUTION_CHECK_LIMIT = 1000


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="k3count",
        description="Rational-curve counts on K3 surfaces and the chain-configuration combinatorics behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ng = sub.add_parser("ng", help="table of N_g, the coefficients of prod (1-q^n)^-24")
    ng.add_argument("--max-genus", type=_nonnegative, required=True)
    ng.add_argument("--format", choices=("csv", "json"), default="csv")
    ng.add_argument("--out", help="write the table here instead of stdout")

    en = sub.add_parser("enumerate", help="list chain configurations of weight m")
    en.add_argument("--m", type=_nonnegative, required=True)
    en.add_argument("--side", choices=("lambda", "mu"), required=True)
    en.add_argument("--admissible", action="store_true", help="mu side: keep admissible only")

    de = sub.add_parser("delta", help="delta-invariant lower bound of a mu configuration")
    de.add_argument("--config", required=True, help="JSON file, or - for stdin")

    ve = sub.add_parser("verify", help="run the identity suite")
    ve.add_argument("--order", type=_nonnegative, default=40)
    ve.add_argument("--max-m", type=_nonnegative, default=12)
    ve.add_argument("--max-n", type=_nonnegative, default=8)
    ve.add_argument("--json", action="store_true", help="emit the report as JSON")
    return parser


def _first_disagreement(a, b) -> int | None:
    for g in range(min(a.order, b.order) + 1):
        if a[g] != b[g]:
            return g
    return None


def cmd_ng(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    top = args.max_genus
    table = ng_fast(top)
    cross = [("jacobi", ng_via_jacobi(top))]
    cross.append(("convolution", ng_via_convolution(min(top, CONVOLUTION_CHECK_LIMIT))))
    for name, other in cross:
        g = _first_disagreement(table, other)
        if g is not None:
            err.write(f"ng: pentagonal and {name} paths disagree at g={g}\n")
            return EXIT_CHECK_FAILED

    if args.format == "csv":
        text = "g,N_g\n" + "".join(f"{g},{table[g]}\n" for g in range(top + 1))
    else:
        rows = [{"g": g, "Ng": str(table[g])} for g in range(top + 1)]
        text = json.dumps(rows) + "\n"

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.side == "lambda":
        if args.admissible:
            err.write("enumerate: --admissible applies to --side mu only\n")
            return EXIT_USAGE
        configs = enumerate_lambda_configs(args.m)
    else:
        configs = enumerate_mu_configs(args.m, admissible_only=args.admissible)
    doc = {
        "m": args.m,
        "side": args.side,
        "admissible_only": bool(args.admissible),
        "count": len(configs),
        "P": str(partition_p(args.m)),
        "configurations": [c.to_json() for c in configs],
    }
    out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def cmd_delta(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    try:
        if args.config == "-":
            raw = stdin.read()
        else:
            with open(args.config, encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        err.write(f"delta: cannot read config: {exc}\n")
        return EXIT_USAGE
    try:
        config = MuConfig.from_json(json.loads(raw))
    except json.JSONDecodeError as exc:
        err.write(f"delta: malformed JSON: {exc}\n")
        return EXIT_USAGE
    except InvalidConfig as exc:
        err.write(f"delta: {exc}\n")
        return EXIT_USAGE
    if not is_valid_mu(config):
        err.write(f"delta: invalid configuration {config.to_json()}\n")
        return EXIT_USAGE
    m = config.weight
    bound = delta_lower_bound(config)
    doc = {
        "m": m,
        "B": bound,
        "admissible": is_admissible_mu(config),
        "equality": bound == m,
    }
    out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO, **kwargs) -> int:
    report = run_verification(args.order, args.max_m, args.max_n, **kwargs)
    if args.json:
        out.write(json.dumps(report.to_json()) + "\n")
    else:
        for c in report.checks:
            out.write(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}\n")
        passed = sum(c.passed for c in report.checks)
        out.write(f"{passed}/{len(report.checks)} checks passed\n")
    # timing varies run to run; stdout stays byte-identical
    err.write(f"elapsed: {report.elapsed_ms:.1f} ms\n")
    if not report.ok:
        err.write("failing checks: " + ", ".join(report.failing()) + "\n")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def main(
    argv: Sequence[str] | None = None,
    out: TextIO | None = None,
    err: TextIO | None = None,
    stdin: TextIO | None = None,
) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    if args.command == "ng":
        return cmd_ng(args, out, err)
    if args.command == "enumerate":
        return cmd_enumerate(args, out, err)
    if args.command == "delta":
        return cmd_delta(args, out, err, stdin)
    return cmd_verify(args, out, err)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
