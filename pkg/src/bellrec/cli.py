"""Command line interface: exact sequence computation and identity verification.

Every command is deterministic for a given set of flags (plus --seed for
``verify``); stdout is byte-identical across identical invocations.  Values
print as exact integers, fractions ("p/q"), or polynomial coefficient lists.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .convolve import ConvSpec, conv_bell, conv_direct, conv_recurrence
from .errors import PathMismatchError
from .linrec import RecurrenceSpec, chebyshev_t, chebyshev_u, decompose, eval_recurrence
from .ring import Poly, RingElem
from .symfun import elem_from_roots, power_sums_bell, power_sums_direct, power_sums_newton
from .verify import SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_MISMATCH = 3

DEFAULT_NMAX_LIMIT = 500


class CliError(Exception):
    """A usage error detected after argument parsing."""


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; remap to this tool's usage exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nmax_limit() -> int:
    raw = os.environ.get("BELLREC_NMAX_LIMIT", "")
    try:
        return int(raw) if raw else DEFAULT_NMAX_LIMIT
    except ValueError:
        raise CliError(f"BELLREC_NMAX_LIMIT is not an integer: {raw!r}")


def _check_n(n: int) -> int:
    if n < 0:
        raise CliError("--n must be >= 0")
    limit = _nmax_limit()
    if n > limit:
        raise CliError(f"--n {n} exceeds BELLREC_NMAX_LIMIT ({limit})")
    return n


def _parse_scalar(text: str):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"not an integer or fraction: {text!r}")
    return int(value) if value.denominator == 1 else value


def _parse_scalar_list(text: str, flag: str) -> list:
    items = [part.strip() for part in text.split(",")]
    if not all(items):
        raise CliError(f"{flag} wants a comma-separated list of rationals")
    return [_parse_scalar(item) for item in items]


def _fmt_scalar(v) -> str:
    return str(v)


def _fmt_plain(v: RingElem) -> str:
    if isinstance(v, Poly):
        return "[" + ",".join(_fmt_scalar(c) for c in v.coeffs) + "]"
    return _fmt_scalar(v)


def _fmt_json(v: RingElem):
    if isinstance(v, Poly):
        return [_fmt_scalar(c) for c in v.coeffs]
    return _fmt_scalar(v)


def _emit(command: str, params: dict, values: list, methods: list[str],
          verdict: str | None, fmt: str) -> None:
    if fmt == "json":
        record = {
            "command": command,
            "params": params,
            "values": [_fmt_json(v) for v in values],
            "methods": methods,
            "verdict": verdict,
        }
        print(json.dumps(record))
        return
    for v in values:
        print(_fmt_plain(v))
    if verdict is not None:
        print(f"verdict: {verdict}")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CliError(message)


def _build_spec(coeffs_text: str, init_text: str) -> RecurrenceSpec:
    coeffs = _parse_scalar_list(coeffs_text, "--coeffs")
    init = _parse_scalar_list(init_text, "--init")
    try:
        return RecurrenceSpec(coeffs, init)
    except ValueError as exc:
        raise CliError(str(exc))


def _cmd_seq(args) -> int:
    n = _check_n(args.n)
    if args.family:
        _require(args.coeffs is None and args.init is None,
                 "--family replaces --coeffs/--init")
        fn = chebyshev_t if args.family == "chebyshev-t" else chebyshev_u
        values = [fn(i) for i in range(n + 1)]
        methods = ["closed-form"]
    else:
        _require(args.coeffs is not None and args.init is not None,
                 "seq needs --coeffs and --init (or --family)")
        seq = eval_recurrence(_build_spec(args.coeffs, args.init), n)
        values = list(seq.values)
        methods = [seq.method]
    params = {"coeffs": args.coeffs, "init": args.init, "n": n, "family": args.family}
    _emit("seq", params, values, methods, None, args.format)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    spec = _build_spec(args.coeffs, args.init)
    lam = decompose(spec)
    params = {"coeffs": args.coeffs, "init": args.init}
    _emit("decompose", params, list(lam.lambdas), [], None, args.format)
    return EXIT_OK


def _cmd_conv(args) -> int:
    n = _check_n(args.n)
    _require(args.r >= 0, "--r must be >= 0")
    _require(args.delta >= 0, "--delta must be >= 0")
    if args.method in ("bell", "recurrence"):
        _require(args.r >= 1, f"--method {args.method} requires --r >= 1")
    if args.method == "recurrence":
        _require(args.delta == 0, "--method recurrence requires --delta 0")
    coeffs = _parse_scalar_list(args.coeffs, "--coeffs")
    spec = ConvSpec(coeffs, r=args.r, n_max=n, delta=args.delta)

    runs = []
    if args.method in ("direct", "all"):
        runs.append(conv_direct(spec))
    if args.method == "bell" or (args.method == "all" and spec.r >= 1):
        runs.append(conv_bell(spec))
    if args.method == "recurrence" or (
        args.method == "all" and spec.r >= 1 and spec.delta == 0
    ):
        runs.append(conv_recurrence(spec))

    verdict = None
    code = EXIT_OK
    if args.method == "all":
        agree = all(run.values == runs[0].values for run in runs[1:])
        verdict = "agree" if agree else "mismatch"
        if not agree:
            code = EXIT_MISMATCH
    params = {"coeffs": args.coeffs, "r": args.r, "delta": args.delta,
              "n": n, "method": args.method}
    _emit("conv", params, list(runs[0].values), [run.method for run in runs],
          verdict, args.format)
    return code


def _cmd_powersum(args) -> int:
    n = _check_n(args.n)
    _require((args.roots is None) != (args.elems is None),
             "powersum needs exactly one of --roots or --elems")
    runs = []
    if args.roots is not None:
        roots = _parse_scalar_list(args.roots, "--roots")
        _require(args.d is None or args.d == len(roots),
                 "--d must match the number of roots")
        d = len(roots)
        elems = elem_from_roots(roots)
        runs.append(power_sums_direct(roots, n))
    else:
        elems = _parse_scalar_list(args.elems, "--elems")
        d = args.d if args.d is not None else len(elems)
        _require(d == len(elems), "--d must match the number of --elems values")
    runs.append(power_sums_newton(elems, d, n))
    runs.append(power_sums_bell(elems, d, n))

    agree = all(run.values == runs[0].values for run in runs[1:])
    verdict = "agree" if agree else "mismatch"
    params = {"roots": args.roots, "elems": args.elems, "d": d, "n": n}
    _emit("powersum", params, list(runs[0].values), [run.method for run in runs],
          verdict, args.format)
    return EXIT_OK if agree else EXIT_MISMATCH


def _cmd_verify(args) -> int:
    _require(args.trials >= 1, "--trials must be >= 1")
    start = time.monotonic()
    results = run_suites(args.suite, args.seed, args.trials)
    elapsed = time.monotonic() - start
    all_passed = all(r.passed for r in results)
    values = [f"{r.suite}: {'pass' if r.passed else 'fail'}" for r in results]
    for r in results:
        for failure in r.failures:
            print(f"{r.suite}: {failure}", file=sys.stderr)
    params = {"suite": args.suite, "trials": args.trials, "seed": args.seed}
    _emit("verify", params, values, [r.suite for r in results],
          "pass" if all_passed else "fail", args.format)
    print(f"runtime: {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if all_passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bellrec",
        description="Exact linear recurrence sequences, Bell-polynomial style: "
                    "decompositions, multifold self-convolutions, power sums, "
                    "and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "json"), default="plain",
                       help="output format (default: plain, one value per line)")

    p_seq = sub.add_parser("seq", help="evaluate a recurrence (or a named family)")
    p_seq.add_argument("--coeffs", help="recurrence coefficients c1,...,cd")
    p_seq.add_argument("--init", help="initial terms a0,...,a_{d-1}")
    p_seq.add_argument("--family", choices=("chebyshev-t", "chebyshev-u"),
                       help="closed-form polynomial family instead of --coeffs/--init")
    p_seq.add_argument("--n", type=int, required=True, help="last index to compute")
    add_format(p_seq)
    p_seq.set_defaults(func=_cmd_seq)

    p_dec = sub.add_parser("decompose",
                           help="weights of a sequence over its fundamental sequence")
    p_dec.add_argument("--coeffs", required=True)
    p_dec.add_argument("--init", required=True)
    add_format(p_dec)
    p_dec.set_defaults(func=_cmd_decompose)

    p_conv = sub.add_parser("conv", help="r-fold self-convolution of a fundamental sequence")
    p_conv.add_argument("--coeffs", required=True)
    p_conv.add_argument("--r", type=int, required=True, help="fold count (>= 0)")
    p_conv.add_argument("--delta", type=int, default=0,
                        help="uniform index shift applied to every factor")
    p_conv.add_argument("--n", type=int, required=True)
    p_conv.add_argument("--method", choices=("direct", "bell", "recurrence", "all"),
                        default="direct")
    add_format(p_conv)
    p_conv.set_defaults(func=_cmd_conv)

    p_pow = sub.add_parser("powersum", help="power sums of roots, all routes cross-checked")
    p_pow.add_argument("--roots", help="the roots x1,...,xd")
    p_pow.add_argument("--elems", help="elementary symmetric functions e1,...,ed")
    p_pow.add_argument("--d", type=int, help="number of roots (defaults to len(--elems))")
    p_pow.add_argument("--n", type=int, required=True)
    add_format(p_pow)
    p_pow.set_defaults(func=_cmd_powersum)

    p_ver = sub.add_parser("verify", help="run randomized identity suites")
    p_ver.add_argument("--suite", choices=SUITE_NAMES, default="all",
                       help="lemma-key: weighted Bell row identity; prop1: "
                            "decompose/reconstruct round trip; cor3: shifted "
                            "convolution Bell sum; thm4: three-path convolutions; "
                            "genfam: binomial-family convolutions; girard-waring: "
                            "power-sum routes")
    p_ver.add_argument("--trials", type=int, default=10)
    p_ver.add_argument("--seed", type=int, default=0)
    add_format(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"bellrec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PathMismatchError as exc:
        print(f"bellrec: internal path mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
