"""Command-line front end.

Subcommands expose every computation of the library with deterministic,
machine-readable output.  All numeric payloads are decimal strings (never
floats): exact results carry no error bound, approximate ones always do.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .certified import CertifiedReal
from .closed_forms import (
    kfib_binomial,
    kfib_ordinary,
    kfib_ordinary_alt,
)
from .core import kfib_order_k, kfib_order_k1
from .dominant_root import asymptotic, asymptotic_ratio, epsilon, rho
from .errors import DomainError, OracleCapError
from .series import (
    SeriesPartialSum,
    adaptive_partial,
    asymptotic_series_partial,
    hermite_sum_partial,
    rho_power_partial,
)
from .verify import SUITES, VerifyReport, run_suites


@dataclass(frozen=True)
class OutputRecord:
    command: str
    params: dict[str, str]
    value: str
    exact: bool
    error_bound: str | None
    method: str


# -- decimal rendering ---------------------------------------------------


def _fraction_decimal(x: Fraction, digits: int) -> str:
    scaled = round(x * 10**digits)
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled))
    if digits == 0:
        return sign + body
    body = body.rjust(digits + 1, "0")
    return f"{sign}{body[:-digits]}.{body[-digits:]}"


def _digits_for(bound: Fraction, cap: int = 400) -> int:
    d = 0
    while d < cap and Fraction(1, 10**d) > bound:
        d += 1
    return d


def _bound_decimal(x: Fraction) -> str:
    """Upper-rounded scientific rendering with two significant digits."""
    if x == 0:
        return "0"
    e = 0
    while x < 1:
        x *= 10
        e -= 1
    while x >= 10:
        x /= 10
        e += 1
    mant_tenths = -((-x * 10) // 1)  # ceil
    if mant_tenths >= 100:
        mant_tenths = 10
        e += 1
    return f"{_fraction_decimal(Fraction(mant_tenths, 10), 1)}e{e:+03d}"


def _certified_record(command: str, params: dict[str, str], value: CertifiedReal,
                      method: str) -> OutputRecord:
    if value.err == 0 and value.approx.denominator == 1:
        return OutputRecord(command, params, str(value.approx.numerator),
                            True, None, method)
    digits = _digits_for(value.err) if value.err else 60
    shown = _fraction_decimal(value.approx, digits)
    total = value.err + Fraction(1, 2 * 10**digits)
    return OutputRecord(command, params, shown, False, _bound_decimal(total), method)


def _partial_record(command: str, params: dict[str, str], p: SeriesPartialSum,
                    method: str) -> OutputRecord:
    digits = min(_digits_for(p.tail_bound) + 2, 60)
    shown = _fraction_decimal(p.value, digits)
    total = p.tail_bound + Fraction(1, 2 * 10**digits)
    params = dict(params, terms=str(p.terms_used))
    return OutputRecord(command, params, shown, False, _bound_decimal(total), method)


# -- output formatting ---------------------------------------------------


def _record_json(r: OutputRecord) -> dict:
    out = {
        "command": r.command,
        "params": r.params,
        "value": r.value,
        "exact": r.exact,
    }
    if not r.exact:
        out["error_bound"] = r.error_bound
    out["method"] = r.method
    return out


def _emit_records(records: list[OutputRecord], fmt: str, quiet: bool) -> None:
    if fmt == "json":
        print(json.dumps([_record_json(r) for r in records], indent=2))
    elif fmt == "csv":
        print("command,method,params,value,exact,error_bound")
        for r in records:
            params = ";".join(f"{k}={v}" for k, v in r.params.items())
            bound = r.error_bound or ""
            print(f"{r.command},{r.method},{params},{r.value},{r.exact},{bound}")
    else:
        for r in records:
            if quiet:
                print(r.value)
                continue
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            tail = "(exact)" if r.exact else f"± {r.error_bound}"
            print(f"{r.command}[{r.method}] {params} -> {r.value} {tail}")


def _emit_reports(reports: list[VerifyReport], fmt: str, quiet: bool) -> None:
    if fmt == "json":
        payload = [
            {
                "suite": rep.suite,
                "cells": [
                    {"check": c.check, "k": str(c.k), "n": str(c.n), "pass": c.ok,
                     "expected": c.expected, "actual": c.actual}
                    for c in rep.cells
                ],
                "failures": rep.failures,
            }
            for rep in reports
        ]
        print(json.dumps(payload, indent=2))
        return
    if fmt == "csv":
        print("suite,check,k,n,pass,expected,actual")
        for rep in reports:
            for c in rep.cells:
                print(f"{rep.suite},{c.check},{c.k},{c.n},{c.ok},{c.expected},{c.actual}")
        return
    total = 0
    for rep in reports:
        total += rep.failures
        print(f"suite {rep.suite}: {len(rep.cells)} cells, {rep.failures} failures")
        for c in rep.cells:
            if not c.ok:
                print(f"  FAIL {c.check} k={c.k} n={c.n}: "
                      f"expected {c.expected}, got {c.actual}")
            elif c.check == "divergence" and not quiet:
                print(f"  divergence (expected): k={c.k} n={c.n} "
                      f"correct={c.expected} misranged={c.actual}")
    print(f"TOTAL failures: {total}")


# -- argument parsing ----------------------------------------------------

FIB_METHODS = ("recurrence", "recurrence-k1", "binomial", "ordinary",
               "ordinary-alt", "all")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kfib",
        description="Exact k-step Fibonacci numbers, binomial-sum identities, "
                    "and certified dominant-root computations.",
    )
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--quiet", action="store_true",
                   help="text format: print bare values / failures only")
    p.add_argument("--timing", action="store_true",
                   help="report elapsed time on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    fib = sub.add_parser("fib", help="compute F[n] for the k-step sequence")
    fib.add_argument("--k", type=int, required=True)
    fib.add_argument("--n", type=int, required=True)
    fib.add_argument("--method", choices=FIB_METHODS, default="recurrence")

    root = sub.add_parser("rho", help="certified dominant root (or its gap to 2)")
    root.add_argument("--k", type=int, required=True)
    root.add_argument("--bits", type=int, default=64)
    root.add_argument("--epsilon", action="store_true",
                      help="print the gap 2 - rho instead of rho")

    ser = sub.add_parser("series", help="binomial-series partial sums with tail bounds")
    ser.add_argument("--which", choices=("thm1", "thm2", "thm3"), required=True)
    ser.add_argument("--k", type=int, required=True)
    ser.add_argument("--n", type=int)
    ser.add_argument("--a", type=int)
    ser.add_argument("--terms", type=int)
    ser.add_argument("--tol", type=str)

    asym = sub.add_parser("asymptotic", help="dominant-term value or F[n]/approximation ratio")
    asym.add_argument("--k", type=int, required=True)
    asym.add_argument("--n", type=int, required=True)
    asym.add_argument("--bits", type=int, default=64)
    asym.add_argument("--ratio", action="store_true")

    ver = sub.add_parser("verify", help="run cross-engine verification sweeps")
    ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ver.add_argument("--k-max", type=int, default=6)
    ver.add_argument("--n-max", type=int, default=200)
    return p


# -- subcommand handlers -------------------------------------------------


def _run_fib(args, parser) -> tuple[list[OutputRecord], int]:
    k, n = args.k, args.n
    engines = {
        "recurrence": kfib_order_k,
        "recurrence-k1": kfib_order_k1,
        "binomial": kfib_binomial,
        "ordinary": kfib_ordinary,
        "ordinary-alt": kfib_ordinary_alt,
    }
    params = {"k": str(k), "n": str(n)}
    if args.method != "all":
        value = engines[args.method](k, n)
        return [OutputRecord("fib", params, str(value), True, None, args.method)], 0
    methods = ["recurrence", "recurrence-k1"]
    if n >= k:
        methods.append("binomial")
        if n != 2 * k - 1:
            methods.append("ordinary")
        methods.append("ordinary-alt")
    records = [OutputRecord("fib", params, str(engines[m](k, n)), True, None, m)
               for m in methods]
    values = {r.value for r in records}
    if len(values) > 1:
        print("method disagreement: " + ", ".join(f"{r.method}={r.value}" for r in records),
              file=sys.stderr)
        return records, 4
    return records, 0


def _run_rho(args, parser) -> tuple[list[OutputRecord], int]:
    params = {"k": str(args.k), "bits": str(args.bits)}
    if args.epsilon:
        value = epsilon(args.k, args.bits)
        return [_certified_record("rho", dict(params, quantity="epsilon"),
                                  value, "fixed-point")], 0
    value = rho(args.k, args.bits)
    return [_certified_record("rho", dict(params, quantity="rho"),
                              value, "fixed-point")], 0


def _run_series(args, parser) -> tuple[list[OutputRecord], int]:
    which = args.which
    if args.terms is not None and args.tol is not None:
        parser.error("--terms and --tol are mutually exclusive")
    if which in ("thm1", "thm3"):
        if args.n is None:
            parser.error(f"--n is required for --which {which}")
        param_val = args.n
        key = "n"
        partial = (lambda t: rho_power_partial(args.k, args.n, t)) if which == "thm1" \
            else (lambda t: asymptotic_series_partial(args.k, args.n, t))
    else:
        if args.a is None:
            parser.error("--a is required for --which thm2")
        param_val = args.a
        key = "a"
        partial = lambda t: hermite_sum_partial(args.k, args.a, t)
    params = {"k": str(args.k), key: str(param_val)}
    if args.terms is not None:
        p = partial(args.terms)
        return [_partial_record("series", params, p, f"{which}-partial")], 0
    try:
        tol = Fraction(args.tol if args.tol is not None else "1e-12")
    except (ValueError, ZeroDivisionError):
        parser.error(f"--tol: not a decimal number: {args.tol!r}")
    if tol <= 0:
        parser.error("--tol must be positive")
    p = adaptive_partial(partial, tol)
    return [_partial_record("series", dict(params, tol=str(args.tol or "1e-12")),
                            p, f"{which}-adaptive")], 0


def _run_asymptotic(args, parser) -> tuple[list[OutputRecord], int]:
    params = {"k": str(args.k), "n": str(args.n), "bits": str(args.bits)}
    if args.ratio:
        value = asymptotic_ratio(args.k, args.n, args.bits)
        return [_certified_record("asymptotic", dict(params, quantity="ratio"),
                                  value, "dominant-root")], 0
    value = asymptotic(args.k, args.n, args.bits)
    return [_certified_record("asymptotic", dict(params, quantity="value"),
                              value, "dominant-root")], 0


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    started = time.perf_counter()
    try:
        if args.command == "verify":
            names = SUITES if args.suite == "all" else (args.suite,)
            reports = run_suites(names, args.k_max, args.n_max)
            _emit_reports(reports, args.format, args.quiet)
            code = 4 if any(rep.failures for rep in reports) else 0
        else:
            handler = {
                "fib": _run_fib,
                "rho": _run_rho,
                "series": _run_series,
                "asymptotic": _run_asymptotic,
            }[args.command]
            try:
                records, code = handler(args, parser)
            except SystemExit as exc:  # parser.error inside a handler
                return exc.code if isinstance(exc.code, int) else 2
            _emit_records(records, args.format, args.quiet)
    except (DomainError, OracleCapError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    if args.timing:
        print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
