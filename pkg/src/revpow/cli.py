"""Command-line front end.

Exit codes: 0 ok, 1 not a solution, 2 usage, 3 capacity, 4 family violation,
5 reproduction mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, InvalidOperation
from typing import Iterable, Sequence, TextIO

from .digits import CapacityError, DigitString, to_digits
from .equations import Equation, Solution, classify, lhs_value
from .families import (
    FAMILIES,
    FamilyViolation,
    e1_concat_member,
    e2_power_member,
    e3_palindrome_power_member,
)
from .search import SearchRange, count_solutions, default_workers, enumerate_solutions
from .tables import TABLES

EXIT_OK = 0
EXIT_NOT_SOLUTION = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_FAMILY = 4
EXIT_MISMATCH = 5

FORMATS = ("table", "tsv", "jsonl")
RECORD_FIELDS = ("eq", "base", "n", "n_radix", "rev", "sign", "root")


def parse_int(text: str) -> int:
    """Exact integer from ``123``, ``1_000`` or ``1e6``; rejects non-integral values."""
    try:
        value = Decimal(text.strip().replace("_", ""))
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value.is_finite() or value != value.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def parse_int_list(text: str) -> list[int]:
    return [parse_int(part) for part in text.split(",") if part.strip()]


def parse_span(text: str) -> list[int]:
    """``3`` -> [3]; ``1..3`` -> [1, 2, 3]."""
    lo, sep, hi = text.partition("..")
    if not sep:
        return [parse_int(lo)]
    a, b = parse_int(lo), parse_int(hi)
    if b < a:
        raise argparse.ArgumentTypeError(f"empty span {text!r}")
    return list(range(a, b + 1))


def record(sol: Solution) -> dict[str, str | int]:
    return {
        "eq": sol.equation.number,
        "base": sol.radix,
        "n": str(sol.n_value),
        "n_radix": sol.n_in_radix(),
        "rev": str(sol.reversed),
        "sign": sol.sign.value,
        "root": str(sol.root),
    }


def record_to_solution(rec: dict) -> Solution | None:
    """Re-verify a jsonl record from scratch; None if it is not a solution."""
    radix = int(rec["base"])
    n_value = int(rec["n"])
    if DigitString.parse(rec["n_radix"], radix) != to_digits(n_value, radix):
        return None
    sol = classify(n_value, radix, Equation.parse(rec["eq"]))
    if sol is None or record(sol) != {**rec, "eq": int(rec["eq"]), "base": radix}:
        return None
    return sol


def write_records(sols: Iterable[Solution], fmt: str, out: TextIO) -> int:
    count = 0
    if fmt == "table":
        rows = [[*(str(v) for v in record(s).values()), s.render()] for s in sols]
        header = [*RECORD_FIELDS, "identity"]
        widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
        for r in [header, *rows]:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        return len(rows)
    if fmt == "tsv":
        out.write("\t".join([*RECORD_FIELDS, "identity"]) + "\n")
    for s in sols:
        rec = record(s)
        if fmt == "tsv":
            out.write("\t".join([*(str(v) for v in rec.values()), s.render()]) + "\n")
        else:
            out.write(json.dumps(rec) + "\n")
        count += 1
    return count


def _progress_printer(err: TextIO):
    def report(scanned: int, found: int) -> None:
        err.write(f"\rscanned {scanned} candidates, {found} solutions")
        err.flush()

    return report


def cmd_search(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    spec = SearchRange(
        radix=args.base,
        equation=Equation.parse(args.eq),
        lo=args.min,
        hi=args.max,
        sign_filter=args.sign,
        chunk_size=args.chunk_size,
        sieve=args.sieve,
        min_digits=args.min_digits,
    )
    progress = _progress_printer(err) if args.progress else None
    n = write_records(enumerate_solutions(spec, workers=args.workers, progress=progress), args.format, out)
    if args.progress:
        err.write("\n")
    err.write(f"{n} solutions\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    eq = Equation.parse(args.eq)
    sol = classify(args.n, args.base, eq)
    if sol is None:
        out.write(f"not a solution: lhs = {lhs_value(args.n, args.base, eq)}\n")
        return EXIT_NOT_SOLUTION
    out.write(sol.render() + "\n")
    return EXIT_OK


def cmd_families(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    members: list[Solution] = []
    if args.family == "e1-concat":
        if args.seed is None:
            raise argparse.ArgumentTypeError("e1-concat needs --seed")
        seed = classify(args.seed, args.base, Equation.E1)
        if seed is None:
            err.write(f"seed {args.seed} is not an E1 solution in base {args.base}\n")
            return EXIT_USAGE
        widths = args.block_width or [None]
        for copies in args.copies:
            for width in widths:
                members.append(e1_concat_member(seed, width, copies))
    else:
        make = e2_power_member if args.family == "e2-power" else e3_palindrome_power_member
        members = [make(args.base, k) for k in args.k]
    write_records(members, args.format, out)
    return EXIT_OK


def cmd_density(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    eq = Equation.parse(args.eq)
    progress = _progress_printer(err) if args.progress else None
    report = count_solutions(eq, args.base, args.checkpoints, workers=args.workers, progress=progress)
    if args.progress:
        err.write("\n")
    formula = {Equation.E1: "0.5*ln(n)", Equation.E2: "1-n^(-1/3)", Equation.E3: "1-n^(-1/2)"}[eq]
    rows = [
        {
            "bound": c.bound,
            "observed": c.observed,
            "predicted": round(c.predicted, 6),
            "ratio": round(c.ratio, 6),
            "formula": formula,
        }
        for c in report.checkpoints
    ]
    if args.format == "jsonl":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    else:
        sep = "\t" if args.format == "tsv" else "  "
        header = list(rows[0])
        cells = [header] + [[str(r[h]) for h in header] for r in rows]
        widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
        for c in cells:
            if args.format == "tsv":
                out.write(sep.join(c) + "\n")
            else:
                out.write(sep.join(v.rjust(w) for v, w in zip(c, widths)) + "\n")
        if args.format == "table":
            out.write(f"# {report.log_note}\n")
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    table = TABLES[args.table]
    expected = table.expected(fast=args.fast)
    bound = table.fast_bound if args.fast else table.bound
    spec = SearchRange(table.radix, table.equation, 1, bound)
    found = {s.n_value: s for s in enumerate_solutions(spec, workers=args.workers)}
    passed = 0
    for row in expected:
        sol = found.pop(row.n_value, None)
        ok = (
            sol is not None
            and sol.reversed == row.reversed
            and sol.sign.value == row.sign
            and sol.root == row.root
            and (row.digits is None or sol.n_in_radix() == row.digits)
        )
        passed += ok
        label = row.n_value if row.digits is None else f"{row.digits}_b{table.radix} ({row.n_value})"
        if ok:
            out.write(f"PASS {label}\n")
        elif sol is None:
            out.write(f"FAIL {label}: expected row not found\n")
        else:
            out.write(f"FAIL {label}: expected rev={row.reversed} sign={row.sign} root={row.root}, got {sol.render()}\n")
    for sol in found.values():
        out.write(f"FAIL unexpected solution {sol.render()}\n")
    ok = passed == len(expected) and not found
    scope = f" (fast: N < {bound})" if args.fast else ""
    out.write(f"{'PASS' if ok else 'FAIL'}, {passed}/{len(expected)} rows{scope}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revpow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, eq_required: bool = True) -> None:
        p.add_argument("--eq", choices=["1", "2", "3"], required=eq_required)
        p.add_argument("--base", type=int, default=10)

    def scan_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--workers", type=int, default=default_workers())
        p.add_argument("--progress", action="store_true", help="report progress on stderr")

    p = sub.add_parser("search", help="enumerate solutions in [min, max)")
    common(p)
    p.add_argument("--min", type=parse_int, default=1)
    p.add_argument("--max", type=parse_int, required=True)
    p.add_argument("--sign", choices=["plus", "minus", "both"], default="both")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--sieve", action="store_true", help="skip 3-digit N not divisible by 11 (E1, base 10)")
    p.add_argument("--chunk-size", type=parse_int, default=65536)
    p.add_argument("--min-digits", type=int, default=2)
    scan_options(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check a single N")
    p.add_argument("n", type=parse_int)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", help="generate members of the infinite families")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--k", type=parse_span, default=[1])
    p.add_argument("--seed", type=parse_int)
    p.add_argument("--copies", type=parse_span, default=[2])
    p.add_argument("--block-width", type=parse_span)
    p.add_argument("--format", choices=FORMATS, default="table")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("density", help="observed vs heuristic solution counts")
    common(p)
    p.add_argument("--checkpoints", type=parse_int_list, required=True)
    p.add_argument("--format", choices=FORMATS, default="table")
    scan_options(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("reproduce", help="rerun a published table and diff it")
    p.add_argument("--table", choices=sorted(TABLES), required=True)
    p.add_argument("--fast", action="store_true", help="stop at the table's desk-scale bound")
    scan_options(p)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    # Values up to MAX_BITS must print in full.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except CapacityError as exc:
        err.write(f"capacity error: {exc}\n")
        return EXIT_CAPACITY
    except FamilyViolation as exc:
        err.write(f"family violation: {exc}\n")
        return EXIT_FAMILY
    except (ValueError, argparse.ArgumentTypeError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
