"""Command-line interface.

Subcommands: gen-cnf, gen-proof, check, count, bench.  Data goes to stdout
(or the file given with --out), diagnostics to stderr.  Exit codes: 0 on
success (proof accepted, for ``check``), 1 for a rejected or incomplete
proof, 2 for usage or I/O errors.  No environment variables are consulted.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
import time
from typing import IO, Iterator

from . import checker, counts, encodings, formats, proof_cook, proof_ours


class UsageError(Exception):
    """Usage or I/O error; reported on stderr with exit code 2."""


@contextlib.contextmanager
def _open_out(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("n must be a positive integer")
    return value


def cmd_gen_cnf(args: argparse.Namespace) -> int:
    n = args.n
    if args.encoding == "standard":
        num_vars = n * (n + 1)
        clause_count = encodings.php_standard_clause_count(n)
        clauses = encodings.iter_php_standard_clauses(n)
    else:
        num_vars = encodings.php_amo_num_vars(n)
        clause_count = encodings.php_amo_clause_count(n)
        clauses = encodings.iter_php_amo_clauses(n)
    with _open_out(args.out) as out:
        formats.write_dimacs(out, num_vars, clauses, clause_count)
    return 0


def cmd_gen_proof(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise UsageError("proof generation needs n >= 2")
    module = proof_ours if args.style == "ours" else proof_cook
    lines = module.iter_proof_lines(args.n, emit_deletions=args.deletions)
    with _open_out(args.out) as out:
        formats.write_drat(out, lines)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    try:
        with open(args.cnf, "r", encoding="utf-8") as handle:
            formula = formats.parse_dimacs(handle.read())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read CNF {args.cnf}: {exc}")
    try:
        with open(args.proof, "r", encoding="utf-8") as handle:
            verdict = checker.verify(
                formula,
                formats.iter_drat_lines(handle),
                strict_deletions=args.strict_deletions,
            )
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read proof {args.proof}: {exc}")
    if verdict.status == checker.ACCEPTED:
        print("ACCEPTED")
        return 0
    if verdict.status == checker.REJECTED:
        print(f"REJECTED line {verdict.line}: {verdict.reason}")
    else:
        print("INCOMPLETE")
    return 1


def cmd_count(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise UsageError("proof counting needs n >= 2")
    if args.breakdown:
        breakdown = counts.BREAKDOWNS[args.style](args.n)
        for row in breakdown.per_iteration:
            print(f"k={row.k}: {row.subtotal}")
        print("empty: 1")
        print(breakdown.total)
    else:
        print(counts.TOTALS[args.style](args.n))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    if args.n_max < 2:
        raise UsageError("bench needs n_max >= 2")
    styles = [s.strip() for s in args.styles.split(",") if s.strip()]
    for style in styles:
        if style not in counts.TOTALS:
            raise UsageError(f"unknown style {style!r}")
    failures = 0
    try:
        with _open_out(args.out) as out:
            out.write("n," + ",".join(styles) + "\n")
            for n in range(2, args.n_max + 1):
                row = [str(counts.TOTALS[style](n)) for style in styles]
                out.write(f"{n}," + ",".join(row) + "\n")
                if n <= args.verify_up_to:
                    failures += _bench_verify(n, styles)
    except OSError as exc:
        raise UsageError(f"I/O failure: {exc}")
    return 1 if failures else 0


def _bench_verify(n: int, styles: list[str]) -> int:
    formula = encodings.php_standard(n)
    failures = 0
    for style in styles:
        module = proof_ours if style == "ours" else proof_cook
        start = time.perf_counter()
        verdict = checker.verify(formula, module.iter_proof_lines(n))
        elapsed = time.perf_counter() - start
        print(
            f"verify n={n} style={style}: {verdict.status} in {elapsed:.2f}s",
            file=sys.stderr,
        )
        if not verdict.accepted:
            failures += 1
    return failures


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pigeonproof",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-cnf", help="write a pigeonhole CNF in DIMACS")
    p.add_argument("n", type=_positive)
    p.add_argument("--encoding", choices=("standard", "amo"), default="standard")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_gen_cnf)

    p = sub.add_parser("gen-proof", help="write a DRAT refutation")
    p.add_argument("n", type=_positive)
    p.add_argument("--style", choices=("ours", "cook"), default="ours")
    p.add_argument("--deletions", action="store_true", help="emit deletion lines")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen_proof)

    p = sub.add_parser("check", help="verify a DRAT proof against a CNF")
    p.add_argument("cnf")
    p.add_argument("proof")
    p.add_argument("--strict-deletions", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count", help="proof length from the closed forms")
    p.add_argument("n", type=_positive)
    p.add_argument("--style", choices=("ours", "cook"), default="ours")
    p.add_argument("--breakdown", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bench", help="proof-length comparison as CSV")
    p.add_argument("n_max", type=_positive)
    p.add_argument("--styles", default="ours,cook")
    p.add_argument(
        "--verify-up-to",
        type=int,
        default=0,
        help="also generate and verify both proofs for n up to this bound",
    )
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 2


if __name__ == "__main__":
    sys.exit(main())
