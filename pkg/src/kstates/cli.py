"""``kstates`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 enumeration
cap exceeded (see ``KSTATES_MAX_CROSSINGS``).
"""

from __future__ import annotations

import argparse
import sys

from . import closed_forms as cf
from . import tables as tb
from . import verify as vf
from .diagram import TooManyCrossingsError, max_crossings, state_histogram, state_polynomial
from .polynomial import IntPolynomial
from .tangle import INF, build_two_bridge, parse_count

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

METHODS = ("closed", "recurrence", "classes", "enumerate")


class UsageError(Exception):
    pass


def _count(token: str):
    try:
        return parse_count(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(token: str) -> int:
    try:
        v = int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {token!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(token: str) -> int:
    v = _nonneg(token)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _both_inf(n, r) -> None:
    if n is INF and r is INF:
        raise UsageError("B(inf, inf) is not defined; at most one of n, r may be 'inf'")


def _finite_for_enumeration(n, r):
    if n is INF or r is INF:
        raise UsageError("enumeration needs finite n and r; use --method closed for 'inf'")


def _format_poly(p: IntPolynomial, fmt: str) -> str:
    return p.human() if fmt == "human" else p.coeff_string()


def cmd_poly(args) -> str:
    n, r = args.n, args.r
    _both_inf(n, r)
    if args.method == "enumerate":
        _finite_for_enumeration(n, r)
        poly = state_polynomial(build_two_bridge(n, r), workers=args.workers)
    elif args.method == "closed":
        poly = cf.b_nr(n, r)
    elif args.method == "recurrence":
        if n is INF:
            n, r = r, n
        poly = cf.b_nr_recurrence(n, r)
    else:
        if n is INF or r is INF:
            raise UsageError("the class decomposition needs finite n and r")
        poly = sum(cf.b_nr_classes(n, r), IntPolynomial())
    return _format_poly(poly, args.format)


def cmd_coeff(args) -> str:
    n, r, k = args.n, args.r, args.k
    _both_inf(n, r)
    if n is INF or r is INF:
        return str(cf.b_nr(n, r).coeff(k))
    return str(cf.coeff_formula(n, r, k))


def cmd_enumerate(args) -> str:
    n, r = args.n, args.r
    _both_inf(n, r)
    _finite_for_enumeration(n, r)
    hist = state_histogram(build_two_bridge(n, r), workers=args.workers)
    if args.histogram:
        return "\n".join(f"{k} {c}" for k, c in enumerate(hist) if c)
    return IntPolynomial(hist).coeff_string()


def _markdown(name: str, rows: list[list[int]]) -> str:
    width = max(len(row) for row in rows)
    header = "| " + " | ".join([tb.header_label(name).replace("\\", "\\\\")] +
                               [str(j) for j in range(width)]) + " |"
    rule = "|" + "|".join(["---"] + ["---:"] * width) + "|"
    lines = [header, rule]
    for n, row in enumerate(rows):
        cells = [str(n)] + [str(v) for v in row] + [""] * (width - len(row))
        lines.append("| " + " | ".join(cells).rstrip() + " |")
    return "\n".join(lines)


def cmd_table(args) -> str:
    spec = tb.TableSpec(args.name, rows=args.rows, cols=args.cols)
    rows = tb.render_table(spec)
    if args.format == "markdown":
        return _markdown(args.name, rows)
    sep = "\t" if args.format == "tsv" else ","
    return "\n".join(sep.join(str(v) for v in row) for row in rows)


def cmd_seq(args) -> str:
    values = tb.emit_sequence(args.name, args.terms, args.order, width=args.width)
    return tb.format_bfile(values, offset=args.offset)


def cmd_verify(args) -> tuple[str, int]:
    results = vf.run_all(args.max_n, args.max_r, seed=args.seed, strict_tables=args.strict_tables)
    lines = [res.line() for res in results]
    ok = all(res.passed for res in results)
    lines.append("all suites passed" if ok else "verification FAILED")
    return "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kstates",
        description="State polynomials of two-bridge knot shadows C(n, r).",
        epilog=f"KSTATES_MAX_CROSSINGS overrides the enumeration cap (now {max_crossings()}).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("poly", help="print the state polynomial of B(n, r)")
    p.add_argument("n", type=_count, help="half-twists, or 'inf'")
    p.add_argument("r", type=_count, help="half-twists, or 'inf'")
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--format", choices=("coeffs", "human"), default="coeffs")
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("coeff", help="number of states of B(n, r) with k circles")
    p.add_argument("n", type=_count)
    p.add_argument("r", type=_count)
    p.add_argument("k", type=_nonneg)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("enumerate", help="brute-force census over all 2^(n+r) states")
    p.add_argument("n", type=_count)
    p.add_argument("r", type=_count)
    p.add_argument("--histogram", action="store_true", help="print 'k count' lines")
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="render one of the integer tables")
    p.add_argument("name", choices=tb.TABLE_NAMES)
    p.add_argument("--rows", type=_positive, default=8)
    p.add_argument("--cols", type=_positive, default=8, help="columns of square tables")
    p.add_argument("--format", choices=("csv", "tsv", "markdown"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("seq", help="emit a table as b-file lines 'index value'")
    p.add_argument("name", choices=tb.TABLE_NAMES)
    p.add_argument("--terms", type=_positive, default=64)
    p.add_argument("--order", choices=tb.ORDERS, default="by-rows")
    p.add_argument("--offset", type=int, default=0, help="index of the first term")
    p.add_argument("--width", type=_positive, default=8, help="row width of square tables read by rows")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="run every cross-validation suite")
    p.add_argument("--max-n", type=_nonneg, default=7)
    p.add_argument("--max-r", type=_nonneg, default=7)
    p.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)
    p.add_argument("--strict-tables", action="store_true",
                   help="fail on known misprints in the published tables")
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(text: str) -> None:
    if text:
        sys.stdout.write(text + "\n")
    sys.stdout.flush()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"kstates: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooManyCrossingsError as exc:
        print(f"kstates: error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"kstates: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(out, tuple):
        text, code = out
        _emit(text)
        return code
    _emit(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
