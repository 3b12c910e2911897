"""Command line interface.

    sphere-spectra table  --n 3 --k 1 --family symmetric --operator higher-spin --jmax 0 --format csv
    sphere-spectra eigen  --n 5 --k 1 --family form --operator TTstar --j 0 --q 0
    sphere-spectra verify --suite all --n-range 3..9 --k-max 3 --l-max 3 --jmax 10

Exit codes: 0 ok, 1 usage error, 2 domain error, 3 verification failure,
4 pole encountered.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import closed_form as cf
from .errors import DomainError, PoleError, StructuralError
from .tables import OPERATORS, Request, evaluator, render_document, table_rows
from .verify import SUITES, run_suite
from .weights import FAMILIES, BundleSpec, IsotypicLabel, check_label

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY, EXIT_POLE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI or a comma list, got {text!r}")


def _add_bundle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="sphere dimension")
    p.add_argument("--k", type=int, required=True, help="tensor valence")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--chirality", choices=("+", "-"), help="even n only (default +)")
    p.add_argument("--operator", choices=OPERATORS, required=True)
    p.add_argument("--order-2r", type=_fraction, help="intertwinor order 2r (required for Z and D-odd)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sphere-spectra", description="Exact spectra of higher spin and odd-order operators on S^n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="full spectrum table")
    _add_bundle_args(t)
    t.add_argument("--jmax", type=int, required=True)
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.add_argument("--source", choices=("closed-form", "engine"), default="closed-form")
    t.add_argument("--workers", type=int, default=1, help="parallel processes over j-blocks")
    t.add_argument("--strict", action="store_true", help="emit nothing if a pole is hit")
    t.add_argument("--out", help="write to this path instead of standard output")

    e = sub.add_parser("eigen", help="one eigenvalue")
    _add_bundle_args(e)
    e.add_argument("--j", type=int, required=True)
    e.add_argument("--q", type=int)
    e.add_argument("--eps", type=int, choices=(1, -1), help="odd n only (default +1)")
    e.add_argument("--float", action="store_true", help="also print a decimal rendering")

    v = sub.add_parser("verify", help="run cross-check suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--n-range", type=_n_range, default=_n_range("3..9"))
    v.add_argument("--k-max", type=int, default=3)
    v.add_argument("--l-max", type=int, default=3)
    v.add_argument("--jmax", type=int, default=10)
    v.add_argument("--out")
    return parser


def _bundle(args) -> BundleSpec:
    chirality = None
    if args.n % 2 == 0:
        chirality = args.chirality or "+"
    elif args.chirality:
        raise DomainError("odd n carries no chirality")
    return BundleSpec(args.n, args.k, args.family, chirality)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    if args.jmax < 0:
        raise UsageError("--jmax must be >= 0")
    req = Request(_bundle(args), args.operator, args.order_2r, args.source)
    rows, poles = table_rows(req, args.jmax, args.format, workers=args.workers)
    if poles and args.strict:
        print(f"pole encountered in {poles} entries", file=sys.stderr)
        return EXIT_POLE
    _emit(render_document(req, rows, args.format), args.out)
    return EXIT_POLE if poles else EXIT_OK


def _float_value(req: Request, lab: IsotypicLabel, exact: Fraction) -> float:
    b = req.bundle
    if req.operator == "Z":
        return cf.spectral_Z_float(b.n, b.k, lab.j, float(req.order_2r), lab.q if b.k else None, lab.eps)
    return float(exact)


def cmd_eigen(args) -> int:
    b = _bundle(args)
    req = Request(b, args.operator, args.order_2r)
    q = args.q
    if b.has_q and q is None:
        if b.q_max:
            raise UsageError("--q is required for this bundle")
        q = 0
    eps = args.eps
    if b.odd and eps is None:
        eps = 1
    lab = IsotypicLabel(args.j, q, eps)
    check_label(b, lab)
    value = evaluator(req)(lab)
    print(f"{value.numerator}/{value.denominator}")
    if args.float:
        print(repr(_float_value(req, lab, value)))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(name, args.n_range, args.k_max, args.l_max, args.jmax) for name in names]
    doc = {"passed": all(r["passed"] for r in reports), "suites": reports}
    _emit(json.dumps(doc, indent=1, sort_keys=True) + "\n", args.out)
    return EXIT_OK if doc["passed"] else EXIT_VERIFY


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    handler = {"table": cmd_table, "eigen": cmd_eigen, "verify": cmd_verify}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PoleError as exc:
        print(f"pole: {exc}", file=sys.stderr)
        return EXIT_POLE
    except (DomainError, StructuralError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
