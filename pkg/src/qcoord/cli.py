"""Command-line interface.

    qcoord verify <suite>                 run a verification suite (or "all")
    qcoord catalog export [PATH]          write the catalog as JSON
    qcoord poset                          containment order of the H-primes
    qcoord primitive --w 321,321 [...]    generators of a primitive ideal

Exit status: 0 success, 1 verification failure, 2 usage or integrity error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .catalog import CatalogIntegrityError, ParameterError, catalog_load, primitive_ideal_generators
from .export import dumps, export_json, poset_json, report_json
from .ideals import BoundExceeded, build_hprime, containment_poset, parse_w, w_key
from .notation import NotationError
from .suites import SUITES, UsageError, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _globals(defaults: bool) -> argparse.ArgumentParser:
    # Shared flags are accepted before or after the subcommand; only the
    # top-level copy carries defaults so a subcommand never overwrites them.
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--n", type=int, choices=(2, 3), default=d(3), help="matrix size (default 3)")
    p.add_argument("--degree-bound", type=int, default=d(5), metavar="D", help="degree bound for membership (default 5)")
    p.add_argument("--format", choices=("text", "json"), default=d("text"), help="output format")
    return p


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    return value


def build_parser() -> argparse.ArgumentParser:
    shared = _globals(defaults=False)
    parser = argparse.ArgumentParser(prog="qcoord", description="Exact verification for quantum 3x3 matrices and their primitive ideals.", parents=[_globals(defaults=True)])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--output", metavar="PATH", help="also write the JSON report to PATH")
    v.add_argument("--verbose", action="store_true", help="list passing checks too")

    c = sub.add_parser("catalog", parents=[shared], help="catalog operations")
    csub = c.add_subparsers(dest="catalog_command", required=True)
    ce = csub.add_parser("export", parents=[shared], help="export the catalog as JSON")
    ce.add_argument("path", nargs="?", help="output file (default: standard output)")

    sub.add_parser("poset", parents=[shared], help="containment order of the 36 H-primes")

    pr = sub.add_parser("primitive", parents=[shared], help="generators of a primitive ideal")
    pr.add_argument("--w", required=True, help="the pair as w+,w- e.g. 321,321")
    pr.add_argument("--alpha", type=_rational)
    pr.add_argument("--beta", type=_rational)
    pr.add_argument("--gamma", type=_rational)
    pr.add_argument("--sl", action="store_true", help="the O_q(SL_3) variant")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _require_n3(args, what: str) -> None:
    if args.n != 3:
        raise UsageError(f"{what} is defined for n = 3 only")


def cmd_verify(args) -> int:
    report = verify_suite(args.suite, args.degree_bound, args.n)
    if args.output:
        export_json("report", report, args.output)
    _emit(dumps(report_json(report)) if args.format == "json" else report.render_text(args.verbose))
    return report.exit_code


def cmd_catalog(args) -> int:
    _require_n3(args, "the catalog")
    text = export_json("catalog", catalog_load(), args.path)
    if args.path is None:
        _emit(text)
    elif args.format == "text":
        _emit(f"wrote {len(catalog_load())} entries to {args.path}")
    return EXIT_OK


def cmd_poset(args) -> int:
    _require_n3(args, "the containment order")
    poset = containment_poset(args.degree_bound)
    if args.format == "json":
        _emit(dumps(poset_json(poset)))
        return EXIT_OK
    lines = [f"{w} < {', '.join(sorted(vs))}" for w, vs in poset.covers().items() if vs]
    lines.append(f"{len(poset.proper())} proper containments, {sum(map(len, poset.covers().values()))} covering relations")
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_primitive(args) -> int:
    _require_n3(args, "the primitive ideal catalog")
    try:
        key = w_key(parse_w(args.w))
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad --w value {args.w!r}: {exc}") from exc
    params = {k: getattr(args, k) for k in ("alpha", "beta", "gamma") if getattr(args, k) is not None}
    gens = primitive_ideal_generators(key, params or None, sl=args.sl)
    if args.format == "json":
        data = {
            "w": key,
            "variant": "SL3" if args.sl else "GL3",
            "parameters": {k: str(v) for k, v in sorted(params.items())},
            "generators": [{"text": g.render(), "element": g.to_json()} for g in gens],
        }
        _emit(dumps(data))
    else:
        k = len(build_hprime(key).generators)
        lines = [f"Q_({key}) generators:"] + ([f"  {g.render()}" for g in gens[:k]] or ["  (none)"])
        lines += ["primitive generators:"] + [f"  {g.render()}" for g in gens[k:]]
        _emit("\n".join(lines))
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "catalog": cmd_catalog, "poset": cmd_poset, "primitive": cmd_primitive}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParameterError, NotationError, BoundExceeded) as exc:
        print(f"qcoord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CatalogIntegrityError as exc:
        print(f"qcoord: catalog integrity error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qcoord: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
