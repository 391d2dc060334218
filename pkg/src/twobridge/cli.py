"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 internal consistency failure,
4 resource limit.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .catalog import CatalogError, default_catalog, emit_table, load_catalog, reproduce_table
from .diagram import build_diagram, format_pd, orient
from .kauffman import F_of, L_matrix, TranscriptionError, kauffman_bound
from .legendrian import ORIENTATIONS, NotLegendrianFormError, TbMismatchError, max_tb, render_front
from .rational import TrivialKnotError, format_word, legendrian_form, parse_fraction, parse_word
from .skein import CrossingLimitError, skein_kauffman_L
from . import verify as vf

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONSISTENCY = 3
EXIT_LIMIT = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _word_from_args(args) -> tuple:
    if (args.fraction is None) == (args.word is None):
        raise CliError("give exactly one of a fraction p/q or -t a1,a2,...", EXIT_INPUT)
    if args.word is not None:
        return parse_word(args.word)
    return legendrian_form(parse_fraction(args.fraction))


def cmd_form(args, out) -> int:
    f = parse_fraction(args.fraction)
    print(format_word(legendrian_form(f)), file=out)
    return EXIT_OK


def cmd_kauffman(args, out) -> int:
    word = _word_from_args(args)
    flip = args.orientation == "flipped"
    if args.pd:
        print(format_pd(orient(build_diagram(word), flip_second=flip)), file=out)
        return EXIT_OK
    L = L_matrix(word)
    if args.oracle:
        try:
            oracle = skein_kauffman_L(build_diagram(word))
        except CrossingLimitError as exc:
            raise CliError(str(exc), EXIT_LIMIT) from exc
        if oracle != L:
            raise CliError(f"matrix formula {L} disagrees with skein recursion {oracle}", EXIT_CONSISTENCY)
    poly = F_of(word, flip_second=flip) if args.polynomial == "F" else L
    if args.bound:
        print(kauffman_bound(poly), file=out)
    else:
        print(poly, file=out)
    return EXIT_OK


def cmd_tb(args, out) -> int:
    f = parse_fraction(args.fraction)
    orientation = args.orientation if f.p % 2 == 0 else None
    res = max_tb(f, orientation=orientation)
    line = f"tb={res.tb} mirror={res.tb_mirror}"
    if res.orientation:
        line += f" orientation={res.orientation}"
    print(line, file=out)
    return EXIT_OK


def cmd_front(args, out) -> int:
    word = _word_from_args(args)
    out.write(render_front(word, args.format))
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.catalog:
        try:
            with open(args.catalog, "rb") as fh:
                records = load_catalog(fh)
        except OSError as exc:
            raise CliError(f"cannot read catalog: {exc}", EXIT_INPUT) from exc
    else:
        records = default_catalog()
    report = reproduce_table(records, workers=args.workers)
    out.write(emit_table(report, args.format))
    return EXIT_OK if report.ok else EXIT_CONSISTENCY


def cmd_verify(args, out) -> int:
    n = args.max_sum
    if n < 1:
        raise CliError("--max-sum must be positive", EXIT_INPUT)
    results = [vf.check_constants(), vf.check_lemma(n), vf.check_theorem(n)]
    try:
        results.append(vf.check_oracle(n))
    except ValueError as exc:
        for r in results:
            print(f"{r.name}: {r.checked} checked, {len(r.failures)} failed", file=out)
        raise CliError(str(exc), EXIT_LIMIT) from exc
    failed = False
    for r in results:
        print(f"{r.name}: {r.checked} checked, {len(r.failures)} failed", file=out)
        for w in r.failures[:10]:
            print(f"  failure: {w}", file=sys.stderr)
        failed |= not r.ok
    if failed:
        return EXIT_CONSISTENCY
    print("all checks passed", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Maximal Thurston-Bennequin numbers of two-bridge knots and links.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def input_args(p):
        p.add_argument("fraction", nargs="?", help="two-bridge fraction p/q")
        p.add_argument("-t", "--twist", dest="word", help="twist word a1,a2,...")

    def orientation_arg(p):
        p.add_argument("--orientation", choices=ORIENTATIONS, default=ORIENTATIONS[0],
                       help="orientation of the second component of a two-component link")

    p = sub.add_parser("form", help="Legendrian rational form of a fraction")
    p.add_argument("fraction")
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("kauffman", help="L or F polynomial of T(a1,...,an)")
    input_args(p)
    p.add_argument("-P", "--polynomial", choices=("L", "F"), default="F")
    p.add_argument("--oracle", action="store_true", help="cross-check L by skein recursion")
    p.add_argument("--bound", action="store_true", help="print min-deg_a - 1 instead of the polynomial")
    p.add_argument("--pd", action="store_true", help="print the diagram's PD code instead")
    orientation_arg(p)
    p.set_defaults(func=cmd_kauffman)

    p = sub.add_parser("tb", help="maximal tb of a two-bridge link and of its mirror")
    p.add_argument("fraction")
    orientation_arg(p)
    p.set_defaults(func=cmd_tb)

    p = sub.add_parser("front", help="render the Legendrian front")
    input_args(p)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.set_defaults(func=cmd_front)

    p = sub.add_parser("table", help="reproduce the table of maximal tb values")
    p.add_argument("--catalog", help="catalog TSV (default: shipped table)")
    p.add_argument("--format", choices=("text", "markdown", "csv"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the lemma, oracle and consistency checks")
    p.add_argument("--max-sum", type=int, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except TrivialKnotError as exc:
        print(f"error: trivial knot: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CatalogError, NotLegendrianFormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TbMismatchError, TranscriptionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except CrossingLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
