"""Command-line front end.

Exit codes: 0 success (or tiling possible), 1 tiling impossible,
2 usage/parse error, 3 validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bundled
from .circuit import CertificateError, certificate, dump_network, network_from_dissection, solve
from .construct import NotTileableError, cf_tiling, decide, find_cf
from .dissection import DissectionSyntaxError, NotSimilar, read_dissection, similarity, to_svg, validate, write_dissection
from .exactnum import NumberParseError, QuadExt, format_number, parse_number, to_decimal
from .polynomial import format_coefficients, format_poly, parse_poly

EXIT_OK, EXIT_IMPOSSIBLE, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _approx(x) -> str:
    return format(to_decimal(x, 15), "g")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    if path.startswith("@"):
        try:
            return bundled.text(path[1:])
        except KeyError as exc:
            raise _UsageError(exc.args[0]) from None
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    try:
        return read_dissection(_read_text(path))
    except DissectionSyntaxError as exc:
        raise _UsageError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _number(text: str) -> QuadExt:
    try:
        return parse_number(text)
    except NumberParseError as exc:
        raise _UsageError(str(exc)) from None


def cmd_decide(args) -> int:
    if (args.value is None) == (args.poly is None):
        raise _UsageError("decide needs exactly one of VALUE or --poly")
    if args.poly is not None:
        try:
            p = parse_poly(args.poly)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        try:
            dec = decide(p, root=args.root)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    else:
        dec = decide(_number(args.value))
    line = dec.report()
    if args.approx:
        if dec.verdict == "impossible" and isinstance(dec.witness, QuadExt):
            line += f" approx={_approx(dec.witness)}"
        elif dec.ratio is not None:
            line += f" ratio={format_number(dec.ratio)} approx={_approx(dec.ratio)}"
    print(line)
    return EXIT_IMPOSSIBLE if dec.verdict == "impossible" else EXIT_OK


def cmd_construct(args) -> int:
    x = _number(args.value)
    if args.cf:
        try:
            expansion = find_cf(x)
        except NotTileableError as exc:
            print(f"IMPOSSIBLE witness={format_number(exc.witness)}")
            return EXIT_IMPOSSIBLE
        d = cf_tiling(x, expansion)
        note = f"ratio {format_number(x)}, expansion {','.join(str(c) for c in expansion)}"
    else:
        dec = decide(x)
        if dec.verdict != "possible":
            print(dec.report())
            return EXIT_IMPOSSIBLE
        d = dec.dissection
        note = f"ratio {format_number(x)}"
    _emit(write_dissection(d, comment=note), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    d = _load(args.file)
    bad = validate(d)
    if bad is not None:
        print(f"INVALID {bad.kind}: {bad}")
        return EXIT_INVALID
    rep = similarity(d)
    if isinstance(rep, NotSimilar):
        print(f"NOT-SIMILAR {rep}")
        return EXIT_INVALID
    expected = d.target.h / d.target.w
    got = solve(network_from_dissection(d)).resistance
    if got != expected:
        print(f"INVALID circuit: resistance {format_number(got)} != {format_number(expected)}")
        return EXIT_INVALID
    line = f"OK ratio={format_number(rep.ratio)} parts={len(d)}"
    if args.approx:
        line += f" approx={_approx(rep.ratio)}"
    print(line)
    return EXIT_OK


def cmd_resistance(args) -> int:
    d = _load(args.file)
    bad = validate(d)
    if bad is not None:
        print(f"INVALID {bad.kind}: {bad}")
        return EXIT_INVALID
    net = network_from_dissection(d)
    if args.network:
        sys.stdout.write(dump_network(net))
    r = solve(net).resistance
    line = f"resistance={format_number(r)}"
    if args.approx:
        line += f" approx={_approx(r)}"
    print(line)
    return EXIT_OK


def cmd_certificate(args) -> int:
    d = _load(args.file)
    try:
        poly = certificate(d)
    except CertificateError as exc:
        print(f"INVALID {exc}")
        return EXIT_INVALID
    print(f"certificate={format_poly(poly)}")
    print(f"coefficients={format_coefficients(poly)}")
    return EXIT_OK


def cmd_svg(args) -> int:
    d = _load(args.file)
    bad = validate(d)
    if bad is not None:
        print(f"INVALID {bad.kind}: {bad}")
        return EXIT_INVALID
    if args.px <= 0:
        raise _UsageError("--px must be positive")
    _emit(to_svg(d, args.px), args.output)
    return EXIT_OK


def cmd_examples(args) -> int:
    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    for name in bundled.NAMES:
        path = out / f"{name}.tiling"
        path.write_text(bundled.text(name), encoding="utf-8")
        print(path)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="squaretile", description="Tile a square with similar rectangles, exactly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="decide whether ratio R admits a tiling")
    p.add_argument("value", nargs="?", help='ratio such as "1+1*sqrt(2)"')
    p.add_argument("--poly", help="integer minimal polynomial, coefficients lowest degree first")
    p.add_argument("--root", type=int, default=0, help="real root index for --poly (largest first)")
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", help="write a tiling for ratio R")
    p.add_argument("value")
    p.add_argument("-o", "--output")
    p.add_argument("--cf", action="store_true", help="use the continued-fraction cut construction")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a tiling file ('-' reads stdin, @NAME a bundled example)")
    p.add_argument("file")
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("resistance", help="circuit resistance of a tiling")
    p.add_argument("file")
    p.add_argument("--network", action="store_true", help="dump the network first")
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=cmd_resistance)

    p = sub.add_parser("certificate", help="integer polynomial vanishing at the ratio")
    p.add_argument("file")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("svg", help="render a tiling as SVG")
    p.add_argument("file")
    p.add_argument("--px", type=int, default=400)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("examples", help="write the bundled example tilings into DIRECTORY")
    p.add_argument("directory", nargs="?", default="examples")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
