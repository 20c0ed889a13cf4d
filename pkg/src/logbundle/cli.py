"""Command line front end.

Subcommands: analyze, sweep, construct, plot, compare.  Exit codes:
0 success, 2 invalid input, 3 degree bound exceeded, 4 unsupported
operation.  Reports are deterministic; wall-clock time goes to stderr
only, never into the output files.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .constructions import FAMILY_IDS, named_example
from .geometry import Arrangement
from .io_formats import (
    ParseError,
    dump_json,
    dumps_json,
    object_to_json,
    parse_input,
    parse_rational,
)
from .plotting import render_arrangement
from .report import build_compare, build_report, build_sweep
from .resolution import DegreeBoundExceeded, JacobianNotFinite

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGREE = 3
EXIT_UNSUPPORTED = 4


def _load_raw(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON in {path}: {e}") from None


def cmd_analyze(args) -> int:
    data = _load_raw(args.input)
    obj = parse_input(data)
    report = build_report(obj, data)
    dump_json(report, args.output)
    return EXIT_OK


def _sweep_values(start: Fraction, stop: Fraction, step: Fraction):
    if step <= 0:
        raise ParseError("step must be positive")
    if stop < start:
        raise ParseError("empty sweep range")
    values = []
    v = start
    while v <= stop:
        values.append(v)
        v += step
    return values


def cmd_sweep(args) -> int:
    if args.family not in FAMILY_IDS:
        raise ParseError(f"unknown family id: {args.family}")
    values = _sweep_values(
        parse_rational(args.start), parse_rational(args.stop), parse_rational(args.step)
    )
    result = build_sweep(
        args.family,
        args.param,
        values,
        lambda v: named_example(args.family, {args.param: v}),
    )
    dump_json(result, args.output)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.family not in FAMILY_IDS:
        raise ParseError(f"unknown family id: {args.family}")
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise ParseError("need both --a and --b")
        if args.params:
            raise ParseError("use either --a/--b or --params, not both")
        params = {"a": args.a, "b": args.b}
    elif args.params:
        try:
            raw = json.loads(args.params)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid params JSON: {e}") from None
        if not isinstance(raw, dict):
            raise ParseError("params must be a JSON object")
        params = {k: parse_rational(v) for k, v in raw.items()}
    else:
        params = {}
    try:
        obj = named_example(args.family, params)
    except KeyError as e:
        raise ParseError(
            f"family {args.family} is missing parameter {e.args[0]!r}"
        ) from None
    except ValueError as e:
        raise ParseError(str(e)) from None
    dump_json(object_to_json(obj), args.output)
    return EXIT_OK


def cmd_plot(args) -> int:
    data = _load_raw(args.input)
    obj = parse_input(data)
    if not isinstance(obj, Arrangement):
        print("error: plot supports arrangements only", file=sys.stderr)
        return EXIT_UNSUPPORTED
    report = build_report(obj, data)
    render_arrangement(obj, report, args.output, parse_rational(args.box))
    return EXIT_OK


def cmd_compare(args) -> int:
    a = parse_input(_load_raw(args.path_a))
    b = parse_input(_load_raw(args.path_b))
    if not isinstance(a, Arrangement) or not isinstance(b, Arrangement):
        print("error: compare supports arrangements only", file=sys.stderr)
        return EXIT_UNSUPPORTED
    sys.stdout.write(dumps_json(build_compare(a, b)))
    return EXIT_OK


def _parser():
    parser = argparse.ArgumentParser(
        prog="logbundle",
        description="Classify plane curves and line arrangements by their "
                    "logarithmic bundle and splitting behavior.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one input file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="classify a family over a parameter grid")
    p.add_argument("--family", required=True)
    p.add_argument("--param", required=True)
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="stop", required=True)
    p.add_argument("--step", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("construct", help="emit a named family instance as JSON")
    p.add_argument("--family", required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--params", default=None, help="JSON object of parameters")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("plot", help="render an arrangement to SVG")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--box", default="5", help="half-width of the view box")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("compare", help="compare two arrangements")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    started = time.monotonic()
    try:
        code = args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_PARSE
    except JacobianNotFinite as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_PARSE
    except DegreeBoundExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_DEGREE
    finally:
        elapsed = int((time.monotonic() - started) * 1000)
        print(f"elapsed {elapsed} ms", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
