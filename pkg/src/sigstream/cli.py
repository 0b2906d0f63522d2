"""Command-line entry point: ``sigstream compute | oracle | demo-wiggly``."""
from __future__ import annotations

import argparse
import os
import sys

from . import io as sio
from .demo import MIN_SAMPLES, run_demo
from .features import extract_features
from .oracle import (
    QuadratureConfig,
    format_rational,
    iterated_rs,
    parse_poly_spec,
    poly_iterated_integral,
)
from .paths import CONSTRUCTIONS, build_linear
from .tensor_words import parse_word, validate_word

LEVEL_ENV = "SIGSTREAM_LEVEL"
DEFAULT_LEVEL = 3


def _default_level() -> int:
    raw = os.environ.get(LEVEL_ENV)
    if raw is None:
        return DEFAULT_LEVEL
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"sigstream: {LEVEL_ENV}={raw!r} is not an integer") from None


def _word_arg(text: str):
    try:
        word = parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not word:
        raise argparse.ArgumentTypeError("word must be non-empty")
    return word


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigstream",
        description="Truncated path-signature features for discrete data streams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="signature features of one or more stream files")
    p.add_argument("inputs", nargs="+", help="stream files: timestamp column then value columns")
    p.add_argument("--construction", choices=sorted(CONSTRUCTIONS), default="linear")
    p.add_argument("--level", "-N", type=int, default=None,
                   help=f"truncation level >= 1 (default ${LEVEL_ENV} or {DEFAULT_LEVEL})")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", default=None, help="output file; stdout when omitted")

    p = sub.add_parser("oracle", help="one iterated integral by quadrature or exact integration")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("input", nargs="?", help="sampled stream file (linear path of the value columns)")
    src.add_argument("--poly", help='polynomial path, e.g. "x1=t; x2=t^2; domain=[0,1]"')
    p.add_argument("--word", required=True, type=_word_arg, help="comma-separated letters, e.g. 2,1,2")
    p.add_argument("--mesh", type=int, default=None,
                   help="resample the sampled path onto this many uniform cells")

    p = sub.add_parser("demo-wiggly", help="train and score the smooth/wiggly centroid demo")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    return parser


def _cmd_compute(args, parser) -> int:
    level = args.level if args.level is not None else _default_level()
    if level < 1:
        parser.error(f"--level must be at least 1, got {level}")
    features = []
    for name in args.inputs:
        stream = sio.read_stream(name)
        features.append(extract_features(stream, args.construction, level))
    write = sio.write_json if args.format == "json" else sio.write_csv
    if args.output is None:
        write(features, sys.stdout)
    else:
        with open(args.output, "w", newline="") as fh:
            write(features, fh)
    return 0


def _cmd_oracle(args, parser) -> int:
    if args.poly is not None:
        if args.mesh is not None:
            parser.error("--mesh applies to sampled input only")
        path = parse_poly_spec(args.poly)
        validate_word(args.word, path.dimension)
        print(format_rational(poly_iterated_integral(path, args.word)))
        return 0
    if args.mesh is not None and args.mesh < 1:
        parser.error(f"--mesh must be positive, got {args.mesh}")
    path = build_linear(sio.read_stream(args.input))
    validate_word(args.word, path.dimension)
    if len(path) < 2 and args.mesh is None:
        raise ValueError("sampled mode needs at least two rows (or --mesh)")
    cfg = QuadratureConfig(args.mesh) if args.mesh is not None else None
    value = iterated_rs(path, args.word, cfg)
    cells = args.mesh if args.mesh is not None else len(path) - 1
    print(f"{value!r} mesh={cells}")
    return 0


def _cmd_demo(args, parser) -> int:
    if args.samples < MIN_SAMPLES:
        parser.error(f"--samples must be at least {MIN_SAMPLES}, got {args.samples}")
    result = run_demo(args.samples, args.seed)
    print(f"train={result.n_train} holdout={result.n_holdout} seed={args.seed}")
    print(f"accuracy={result.accuracy:.4f}")
    return 0


COMMANDS = {"compute": _cmd_compute, "oracle": _cmd_oracle, "demo-wiggly": _cmd_demo}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except (ValueError, OSError) as exc:
        print(f"sigstream {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
