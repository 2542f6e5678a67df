"""Command-line entry point: ``lynkit factorize|verify|enumerate|bench``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import BinaryIO, Callable

from . import bench, icfl, lyndon, oracle
from .core import NATURAL, AlphabetError, OrderedAlphabet, Span

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MODES = ("cfl", "cfl-in", "icfl", "icfl-recursive", "compact", "chains")


def _run_spans(runs: list[lyndon.CompactRun]) -> list[Span]:
    return [r.span for r in runs]


def _factor_spans(runs: list[lyndon.CompactRun]) -> list[Span]:
    return [s for r in runs for s in r.factor_spans()]


SPANNERS: dict[str, Callable[[bytes, OrderedAlphabet], list[Span]]] = {
    "cfl": lambda w, a: _factor_spans(lyndon.cfl(w, a)),
    "cfl-in": lambda w, a: _factor_spans(lyndon.cfl_in(w, a)),
    "icfl": lambda w, a: list(icfl.icfl_linear(w, a).spans),
    "icfl-recursive": lambda w, a: list(icfl.icfl_recursive(w, a).spans),
    "compact": lambda w, a: _run_spans(lyndon.compact_factors(w, a)),
    "chains": lambda w, a: lyndon.chain_spans(
        lyndon.chain_decompose(lyndon.compact_factors(w, a), a)
    ),
}


def factor_spans(word: bytes, mode: str, alphabet: OrderedAlphabet = NATURAL) -> list[Span]:
    return SPANNERS[mode](word, alphabet)


def split_lines(data: bytes) -> list[bytes]:
    if not data:
        return []
    lines = data.split(b"\n")
    if data.endswith(b"\n"):
        lines.pop()
    return lines


def _text(b: bytes) -> str:
    # latin-1 maps every byte to one code point, so records round-trip
    return b.decode("latin-1")


def _parse_order(order: str | None) -> OrderedAlphabet:
    if order is None:
        return NATURAL
    return OrderedAlphabet(os.fsencode(order))


def _err(msg: str) -> None:
    print(f"lynkit: {msg}", file=sys.stderr)


def _json_line(rec: dict) -> bytes:
    return (json.dumps(rec) + "\n").encode("ascii")


def cmd_factorize(args: argparse.Namespace, stdin: BinaryIO, out: BinaryIO) -> int:
    """Factorize each input line; ``out`` is a binary stream so bytes pass through."""
    try:
        alphabet = _parse_order(args.order)
    except AlphabetError as exc:
        _err(f"bad --order: {exc}")
        return EXIT_USAGE
    try:
        if args.file in (None, "-"):
            data = stdin.read()
        else:
            with open(args.file, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        _err(f"cannot read input: {exc}")
        return EXIT_USAGE

    delim = os.fsencode(args.delim)
    status = EXIT_OK
    for lineno, word in enumerate(split_lines(data), 1):
        try:
            spans = factor_spans(word, args.mode, alphabet)
        except (ValueError, icfl.InvariantError) as exc:
            status = EXIT_FAIL
            if args.json:
                out.write(_json_line({"line": lineno, "error": str(exc)}))
            else:
                _err(f"line {lineno}: {exc}")
                out.write(b"\n")
            continue
        factors = [word[s:e] for s, e in spans]
        if args.json:
            rec = {
                "word_len": len(word),
                "mode": args.mode,
                "spans": [list(s) for s in spans],
                "factors": [_text(f) for f in factors],
            }
            out.write(_json_line(rec))
        else:
            out.write(delim.join(factors) + b"\n")
    out.flush()
    return status


def _alphabet_arg(args: argparse.Namespace) -> OrderedAlphabet:
    return OrderedAlphabet(os.fsencode(args.alphabet))


def cmd_verify(args: argparse.Namespace, out) -> int:
    try:
        alphabet = _alphabet_arg(args)
        reports = oracle.verify_claims(args.maxlen, alphabet, args.bound, args.workers)
    except (AlphabetError, oracle.EnumerationBoundError) as exc:
        _err(f"refused: {exc}")
        return EXIT_USAGE
    failed = [r for r in reports if not r.passed]
    if args.json:
        for r in reports:
            out.write(json.dumps(r.to_record()) + "\n")
    else:
        for r in failed:
            out.write(f"FAIL {_text(r.word)}: {', '.join(r.failures)}\n")
    summary = f"{len(reports)} words checked, {len(failed)} failures"
    print(summary, file=sys.stderr if args.json else out)
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_enumerate(args: argparse.Namespace, out: BinaryIO) -> int:
    try:
        alphabet = _alphabet_arg(args)
        if args.word is not None:
            universe = [os.fsencode(args.word)]
            alphabet.check(universe[0])
        else:
            if args.maxlen is None:
                _err("enumerate needs --maxlen or --word")
                return EXIT_USAGE
            if args.maxlen > args.bound:
                raise oracle.EnumerationBoundError(
                    f"maxlen {args.maxlen} exceeds enumeration bound {args.bound}"
                )
            universe = oracle.words(alphabet, args.maxlen)
        for w in universe:
            ilfs = oracle.enumerate_ilfs(w, alphabet, args.bound)
            marks = [oracle.brute_has_border_property(f) for f in ilfs]
            if args.json:
                rec = {
                    "word": _text(w),
                    "factorizations": [[_text(m) for m in f.factors] for f in ilfs],
                    "border_property": marks,
                }
                out.write(_json_line(rec))
            else:
                delim = os.fsencode(args.delim)
                for f, mark in zip(ilfs, marks):
                    out.write(w + b"\t" + delim.join(f.factors) + (b" *\n" if mark else b"\n"))
    except (AlphabetError, oracle.EnumerationBoundError, ValueError) as exc:
        _err(f"refused: {exc}")
        return EXIT_USAGE
    out.flush()
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, out) -> int:
    if args.size < 1:
        _err("--size must be at least 1")
        return EXIT_USAGE
    rows = bench.run_bench(args.size, args.pattern, args.repetitions, args.seed)
    if args.json:
        for r in rows:
            out.write(json.dumps(r.__dict__) + "\n")
        return EXIT_OK
    out.write(f"pattern={args.pattern}\n")
    out.write(f"{'size':>12} {'seconds':>10} {'ratio':>7} {'compact':>9} {'icfl':>9}\n")
    for r in rows:
        ratio = f"{r.ratio:7.2f}" if r.ratio is not None else f"{'-':>7}"
        out.write(
            f"{r.size:>12} {r.seconds:10.4f} {ratio} {r.compact_factors:>9} {r.icfl_factors:>9}\n"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lynkit", description="Lyndon and inverse Lyndon factorizations of byte strings."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorize", help="factorize each input line")
    p.add_argument("--mode", choices=MODES, default="icfl")
    p.add_argument("--order", help="symbols smallest to largest, e.g. 'dcba'")
    p.add_argument("--json", action="store_true", help="line-delimited JSON records")
    p.add_argument("--delim", default="|", help="factor separator in text mode")
    p.add_argument("file", nargs="?", help="input file (default: standard input)")

    for name, help_ in (
        ("verify", "exhaustively check the ICFL claims on small words"),
        ("enumerate", "list all inverse Lyndon factorizations of small words"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--maxlen", type=int, required=(name == "verify"))
        p.add_argument("--alphabet", required=True, help="symbols smallest to largest")
        p.add_argument("--bound", type=int, default=oracle.DEFAULT_BOUND)
        p.add_argument("--json", action="store_true")
        if name == "verify":
            p.add_argument("--workers", type=int, default=1)
        else:
            p.add_argument("--word", help="enumerate this single word instead")
            p.add_argument("--delim", default="|")

    p = sub.add_parser("bench", help="time compact factors + ICFL at 1x, 2x, 4x size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--pattern", choices=bench.PATTERNS, default="random")
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.command == "factorize":
        return cmd_factorize(args, sys.stdin.buffer, sys.stdout.buffer)
    if args.command == "verify":
        return cmd_verify(args, out)
    if args.command == "enumerate":
        return cmd_enumerate(args, sys.stdout.buffer)
    return cmd_bench(args, out)


if __name__ == "__main__":
    sys.exit(main())
