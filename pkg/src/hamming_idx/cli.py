"""Command-line front end.

Exit codes: 0 success, 1 bench mismatch, 2 malformed HAM1 stream,
64 usage error, 74 I/O failure.
"""

from __future__ import annotations

import argparse
import sys

from . import channel, report, stream
from .core import MAX_K, MIN_K, CodeParams, Form, index_set
from .errors import FormatError, ParameterError

EX_OK = 0
EX_MISMATCH = 1
EX_FORMAT = 2
EX_USAGE = 64
EX_IOERR = 74


class UsageError(Exception):
    pass


class IOFailure(Exception):
    def __init__(self, path, err):
        super().__init__(f"{path}: {err.strerror or err}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as err:
        raise IOFailure(path, err) from err


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as err:
        raise IOFailure(path, err) from err


def _write_text(path: str, text: str) -> None:
    _write(path, text.encode())


def _k(value: str) -> int:
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid k {value!r}") from None
    if not MIN_K <= k <= MAX_K:
        raise argparse.ArgumentTypeError(f"k must be in {MIN_K}..{MAX_K}")
    return k


def _prob(value: str) -> float:
    try:
        p = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid probability {value!r}") from None
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError("probability must be in [0, 1]")
    return p


def _seed(value: str) -> int:
    try:
        s = int(value, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {value!r}") from None
    if not 0 <= s < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return s


def _positive(value: str) -> int:
    try:
        v = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid count {value!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


SUM_FORM_CHOICES = ("t", "u", "floor")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamming-idx", description="Matrix-free Hamming codec.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("encode", help="frame a file as HAM1 codewords")
    p.add_argument("--k", type=_k, required=True)
    p.add_argument("--form", choices=SUM_FORM_CHOICES, default="u")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)

    p = sub.add_parser("decode", help="correct and unframe a HAM1 stream")
    p.add_argument("--form", choices=SUM_FORM_CHOICES, default="u")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--report")

    p = sub.add_parser("corrupt", help="flip at most one bit per block of a HAM1 stream")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--block", type=int)
    p.add_argument("--bit", type=int)
    p.add_argument("--prob", type=_prob)
    p.add_argument("--seed", type=_seed)

    p = sub.add_parser("tables", help="print one index set")
    p.add_argument("--k", type=_k, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--form", choices=("s", "t", "u", "floor"), default="u")

    p = sub.add_parser("bench", help="predicted vs measured operation counts")
    p.add_argument("--k", type=_k, required=True)
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--form", choices=SUM_FORM_CHOICES, default="t",
                   help="sum form for the core passes (default: t)")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--csv", help="write a k = 2..K sweep as CSV")
    p.add_argument("--figure", help="render the k = 2..K sweep to an image file")
    return parser


def _channel_spec(args) -> channel.ChannelSpec:
    exact = args.block is not None or args.bit is not None
    random = args.prob is not None or args.seed is not None
    if exact == random:
        raise UsageError("corrupt: give either --block and --bit, or --prob and --seed")
    if exact:
        if args.block is None or args.bit is None:
            raise UsageError("corrupt: --block and --bit go together")
        return channel.FlipExact(args.block, args.bit)
    if args.prob is None or args.seed is None:
        raise UsageError("corrupt: --prob and --seed go together")
    return channel.PerBlockBernoulli(args.prob, args.seed)


def cmd_encode(args) -> int:
    data = _read(args.input)
    _write(args.output, stream.encode_stream(data, CodeParams(args.k), Form(args.form)))
    return EX_OK


def cmd_decode(args) -> int:
    payload, rep = stream.decode_stream(_read(args.input), Form(args.form))
    _write(args.output, payload)
    if args.report:
        _write_text(args.report, stream.format_report(rep))
    return EX_OK


def cmd_corrupt(args) -> int:
    spec = _channel_spec(args)
    header, _, words = stream.split_stream(_read(args.input))
    try:
        corrupted, log = channel.corrupt_array(words, spec)
    except ParameterError as err:
        raise UsageError(f"corrupt: {err}") from None
    _write(args.output, stream.join_stream(header, corrupted))
    sys.stderr.write(channel.format_flip_log(log))
    return EX_OK


def cmd_tables(args) -> int:
    try:
        members = index_set(CodeParams(args.k), args.j, Form(args.form)).members
    except ParameterError as err:
        raise UsageError(f"tables: {err}") from None
    sys.stdout.write("".join(f"{u}\n" for u in members))
    return EX_OK


def cmd_bench(args) -> int:
    if args.k > report.BENCH_MAX_K:
        raise UsageError(f"bench: k must be at most {report.BENCH_MAX_K}")
    form = Form(args.form)
    rows = report.bench(CodeParams(args.k), args.trials, form, args.seed)
    sys.stdout.write(report.format_table(rows))
    ok = all(r.ok for r in rows)
    if args.csv or args.figure:
        sweep = report.sweep(args.k, args.trials, form, args.seed)
        ok = ok and all(r.ok for r in sweep)
        if args.csv:
            try:
                with open(args.csv, "w", newline="") as fh:
                    report.write_csv(sweep, fh)
            except OSError as err:
                raise IOFailure(args.csv, err) from err
        if args.figure:
            try:
                report.plot_counts(sweep, args.figure)
            except OSError as err:
                raise IOFailure(args.figure, err) from err
    return EX_OK if ok else EX_MISMATCH


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "corrupt": cmd_corrupt,
    "tables": cmd_tables,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as err:
        sys.stderr.write(f"{err}\n")
        if "usage:" not in str(err):
            sys.stderr.write(parser.format_usage())
        return EX_USAGE
    except FormatError as err:
        sys.stderr.write(f"format error: {err}\n")
        return EX_FORMAT
    except IOFailure as err:
        sys.stderr.write(f"I/O error: {err}\n")
        return EX_IOERR


if __name__ == "__main__":
    sys.exit(main())
