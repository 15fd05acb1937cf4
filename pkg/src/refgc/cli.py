"""Command-line front end.

Exit status: 0 success, 1 data/internal error, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import secrets
import sys
import time
from pathlib import Path

from . import codec
from .container import FLAG_HEADERS_DROPPED, FLAG_NORMALIZED, ContainerError
from .params import Params
from .seqio import Sequence, SequenceError, load_sequence, normalize

log = logging.getLogger("refgc")

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2
FASTA_WIDTH = 70


class UsageError(Exception):
    pass


def _format_flag(parser: argparse.ArgumentParser) -> None:
    g = parser.add_mutually_exclusive_group()
    g.add_argument("--fasta", dest="format", action="store_const", const="fasta", help="parse inputs as FASTA")
    g.add_argument("--raw", dest="format", action="store_const", const="raw", help="inputs are bare sequence bytes")
    parser.set_defaults(format="auto")


def _existing(path: str) -> Path:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    return p


def _load(path: str, fmt: str, fold_case: bool) -> Sequence:
    seq = load_sequence(_existing(path), fmt)
    return normalize(seq) if fold_case else seq


def _write_sequence(path: str, data: bytes, fasta_header: str | None) -> None:
    with open(path, "wb") as fh:
        if fasta_header is None:
            fh.write(data)
            return
        fh.write(b">" + fasta_header.encode() + b"\n")
        for i in range(0, len(data), FASTA_WIDTH):
            fh.write(data[i : i + FASTA_WIDTH] + b"\n")


def cmd_compress(args) -> int:
    fold = not args.no_normalize
    reference = _load(args.reference, args.format, fold)
    target = _load(args.target, args.format, fold)
    params = Params(left=args.window[0], right=args.window[1], period=args.period, lmax=args.lmax, start=args.start)
    dropped = bool(target.records)
    if len(target.records) > 1:
        log.warning("target has %d FASTA records; headers are not stored", len(target.records))
    t0 = time.perf_counter()
    blob = codec.compress(target, reference, params, normalized=fold, headers_dropped=dropped)
    elapsed = time.perf_counter() - t0
    Path(args.output).write_bytes(blob)
    ratio = len(target) / len(blob)
    print(
        f"input {len(target)} bytes -> output {len(blob)} bytes, ratio {ratio:.1f}:1, {elapsed:.2f}s",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_decompress(args) -> int:
    blob = _existing(args.input).read_bytes()
    parts, edits = codec.decode(blob)
    reference = _load(args.reference, args.format, bool(parts.flags & FLAG_NORMALIZED))
    target = codec.reconstruct(edits, reference, parts.target_length)
    Path(args.output).write_bytes(target.chars)
    return EXIT_OK


def s_fraction(counts) -> str:
    _, s, i, d = counts
    total = s + i + d
    return "n/a" if total == 0 else f"{100.0 * s / total:.2f}%"


def inspect_report(blob: bytes) -> str:
    parts, edits = codec.decode(blob)
    p = parts.params
    nf, ns, ni, nd = parts.counts
    bits = parts.section_bits()
    lines = [
        f"container bytes:   {len(blob)}",
        f"target length:     {parts.target_length}",
        f"flags:             normalized={bool(parts.flags & FLAG_NORMALIZED)} "
        f"headers_dropped={bool(parts.flags & FLAG_HEADERS_DROPPED)}",
        f"window L R:        {p.left} {p.right}",
        f"period M:          {p.period}",
        f"lmax:              {p.lmax}",
        f"initial W:         {p.start}",
        f"counts F S I D:    {nf} {ns} {ni} {nd}",
        f"S fraction:        {s_fraction(parts.counts)}",
        f"deleted bases:     {sum(l for _, l in edits.D)}",
    ]
    lines += [f"section {name + ':':<11}{n} bits" for name, n in bits.items()]
    if parts.flags & FLAG_HEADERS_DROPPED:
        lines.append("warning: FASTA headers were dropped at compression time")
    return "\n".join(lines)


def cmd_inspect(args) -> int:
    print(inspect_report(_existing(args.input).read_bytes()))
    return EXIT_OK


def cmd_mutate(args) -> int:
    from .mutate import mutate

    seed = args.seed if args.seed is not None else secrets.randbits(32)
    reference = _load(args.reference, args.format, True)
    target, report = mutate(reference.chars, args.sub_rate, args.ins_rate, args.del_rate, args.max_indel, seed)
    header = f"mutated seed={seed}" if reference.records else None
    _write_sequence(args.output, target, header)
    counts = " ".join(f"{k}={v}" for k, v in sorted(report.counts.items())) or "none"
    print(f"seed {seed}: {counts}", file=sys.stderr)
    return EXIT_OK


def cmd_random(args) -> int:
    from .mutate import random_sequence

    seed = args.seed if args.seed is not None else secrets.randbits(32)
    data = random_sequence(args.length, seed)
    _write_sequence(args.output, data, None if args.raw else f"random seed={seed}")
    print(f"seed {seed}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    d = Params()
    parser = argparse.ArgumentParser(prog="refgc", description="Reference-based genome compressor")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compress", help="compress a target against a reference")
    c.add_argument("-r", "--reference", required=True)
    c.add_argument("-t", "--target", required=True)
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--window", nargs=2, type=int, metavar=("L", "R"), default=(d.left, d.right))
    c.add_argument("--period", type=int, default=d.period, metavar="M", help="re-centering period in phrases")
    c.add_argument("--lmax", type=int, default=d.lmax, help="largest reference gap recorded as a deletion")
    c.add_argument("--start", type=int, default=d.start, metavar="W", help="initial window centre")
    c.add_argument("--no-normalize", action="store_true", help="keep letter case as is")
    _format_flag(c)
    c.set_defaults(func=cmd_compress)

    x = sub.add_parser("decompress", help="rebuild the target from a container")
    x.add_argument("-r", "--reference", required=True)
    x.add_argument("-i", "--input", required=True)
    x.add_argument("-o", "--output", required=True)
    _format_flag(x)
    x.set_defaults(func=cmd_decompress)

    i = sub.add_parser("inspect", help="print container statistics")
    i.add_argument("-i", "--input", required=True)
    i.set_defaults(func=cmd_inspect)

    m = sub.add_parser("mutate", help="write a randomly edited copy of a reference")
    m.add_argument("-r", "--reference", required=True)
    m.add_argument("-o", "--output", required=True)
    m.add_argument("--sub-rate", type=float, default=0.0)
    m.add_argument("--ins-rate", type=float, default=0.0)
    m.add_argument("--del-rate", type=float, default=0.0)
    m.add_argument("--max-indel", type=int, default=1)
    m.add_argument("--seed", type=int)
    _format_flag(m)
    m.set_defaults(func=cmd_mutate)

    g = sub.add_parser("random", help="write a uniform random ACGT sequence")
    g.add_argument("--length", type=int, required=True)
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--seed", type=int)
    g.add_argument("--raw", action="store_true", help="no FASTA header")
    g.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"refgc: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ContainerError, SequenceError, codec.CorruptError, ValueError, EOFError, OSError) as e:
        print(f"refgc: error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
