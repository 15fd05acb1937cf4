"""Canonical Huffman coding of non-negative integers.

The codebook is transmitted compactly: the run ``1..N`` of consecutive
symbols costs only ``N`` itself, the symbols above the run are sent as
Rice-coded gaps, and each symbol then gets a fixed 8-bit code length.
"""
from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from itertools import count

from .bitio import BitReader, BitWriter
from .golomb import best_rice_parameter, golomb_decode, golomb_encode

MAX_CODE_LENGTH = 32
LENGTH_BITS = 8
RUN_BITS = 32
COUNT_BITS = 32
RICE_BITS = 6


class CodebookError(ValueError):
    pass


@dataclass(frozen=True)
class HuffmanCodebook:
    symbols: tuple[int, ...]
    code_lengths: tuple[int, ...]

    @property
    def consecutive_run_N(self) -> int:
        return consecutive_run(self.symbols)

    def codes(self) -> dict[int, str]:
        return canonical_codes(self.symbols, self.code_lengths)


def consecutive_run(symbols) -> int:
    """Largest N with 1..N all present (0 when 1 is missing)."""
    present = set(symbols)
    n = 0
    while n + 1 in present:
        n += 1
    return n


def _huffman_lengths(freqs: dict[int, int]) -> dict[int, int]:
    if len(freqs) == 1:
        return {next(iter(freqs)): 1}
    tie = count()
    heap = [(f, next(tie), [s]) for s, f in freqs.items()]
    heapq.heapify(heap)
    depth = dict.fromkeys(freqs, 0)
    while len(heap) > 1:
        f1, _, a = heapq.heappop(heap)
        f2, _, b = heapq.heappop(heap)
        for s in a:
            depth[s] += 1
        for s in b:
            depth[s] += 1
        heapq.heappush(heap, (f1 + f2, next(tie), a + b))
    return depth


def code_lengths_for(freqs: dict[int, int], limit: int = MAX_CODE_LENGTH) -> dict[int, int]:
    """Huffman code lengths, flattening the frequencies until depth <= limit."""
    freqs = dict(freqs)
    while True:
        lengths = _huffman_lengths(freqs)
        if max(lengths.values()) <= limit:
            return lengths
        freqs = {s: max(1, f >> 1) for s, f in freqs.items()}


def canonical_codes(symbols, lengths) -> dict[int, str]:
    order = sorted(zip(symbols, lengths), key=lambda sl: (sl[1], sl[0]))
    codes = {}
    code = 0
    prev = 0
    for sym, ln in order:
        code <<= ln - prev
        codes[sym] = format(code, f"0{ln}b")
        code += 1
        prev = ln
    return codes


def check_kraft(lengths) -> None:
    lengths = list(lengths)
    if not lengths:
        return
    if len(lengths) == 1:
        if lengths[0] != 1:
            raise CodebookError("single-symbol codebook must use a 1-bit code")
        return
    top = max(lengths)
    if top > 255 or min(lengths) < 1:
        raise CodebookError("code length out of range")
    if sum(1 << (top - ln) for ln in lengths) != 1 << top:
        raise CodebookError("code lengths do not form a complete prefix code")


def build_codebook(values) -> HuffmanCodebook:
    freqs = Counter(values)
    if not freqs:
        return HuffmanCodebook((), ())
    lengths = code_lengths_for(freqs)
    symbols = tuple(sorted(lengths))
    return HuffmanCodebook(symbols, tuple(lengths[s] for s in symbols))


def huffman_encode(values) -> tuple[HuffmanCodebook, str]:
    values = list(values)
    book = build_codebook(values)
    if not values:
        return book, ""
    codes = book.codes()
    return book, "".join(codes[v] for v in values)


def huffman_decode(book: HuffmanCodebook, bits: BitReader | str, n: int) -> list[int]:
    """Read exactly ``n`` symbols."""
    reader = BitReader(bits) if isinstance(bits, str) else bits
    if n == 0:
        return []
    if not book.symbols:
        raise CodebookError("empty codebook cannot decode symbols")
    # canonical decode: per length, the first code value and the symbols in code order
    by_len: dict[int, list[int]] = {}
    for sym, ln in sorted(zip(book.symbols, book.code_lengths), key=lambda sl: (sl[1], sl[0])):
        by_len.setdefault(ln, []).append(sym)
    first: dict[int, int] = {}
    code = 0
    prev = 0
    for ln in sorted(by_len):
        code <<= ln - prev
        first[ln] = code
        code += len(by_len[ln])
        prev = ln
    max_len = max(by_len)
    bits, pos = reader.bits, reader.pos
    end = len(bits)
    out = []
    append = out.append
    for _ in range(n):
        code = 0
        ln = 0
        while True:
            if pos >= end:
                raise EOFError("Huffman payload exhausted")
            code = (code << 1) | (bits[pos] == "1")
            pos += 1
            ln += 1
            syms = by_len.get(ln)
            if syms is not None and 0 <= code - first[ln] < len(syms):
                append(syms[code - first[ln]])
                break
            if ln >= max_len:
                raise CodebookError("invalid Huffman code in payload")
    reader.pos = pos
    return out


def encode_codebook(book: HuffmanCodebook) -> str:
    """Run bound N, zero flag, count and Rice-coded gaps of symbols above N,
    then one 8-bit code length per symbol in increasing symbol order."""
    check_kraft(book.code_lengths)
    symbols = list(book.symbols)
    if symbols != sorted(set(symbols)) or (symbols and symbols[0] < 0):
        raise CodebookError("symbols must be distinct, sorted and non-negative")
    n = consecutive_run(symbols)
    has_zero = bool(symbols) and symbols[0] == 0
    rest = [s for s in symbols if s > n]
    gaps = [b - a for a, b in zip([n] + rest, rest)]
    r = best_rice_parameter(gaps)
    w = BitWriter()
    w.write(n, RUN_BITS)
    w.write(int(has_zero), 1)
    w.write(len(rest), COUNT_BITS)
    w.write(r, RICE_BITS)
    m = 1 << r
    for g in gaps:
        w.write_bits(golomb_encode(g, m))
    for ln in book.code_lengths:
        w.write(ln, LENGTH_BITS)
    return w.getvalue()


def decode_codebook(bits: BitReader | str) -> HuffmanCodebook:
    reader = BitReader(bits) if isinstance(bits, str) else bits
    n = reader.read(RUN_BITS)
    has_zero = reader.read(1)
    k = reader.read(COUNT_BITS)
    m = 1 << reader.read(RICE_BITS)
    if (n + k + has_zero) * LENGTH_BITS > reader.remaining():
        raise CodebookError("codebook declares more symbols than the stream holds")
    rest = []
    prev = n
    for _ in range(k):
        prev += golomb_decode(reader, m)
        rest.append(prev)
    symbols = ([0] if has_zero else []) + list(range(1, n + 1)) + rest
    lengths = tuple(reader.read(LENGTH_BITS) for _ in symbols)
    if len(set(symbols)) != len(symbols):
        raise CodebookError("duplicate symbols in codebook")
    check_kraft(lengths)
    return HuffmanCodebook(tuple(symbols), lengths)
