"""Serialise an :class:`EditSet` into entropy-coded bit streams and back.

All integers go into one list, in this order:

    |F position deltas|, F lengths, S position deltas, I position deltas,
    D position deltas, D lengths

F position deltas may be negative, so their signs travel in a separate bit
vector (1 = negative). The list is Huffman coded. Characters (F novel
symbols, then S, then I) use a fixed prefix table.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bitio import BitReader, BitWriter
from .huffman import HuffmanCodebook, decode_codebook, encode_codebook, huffman_decode, huffman_encode
from .mapper import Instruction
from .segmenter import EditSet

__all__ = [
    "CHAR_TABLE",
    "EncodedEdits",
    "IntegerStream",
    "build_integer_stream",
    "decode_chars",
    "decode_edits",
    "encode_chars",
    "encode_edits",
    "split_integer_stream",
]

CHAR_TABLE = {"A": "00", "C": "01", "G": "10", "T": "110", "N": "1110"}
ESC = "1111"
END_BYTE = 0x00
_DECODE_TABLE = {v: k for k, v in CHAR_TABLE.items()}


class StreamError(ValueError):
    pass


@dataclass
class IntegerStream:
    values: list[int]
    sign_bits: list[int]
    section_counts: tuple[int, int, int, int]


def _deltas(positions) -> list[int]:
    out = []
    prev = 0
    for p in positions:
        out.append(p - prev)
        prev = p
    return out


def _undelta(deltas) -> list[int]:
    out = []
    acc = 0
    for d in deltas:
        acc += d
        out.append(acc)
    return out


def build_integer_stream(edits: EditSet) -> IntegerStream:
    f_deltas = _deltas(ins.p for ins in edits.F)
    values = [abs(d) for d in f_deltas]
    signs = [1 if d < 0 else 0 for d in f_deltas]
    values += [ins.l for ins in edits.F]
    for positions in (
        [p for p, _ in edits.S],
        [p for p, _ in edits.I],
        [p for p, _ in edits.D],
    ):
        d = _deltas(positions)
        if any(x <= 0 for x in d):
            raise StreamError("S, I and D positions must be strictly increasing and positive")
        values += d
    values += [l for _, l in edits.D]
    return IntegerStream(values, signs, edits.counts)


def split_integer_stream(stream: IntegerStream):
    """Inverse of the layout above: returns (F positions, F lengths, S pos, I pos, D pos, D lengths)."""
    nf, ns, ni, nd = stream.section_counts
    v = stream.values
    if len(v) != 2 * nf + ns + ni + 2 * nd or len(stream.sign_bits) != nf:
        raise StreamError("integer stream does not match its section counts")
    cut = 0

    def take(k):
        nonlocal cut
        part = v[cut : cut + k]
        cut += k
        return part

    f_abs = take(nf)
    f_pos = _undelta(-a if s else a for a, s in zip(f_abs, stream.sign_bits))
    f_len = take(nf)
    s_pos = _undelta(take(ns))
    i_pos = _undelta(take(ni))
    d_pos = _undelta(take(nd))
    d_len = take(nd)
    return f_pos, f_len, s_pos, i_pos, d_pos, d_len


def encode_chars(chars) -> str:
    """Fixed prefix code; ``None`` (end marker) is written as ESC + 0x00."""
    w = BitWriter()
    for c in chars:
        if c is None:
            w.write_bits(ESC)
            w.write(END_BYTE, 8)
            continue
        code = CHAR_TABLE.get(c)
        if code is None:
            w.write_bits(ESC)
            w.write(ord(c), 8)
        else:
            w.write_bits(code)
    return w.getvalue()


def decode_chars(bits: BitReader | str, n: int) -> list[str]:
    reader = BitReader(bits) if isinstance(bits, str) else bits
    out = []
    for _ in range(n):
        code = ""
        while True:
            code += "1" if reader.read_bit() else "0"
            c = _DECODE_TABLE.get(code)
            if c is not None:
                out.append(c)
                break
            if code == ESC:
                out.append(chr(reader.read(8)))
                break
    return out


@dataclass
class EncodedEdits:
    """The four bit sections of a container, plus the section counts."""

    counts: tuple[int, int, int, int]
    sign_bits: str
    codebook: str
    payload: str
    chars: str


def encode_edits(edits: EditSet) -> EncodedEdits:
    stream = build_integer_stream(edits)
    book, payload = huffman_encode(stream.values)
    chars = [ins.z for ins in edits.F] + [z for _, z in edits.S] + [z for _, z in edits.I]
    for z in chars[: len(edits.F) - 1]:
        if z is None:
            raise StreamError("only the last F instruction may carry the end marker")
    return EncodedEdits(
        counts=stream.section_counts,
        sign_bits="".join("1" if s else "0" for s in stream.sign_bits),
        codebook=encode_codebook(book),
        payload=payload,
        chars=encode_chars(chars),
    )


def _exact(reader: BitReader, what: str) -> None:
    if reader.remaining():
        raise StreamError(f"{reader.remaining()} unused bits after the {what}")


def decode_codebook_section(bits: str) -> HuffmanCodebook:
    reader = BitReader(bits)
    book = decode_codebook(reader)
    _exact(reader, "codebook")
    return book


def decode_edits(enc: EncodedEdits, target_length: int) -> EditSet:
    """Rebuild the EditSet. ``target_length`` tells a trailing end marker
    apart from a literal NUL novel character (both are written ESC + 0x00)."""
    nf, ns, ni, nd = enc.counts
    if len(enc.sign_bits) != nf:
        raise StreamError("sign vector length differs from |F|")
    book = decode_codebook_section(enc.codebook)
    reader = BitReader(enc.payload)
    values = huffman_decode(book, reader, 2 * nf + ns + ni + 2 * nd)
    _exact(reader, "integer payload")
    signs = [1 if b == "1" else 0 for b in enc.sign_bits]
    f_pos, f_len, s_pos, i_pos, d_pos, d_len = split_integer_stream(IntegerStream(values, signs, enc.counts))
    reader = BitReader(enc.chars)
    chars = decode_chars(reader, nf + ns + ni)
    _exact(reader, "character payload")
    edits = EditSet(
        F=[Instruction(p, l, z) for p, l, z in zip(f_pos, f_len, chars[:nf])],
        S=list(zip(s_pos, chars[nf : nf + ns])),
        I=list(zip(i_pos, chars[nf + ns :])),
        D=list(zip(d_pos, d_len)),
    )
    if edits.F and edits.F[-1].z == chr(END_BYTE) and edits.target_length() == target_length + 1:
        last = edits.F[-1]
        edits.F[-1] = Instruction(last.p, last.l, None)
    return edits
