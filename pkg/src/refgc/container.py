"""Binary framing of the encoded streams.

Layout (big-endian)::

    magic        4s   b"RGC1"
    flags        B    bit 0: inputs were case-normalised
                      bit 1: FASTA headers were dropped
    target_len   Q
    params       5I   left, right, period, lmax, start
    counts       4I   |F|, |S|, |I|, |D|
    bit lengths  4Q   sign vector, codebook, integer payload, characters
    sections          each packed MSB-first and zero-padded to a byte

The Rice parameter of the codebook gap list lives inside the codebook
section, which is self-delimiting.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass

from .bitio import pack_bits, unpack_bits
from .entropy import EncodedEdits
from .params import Params

MAGIC = b"RGC1"
FLAG_NORMALIZED = 0x01
FLAG_HEADERS_DROPPED = 0x02
KNOWN_FLAGS = FLAG_NORMALIZED | FLAG_HEADERS_DROPPED

HEADER = struct.Struct(">4sBQ5I4I4Q")
SECTION_NAMES = ("sign_bits", "codebook", "payload", "chars")


class ContainerError(ValueError):
    pass


class BadMagicError(ContainerError):
    pass


class TruncatedError(ContainerError):
    pass


class SectionLengthError(ContainerError):
    pass


class HeaderError(ContainerError):
    pass


@dataclass
class ContainerParts:
    flags: int
    target_length: int
    params: Params
    streams: EncodedEdits

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return self.streams.counts

    def section_bits(self) -> dict[str, int]:
        return {name: len(getattr(self.streams, name)) for name in SECTION_NAMES}


def write_container(parts: ContainerParts) -> bytes:
    if parts.flags & ~KNOWN_FLAGS:
        raise HeaderError(f"unknown flag bits {parts.flags:#04x}")
    if len(parts.streams.sign_bits) != parts.counts[0]:
        raise SectionLengthError("sign vector length differs from |F|")
    p = parts.params
    sections = [getattr(parts.streams, name) for name in SECTION_NAMES]
    header = HEADER.pack(
        MAGIC,
        parts.flags,
        parts.target_length,
        p.left, p.right, p.period, p.lmax, p.start,
        *parts.counts,
        *(len(s) for s in sections),
    )
    return header + b"".join(pack_bits(s) for s in sections)


def read_container(data: bytes) -> ContainerParts:
    head = data[:4]
    if head != MAGIC[: len(head)]:
        raise BadMagicError("not an RGC1 container")
    if len(data) < HEADER.size:
        raise TruncatedError(f"header needs {HEADER.size} bytes, got {len(data)}")
    fields = HEADER.unpack_from(data)
    _, flags, target_length = fields[:3]
    if flags & ~KNOWN_FLAGS:
        raise HeaderError(f"unknown flag bits {flags:#04x}")
    try:
        params = Params(*fields[3:8])
    except ValueError as e:
        raise HeaderError(str(e)) from None
    counts = tuple(fields[8:12])
    bit_lengths = fields[12:16]
    if bit_lengths[0] != counts[0]:
        raise SectionLengthError("sign vector length differs from |F|")
    pos = HEADER.size
    sections = []
    for name, nbits in zip(SECTION_NAMES, bit_lengths):
        nbytes = (nbits + 7) // 8
        chunk = data[pos : pos + nbytes]
        if len(chunk) < nbytes:
            raise TruncatedError(f"{name} section truncated")
        bits = unpack_bits(chunk)
        if "1" in bits[nbits:]:
            raise SectionLengthError(f"{name} section has non-zero padding")
        sections.append(bits[:nbits])
        pos += nbytes
    if pos != len(data):
        raise SectionLengthError(f"{len(data) - pos} trailing bytes after the last section")
    return ContainerParts(flags, target_length, params, EncodedEdits(counts, *sections))
