"""Sequence loading and normalization.

Sequences are held as raw bytes (any 8-bit value is a legal character).
Positions exposed through :meth:`Sequence.at` are 1-based.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["Sequence", "Record", "SequenceError", "load_sequence", "normalize", "detect_format"]

_WHITESPACE = re.compile(rb"\s+")
_UPPER = bytes.maketrans(b"abcdefghijklmnopqrstuvwxyz", b"ABCDEFGHIJKLMNOPQRSTUVWXYZ")


class SequenceError(ValueError):
    """Input file cannot be turned into a usable sequence."""


@dataclass(frozen=True)
class Record:
    """One FASTA record inside a concatenated sequence (1-based, inclusive)."""

    header: str
    start: int
    end: int


@dataclass(frozen=True)
class Sequence:
    chars: bytes
    records: tuple[Record, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.chars)

    @property
    def length(self) -> int:
        return len(self.chars)

    def at(self, i: int) -> int:
        """Byte value at 1-based position ``i``."""
        if not 1 <= i <= len(self.chars):
            raise IndexError(f"position {i} outside 1..{len(self.chars)}")
        return self.chars[i - 1]

    @classmethod
    def from_str(cls, s: str) -> "Sequence":
        return cls(s.encode("latin-1"))

    def __str__(self) -> str:
        return self.chars.decode("latin-1")


def detect_format(data: bytes) -> str:
    return "fasta" if data.lstrip()[:1] == b">" else "raw"


def _parse_fasta(data: bytes) -> tuple[bytes, tuple[Record, ...]]:
    if data.lstrip()[:1] != b">":
        raise SequenceError("FASTA input must begin with a '>' header line")
    chunks: list[bytes] = []
    records: list[Record] = []
    header = None
    pos = 0
    start = 1
    for line in data.splitlines():
        if line.startswith(b">"):
            if header is not None:
                records.append(Record(header, start, pos))
            header = line[1:].strip().decode("latin-1")
            start = pos + 1
            continue
        line = _WHITESPACE.sub(b"", line)
        chunks.append(line)
        pos += len(line)
    records.append(Record(header, start, pos))
    return b"".join(chunks), tuple(records)


def load_sequence(path: str | Path, format: str = "fasta") -> Sequence:
    """Read ``path`` as FASTA (records concatenated) or as raw bytes.

    Raw mode strips whitespace/line breaks as well, so a trailing newline
    does not become part of the sequence.
    """
    data = Path(path).read_bytes()
    if format == "auto":
        format = detect_format(data)
    if format == "fasta":
        chars, records = _parse_fasta(data)
    elif format == "raw":
        chars, records = _WHITESPACE.sub(b"", data), ()
    else:
        raise ValueError(f"unknown format {format!r}")
    if not chars:
        raise SequenceError(f"{path}: empty sequence")
    return Sequence(chars, records)


def normalize(s: Sequence) -> Sequence:
    """Fold a-z to upper case; every other byte is left alone."""
    return Sequence(s.chars.translate(_UPPER), s.records)
