"""MSB-first bit strings.

Bits are kept as ``str`` of '0'/'1' while a stream is assembled; that is
cheap in CPython and makes the formats easy to eyeball in tests. Packing to
bytes zero-pads the final byte.
"""
from __future__ import annotations


class BitWriter:
    def __init__(self):
        self._parts: list[str] = []
        self._len = 0

    def write(self, value: int, nbits: int) -> None:
        if nbits == 0:
            return
        if value < 0 or value >> nbits:
            raise ValueError(f"{value} does not fit in {nbits} bits")
        self.write_bits(format(value, f"0{nbits}b"))

    def write_bits(self, bits: str) -> None:
        self._parts.append(bits)
        self._len += len(bits)

    def __len__(self) -> int:
        return self._len

    def getvalue(self) -> str:
        return "".join(self._parts)


class BitReader:
    def __init__(self, bits: str, pos: int = 0):
        self.bits = bits
        self.pos = pos

    def remaining(self) -> int:
        return len(self.bits) - self.pos

    def read(self, nbits: int) -> int:
        if nbits == 0:
            return 0
        end = self.pos + nbits
        if end > len(self.bits):
            raise EOFError("bit stream exhausted")
        v = int(self.bits[self.pos : end], 2)
        self.pos = end
        return v

    def read_bit(self) -> int:
        if self.pos >= len(self.bits):
            raise EOFError("bit stream exhausted")
        b = self.bits[self.pos]
        self.pos += 1
        return 1 if b == "1" else 0

    def read_unary(self) -> int:
        """Count of '1's before the next '0' (the '0' is consumed)."""
        end = self.bits.find("0", self.pos)
        if end < 0:
            raise EOFError("unterminated unary code")
        q = end - self.pos
        self.pos = end + 1
        return q


def pack_bits(bits: str) -> bytes:
    if not bits:
        return b""
    pad = -len(bits) % 8
    return int(bits + "0" * pad, 2).to_bytes((len(bits) + pad) // 8, "big")


def unpack_bits(data: bytes, nbits: int | None = None) -> str:
    if not data:
        return ""
    bits = format(int.from_bytes(data, "big"), f"0{len(data) * 8}b")
    return bits if nbits is None else bits[:nbits]
