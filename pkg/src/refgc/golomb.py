"""Golomb codes with power-of-two modulus (Rice codes)."""
from __future__ import annotations

from .bitio import BitReader

MAX_R = 63


def _log2(m: int) -> int:
    if m < 1 or m & (m - 1):
        raise ValueError(f"Golomb modulus must be a power of two, got {m}")
    return m.bit_length() - 1


def golomb_encode(v: int, m: int) -> str:
    """Unary quotient (ones, then a zero) followed by the r-bit remainder."""
    if v < 0:
        raise ValueError("Golomb codes are for non-negative integers")
    r = _log2(m)
    q = v >> r
    return "1" * q + "0" + (format(v & (m - 1), f"0{r}b") if r else "")


def golomb_decode(bits: BitReader | str, m: int) -> int:
    reader = BitReader(bits) if isinstance(bits, str) else bits
    r = _log2(m)
    q = reader.read_unary()
    return (q << r) | reader.read(r)


def rice_cost(values, r: int) -> int:
    return sum((v >> r) + 1 + r for v in values)


def best_rice_parameter(values, max_r: int = MAX_R) -> int:
    """Exponent r in 0..max_r that minimises the total coded length."""
    values = list(values)
    if not values:
        return 0
    return min(range(max_r + 1), key=lambda r: (rice_cost(values, r), r))
