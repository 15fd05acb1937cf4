"""End-to-end compress / decompress against a shared reference."""
from __future__ import annotations

from .container import (
    FLAG_HEADERS_DROPPED,
    FLAG_NORMALIZED,
    ContainerParts,
    read_container,
    write_container,
)
from .entropy import decode_edits, encode_edits
from .mapper import parse, replay
from .params import Params
from .segmenter import EditSet, segment
from .seqio import Sequence

__all__ = ["CorruptError", "compress", "decode", "decompress", "encode_edit_set", "reconstruct"]


class CorruptError(ValueError):
    """The edit records cannot be applied to the given reference."""


def encode_edit_set(edits: EditSet, target_length: int, params: Params, flags: int = FLAG_NORMALIZED) -> bytes:
    return write_container(ContainerParts(flags, target_length, params, encode_edits(edits)))


def compress(
    target: Sequence,
    reference: Sequence,
    params: Params | None = None,
    *,
    normalized: bool = True,
    headers_dropped: bool = False,
) -> bytes:
    """``normalized``/``headers_dropped`` only set header flags; callers normalise."""
    params = params or Params()
    edits = segment(parse(target, reference, params), reference, params.lmax)
    flags = (FLAG_NORMALIZED if normalized else 0) | (FLAG_HEADERS_DROPPED if headers_dropped else 0)
    return encode_edit_set(edits, len(target), params, flags)


def decode(data: bytes) -> tuple[ContainerParts, EditSet]:
    parts = read_container(data)
    try:
        return parts, decode_edits(parts.streams, parts.target_length)
    except EOFError as e:
        raise CorruptError(str(e)) from None


def reconstruct(edits: EditSet, reference: Sequence | bytes, target_length: int) -> Sequence:
    """Expand F against the reference, then walk the target applying records.

    At each target position t: a deletion recorded at t-1 first skips its
    reference characters; then an insertion recorded at t-1 emits its
    character without consuming, a substitution at t emits its character
    in place of the next one, and otherwise the next character is copied.
    """
    try:
        inter = replay(edits.F, reference)
    except ValueError as e:
        raise CorruptError(str(e)) from None
    events: dict[int, list] = {}
    for p, l in edits.D:
        events.setdefault(p + 1, [None, None, None])[0] = l
    for p, z in edits.I:
        events.setdefault(p + 1, [None, None, None])[1] = z
    for p, z in edits.S:
        events.setdefault(p, [None, None, None])[2] = z
    out = []
    t = 1  # next target position to produce
    ip = 0  # next unread intermediate index
    n_inter = len(inter)
    for te in sorted(events):
        skip, ins, sub = events[te]
        if te < 1 or te > target_length:
            raise CorruptError(f"edit record at target position {te} outside 1..{target_length}")
        run = te - t
        if ip + run > n_inter:
            raise CorruptError("intermediate sequence exhausted early")
        out.append(inter[ip : ip + run])
        ip += run
        if skip is not None:
            ip += skip
        if ins is not None:
            if sub is not None:
                raise CorruptError(f"insertion and substitution both claim position {te}")
            out.append(ins.encode("latin-1"))
        else:
            if ip >= n_inter:
                raise CorruptError("intermediate sequence exhausted early")
            out.append(sub.encode("latin-1") if sub is not None else inter[ip : ip + 1])
            ip += 1
        t = te + 1
    out.append(inter[ip:])
    result = b"".join(out)
    if len(result) != target_length:
        raise CorruptError(f"reconstructed {len(result)} characters, header says {target_length}")
    return Sequence(result)


def decompress(data: bytes, reference: Sequence) -> Sequence:
    parts, edits = decode(data)
    return reconstruct(edits, reference, parts.target_length)
