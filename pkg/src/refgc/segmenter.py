"""Fold neighbouring phrases into substitution / insertion / deletion records.

Records carry 1-based positions in the final target. ``n_next`` below is
the number of target characters produced before phrase ``b`` starts, i.e.
the target position of ``a``'s novel character. It is tracked from the
original tiling because merged phrases stop tiling the target once an
insertion or deletion has been folded into them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .mapper import Instruction
from .seqio import Sequence

__all__ = [
    "EditSet",
    "segment",
    "try_merge_deletion",
    "try_merge_insertion",
    "try_merge_substitution",
]


@dataclass
class EditSet:
    F: list[Instruction] = field(default_factory=list)
    S: list[tuple[int, str]] = field(default_factory=list)
    I: list[tuple[int, str]] = field(default_factory=list)
    D: list[tuple[int, int]] = field(default_factory=list)

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return len(self.F), len(self.S), len(self.I), len(self.D)

    def target_length(self) -> int:
        inter = sum(ins.span for ins in self.F)
        return inter + len(self.I) - sum(l for _, l in self.D)


def _fits(p: int, l: int, ref_len: int) -> bool:
    return l == 0 or (p >= 1 and p + l - 1 <= ref_len)


def try_merge_substitution(a: Instruction, b: Instruction, n_next: int, ref_len: int):
    """``b`` resumes one reference character after ``a`` stopped: a SNP at n_next."""
    if a.z is None or a.p + a.l + 1 != b.p:
        return None
    merged = Instruction(a.p, a.l + b.l + 1, b.z)
    if not _fits(merged.p, merged.l, ref_len):
        return None
    return merged, (n_next, a.z)


def try_merge_insertion(a: Instruction, b: Instruction, n_next: int, ref_len: int):
    """``b`` resumes exactly where ``a`` stopped: ``a.z`` was inserted after n_next-1."""
    if a.z is None or a.p + a.l != b.p:
        return None
    merged = Instruction(a.p, a.l + b.l, b.z)
    if not _fits(merged.p, merged.l, ref_len):
        return None
    return merged, (n_next - 1, a.z)


def try_merge_deletion(a: Instruction, b: Instruction, n_next: int, reference: Sequence | bytes, lmax: int):
    """``b`` resumes 2..lmax characters further on and ``a.z`` equals the
    reference character just before ``b.p``: the gap was deleted."""
    if a.z is None:
        return None
    gap = b.p - (a.p + a.l + 1)
    if not 2 <= gap <= lmax:
        return None
    r = reference.chars if isinstance(reference, Sequence) else reference
    if not 1 <= b.p - 1 <= len(r) or ord(a.z) != r[b.p - 2]:
        return None
    merged = Instruction(a.p, b.p + b.l - a.p, b.z)
    if not _fits(merged.p, merged.l, len(r)):
        return None
    return merged, (n_next - 1, b.p - 1 - a.p - a.l)


def segment(instructions: list[Instruction], reference: Sequence | bytes, lmax: int = 1000) -> EditSet:
    """Single greedy left-to-right pass with a running merged phrase."""
    r = reference.chars if isinstance(reference, Sequence) else reference
    edits = EditSet()
    if not instructions:
        return edits
    cur = instructions[0]
    n_next = cur.span
    for b in instructions[1:]:
        if (m := try_merge_substitution(cur, b, n_next, len(r))) is not None:
            cur = m[0]
            edits.S.append(m[1])
        elif (m := try_merge_insertion(cur, b, n_next, len(r))) is not None:
            cur = m[0]
            edits.I.append(m[1])
        elif (m := try_merge_deletion(cur, b, n_next, r, lmax)) is not None:
            cur = m[0]
            edits.D.append(m[1])
        else:
            edits.F.append(cur)
            cur = b
        n_next += b.span
    edits.F.append(cur)
    return edits
