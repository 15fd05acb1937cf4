"""Windowed longest-match parsing of a target against a reference.

The target is cut into phrases ``(p, l, z)``: copy ``l`` reference bytes
starting at 1-based position ``p``, then emit the novel character ``z``.
Match starts are restricted to a window ``[W-L, W+R]`` whose centre follows
the target cursor and is periodically nudged by the median drift of recent
matches, so it stays aligned across insertions and deletions.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple, Optional

from .params import Params
from .seqio import Sequence

__all__ = [
    "ADVANCE_INCLUDES_NOVEL",
    "END",
    "Instruction",
    "WindowState",
    "find_longest_match",
    "lower_median",
    "parse",
    "replay",
    "update_window",
]

# Advance the centre by l+1 (match plus novel symbol). Set False to advance by l only.
ADVANCE_INCLUDES_NOVEL = True

END = None  # novel-character slot of a phrase that ends exactly at the end of the target


class Instruction(NamedTuple):
    p: int
    l: int
    z: Optional[str]

    @property
    def is_end(self) -> bool:
        return self.z is None

    @property
    def span(self) -> int:
        """Number of target characters this phrase produces."""
        return self.l if self.z is None else self.l + 1


@dataclass(frozen=True)
class WindowState:
    W: int
    L: int
    R: int
    M: int
    drift_history: tuple[int, ...] = ()

    def bounds(self, ref_len: int) -> tuple[int, int]:
        return max(1, self.W - self.L), min(ref_len, self.W + self.R)

    @classmethod
    def initial(cls, params: Params) -> "WindowState":
        return cls(W=params.start, L=params.left, R=params.right, M=params.period)


def lower_median(values) -> int:
    s = sorted(values)
    return s[(len(s) - 1) // 2]


def _common_prefix(a: bytes, ai: int, b: bytes, bi: int, limit: int) -> int:
    """Length of the common prefix of a[ai:] and b[bi:], at most ``limit``."""
    k = 0
    step = 32
    while k < limit:
        s = min(step, limit - k)
        if a[ai + k : ai + k + s] == b[bi + k : bi + k + s]:
            k += s
            step <<= 1
            continue
        lo, hi = 0, s - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if a[ai + k : ai + k + mid] == b[bi + k : bi + k + mid]:
                lo = mid
            else:
                hi = mid - 1
        return k + lo
    return limit


def find_longest_match(
    target: Sequence | bytes, n: int, reference: Sequence | bytes, window: WindowState
) -> tuple[int, int]:
    """Longest match of target[n+1..] starting anywhere in the window.

    Only the start is window-constrained; the match itself may run past the
    right edge. Among starts achieving the maximal length the one nearest the
    window centre wins, then the smaller position.
    Returns ``(window.W, 0)`` when nothing in the window matches.
    """
    t = target.chars if isinstance(target, Sequence) else target
    r = reference.chars if isinstance(reference, Sequence) else reference
    lo, hi = window.bounds(len(r))
    remaining = len(t) - n
    best_l = 0
    if lo > hi or remaining <= 0:
        return window.W, 0
    start, last = lo - 1, hi - 1  # 0-based inclusive range of candidate starts
    first = -1
    # Every start before the last hit failed to match best_l+1 characters, so
    # searching forward for a strictly longer prefix finds the maximal length.
    while best_l < remaining:
        need = best_l + 1
        idx = r.find(t[n : n + need], start, last + need)
        if idx < 0:
            break
        limit = min(remaining, len(r) - idx) - need
        best_l = need + _common_prefix(t, n + need, r, idx + need, limit)
        first = idx
        start = idx + 1
    if best_l == 0:
        return window.W, 0
    # Any other start holding the full prefix has exactly best_l; take the one nearest W.
    pat = t[n : n + best_l]
    centre = window.W - 1
    left = r.rfind(pat, first, min(centre, last) + best_l) if first <= centre else -1
    right = r.find(pat, max(centre + 1, first), last + best_l)
    if left < 0:
        return right + 1, best_l
    if right < 0 or centre - left <= right - centre:
        return left + 1, best_l
    return right + 1, best_l


def update_window(
    state: WindowState, p: int, l: int, k: int, advance_novel: bool = ADVANCE_INCLUDES_NOVEL
) -> WindowState:
    """Window after phrase ``k`` (1-based) matched ``l`` characters at ``p``.

    The drift ``p - W`` is recorded against the centre the phrase was parsed
    with; every ``M`` phrases the centre moves by the lower median of the
    stored drifts and the history is cleared.
    """
    drifts = state.drift_history + (p - state.W,)
    W = state.W + l + (1 if advance_novel else 0)
    if k % state.M == 0:
        W += lower_median(drifts)
        drifts = ()
    return replace(state, W=W, drift_history=drifts)


def parse(target: Sequence, reference: Sequence, params: Params | None = None) -> list[Instruction]:
    params = params or Params()
    t, r = target.chars, reference.chars
    if not t or not r:
        raise ValueError("target and reference must be non-empty")
    state = WindowState.initial(params)
    out: list[Instruction] = []
    n = 0
    N = len(t)
    k = 0
    while n < N:
        p, l = find_longest_match(t, n, r, state)
        if n + l == N:
            out.append(Instruction(p, l, END))
        else:
            out.append(Instruction(p, l, chr(t[n + l])))
        n += l + 1
        k += 1
        state = update_window(state, p, l, k)
    return out


def replay(instructions, reference: Sequence | bytes) -> bytes:
    """Expand phrases against the reference (copy, then novel character)."""
    r = reference.chars if isinstance(reference, Sequence) else reference
    parts = []
    for p, l, z in instructions:
        if l:
            if p < 1 or p + l - 1 > len(r):
                raise ValueError(f"instruction ({p}, {l}) reaches outside the reference")
            parts.append(r[p - 1 : p - 1 + l])
        if z is not None:
            parts.append(z.encode("latin-1"))
    return b"".join(parts)
