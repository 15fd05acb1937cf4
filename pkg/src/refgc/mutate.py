"""Synthetic (reference, target) pairs for tests and benchmarks.

Kept out of the codec on purpose; only the CLI, scripts and tests use it.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

BASES = b"ACGT"
_BASE_INDEX = {b: i for i, b in enumerate(BASES)}


def random_sequence(length: int, seed: int | None = None, rng: np.random.Generator | None = None) -> bytes:
    rng = rng if rng is not None else np.random.default_rng(seed)
    return np.frombuffer(BASES, dtype=np.uint8)[rng.integers(0, 4, size=length)].tobytes()


def _bernoulli_positions(rng: np.random.Generator, n: int, rate: float) -> np.ndarray:
    """Indices in [0, n) hit by independent per-base events of probability ``rate``."""
    if rate <= 0 or n == 0:
        return np.empty(0, dtype=np.int64)
    if rate >= 1:
        return np.arange(n, dtype=np.int64)
    chunks = []
    last = -1
    expect = int(n * rate + 6 * (n * rate) ** 0.5 + 16)
    while last < n:
        gaps = np.minimum(rng.geometric(rate, size=expect), n + 1)  # saturated draws overflow cumsum
        pos = last + np.cumsum(gaps)
        chunks.append(pos)
        last = int(pos[-1])
    pos = np.concatenate(chunks)
    return pos[pos < n]


def _other_base(rng: np.random.Generator, b: int) -> int:
    i = _BASE_INDEX.get(b)
    if i is None:
        return BASES[int(rng.integers(0, 4))]
    return BASES[(i + int(rng.integers(1, 4))) % 4]


@dataclass
class MutationReport:
    seed: int | None
    counts: Counter = field(default_factory=Counter)


def mutate(
    reference: bytes,
    sub_rate: float = 0.0,
    ins_rate: float = 0.0,
    del_rate: float = 0.0,
    max_indel: int = 1,
    seed: int | None = None,
) -> tuple[bytes, MutationReport]:
    """Apply per-base substitutions, insertions (before a base) and deletions.

    Insertion and deletion lengths are uniform on 1..max_indel. Events that
    land inside a deleted stretch are dropped.
    """
    if max_indel < 1:
        raise ValueError("max_indel must be >= 1")
    rng = np.random.default_rng(seed)
    n = len(reference)
    kinds: dict[int, list[str]] = {}
    for kind, rate in (("ins", ins_rate), ("del", del_rate), ("sub", sub_rate)):
        for p in _bernoulli_positions(rng, n, rate).tolist():
            kinds.setdefault(p, []).append(kind)
    report = MutationReport(seed)
    out = []
    cursor = 0
    for p in sorted(kinds):
        if p < cursor:
            continue
        out.append(reference[cursor:p])
        cursor = p
        ks = kinds[p]
        if "ins" in ks:
            k = int(rng.integers(1, max_indel + 1))
            out.append(random_sequence(k, rng=rng))
            report.counts["ins"] += 1
            report.counts["ins_bases"] += k
        if "del" in ks:
            k = int(rng.integers(1, max_indel + 1))
            report.counts["del"] += 1
            report.counts["del_bases"] += min(k, n - p)
            cursor = p + k
        elif "sub" in ks:
            out.append(bytes([_other_base(rng, reference[p])]))
            report.counts["sub"] += 1
            cursor = p + 1
    out.append(reference[cursor:])
    return b"".join(out), report


def scatter_substitutions(reference: bytes, count: int, min_gap: int = 32, seed: int | None = None) -> tuple[bytes, list[int]]:
    """Exactly ``count`` substitutions, any two at least ``min_gap`` apart.

    Returns the mutated sequence and the 1-based substituted positions.
    """
    n = len(reference)
    slack = n - min_gap * count
    if count and slack < 1:
        raise ValueError("sequence too short for that many spaced substitutions")
    rng = np.random.default_rng(seed)
    # choose count points in a shrunken line, then re-inflate by the gap
    base = np.sort(rng.choice(slack, size=count, replace=False)) if count else np.empty(0, dtype=np.int64)
    positions = (base + min_gap * np.arange(count) + min_gap // 2).tolist()
    buf = bytearray(reference)
    for p in positions:
        buf[p] = _other_base(rng, buf[p])
    return bytes(buf), [p + 1 for p in positions]
