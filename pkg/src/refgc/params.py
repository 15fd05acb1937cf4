from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Params:
    """Knobs shared by the parser and the segmenter.

    ``left``/``right`` are the window half-widths around the centre,
    ``period`` is how many phrases pass between median re-centerings,
    ``lmax`` bounds the reference gap a deletion record may cover and
    ``start`` is the initial window centre (1-based).
    """

    left: int = 1000
    right: int = 1000
    period: int = 100
    lmax: int = 1000
    start: int = 1

    def __post_init__(self):
        for name in ("left", "right", "period", "lmax", "start"):
            v = getattr(self, name)
            if not 0 <= v < 2**32:
                raise ValueError(f"{name}={v} does not fit an unsigned 32-bit field")
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if self.lmax < 2:
            raise ValueError("lmax must be >= 2")
