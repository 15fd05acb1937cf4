"""Lossless compression of a genome against a reference genome."""
from .codec import compress, decompress, reconstruct
from .mapper import Instruction, parse
from .params import Params
from .segmenter import EditSet, segment
from .seqio import Sequence, load_sequence, normalize

__all__ = [
    "EditSet",
    "Instruction",
    "Params",
    "Sequence",
    "compress",
    "decompress",
    "load_sequence",
    "normalize",
    "parse",
    "reconstruct",
    "segment",
]
