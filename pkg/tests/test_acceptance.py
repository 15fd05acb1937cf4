"""Exit criteria. Each test appends one PASS/FAIL line to the summary."""
import math
import random
import time
from contextlib import contextmanager

import pytest

from refgc.bitio import BitReader
from refgc.cli import inspect_report, main
from refgc.codec import compress, decode, decompress, encode_edit_set
from refgc.golomb import golomb_decode, golomb_encode
from refgc.huffman import decode_codebook, encode_codebook, huffman_decode, huffman_encode
from refgc.mapper import Instruction, parse
from refgc.mutate import random_sequence, scatter_substitutions
from refgc.params import Params
from refgc.segmenter import EditSet, segment
from refgc.seqio import Sequence, load_sequence

from conftest import ACCEPTANCE_LINES, EX_REFERENCE, EX_TARGET


@contextmanager
def criterion(label):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as e:
        ACCEPTANCE_LINES.append(f"FAIL  {label} ({type(e).__name__}: {str(e)[:120]})")
        print(ACCEPTANCE_LINES[-1])
        raise
    ACCEPTANCE_LINES.append(f"PASS  {label} [{time.perf_counter() - t0:.2f}s]")
    print(ACCEPTANCE_LINES[-1])


def test_1_golden_parse():
    with criterion("1 golden parse of Example 1, < 1 ms"):
        t, r = Sequence.from_str(EX_TARGET), Sequence.from_str(EX_REFERENCE)
        parse(t, r)  # warm-up
        best = math.inf
        for _ in range(20):
            t0 = time.perf_counter()
            f = parse(t, r)
            best = min(best, time.perf_counter() - t0)
        assert f[:4] == [(1, 4, "C"), (6, 6, "T"), (12, 5, "N"), (14, 2, "N")]
        assert best < 1e-3, f"parse took {best * 1e3:.3f} ms"


def test_2_golden_segmentation():
    with criterion("2 golden segmentation F1=(1,16,N) S1=(5,C) I1=(11,T) F2=(14,2,N)"):
        t, r = Sequence.from_str(EX_TARGET), Sequence.from_str(EX_REFERENCE)
        e = segment(parse(t, r), r)
        assert e.F[:2] == [(1, 16, "N"), (14, 2, "N")]
        assert e.S == [(5, "C")] and e.I == [(11, "T")] and e.D == []


def test_3_lossless_roundtrip(tmp_path, capsys):
    with criterion("3 lossless round-trip, 200 mutated pairs 1 kB-1 MB, < 5 min"):
        rng = random.Random(20240601)
        t0 = time.perf_counter()
        ref_path, tgt_path = tmp_path / "ref", tmp_path / "tgt"
        for trial in range(200):
            n = int(round(10 ** rng.uniform(3, 6)))
            seed = rng.randrange(2**32)
            sub, ins, dele = rng.uniform(0, 0.02), rng.uniform(0, 0.002), rng.uniform(0, 0.002)
            ref_path.write_bytes(random_sequence(n, seed))
            code = main([
                "mutate", "-r", str(ref_path), "-o", str(tgt_path), "--raw",
                "--sub-rate", repr(sub), "--ins-rate", repr(ins), "--del-rate", repr(dele),
                "--max-indel", "10", "--seed", str(seed),
            ])
            assert code == 0
            y = load_sequence(ref_path, "raw")
            x = load_sequence(tgt_path, "raw")
            got = decompress(compress(x, y), y)
            assert got.chars == x.chars, f"trial {trial} seed {seed} n {n} failed"
        capsys.readouterr()
        elapsed = time.perf_counter() - t0
        assert elapsed < 300, f"{elapsed:.1f}s"


def test_4_codec_inverses():
    with criterion("4 Golomb (10k ints x r 0..15) and Huffman (1k multisets) inverses, < 10 s"):
        rng = random.Random(4)
        t0 = time.perf_counter()
        # small enough that r=0 (pure unary) stays tractable
        ints = [rng.randrange(0, 1 << rng.randrange(1, 11)) for _ in range(10_000)]
        for r in range(16):
            m = 1 << r
            bits = "".join(golomb_encode(v, m) for v in ints)
            reader = BitReader(bits)
            assert [golomb_decode(reader, m) for _ in ints] == ints
            assert reader.remaining() == 0
        for _ in range(1000):
            values = [rng.randrange(0, rng.choice([2, 10, 1000, 10**9])) for _ in range(rng.randrange(1, 200))]
            book, payload = huffman_encode(values)
            rebuilt = decode_codebook(encode_codebook(book))
            assert huffman_decode(rebuilt, payload, len(values)) == values
        assert time.perf_counter() - t0 < 10


@pytest.fixture(scope="module")
def ten_mb_substitutions():
    n, count = 10_000_000, 10_000
    ref = random_sequence(n, 55)
    tgt, positions = scatter_substitutions(ref, count, min_gap=32, seed=56)
    X, Y = Sequence(tgt), Sequence(ref)
    blob = compress(X, Y)
    return X, Y, positions, blob


def test_5_desk_scale_effectiveness(ten_mb_substitutions):
    with criterion("5 10 MB ref, 10k isolated SNPs: size <= 20 B/edit + 512, <= 2x oracle, < 1% raw"):
        X, Y, positions, blob = ten_mb_substitutions
        # oracle: the known edit set fed straight to the entropy coder
        known = EditSet(F=[Instruction(1, len(X), None)], S=[(p, chr(X.chars[p - 1])) for p in positions])
        oracle = len(encode_edit_set(known, len(X), Params()))
        size = len(blob)
        assert decompress(blob, Y) == X
        assert size <= 20 * len(positions) + 512, size
        assert size <= 2 * oracle, (size, oracle)
        assert size < 0.01 * len(X), size
        print(f"    size {size} B, oracle {oracle} B, ratio {len(X) / size:.0f}:1")


def test_6_substitution_dominance(ten_mb_substitutions):
    with criterion("6 inspect on criterion-5 input: S fraction 100%, |F| <= |S|+1"):
        _, _, positions, blob = ten_mb_substitutions
        report = inspect_report(blob)
        assert "S fraction:        100.00%" in report
        parts, _ = decode(blob)
        nf, ns, ni, nd = parts.counts
        assert ns == len(positions) and ni == nd == 0
        assert nf <= ns + 1


@pytest.mark.parametrize("n", [1, 1000, 1_000_000, 100_000_000])
def test_7_identical_input(n):
    with criterion(f"7 compress(x, x) < 128 bytes, |x| = {n}"):
        x = Sequence(random_sequence(n, 77))
        blob = compress(x, x)
        assert len(blob) < 128, len(blob)
        assert decompress(blob, x) == x


def test_8_window_resync_after_deletion():
    with criterion("8 single 500-base deletion mid 1 MB: <= 3 instructions, exactly one D"):
        ref = random_sequence(1_000_000, 88)
        mid = len(ref) // 2
        tgt = ref[:mid] + ref[mid + 500 :]
        X, Y = Sequence(tgt), Sequence(ref)
        f = parse(X, Y, Params())
        assert len(f) <= 3, f
        e = segment(f, Y, 1000)
        assert len(e.D) == 1 and e.D[0][1] == 500, e.D
        assert decompress(compress(X, Y), Y) == X
