"""Compressed size vs. edit rate on synthetic pairs.

    python scripts/rate_sweep.py --length 1000000 --trials 3
"""
import argparse
import statistics
import time

from refgc.codec import compress, decode, decompress
from refgc.mutate import mutate, random_sequence
from refgc.seqio import Sequence


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--length", type=int, default=1_000_000)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--indel-fraction", type=float, default=0.1, help="ins and del rate as a fraction of sub rate")
    ap.add_argument("--max-indel", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'sub rate':>9} {'mean bytes':>11} {'ratio':>8} {'S frac':>7} {'sec':>6}")
    for rate in (0.0001, 0.001, 0.01, 0.02):
        sizes, fracs, t0 = [], [], time.perf_counter()
        for trial in range(args.trials):
            seed = args.seed + trial
            ref = random_sequence(args.length, seed)
            indel = rate * args.indel_fraction
            tgt, _ = mutate(ref, rate, indel, indel, args.max_indel, seed + 10_000)
            X, Y = Sequence(tgt), Sequence(ref)
            blob = compress(X, Y)
            assert decompress(blob, Y) == X
            _, s, i, d = decode(blob)[0].counts
            sizes.append(len(blob))
            fracs.append(s / max(1, s + i + d))
        mean = statistics.mean(sizes)
        el = (time.perf_counter() - t0) / args.trials
        print(f"{rate:>9.4%} {mean:>11.0f} {args.length / mean:>8.1f} {statistics.mean(fracs):>7.1%} {el:>6.2f}")


if __name__ == "__main__":
    main()
