"""How window width and re-centering period affect size under indel drift.

    python scripts/window_sweep.py --length 500000
"""
import argparse

from refgc.codec import compress
from refgc.mapper import parse
from refgc.mutate import mutate, random_sequence
from refgc.params import Params
from refgc.seqio import Sequence


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--length", type=int, default=500_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--ins-rate", type=float, default=0.002)
    ap.add_argument("--del-rate", type=float, default=0.001)
    ap.add_argument("--max-indel", type=int, default=30)
    args = ap.parse_args()

    ref = random_sequence(args.length, args.seed)
    tgt, rep = mutate(ref, 0.005, args.ins_rate, args.del_rate, args.max_indel, args.seed + 1)
    X, Y = Sequence(tgt), Sequence(ref)
    print("mutations:", dict(rep.counts))
    print(f"{'L=R':>6} {'M':>5} {'phrases':>8} {'bytes':>8}")
    for half in (50, 200, 1000):
        for period in (1, 10, 100, 1000):
            p = Params(left=half, right=half, period=period)
            print(f"{half:>6} {period:>5} {len(parse(X, Y, p)):>8} {len(compress(X, Y, p)):>8}")


if __name__ == "__main__":
    main()
