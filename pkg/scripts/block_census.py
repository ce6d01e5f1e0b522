"""Count blocks of S_n and A_n by weight and check that they exhaust all partitions.

    python scripts/block_census.py --n 30 --p 3
"""

import argparse
from collections import Counter

from blockcore import counting
from blockcore.blocks import blocks_An, blocks_Sn


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--p", type=int, default=3)
    args = ap.parse_args()
    n, p = args.n, args.p

    sym = blocks_Sn(n, p)
    alt = blocks_An(n, p)
    by_weight = Counter(b.weight for b in sym)
    covered = sum(counting.k(p, b.weight) for b in sym)
    print(f"S_{n}, p={p}: {len(sym)} blocks; partitions covered {covered} of p({n})={counting.partition_count(n)}")
    print("weight\t#S_n blocks\tl(S_n)\t#A_n labels (sc)\tl(A_n) non-sc / sc")
    for w in sorted(by_weight):
        a = [b for b in alt if b.weight == w]
        sc = [b for b in a if b.self_conjugate]
        l_sc = sorted({b.l for b in sc})
        l_nsc = sorted({b.l for b in a if not b.self_conjugate})
        print(f"{w}\t{by_weight[w]}\t{counting.l_block_Sn(p, w) if w else 1}\t{len(a)} ({len(sc)})\t{l_nsc} / {l_sc}")


if __name__ == "__main__":
    main()
