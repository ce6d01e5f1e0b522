"""Tabulate degrees n carrying weight-one single-orbit 3-blocks of A_n and 2.A_n.

    python scripts/first_occurrences.py --max-n 60 --jobs 4
"""

import argparse

from blockcore.blocks import classify_single_orbit, first_occurrences


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    alt = first_occurrences("Alt-1", args.max_n, jobs=args.jobs)
    spin = first_occurrences("Spin-2", args.max_n, jobs=args.jobs)
    print(f"Alt-1  (A_n, self-conjugate 3-core): {alt}")
    print(f"Spin-2 (2.A_n, 3-bar-core):          {spin}")
    print()
    print("n\tcase\tcore\tsign\tl")
    for n in sorted(set(alt) | set(spin)):
        for h in classify_single_orbit(n, 3):
            d = h.descriptor
            sign = "" if d.sign is None else f"{d.sign:+d}"
            print(f"{n}\t{h.case_id}\t{d.core}\t{sign}\t{h.l}")


if __name__ == "__main__":
    main()
