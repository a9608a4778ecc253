"""Construct and verify shortest-length systems for every admissible (k, l) up to a bound.

    python scripts/shortest_table.py --max-n 120
"""

import argparse
import time

from msts import construct_shortest, verify_msts
from msts.verifier import expected_count


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=100, help="largest n = k*l to build")
    args = ap.parse_args()

    admissible = [x for x in range(1, args.max_n + 1) if x % 6 in (1, 3)]
    print(f"{'k':>3} {'l':>3} {'n':>5} {'codewords':>10} {'expected':>9} {'ok':>3} {'sec':>6}")
    for k in admissible:
        for l in admissible:
            if l > k or k * l > args.max_n:
                continue
            t0 = time.perf_counter()
            d = construct_shortest(k, l)
            ok = verify_msts(d).accepted
            dt = time.perf_counter() - t0
            n = k * l
            print(f"{k:>3} {l:>3} {n:>5} {len(d):>10} {expected_count(k, l, n):>9} {'yes' if ok else 'NO':>3} {dt:>6.2f}")


if __name__ == "__main__":
    main()
