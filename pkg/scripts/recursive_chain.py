"""Chain recursive extensions starting from a shortest-length system.

Each step takes the current Z_2^n x Z_{k+1} x Z_{l+1} system, builds an
(m, n+k+l)-pairs-triples design with the smallest feasible m, extends, and
moves the new binary coordinates in front of the two non-binary ones.

    python scripts/recursive_chain.py --k 3 --l 3 --steps 2
"""

import argparse
import time

from msts import (
    ExtensionPlan,
    canonicalize_alphabet,
    construct_ptd,
    construct_shortest,
    extend,
    ptd_exists,
    verify_msts,
)
from msts.verifier import expected_count


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--l", type=int, default=3)
    ap.add_argument("--steps", type=int, default=2)
    ap.add_argument("--budget", type=int, default=500_000)
    args = ap.parse_args()

    design = construct_shortest(args.k, args.l)
    for step in range(args.steps + 1):
        n, k, l = design.alphabet.shape()
        ok = verify_msts(design).accepted
        print(f"step {step}: n={n} k={k} l={l} codewords={len(design)} expected={expected_count(k, l, n)} verified={ok}")
        if step == args.steps:
            break
        r = n + k + l
        m = r + 1
        while not ptd_exists(m, r):
            m += 2
        t0 = time.perf_counter()
        ptd = construct_ptd(m, r, budget=args.budget)
        if ptd is None:
            print(f"  search budget exhausted for ({m},{r})")
            break
        print(f"  ({m},{r})-pairs-triples design with {len(ptd.triples)} triples in {time.perf_counter() - t0:.2f}s")
        design = canonicalize_alphabet(extend(ExtensionPlan(design, ptd)))


if __name__ == "__main__":
    main()
