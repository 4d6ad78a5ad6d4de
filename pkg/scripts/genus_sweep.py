"""Genus postconditions (2^(r-1) genera of equal size, principal genus =
squares) over all squarefree monic alpha of the given degree and prime."""
import argparse
import collections
import time

from ffclass.acceptance import squarefree_monics
from ffclass.classgroup import cg_enumerate, ramified_primes
from ffclass.errors import GenusConsistencyError
from ffclass.genus import gen_partition


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, nargs="+", default=[3, 5, 7])
    ap.add_argument("--degree", type=int, nargs="+", default=[3])
    args = ap.parse_args()
    for p in args.p:
        for d in args.degree:
            t0 = time.perf_counter()
            hist, bad = collections.Counter(), 0
            alphas = squarefree_monics(p, d)
            for alpha in alphas:
                try:
                    part = gen_partition(cg_enumerate(alpha))
                except GenusConsistencyError as exc:
                    bad += 1
                    print(f"p={p} alpha={alpha}: {exc}")
                    continue
                hist[(len(ramified_primes(alpha)), part.count)] += 1
            print(f"p={p} deg={d}: {len(alphas)} alphas, {bad} failures, "
                  f"(r, genera) {dict(sorted(hist.items()))}, {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
