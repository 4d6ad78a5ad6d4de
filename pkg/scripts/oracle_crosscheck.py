"""Compare brute-force SL_2 orbit counts with the enumerated class number."""
import argparse
import time

from ffclass.acceptance import oracle_check, squarefree_monics


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("primes", nargs="*", type=int, default=[3, 5])
    ap.add_argument("--degree-bound", type=int, default=3)
    args = ap.parse_args()
    for p in args.primes:
        t0 = time.perf_counter()
        alphas = squarefree_monics(p, 3)
        failures = []
        for alpha in alphas:
            failures += oracle_check(alpha, args.degree_bound)
        for f in failures:
            print(f)
        print(f"p={p}: {len(alphas)} cubics, {len(failures)} failures, "
              f"{time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
