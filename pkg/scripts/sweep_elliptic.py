"""Check #C(F_p) = h and the point -> ideal homomorphism for every
squarefree monic cubic over the given primes."""
import argparse
import time

from ffclass.acceptance import squarefree_monics
from ffclass.elliptic import EllipticCurve, ec_verify_isomorphism
from ffclass.ff import PrimeField


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("primes", nargs="*", type=int, default=[3, 5, 7])
    args = ap.parse_args()
    for p in args.primes:
        t0 = time.perf_counter()
        bad, sizes = 0, {}
        curves = squarefree_monics(p, 3)
        for alpha in curves:
            rep = ec_verify_isomorphism(EllipticCurve(PrimeField(p), alpha))
            sizes[rep.n_points] = sizes.get(rep.n_points, 0) + 1
            if not rep.ok:
                bad += 1
                print(f"p={p} alpha={alpha}: {rep.violations[:3]}")
        print(f"p={p}: {len(curves)} curves, {bad} failures, point counts {dict(sorted(sizes.items()))}, "
              f"{time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
