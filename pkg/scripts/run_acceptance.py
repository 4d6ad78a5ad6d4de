"""Print one PASS/FAIL line per acceptance criterion.

    python3 scripts/run_acceptance.py [--seed N] [--quick] [--json out.json]
"""
import argparse
import json
import sys

from ffclass.acceptance import run_all
from ffclass.cli import default_seed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=default_seed())
    ap.add_argument("--quick", action="store_true", help="sampled genus and oracle sweeps")
    ap.add_argument("--json", help="also write results here")
    args = ap.parse_args()
    results = run_all(seed=args.seed, quick=args.quick)
    for r in results:
        print(r.line())
        for f in r.failures[:5]:
            print("    " + f)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"seed": args.seed, "criteria": [r.as_dict() for r in results]}, fh, indent=2)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
