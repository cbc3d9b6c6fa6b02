#!/usr/bin/env python3
"""Oracle-equivalence sweep: index vs brute force on a seeded random corpus.

    python3 scripts/run_check.py --trials 500 --max-n 30
"""

import argparse
import sys

from cfsindex.experiments import CheckConfig, run_check


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    defaults = CheckConfig()
    ap.add_argument("--trials", type=int, default=defaults.trials)
    ap.add_argument("--seed", type=int, default=defaults.seed)
    ap.add_argument("--max-n", type=int, default=defaults.max_n)
    ap.add_argument("--sigma", type=int, default=defaults.sigma)
    args = ap.parse_args()
    summary = run_check(CheckConfig(args.trials, args.seed, args.max_n, args.sigma))
    print("\n".join(summary.lines()))
    return 1 if summary.mismatches or not summary.space_ok else 0


if __name__ == "__main__":
    sys.exit(main())
