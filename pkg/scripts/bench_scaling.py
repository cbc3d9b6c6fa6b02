#!/usr/bin/env python3
"""Space and query steps as n doubles; writes CSV to stdout, peaks to stderr.

    python3 scripts/bench_scaling.py --sizes 50 100 200 --seeds 1 2 3
"""

import argparse
import csv
import sys

from cfsindex.cli import BENCH_COLUMNS
from cfsindex.experiments import ScalingConfig, peak_steps, run_scaling


def main() -> int:
    defaults = ScalingConfig()
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(defaults.sizes))
    ap.add_argument("--seeds", type=int, nargs="+", default=list(defaults.seeds))
    ap.add_argument("--m-factor", type=int, default=defaults.m_factor)
    ap.add_argument("--queries", type=int, default=defaults.queries)
    args = ap.parse_args()
    config = ScalingConfig(tuple(args.sizes), tuple(args.seeds), args.m_factor, defaults.sigma, args.queries)
    rows = run_scaling(config)
    writer = csv.DictWriter(sys.stdout, fieldnames=["target_n", "seed", *BENCH_COLUMNS])
    writer.writeheader()
    writer.writerows(rows)
    peaks = peak_steps(rows)
    sizes = sorted(peaks)
    for a, b in zip(sizes, sizes[1:]):
        print(f"n {a}->{b}: peak max_steps {peaks[a]} -> {peaks[b]} (x{peaks[b] / peaks[a]:.2f})", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
