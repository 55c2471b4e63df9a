#!/usr/bin/env python3
"""Sweep random space pairs and compare distances at both levels.

Writes a JSON report (and optionally CSV) and prints a short summary.
A nonzero violation count would contradict a proved theorem, so the
script exits 1 in that case.
"""

import argparse
import sys

from mslab import DEFAULT_NODE_BUDGET, format_rational, nonexpansion_sweep
from mslab.io import atomic_write_text, dumps, sweep_report_csv, sweep_report_doc


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=300)
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-entry", type=int, default=9)
    parser.add_argument("--pair-mode", default="random",
                        choices=["random", "identical", "one_point"])
    parser.add_argument("--node-budget", type=int,
                        default=DEFAULT_NODE_BUDGET)
    parser.add_argument("--json-out", default="sweep.json")
    parser.add_argument("--csv-out", default=None)
    args = parser.parse_args()

    report = nonexpansion_sweep(
        args.count, args.max_n, args.seed, args.max_entry,
        pair_mode=args.pair_mode, node_budget=args.node_budget)
    atomic_write_text(args.json_out, dumps(sweep_report_doc(report)))
    if args.csv_out:
        atomic_write_text(args.csv_out, sweep_report_csv(report))

    s = report.summary
    exact = sum(1 for r in report.rows if r.status == "exact")
    print(f"rows {len(report.rows)} (exact {exact}), "
          f"violations {s.violations}")
    if s.min_gap is not None:
        print(f"gap range [{format_rational(s.min_gap)}, "
              f"{format_rational(s.max_gap)}]")
    print(f"wrote {args.json_out}")
    return 1 if s.violations else 0


if __name__ == "__main__":
    sys.exit(main())
