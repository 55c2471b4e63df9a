#!/usr/bin/env python3
"""Probe general-position pairs for distance gaps between the two levels.

Whether the gap is always zero on such pairs is an open question; this
script only gathers evidence. It prints the gap distribution and, when a
positive gap shows up, the witness pair of matrices.
"""

import argparse
import sys
from collections import Counter

from mslab import DEFAULT_NODE_BUDGET, format_rational, isometry_probe
from mslab.io import atomic_write_text, dumps, sweep_report_doc


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-entry", type=int, default=10)
    parser.add_argument("--node-budget", type=int,
                        default=DEFAULT_NODE_BUDGET)
    parser.add_argument("--json-out", default="probe.json")
    args = parser.parse_args()

    report = isometry_probe(
        args.count, args.n, args.seed,
        max_entry=args.max_entry, node_budget=args.node_budget)
    atomic_write_text(args.json_out, dumps(sweep_report_doc(report)))

    gaps = Counter(r.gap for r in report.rows if r.status == "exact")
    print(f"rows {len(report.rows)}, violations "
          f"{report.summary.violations}")
    for gap in sorted(gaps):
        print(f"  gap {format_rational(gap)}: {gaps[gap]} pair(s)")
    w = report.largest_gap_witness
    if w is not None and report.summary.max_gap > 0:
        print(f"largest gap at pair {w.pair_id}:")
        print(f"  X: {[list(map(str, row)) for row in w.x.d]}")
        print(f"  Y: {[list(map(str, row)) for row in w.y.d]}")
    print(f"wrote {args.json_out}")
    return 1 if report.summary.violations else 0


if __name__ == "__main__":
    sys.exit(main())
