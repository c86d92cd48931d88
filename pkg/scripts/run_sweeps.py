#!/usr/bin/env python3
"""Run every claim sweep and write one JSON report per family.

    python3 scripts/run_sweeps.py --out results/ --jobs 4

Bounds default to the certification bounds; exit status is 1 if any sweep
finds a counterexample.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from ct3.verifier import inclusion_check, sweep_cA, sweep_cAn, sweep_cD, sweep_cD2, sweep_smooth

RUNS = {
    "smooth": (sweep_smooth, 10, 500),
    "cA": (sweep_cA, 30, 2000),
    "cAn": (sweep_cAn, 40, 2000),
    "cD": (sweep_cD, 40, 3000),
    "cD2": (sweep_cD2, 40, 3000),
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--only", choices=sorted(RUNS), action="append", help="restrict to these families")
    parser.add_argument("--inclusion", action="store_true", help="also run inclusion checks at default bounds")
    args = parser.parse_args(argv)

    args.out.mkdir(parents=True, exist_ok=True)
    failed = False
    for family in args.only or RUNS:
        fn, bound, m_max = RUNS[family]
        start = time.perf_counter()
        report = fn(bound, m_max, jobs=args.jobs)
        elapsed = time.perf_counter() - start
        (args.out / f"sweep_{family}.json").write_text(report.dumps() + "\n")
        failed |= not report.ok
        print(
            f"{family:7s} tuples={report.tuples_enumerated:5d} hits={report.premise_hits:8d} "
            f"thresholds={report.conclusions_in_C:6d} counterexamples={len(report.counterexamples)} "
            f"flags={report.flag_count} ({elapsed:.1f}s)"
        )
    if args.inclusion:
        for family in ("cA", "cAn", "cD", "cD2"):
            report = inclusion_check(family, jobs=args.jobs)
            (args.out / f"inclusion_{family}.json").write_text(report.dumps() + "\n")
            failed |= not report.ok
            print(f"inclusion {family:4s} thresholds={report.conclusions_in_C} violations={len(report.counterexamples)}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
