#!/usr/bin/env python3
"""Print the elements of C in (1/3, 1/2) with denominator <= 44 as a table.

    python3 scripts/table13.py [--format table|csv|json] [--cache DIR]

Rows are (alpha, beta, p1, p2, ct) sorted by (alpha, beta, p2, p1); the
p2 = 3 closed-form family is checked against the enumeration.
"""

import argparse
import json
import sys
from pathlib import Path

from ct3.cli import _render, table13_rows


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("table", "csv", "json"), default="table")
    parser.add_argument("--cache", type=Path, default=None)
    args = parser.parse_args(argv)

    result = table13_rows(args.cache)
    if args.format == "json":
        print(json.dumps(result, indent=2))
    else:
        sys.stdout.write(_render(result["rows"], result["columns"], args.format))
    fam = result["family"]
    print(
        f"# {len(result['rows'])} rows, {result['values']} distinct values; family rows {fam['rows']}, "
        f"closed-form mismatches {len(fam['closed_form_mismatches'])}, missing {len(fam['missing_from_table'])}",
        file=sys.stderr,
    )
    return 1 if fam["closed_form_mismatches"] or fam["missing_from_table"] else 0


if __name__ == "__main__":
    sys.exit(main())
