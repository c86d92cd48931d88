"""Command-line interface.

Usage:
    ct3 member 7/19 --set c
    ct3 enumerate --lo 1/3 --hi 1/2 --max-den 44 --format table
    ct3 convert --from c 3,4,1,4
    ct3 witness 3,4,1,4 --certify
    ct3 verify cd --r-max 40 --m-max 3000 --jobs 4
    ct3 table13 --cache .ct3cache

JSON results are wrapped in an envelope {schema_version, command, result,
elapsed_ms}; rationals always appear as exact "a/m" strings.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import shlex
import sys
import time
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .arith import format_rational, parse_rational
from .thresholds import (
    CParams,
    HT2Params,
    c_member,
    c_to_ht2,
    enumerate_interval,
    ht2_member,
    ht2_to_c,
    t3_classify,
)
from .verifier import DEFAULT_M_MAX, DEFAULT_R_MAX, FAMILIES
from .witness import build_witness, certify_witness

__all__ = ["main", "run", "SCHEMA_VERSION", "table13_rows", "EXIT_OK", "EXIT_USAGE", "EXIT_COUNTEREXAMPLE"]

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 2, 3
CACHE_ENV = "CT3_CACHE"

VERIFY_FAMILIES = {"smooth": "smooth", "ca": "cA", "can": "cAn", "cd": "cD", "cd2": "cD2"}
TABLE13_ARGS = (Fraction(1, 3), Fraction(1, 2), 44, 10)


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# argument parsing


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _int_list(text: str, length: int = 4) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected {length} comma-separated integers, got {text!r}") from None
    if len(vals) != length:
        raise argparse.ArgumentTypeError(f"expected {length} comma-separated integers, got {len(vals)}")
    return vals


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit code 2 without argparse's own sys.exit
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ct3", description="Exact arithmetic for threefold canonical thresholds.")
    parser.add_argument("--version", action="version", version=f"ct3 {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("member", help="decide membership of a rational in C, HT2 or the full threshold set")
    p.add_argument("value", type=_rational)
    p.add_argument("--set", dest="which", choices=("c", "ht2", "t3"), default="c")
    p.add_argument("--k-max", type=_positive, default=None, help="search bound (default: the denominator)")

    p = sub.add_parser("enumerate", help="list elements of C in an open interval")
    p.add_argument("--lo", type=_rational, required=True)
    p.add_argument("--hi", type=_rational, required=True)
    p.add_argument("--max-den", type=_positive, required=True)
    p.add_argument("--k-max", type=_positive, default=None)
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--cache", default=None, help="directory for cached results")

    p = sub.add_parser("convert", help="convert between C and HT2 parameterizations")
    p.add_argument("--from", dest="source", choices=("c", "ht2"), required=True)
    p.add_argument("params", type=_int_list)

    p = sub.add_parser("witness", help="build (and optionally certify) the witness divisor for C parameters")
    p.add_argument("params", type=_int_list, help="alpha,beta,p1,p2")
    p.add_argument("--certify", action="store_true")

    p = sub.add_parser("verify", help="run an exhaustive claim sweep")
    p.add_argument("family", choices=tuple(VERIFY_FAMILIES))
    p.add_argument("--r-max", type=_positive, default=None, help="parameter bound (alpha_max for smooth)")
    p.add_argument("--m-max", type=_positive, default=None)
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("table13", help="elements of C in (1/3, 1/2) with denominator <= 44")
    p.add_argument("--cache", default=None)
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    return parser


# --------------------------------------------------------------------------
# cache


def _cache_dir(flag: Optional[str]) -> Optional[Path]:
    env = os.environ.get(CACHE_ENV)
    chosen = env if env else flag
    return Path(chosen) if chosen else None


def _cache_key(lo: Fraction, hi: Fraction, max_den: int, k_max: Optional[int]) -> dict:
    return {
        "lo": format_rational(lo),
        "hi": format_rational(hi),
        "max_den": max_den,
        "k_max": k_max,
        "code_version": __version__,
    }


def _cache_path(directory: Path, key: dict) -> Path:
    digest = hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()[:24]
    return directory / f"enum-{digest}.json"


def _cache_read(directory: Optional[Path], key: dict) -> Optional[list]:
    if directory is None:
        return None
    path = _cache_path(directory, key)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        return None
    except (OSError, ValueError):
        return None  # unreadable or corrupt: recompute
    if not isinstance(data, dict) or data.get("key") != key or not isinstance(data.get("records"), list):
        return None
    return data["records"]


def _cache_write(directory: Optional[Path], key: dict, records: list, stderr=None) -> None:
    if directory is None:
        return
    try:
        directory.mkdir(parents=True, exist_ok=True)
        path = _cache_path(directory, key)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"key": key, "records": records}, sort_keys=True), encoding="utf-8")
        tmp.replace(path)
    except OSError as exc:
        print(f"ct3: warning: cache directory {directory} is not writable ({exc}); continuing without cache", file=stderr or sys.stderr)


# --------------------------------------------------------------------------
# payloads


def _record(q: Fraction, witnesses: Sequence[CParams]) -> dict:
    ht2 = []
    for w in witnesses:
        if w.value < 1:
            h = c_to_ht2(w).to_json()
            if h not in ht2:
                ht2.append(h)
    return {"value": format_rational(q), "witnesses": [w.to_json() for w in witnesses], "ht2": ht2}


def enumerate_records(
    lo: Fraction, hi: Fraction, max_den: int, k_max: Optional[int], cache: Optional[Path], stderr=None
) -> list:
    key = _cache_key(lo, hi, max_den, k_max)
    cached = _cache_read(cache, key)
    if cached is not None:
        return cached
    records = [_record(q, ws) for q, ws in enumerate_interval(lo, hi, max_den, k_max)]
    _cache_write(cache, key, records, stderr)
    return records


def _flat_rows(records: list) -> list[dict]:
    return [{"value": r["value"], **w} for r in records for w in r["witnesses"]]


def _render(rows: list[dict], columns: Sequence[str], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    widths = {c: max([len(c)] + [len(str(r[c])) for r in rows]) for c in columns}
    lines = ["  ".join(c.rjust(widths[c]) for c in columns)]
    lines += ["  ".join(str(r[c]).rjust(widths[c]) for c in columns) for r in rows]
    return "\n".join(lines) + "\n"


def _family_row(alpha: int, beta: int, p1: int, p2: int) -> bool:
    """First-row family of the (1/3, 1/2) table: p2 = 3, 0 <= p1 <= 2, 1 <= alpha <= 3, (2 - p1) alpha < beta."""
    return p2 == 3 and 0 <= p1 <= 2 and 1 <= alpha <= 3 and (2 - p1) * alpha < beta and gcd(alpha, beta) == 1


def table13_rows(cache: Optional[Path] = None, stderr=None) -> dict:
    lo, hi, max_den, k_max = TABLE13_ARGS
    records = enumerate_records(lo, hi, max_den, k_max, cache, stderr)
    rows = []
    for r in records:
        for w in r["witnesses"]:
            rows.append({"alpha": w["alpha"], "beta": w["beta"], "p1": w["p1"], "p2": w["p2"], "ct": r["value"]})
    rows.sort(key=lambda r: (r["alpha"], r["beta"], r["p2"], r["p1"]))
    family, family_errors = [], []
    for r in rows:
        if not _family_row(r["alpha"], r["beta"], r["p1"], r["p2"]):
            continue
        a, b, p1 = r["alpha"], r["beta"], r["p1"]
        closed = Fraction(1, 3) + Fraction((3 - p1) * a, 3 * (p1 * a + 3 * b))
        if format_rational(closed) != r["ct"]:
            family_errors.append(r)
        family.append(r)
    # every family member whose value has denominator <= 44 must be in the table
    present = {(r["alpha"], r["beta"], r["p1"], r["p2"]) for r in rows}
    missing = []
    for a in range(1, 4):
        for p1 in range(0, 3):
            for b in range(a, 3 * 3 * max_den):
                if not _family_row(a, b, p1, 3):
                    continue
                q = Fraction(a + b, p1 * a + 3 * b)
                if q.denominator <= max_den and (a + b) // q.numerator <= k_max and (a, b, p1, 3) not in present:
                    missing.append({"alpha": a, "beta": b, "p1": p1, "p2": 3})
    return {
        "interval": [format_rational(lo), format_rational(hi)],
        "max_den": max_den,
        "k_max": k_max,
        "columns": ["alpha", "beta", "p1", "p2", "ct"],
        "rows": rows,
        "values": len(records),
        "family": {
            "predicate": "p2 = 3, 0 <= p1 <= 2, 1 <= alpha <= 3, (2 - p1) alpha < beta, gcd(alpha, beta) = 1",
            "closed_form": "ct = 1/3 + (3 - p1) alpha / (3 (p1 alpha + 3 beta))",
            "rows": len(family),
            "closed_form_mismatches": family_errors,
            "missing_from_table": missing,
        },
    }


# --------------------------------------------------------------------------
# verbs


def _member(args) -> tuple[dict, int]:
    q = args.value
    if args.which == "t3":
        if not 0 <= q <= 1:
            raise UsageError(f"value {format_rational(q)} outside [0, 1]")
        v = t3_classify(q, args.k_max)
        return {
            "value": format_rational(q),
            "set": "t3",
            "member": v.member,
            "witness": v.witness.to_json() if v.witness is not None else None,
            "tag": v.exceptional,
            "search_bound": v.search_bound_used,
        }, EXIT_OK
    if not 0 < q <= 1:
        raise UsageError(f"value {format_rational(q)} outside (0, 1]")
    bound = args.k_max if args.k_max is not None else max(2, q.denominator)
    w = c_member(q, bound) if args.which == "c" else ht2_member(q, bound)
    return {
        "value": format_rational(q),
        "set": args.which,
        "member": w is not None,
        "witness": w.to_json() if w is not None else None,
        "tag": None,
        "search_bound": bound,
    }, EXIT_OK


def _check_interval(lo: Fraction, hi: Fraction) -> None:
    if not 0 <= lo < hi <= 1:
        raise UsageError(f"need 0 <= lo < hi <= 1, got ({format_rational(lo)}, {format_rational(hi)})")


def _convert(args) -> tuple[dict, int]:
    try:
        if args.source == "c":
            src = CParams(*args.params)
            out = c_to_ht2(src)
        else:
            src = HT2Params(*args.params)
            out = ht2_to_c(src)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {
        "from": args.source,
        "input": src.to_json(),
        "output": out.to_json(),
        "value": format_rational(out.value),
        "value_preserved": src.value == out.value,
    }, EXIT_OK


def _witness(args) -> tuple[dict, int]:
    p = CParams(*args.params)
    try:
        if args.certify:
            report = certify_witness(p)
            return {"ok": report.ok, **report.to_json()}, EXIT_OK
        f, case = build_witness(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {
        "params": p.to_json(),
        "case": case.value,
        "f": f.to_json(),
        "f_text": str(f),
        "value": format_rational(p.value),
    }, EXIT_OK


def _verify(args) -> tuple[dict, int]:
    family = VERIFY_FAMILIES[args.family]
    if family == "smooth":
        bound = args.r_max or 10
        m_max = args.m_max or 500
    else:
        bound = args.r_max or DEFAULT_R_MAX
        m_max = args.m_max or DEFAULT_M_MAX
    report = FAMILIES[family](bound, m_max, args.jobs)
    return report.to_json(), EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """Run one CLI invocation; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        text: Optional[str] = None
        if args.verb == "member":
            result, code = _member(args)
        elif args.verb == "enumerate":
            _check_interval(args.lo, args.hi)
            records = enumerate_records(args.lo, args.hi, args.max_den, args.k_max, _cache_dir(args.cache), stderr)
            result, code = records, EXIT_OK
            if args.format != "json":
                text = _render(_flat_rows(records), ("value", "alpha", "beta", "p1", "p2"), args.format)
        elif args.verb == "convert":
            result, code = _convert(args)
        elif args.verb == "witness":
            result, code = _witness(args)
        elif args.verb == "verify":
            result, code = _verify(args)
        else:
            result, code = table13_rows(_cache_dir(args.cache), stderr), EXIT_OK
            if args.format != "json":
                text = _render(result["rows"], result["columns"], args.format)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    if text is not None:
        stdout.write(text)
    else:
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": shlex.join(["ct3", *argv]),
            "result": result,
            "elapsed_ms": int((time.perf_counter() - start) * 1000),
        }
        stdout.write(json.dumps(envelope, sort_keys=False) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
