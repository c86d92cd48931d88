"""Acceptance criteria, one test each, at the full stated bounds.

Every criterion prints a single ``[PASS]``/``[FAIL]`` line (collected into the
pytest terminal summary). Run ``python3 tests/test_acceptance.py`` to print the
lines without pytest.
"""

import os
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ct3.cli import table13_rows  # noqa: E402
from ct3.thresholds import (  # noqa: E402
    accumulation_clusters,
    c_member,
    c_to_ht2,
    enumerate_interval,
    ht2_member,
    ht2_to_c,
    t3_classify,
)
from ct3.verifier import (  # noqa: E402
    DEFAULT_M_MAX,
    DEFAULT_R_MAX,
    inclusion_check,
    sweep_cA,
    sweep_cAn,
    sweep_cD,
    sweep_cD2,
    sweep_smooth,
)
from oracles import TABLE1_ROWS  # noqa: E402

F = Fraction
JOBS = max(1, min(8, os.cpu_count() or 1))
RESULTS: list[str] = []


def report(number: int, name: str, passed: bool, detail: str, elapsed: float) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {number}. {name}: {detail} ({elapsed:.1f}s)"
    RESULTS.append(line)
    print(line)


def reduced(max_den, lo, hi, include_hi=True):
    out = set()
    for m in range(1, max_den + 1):
        for a in range(0, m + 1):
            q = F(a, m)
            if lo < q < hi or (include_hi and q == hi):
                out.add(q)
    return sorted(out)


def criterion_1():
    t0 = time.perf_counter()
    rows = {(r["alpha"], r["beta"], r["p1"], r["p2"]): F(r["ct"]) for r in table13_rows()["rows"]}
    elapsed = time.perf_counter() - t0
    missing = [p for p, ct in TABLE1_ROWS.items() if rows.get(p) != F(ct)]
    ok = not missing and elapsed < 10
    return ok, f"{len(TABLE1_ROWS) - len(missing)}/{len(TABLE1_ROWS)} published rows present among {len(rows)}", elapsed


def criterion_2():
    t0 = time.perf_counter()
    family = {F(1, 2) + F(1, p) for p in range(3, 241)}
    expected = sorted(q for q in family if q.denominator <= 60)
    got = [q for q, _ in enumerate_interval(F(1, 2), F(1), 60)]
    t3 = [q for q in reduced(60, F(1, 2), F(1), include_hi=False) if t3_classify(q).member]
    elapsed = time.perf_counter() - t0
    ok = got == expected and t3 == sorted(expected + [F(4, 5)]) and elapsed < 30
    return ok, f"{len(got)} values in C, t3 adds {[str(q) for q in sorted(set(t3) - set(got))]}", elapsed


def criterion_3():
    t0 = time.perf_counter()
    disagree, bad_conv, members = [], [], 0
    for q in reduced(60, F(0), F(1)):
        c, h = c_member(q), ht2_member(q)
        if (c is None) != (h is None):
            disagree.append(q)
            continue
        if c is None:
            continue
        members += 1
        if q < 1 and (c_to_ht2(c).value != q or ht2_to_c(h).value != q):
            bad_conv.append(q)
    elapsed = time.perf_counter() - t0
    ok = not disagree and not bad_conv and elapsed < 300
    return ok, f"{members} members, {len(disagree)} disagreements, {len(bad_conv)} conversion failures", elapsed


def criterion_4():
    from ct3.thresholds import CParams
    from ct3.witness import certify_witness
    from math import gcd

    t0 = time.perf_counter()
    count, failures = 0, []
    for beta in range(1, 13):
        for alpha in range(1, beta + 1):
            if gcd(alpha, beta) != 1:
                continue
            for p1 in range(0, 13):
                for p2 in range(1, 21):
                    p = CParams(alpha, beta, p1, p2)
                    if not p.is_valid() or p.value > 1:
                        continue
                    count += 1
                    r = certify_witness(p)
                    if not r.ok:
                        failures.append((p.as_tuple(), r.failures))
    elapsed = time.perf_counter() - t0
    return not failures and elapsed < 60, f"{count} parameter sets, {len(failures)} failures", elapsed


def criterion_5():
    t0 = time.perf_counter()
    parts, ok = [], True
    for name, fn, args in [
        ("smooth", sweep_smooth, (10, 500)),
        ("cA", sweep_cA, (30, 2000)),
        ("cAn", sweep_cAn, (40, 2000)),
        ("cD", sweep_cD, (40, 3000)),
        ("cD2", sweep_cD2, (40, 3000)),
    ]:
        s = time.perf_counter()
        rep = fn(*args, jobs=JOBS)
        took = time.perf_counter() - s
        ok = ok and rep.ok and rep.premise_hits > 0 and took < 600
        parts.append(f"{name} {len(rep.counterexamples)} cex/{rep.premise_hits} hits")
    return ok, "; ".join(parts), time.perf_counter() - t0


def criterion_6():
    t0 = time.perf_counter()
    parts, ok = [], True
    for fam in ("cA", "cAn", "cD", "cD2"):
        rep = inclusion_check(fam, DEFAULT_R_MAX, DEFAULT_M_MAX, jobs=JOBS)
        inside = all(0 < q <= F(4, 5) for q in rep.thresholds)
        ok = ok and rep.ok and inside and rep.premise_hits > 0
        parts.append(f"{fam} {rep.conclusions_in_C} thresholds, {len(rep.counterexamples)} violations")
    return ok, "; ".join(parts), time.perf_counter() - t0


def criterion_7():
    t0 = time.perf_counter()
    v = t3_classify(F(4, 5))
    ok = c_member(F(4, 5), 60) is None and v.member and v.exceptional == "four-fifths"
    return ok, "4/5 outside C, tagged four-fifths in the full set", time.perf_counter() - t0


def criterion_8():
    t0 = time.perf_counter()
    fails = [
        F(a, m)
        for a, lo in ((2, 2), (3, 3), (4, 6))
        for m in range(lo, 201)
        if c_member(F(a, m)) is None
    ]
    return not fails, f"{len(fails)} failures among 2/m, 3/m, 4/m", time.perf_counter() - t0


def criterion_9():
    t0 = time.perf_counter()
    values = [q for q, _ in enumerate_interval(F(0), F(1), 200)] + [F(1)]
    candidates = [F(1, k) for k in range(1, 6)]
    found = accumulation_clusters(values, F(1, 50), candidates)
    ok = found == [F(1, 5), F(1, 4), F(1, 3), F(1, 2)]
    return ok, f"clusters {[str(q) for q in found]} from {len(values)} values", time.perf_counter() - t0


CRITERIA = [
    (1, "Table reproduction", criterion_1),
    (2, "Interval (1/2, 1)", criterion_2),
    (3, "C = HT2 up to denominator 60", criterion_3),
    (4, "Witness certification grid", criterion_4),
    (5, "Claim sweeps", criterion_5),
    (6, "Inclusion in C ∩ (0, 4/5]", criterion_6),
    (7, "Exceptional element 4/5", criterion_7),
    (8, "Small-numerator facts", criterion_8),
    (9, "Accumulation detection", criterion_9),
]


@pytest.mark.parametrize("number, name, fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_acceptance(number, name, fn):
    passed, detail, elapsed = fn()
    report(number, name, passed, detail, elapsed)
    assert passed, detail


if __name__ == "__main__":
    failed = 0
    for number, name, fn in CRITERIA:
        passed, detail, elapsed = fn()
        report(number, name, passed, detail, elapsed)
        failed += not passed
    sys.exit(1 if failed else 0)
