"""Exhaustive desk-scale sweeps of the floor/ceiling claims behind the inclusion
of every singular-family threshold in C ∩ (0, 4/5].

Each family has an enumerator of admissible parameter tuples and a pointwise
checker ``check_<family>(params, m)`` returning a :class:`PointResult`. The
sweeps quantify over *all* integers m in range that pass the stated premises,
which is strictly more than the m realized by actual divisors.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .arith import (
    ceil_scaled,
    euclid_pair,
    exists_congruent_in_range,
    floor_scaled,
    format_rational,
    mod_inverse,
    represent,
)
from .thresholds import FOUR_FIFTHS, CParams, c_member

__all__ = [
    "CAParams",
    "CAnParams",
    "CDParams",
    "CD2Params",
    "PointResult",
    "SweepReport",
    "FAMILIES",
    "check_smooth",
    "check_cA",
    "check_cAn",
    "check_cD",
    "check_cD2",
    "enumerate_cA",
    "enumerate_cAn",
    "enumerate_cD",
    "enumerate_cD2",
    "sweep_smooth",
    "sweep_cA",
    "sweep_cAn",
    "sweep_cD",
    "sweep_cD2",
    "inclusion_check",
    "DEFAULT_R_MAX",
    "DEFAULT_M_MAX",
]

DEFAULT_R_MAX = 40
DEFAULT_M_MAX = 3000
MAX_FLAGS_KEPT = 50


def _inv_or_zero(x: int, n: int) -> int:
    """x^{-1} mod n in [0, n); 0 when n == 1."""
    return mod_inverse(x % n, n) if n > 1 else 0


# --------------------------------------------------------------------------
# parameter types


@dataclass(frozen=True, order=True)
class CAParams:
    r1: int
    r2: int
    a: int
    d: int

    def problems(self) -> list[str]:
        out = []
        if min(self.r1, self.r2, self.a, self.d) < 1:
            out.append("all parameters must be positive")
        if self.r1 > self.r2:
            out.append("need r1 <= r2")
        if self.r1 + self.r2 != self.a * self.d:
            out.append("need r1 + r2 = a*d")
        if self.a < 5:
            out.append("need a >= 5")
        if gcd(self.r1, self.a) != 1 or gcd(self.r2, self.a) != 1:
            out.append("r1 and r2 must be coprime to a")
        return out

    def as_tuple(self) -> tuple[int, ...]:
        return (self.r1, self.r2, self.a, self.d)


@dataclass(frozen=True, order=True)
class CAnParams:
    r1: int
    r2: int
    a: int
    d: int
    n: int
    b: int

    def problems(self) -> list[str]:
        r1, r2, a, d, n, b = self.as_tuple()
        out = []
        if min(r1, r2, a, d, n, b) < 1:
            return ["all parameters must be positive"]
        if r1 > r2:
            out.append("need r1 <= r2")
        if r1 + r2 != a * d * n:
            out.append("need r1 + r2 = a*d*n")
        if a < 5:
            out.append("need a >= 5")
        if n < 2:
            out.append("need n >= 2")
        if not 0 < b < n:
            out.append("need 0 < b < n")
        if (a - b * r1) % n:
            out.append("need a ≡ b*r1 (mod n)")
            return out
        if gcd(b, n) != 1:
            out.append("need gcd(b, n) = 1")
        if gcd((a - b * r1) // n, r1) != 1:
            out.append("need gcd((a - b*r1)/n, r1) = 1")
        if (a + b * r2) % n or gcd((a + b * r2) // n, r2) != 1:
            out.append("need gcd((a + b*r2)/n, r2) = 1")
        if gcd(r2, a * n) != 1:
            out.append("need gcd(r2, a*n) = 1")
        if gcd(a, n) != 1:
            out.append("need gcd(a, n) = 1")
        return out

    def as_tuple(self) -> tuple[int, ...]:
        return (self.r1, self.r2, self.a, self.d, self.n, self.b)


@dataclass(frozen=True, order=True)
class CDParams:
    case: int
    r: int
    a: int
    d: int

    def problems(self) -> list[str]:
        r, a, d = self.r, self.a, self.d
        if self.case == 1:
            ok = 2 * r + 1 == a * d and a % 2 == 1 and a >= 5 and d >= 3
            return [] if ok else ["case 1 needs 2r+1 = a*d, a odd >= 5, d >= 3"]
        if self.case == 2:
            ok = r + 1 == a * d and a >= 5 and d >= 2
            return [] if ok else ["case 2 needs r+1 = a*d, a >= 5, d >= 2"]
        return ["case must be 1 or 2"]

    def as_tuple(self) -> tuple[int, ...]:
        return (self.case, self.r, self.a, self.d)


@dataclass(frozen=True, order=True)
class CD2Params:
    case: int
    r: int
    a: int
    d: int

    def problems(self) -> list[str]:
        r, a, d = self.r, self.a, self.d
        odd = a % 2 == 1 and r % 2 == 1 and a >= 5 and d >= 1
        if self.case == 1:
            return [] if odd and r + 1 == a * d else ["case 1 needs r+1 = a*d with a >= 5, a and r odd"]
        if self.case == 2:
            return [] if odd and r + 2 == a * (2 * d + 1) else ["case 2 needs r+2 = a(2d+1) with a >= 5, a and r odd"]
        return ["case must be 1 or 2"]

    def as_tuple(self) -> tuple[int, ...]:
        return (self.case, self.r, self.a, self.d)


# --------------------------------------------------------------------------
# pointwise results and reports


@dataclass
class PointResult:
    """Outcome of checking one (tuple, m) point."""

    in_domain: bool
    premises_hold: bool = False
    failed: list[str] = field(default_factory=list)
    threshold: Optional[Fraction] = None  # set when the premises hold
    in_c: bool = False
    flags: list[str] = field(default_factory=list)


@dataclass
class SweepReport:
    family: str
    bounds: dict
    tuples_enumerated: int = 0
    m_values_tested: int = 0
    premise_hits: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    thresholds: set = field(default_factory=set)
    flags: list[dict] = field(default_factory=list)
    flag_count: int = 0
    tuple_failures: int = 0

    @property
    def conclusions_in_C(self) -> int:
        return len(self.thresholds)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "SweepReport") -> None:
        self.tuples_enumerated += other.tuples_enumerated
        self.m_values_tested += other.m_values_tested
        self.premise_hits += other.premise_hits
        self.counterexamples.extend(other.counterexamples)
        self.thresholds |= other.thresholds
        self.flag_count += other.flag_count
        self.flags.extend(other.flags)
        self.tuple_failures += other.tuple_failures

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "bounds": dict(self.bounds),
            "tuples": self.tuples_enumerated,
            "m_values_tested": self.m_values_tested,
            "premise_hits": self.premise_hits,
            "counterexamples": list(self.counterexamples),
            "thresholds_in_C": self.conclusions_in_C,
            "max_threshold": format_rational(max(self.thresholds)) if self.thresholds else None,
            "flag_count": self.flag_count,
            "flags": list(self.flags),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _in_c(q: Fraction, p: CParams) -> bool:
    """C membership of q, checked both via the explicit parameters and an independent search."""
    explicit = p.is_valid() and p.value == q
    k_hint = (p.alpha + p.beta) // q.numerator if explicit else 2
    found = c_member(q, max(2, k_hint)) if q <= 1 else None
    return explicit and found is not None


def _m_range(a: int, m_max: int) -> range:
    """m with a/m <= 4/5, i.e. 5a <= 4m, up to m_max."""
    return range(-((-5 * a) // 4), m_max + 1)


# --------------------------------------------------------------------------
# smooth points


def check_smooth(alpha: int, beta: int, m: int) -> PointResult:
    """Floor identities and implications for the (1, alpha, beta) blow-up of smooth 3-space."""
    res = PointResult(in_domain=alpha * beta <= m)
    if not res.in_domain:
        return res
    e = euclid_pair(alpha, beta)
    s, t, sb, tb = e.s, e.t, e.s_bar, e.t_bar
    ab = alpha + beta
    rep = represent(m, alpha, beta)
    if rep is None:
        res.failed.append("representation")
        return res
    p1, p2 = rep.p1, rep.p2
    fail = res.failed.append

    lhs3, rhs3 = floor_scaled(sb + tb, ab, m), ceil_scaled(tb, beta, m)
    if rhs3 != p1 * sb + p2 * tb:
        fail("ceil(t_bar m / beta) identity")
    if lhs3 != p1 * sb + p2 * tb + (p2 - p1) // ab:
        fail("floor((s_bar+t_bar) m / (alpha+beta)) identity")
    sni3 = lhs3 >= rhs3
    if sni3 and not p2 >= p1:
        fail("w3 inequality implies p2 >= p1")
    sni2 = True
    if alpha > 1:
        lhs2, rhs2 = floor_scaled(s + t, ab, m), ceil_scaled(s, alpha, m)
        if rhs2 != p1 * s + p2 * t - p2 // alpha:
            fail("ceil(s m / alpha) identity")
        if lhs2 != p1 * s + p2 * t + (p1 - p2) // ab:  # -ceil((p2-p1)/ab)
            fail("floor((s+t) m / (alpha+beta)) identity")
        sni2 = lhs2 >= rhs2
        if sni2 and p2 >= p1 and not (p2 >= alpha or p1 == p2):
            fail("w2 inequality implies p2 >= alpha or p1 == p2")
    res.premises_hold = sni3 and sni2
    if res.premises_hold:
        q = Fraction(ab, m)
        res.threshold = q
        res.in_c = q > 1 or _in_c(q, CParams(alpha, beta, p1, p2))
        if not res.in_c:
            fail("threshold in C")
    return res


# --------------------------------------------------------------------------
# cA


@dataclass(frozen=True)
class _CAData:
    s1: int
    s2: int
    a1: int
    a2: int
    h: int
    r1p: int
    r2p: int
    dp: int
    s1p: int
    s2p: int
    a1p: int
    a2p: int


def _bezout_a(a: int, r: int) -> tuple[int, int]:
    """(s*, a_i) with 1 + a_i r = a s*, 0 <= s* < r; (0, -1) when r == 1."""
    if r == 1:
        return 0, -1
    s = mod_inverse(a % r, r)
    return s, (a * s - 1) // r


def _ca_data(p: CAParams) -> _CAData:
    s1, a1 = _bezout_a(p.a, p.r1)
    s2, a2 = _bezout_a(p.a, p.r2)
    h = gcd(p.r1, p.r2)
    r1p, r2p = p.r1 // h, p.r2 // h
    s1p, a1p = _bezout_a(p.a, r1p)
    s2p, a2p = _bezout_a(p.a, r2p)
    return _CAData(s1, s2, a1, a2, h, r1p, r2p, p.d // h, s1p, s2p, a1p, a2p)


def _ca_tuple_failures(p: CAParams, D: _CAData) -> list[str]:
    out = []
    for r, s, ai in ((p.r1, D.s1, D.a1), (p.r2, D.s2, D.a2)):
        if 1 + ai * r != p.a * s:
            out.append("1 + a_i r_i = a s_i*")
    if p.r1 > 1 and D.a1 + D.a2 != p.a:
        out.append("a1 + a2 = a")
    if p.d % D.h:
        out.append("h | d")
    if gcd(D.dp, D.r2p) != 1:
        out.append("gcd(d', r2') = 1")
    return out


def check_cA(p: CAParams, m: int, data: Optional[_CAData] = None) -> PointResult:
    D = data or _ca_data(p)
    a = p.a
    res = PointResult(in_domain=5 * a <= 4 * m)
    if not res.in_domain:
        return res
    # the w2 weight carries a1 = a - a2; for r1 = 1 the Bezout convention a1 = -1
    # would make that weight negative, so the premise uses a - a2 throughout
    prem = floor_scaled(a - D.a2, a, m) >= ceil_scaled(p.r2 - D.s2, p.r2, m)
    if p.r1 > 1:
        prem = prem and floor_scaled(D.a2, a, m) >= ceil_scaled(p.r1 - D.s1, p.r1, m)
    res.premises_hold = prem
    if not prem:
        return res
    fail = res.failed.append
    if not floor_scaled(D.s2p, D.r2p, m) >= ceil_scaled(D.a2p, a, m):
        fail("reduce-to-coprime (index 2)")
    if p.r1 > 1 and not floor_scaled(D.s1p, D.r1p, m) >= ceil_scaled(D.a1p, a, m):
        fail("reduce-to-coprime (index 1)")
    if p.d * m < p.r1 * p.r2:
        # this bound is imported from the geometry, not implied by the premises
        res.flags.append("d m < r1 r2 (external bound not implied by the premises)")
    big = D.dp * m
    p1 = big * _inv_or_zero(D.r1p, D.r2p) % D.r2p
    p2 = (big - p1 * D.r1p) // D.r2p
    if p2 < 0:
        fail("non-negative representation")
    if (p2 - p1) % D.dp:
        fail("d' | p2 - p1")
    if p2 < p1:
        fail("p2 >= p1")
    if p.r1 > 1:
        if not (p2 >= D.r1p or p1 == p2):
            fail("p2 >= r1' or p1 == p2")
    elif p2 < 1:
        fail("p2 >= 1")
    q = Fraction(a, m)
    res.threshold = q
    res.in_c = q <= FOUR_FIFTHS and _in_c(q, CParams(D.r1p, D.r2p, p1, max(p2, 0)))
    if not res.in_c:
        fail("threshold in C ∩ (0, 4/5]")
    return res


def enumerate_cA(r_max: int) -> Iterator[CAParams]:
    for r2 in range(1, r_max + 1):
        for r1 in range(1, r2 + 1):
            total = r1 + r2
            for a in range(5, total + 1):
                if total % a or total // a < 2:
                    continue
                p = CAParams(r1, r2, a, total // a)
                if not p.problems():
                    yield p


# --------------------------------------------------------------------------
# cA/n


@dataclass(frozen=True)
class _CAnData:
    s1: int
    s2: int
    s1s: int
    s2s: int
    delta1: int
    delta2: int
    h: int
    r1p: int
    r2p: int
    dp: int
    bp: int
    s1ps: int
    s2ps: int
    delta1p: int
    delta2p: int
    bezout_ok: bool


def _can_side(r: int, s: int, n: int, b_signed: int) -> tuple[int, int]:
    """(s*, delta) with 1 = q r + s* s, 0 <= s* < r and delta = -n q + b_signed s*."""
    ss = _inv_or_zero(s, r)
    q, rem = divmod(1 - ss * s, r)
    assert rem == 0
    return ss, -n * q + b_signed * ss


def _can_data(p: CAnParams) -> _CAnData:
    r1, r2, a, d, n, b = p.as_tuple()
    s1, s2 = (a - b * r1) // n, (a + b * r2) // n
    s1s, delta1 = _can_side(r1, s1, n, b)
    s2s, delta2 = _can_side(r2, s2, n, -b)
    h = gcd(r1, r2)
    r1p, r2p = r1 // h, r2 // h
    bp = (b * h) % n or n
    s1p, s2p = (a - bp * r1p) // n, (a + bp * r2p) // n
    bezout_ok = gcd(s1p, r1p) == 1 and gcd(s2p, r2p) == 1
    if bezout_ok:
        s1ps, delta1p = _can_side(r1p, s1p, n, bp)
        s2ps, delta2p = _can_side(r2p, s2p, n, -bp)
    else:
        s1ps = s2ps = delta1p = delta2p = 0
    return _CAnData(s1, s2, s1s, s2s, delta1, delta2, h, r1p, r2p, d // h, bp, s1ps, s2ps, delta1p, delta2p, bezout_ok)


def _can_tuple_flags(p: CAnParams, D: _CAnData) -> list[str]:
    if D.bezout_ok and (D.delta1 > 0) != (D.delta1p > 0):
        return ["delta1 and delta1' have different signs"]
    return []


def _can_tuple_failures(p: CAnParams, D: _CAnData) -> list[str]:
    r1, r2, a, d, n, b = p.as_tuple()
    out = []
    if D.delta1 * r1 + n != a * D.s1s or D.delta2 * r2 + n != a * D.s2s:
        out.append("delta_i r_i + n = a s_i*")
    if D.delta1 == 0 or D.delta2 <= 0:
        out.append("delta1 != 0 and delta2 > 0")
    if D.delta1 > 0 and D.delta1 + D.delta2 != a:
        out.append("delta1 + delta2 = a")
    if D.delta1 > 0 and r1 * D.s2s + r2 * D.s1s != r1 * r2 + d * n * n:
        out.append("r1 s2* + r2 s1* = r1 r2 + d n^2")
    if d % D.h:
        out.append("h | d")
    if not D.bezout_ok:
        out.append("gcd(s_i', r_i') = 1")
        return out
    if D.delta1p * D.r1p + n != a * D.s1ps or D.delta2p * D.r2p + n != a * D.s2ps:
        out.append("delta_i' r_i' + n = a s_i*'")
    if not (D.delta1p != 0 and D.delta1p < a and 0 < D.delta2p < a):
        out.append("0 != delta_i' < a and delta2' > 0")
    if (D.delta1p + D.delta2p) % a:
        out.append("a | delta1' + delta2'")
    if D.delta1p > 0 and D.delta1p + D.delta2p != a:
        out.append("delta1' + delta2' = a")
    if gcd(D.dp * n, D.r2p) != 1:
        out.append("gcd(d' n, r2') = 1")
    return out


def check_cAn(p: CAnParams, m: int, data: Optional[_CAnData] = None) -> PointResult:
    D = data or _can_data(p)
    r1, r2, a, d, n, b = p.as_tuple()
    res = PointResult(in_domain=5 * a <= 4 * m and m % a != 0)
    if not res.in_domain:
        return res
    ainv = mod_inverse(a % n, n)
    prem = exists_congruent_in_range(
        Fraction(ceil_scaled(r2 - D.s2s, r2, m)), floor_scaled(a - D.delta2, a, m), (a - D.delta2) * ainv * m % n, n
    )
    if D.delta1 > 0:
        prem = prem and exists_congruent_in_range(
            ceil_scaled(r1 - D.s1s, r1, m), floor_scaled(a - D.delta1, a, m), (a - D.delta1) * ainv * m % n, n
        )
    res.premises_hold = prem
    if not prem:
        return res
    fail = res.failed.append
    if m < r2:
        fail("m >= r2")
    if d * n * m < r1 * r2:
        fail("d n m >= r1 r2")
    if D.bezout_ok:
        xi2 = D.s2ps * _inv_or_zero(D.r2p, n) * m % n
        if not exists_congruent_in_range(ceil_scaled(D.delta2p, a, m), floor_scaled(D.s2ps, D.r2p, m), xi2, n):
            fail("reduce-to-coprime (index 2)")
        if D.delta1 > 0:
            xi1 = D.s1ps * _inv_or_zero(D.r1p, n) * m % n
            if not exists_congruent_in_range(ceil_scaled(D.delta1p, a, m), floor_scaled(D.s1ps, D.r1p, m), xi1, n):
                fail("reduce-to-coprime (index 1)")
    big = D.dp * n * m
    p1 = big * _inv_or_zero(D.r1p, D.r2p) % D.r2p
    p2 = (big - p1 * D.r1p) // D.r2p
    if p2 < 0:
        fail("non-negative representation")
    if (p2 - p1) % (D.dp * n):
        fail("d' n | p2 - p1")
    if p2 < p1:
        fail("p2 >= p1")
    if not (p2 >= D.r1p or p1 == p2):
        fail("p2 >= r1' or p1 == p2")
    if D.delta1 < 0 and p1 < p2 <= n - 1:
        fail("ruled-out branch delta1 < 0 with p1 < p2 <= n - 1")
    q = Fraction(a, m)
    res.threshold = q
    res.in_c = q <= FOUR_FIFTHS and _in_c(q, CParams(D.r1p, D.r2p, p1, max(p2, 0)))
    if not res.in_c:
        fail("threshold in C ∩ (0, 4/5]")
    return res


def enumerate_cAn(r_max: int) -> Iterator[CAnParams]:
    for r2 in range(1, r_max + 1):
        for r1 in range(1, r2 + 1):
            total = r1 + r2
            for a in range(5, total // 2 + 1):
                if total % a:
                    continue
                for n in range(2, total // a + 1):
                    if (total // a) % n:
                        continue
                    d = total // (a * n)
                    for b in range(1, n):
                        p = CAnParams(r1, r2, a, d, n, b)
                        if not p.problems():
                            yield p


# --------------------------------------------------------------------------
# cD


def _cd_conclusions(p1: int, p2: int, r: int, fail: Callable[[str], None]) -> None:
    if p2 < p1:
        fail("p2 >= p1")
    if not (p2 >= r or p1 == p2):
        fail("p2 >= r or p1 == p2")


def check_cD(p: CDParams, m: int) -> PointResult:
    r, a, d = p.r, p.a, p.d
    res = PointResult(in_domain=5 * a <= 4 * m and m % a != 0)
    if not res.in_domain:
        return res
    fail = res.failed.append
    q = Fraction(a, m)
    if p.case == 1:
        prem = floor_scaled(a - 2, a, m) >= ceil_scaled(r - d, r, m) and floor_scaled(2, a, m) >= ceil_scaled(d, r + 1, m)
        res.premises_hold = prem
        if not prem:
            return res
        if d * m < r * (r + 1):
            fail("d m >= r(r+1)")
        rep = represent(d * m, r, r + 1)
        if rep is None:
            fail("non-negative representation")
            return res
        p1, p2 = rep.p1, rep.p2
        _cd_conclusions(p1, p2, r, fail)
        cp = CParams(r, r + 1, p1, p2)
    else:
        prem = floor_scaled(a - 1, a, m) >= ceil_scaled(r - d, r, m) and floor_scaled(1, a, m) >= ceil_scaled(d, r + 2, m)
        res.premises_hold = prem
        if not prem:
            return res
        if 2 * d * m < r * (r + 2):
            fail("2 d m >= r(r+2)")
        h = gcd(r, r + 2)
        rep = represent(2 * d * m // h, r // h, (r + 2) // h)
        if rep is None:
            fail("non-negative representation")
            return res
        p1, p2 = rep.p1, rep.p2
        if (p1 + p2) % 2 == 0:
            _cd_conclusions(p1, p2, r, fail)
        else:
            if r % 2:
                fail("p1 + p2 odd forces r even")
            if p2 < p1 + r + 1:
                fail("p2 >= p1 + r + 1 (odd branch)")
            if 2 * p2 < r:
                fail("p2 >= r/2 (odd branch)")
        if h == 2:
            # the other reading: 2dm = p1 r + p2 (r+2) with p1 < r+2 admits a second solution
            alt1, alt2 = p1 + (r + 2) // 2, p2 - r // 2
            if alt2 >= 0:
                alt_fails: list[str] = []
                if (alt1 + alt2) % 2 == 0:
                    _cd_conclusions(alt1, alt2, r, alt_fails.append)
                if alt_fails:
                    res.flags.append("normalization p1 < r+2 admits a representation violating the conclusions")
        cp = CParams(r // h, (r + 2) // h, p1, p2)
    res.threshold = q
    res.in_c = q <= FOUR_FIFTHS and _in_c(q, cp)
    if not res.in_c:
        fail("threshold in C ∩ (0, 4/5]")
    return res


def enumerate_cD(r_max: int) -> Iterator[CDParams]:
    for r in range(1, r_max + 1):
        for a in range(5, 2 * r + 2):
            if (2 * r + 1) % a == 0:
                p = CDParams(1, r, a, (2 * r + 1) // a)
                if not p.problems():
                    yield p
            if (r + 1) % a == 0:
                p = CDParams(2, r, a, (r + 1) // a)
                if not p.problems():
                    yield p


# --------------------------------------------------------------------------
# cD/2


def check_cD2(p: CD2Params, m: int) -> PointResult:
    r, a, d = p.r, p.a, p.d
    res = PointResult(in_domain=5 * a <= 4 * m and m % a != 0)
    if not res.in_domain:
        return res
    fail = res.failed.append
    q = Fraction(a, m)
    if p.case == 1:
        prem = exists_congruent_in_range(
            ceil_scaled(r - 2 * d, r, m), floor_scaled(a - 2, a, m), m % 2, 2
        ) and exists_congruent_in_range(ceil_scaled(2 * d, r + 2, m), floor_scaled(2, a, m), 0, 2)
        res.premises_hold = prem
        if not prem:
            return res
        if 2 * d * m < r * (r + 2):
            fail("2 d m >= r(r+2)")
        rep = represent(2 * d * m, r, r + 2)
        if rep is None:
            fail("non-negative representation")
            return res
        p1, p2 = rep.p1, rep.p2
        if (p1 + p2) % 2:
            fail("p1 + p2 even")
        _cd_conclusions(p1, p2, r, fail)
        cp = CParams(r, r + 2, p1, p2)
    else:
        ainv_m = m % 2  # a^{-1} m mod 2, as a is odd
        prem = exists_congruent_in_range(
            ceil_scaled(r - 2 * d - 1, r, m), floor_scaled(a - 1, a, m), (a - 1) * ainv_m % 2, 2
        ) and exists_congruent_in_range(ceil_scaled(2 * d + 1, r + 4, m), floor_scaled(1, a, m), ainv_m, 2)
        res.premises_hold = prem
        if not prem:
            return res
        if (4 * d + 2) * m < r * (r + 4):
            fail("(4d+2) m >= r(r+4)")
        rep = represent((4 * d + 2) * m, r, r + 4)
        if rep is None:
            fail("non-negative representation")
            return res
        p1, p2 = rep.p1, rep.p2
        if (p2 - p1) % 2:
            fail("p2 - p1 even")
        _cd_conclusions(p1, p2, r, fail)
        cp = CParams(r, r + 4, p1, p2)
    res.threshold = q
    res.in_c = q <= FOUR_FIFTHS and _in_c(q, cp)
    if not res.in_c:
        fail("threshold in C ∩ (0, 4/5]")
    return res


def enumerate_cD2(r_max: int) -> Iterator[CD2Params]:
    for r in range(1, r_max + 1, 2):
        for a in range(5, r + 3, 2):
            if (r + 1) % a == 0:
                p = CD2Params(1, r, a, (r + 1) // a)
                if not p.problems():
                    yield p
            if (r + 2) % a == 0 and ((r + 2) // a) % 2 == 1 and (r + 2) // a >= 3:
                p = CD2Params(2, r, a, ((r + 2) // a - 1) // 2)
                if not p.problems():
                    yield p


# --------------------------------------------------------------------------
# sweep driver


def _record(report: SweepReport, key: tuple, m: int, res: PointResult) -> None:
    report.m_values_tested += 1
    if res.premises_hold:
        report.premise_hits += 1
        if res.in_c and res.threshold is not None and res.threshold <= 1:
            report.thresholds.add(res.threshold)
    for claim in res.failed:
        report.counterexamples.append({"tuple": list(key), "m": m, "claim": claim})
    for flag in res.flags:
        report.flag_count += 1
        if len(report.flags) < MAX_FLAGS_KEPT:
            report.flags.append({"tuple": list(key), "m": m, "flag": flag})


def _sweep_chunk(family: str, items: Sequence[tuple], m_max: int) -> SweepReport:
    rep = SweepReport(family, {})
    for item in items:
        rep.tuples_enumerated += 1
        if family == "smooth":
            alpha, beta = item
            for m in range(alpha * beta, m_max + 1):
                _record(rep, item, m, check_smooth(alpha, beta, m))
            continue
        if family == "cA":
            p = CAParams(*item)
            D = _ca_data(p)
            tuple_fail = _ca_tuple_failures(p, D)
            check = lambda m: check_cA(p, m, D)  # noqa: E731
        elif family == "cAn":
            p = CAnParams(*item)
            D = _can_data(p)
            tuple_fail = _can_tuple_failures(p, D)
            for flag in _can_tuple_flags(p, D):
                rep.flag_count += 1
                rep.flags.append({"tuple": list(item), "m": None, "flag": flag})
            check = lambda m: check_cAn(p, m, D)  # noqa: E731
        elif family == "cD":
            p = CDParams(*item)
            tuple_fail = []
            check = lambda m: check_cD(p, m)  # noqa: E731
        else:
            p = CD2Params(*item)
            tuple_fail = []
            check = lambda m: check_cD2(p, m)  # noqa: E731
        for claim in tuple_fail:
            rep.tuple_failures += 1
            rep.counterexamples.append({"tuple": list(item), "m": None, "claim": claim})
        for m in _m_range(p.a, m_max):
            res = check(m)
            if res.in_domain:
                _record(rep, item, m, res)
    return rep


def _family_items(family: str, bound: int) -> list[tuple]:
    if family == "smooth":
        return [
            (alpha, beta)
            for beta in range(2, bound + 1)
            for alpha in range(1, beta)
            if gcd(alpha, beta) == 1
        ]
    gen = {"cA": enumerate_cA, "cAn": enumerate_cAn, "cD": enumerate_cD, "cD2": enumerate_cD2}[family]
    return [p.as_tuple() for p in gen(bound)]


def _run(family: str, bound: int, m_max: int, jobs: int, bound_name: str) -> SweepReport:
    if bound < 1 or m_max < 1:
        raise ValueError("bounds must be positive")
    items = sorted(_family_items(family, bound))
    report = SweepReport(family, {bound_name: bound, "m_max": m_max})
    if jobs <= 1 or len(items) < 2:
        report.merge(_sweep_chunk(family, items, m_max))
    else:
        # round-robin chunks balance the cost; merging in chunk order and
        # sorting counterexamples keeps the output independent of scheduling
        chunks = [items[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_chunk, [family] * jobs, chunks, [m_max] * jobs))
        for part in parts:
            report.merge(part)
    def order(entry: dict) -> tuple:
        return (entry["tuple"], -1 if entry["m"] is None else entry["m"])

    # every chunk walks its items in canonical order, so the global leading
    # flags are among each chunk's leading flags: sort, then truncate
    report.counterexamples.sort(key=lambda c: (*order(c), c["claim"]))
    report.flags = sorted(report.flags, key=lambda f: (*order(f), f["flag"]))[:MAX_FLAGS_KEPT]
    return report


def sweep_smooth(alpha_max: int = 10, m_max: int = 500, jobs: int = 1) -> SweepReport:
    return _run("smooth", alpha_max, m_max, jobs, "alpha_max")


def sweep_cA(r_max: int = DEFAULT_R_MAX, m_max: int = DEFAULT_M_MAX, jobs: int = 1) -> SweepReport:
    return _run("cA", r_max, m_max, jobs, "r_max")


def sweep_cAn(r_max: int = DEFAULT_R_MAX, m_max: int = DEFAULT_M_MAX, jobs: int = 1) -> SweepReport:
    return _run("cAn", r_max, m_max, jobs, "r_max")


def sweep_cD(r_max: int = DEFAULT_R_MAX, m_max: int = DEFAULT_M_MAX, jobs: int = 1) -> SweepReport:
    return _run("cD", r_max, m_max, jobs, "r_max")


def sweep_cD2(r_max: int = DEFAULT_R_MAX, m_max: int = DEFAULT_M_MAX, jobs: int = 1) -> SweepReport:
    return _run("cD2", r_max, m_max, jobs, "r_max")


FAMILIES: dict[str, Callable[..., SweepReport]] = {
    "smooth": sweep_smooth,
    "cA": sweep_cA,
    "cAn": sweep_cAn,
    "cD": sweep_cD,
    "cD2": sweep_cD2,
}


def inclusion_check(family: str, r_max: int = DEFAULT_R_MAX, m_max: int = DEFAULT_M_MAX, jobs: int = 1) -> SweepReport:
    """Re-run a singular-family sweep and confirm every premise-passing a/m lies in C ∩ (0, 4/5]."""
    if family not in ("cA", "cAn", "cD", "cD2"):
        raise ValueError(f"unknown family {family!r}; expected one of cA, cAn, cD, cD2")
    report = FAMILIES[family](r_max, m_max, jobs)
    for q in sorted(report.thresholds):
        if not (0 < q <= FOUR_FIFTHS and c_member(q, max(2, q.denominator)) is not None):
            report.counterexamples.append({"tuple": None, "m": q.denominator, "claim": f"{format_rational(q)} in C ∩ (0, 4/5]"})
    return report
