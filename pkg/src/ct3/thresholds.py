"""Membership in the set C of smooth threefold canonical thresholds and in HT2.

C is the set of (alpha+beta)/(p1*alpha + p2*beta) with gcd(alpha, beta) = 1,
alpha <= beta, p2 >= 1, p1 >= 0 and either p2 >= max(alpha, p1) or p1 == p2.
HT2 is the set of two-variable log canonical thresholds in the
(c1, c2, a1, a2) parameterization. On [0, 1] the two sets coincide, and the
full set of threefold canonical thresholds adds only 0 and 4/5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd, isqrt
from typing import Iterable, Optional, Sequence, Union

from .arith import mod_inverse, represent, represent_all

__all__ = [
    "CParams",
    "HT2Params",
    "MembershipVerdict",
    "FOUR_FIFTHS",
    "c_member",
    "c_witnesses",
    "ht2_member",
    "c_to_ht2",
    "ht2_to_c",
    "enumerate_interval",
    "t3_classify",
    "accumulation_clusters",
]

FOUR_FIFTHS = Fraction(4, 5)


@dataclass(frozen=True, order=True)
class CParams:
    alpha: int
    beta: int
    p1: int
    p2: int

    @property
    def m(self) -> int:
        return self.p1 * self.alpha + self.p2 * self.beta

    @property
    def value(self) -> Fraction:
        return Fraction(self.alpha + self.beta, self.m)

    def problems(self) -> list[str]:
        """Reasons these parameters fail to describe an element of C (empty if valid)."""
        out = []
        if self.alpha < 1 or self.beta < 1:
            out.append("alpha and beta must be positive")
        if self.p2 < 1:
            out.append("p2 must be positive")
        if self.p1 < 0:
            out.append("p1 must be non-negative")
        if self.alpha > self.beta:
            out.append("alpha must not exceed beta")
        if self.alpha >= 1 and self.beta >= 1 and gcd(self.alpha, self.beta) != 1:
            out.append("alpha and beta must be coprime")
        if not (self.p2 >= max(self.alpha, self.p1) or self.p1 == self.p2):
            out.append("need p2 >= max(alpha, p1) or p1 == p2")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def validate(self) -> "CParams":
        probs = self.problems()
        if probs:
            raise ValueError(f"invalid C parameters {self.as_tuple()}: {'; '.join(probs)}")
        return self

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.p1, self.p2)

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "p1": self.p1, "p2": self.p2}


@dataclass(frozen=True, order=True)
class HT2Params:
    """(c1, c2, a1, a2) parameters of HT2; ``distinguished`` marks the bare element 1."""

    c1: int
    c2: int
    a1: int
    a2: int
    distinguished: bool = False

    @classmethod
    def one(cls) -> "HT2Params":
        return cls(0, 0, 0, 0, distinguished=True)

    @property
    def denominator(self) -> int:
        return self.c1 * self.c2 + self.a1 * self.c2 + self.a2 * self.c1

    @property
    def value(self) -> Fraction:
        if self.distinguished:
            return Fraction(1)
        return Fraction(self.c1 + self.c2, self.denominator)

    def problems(self) -> list[str]:
        if self.distinguished:
            return []
        out = []
        if min(self.c1, self.c2, self.a1, self.a2) < 0:
            out.append("parameters must be non-negative")
        if self.a1 + self.c1 < max(2, self.a2):
            out.append("need a1 + c1 >= max(2, a2)")
        if self.a2 + self.c2 < max(2, self.a1):
            out.append("need a2 + c2 >= max(2, a1)")
        if self.denominator <= 0:
            out.append("denominator c1*c2 + a1*c2 + a2*c1 must be positive")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def validate(self) -> "HT2Params":
        probs = self.problems()
        if probs:
            raise ValueError(f"invalid HT2 parameters {self.as_tuple()}: {'; '.join(probs)}")
        return self

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.c1, self.c2, self.a1, self.a2)

    def to_json(self) -> dict:
        if self.distinguished:
            return {"distinguished": "one"}
        return {"c1": self.c1, "c2": self.c2, "a1": self.a1, "a2": self.a2}


@dataclass(frozen=True)
class MembershipVerdict:
    value: Fraction
    member: bool
    witness: Optional[Union[CParams, HT2Params]]
    search_bound_used: int
    exceptional: Optional[str] = None  # "zero" | "four-fifths"


def _check_unit_interval(q: Fraction) -> Fraction:
    q = Fraction(q)
    if q <= 0 or q > 1:
        raise ValueError(f"value {q} outside (0, 1]")
    return q


def _coprime_pairs(total: int, alpha_max: int) -> Iterable[tuple[int, int]]:
    """Coprime (alpha, beta), alpha <= beta, alpha + beta = total, alpha descending."""
    for alpha in range(min(total // 2, alpha_max), 0, -1):
        beta = total - alpha
        if gcd(alpha, beta) == 1:
            yield alpha, beta


@lru_cache(maxsize=None)
def _c_member(q: Fraction, k_max: int) -> Optional[CParams]:
    a, m = q.numerator, q.denominator
    # Outside the p1 == p2 branch p2 >= alpha forces M >= alpha*beta, so
    # q <= 1/alpha + 1/beta <= 2/alpha. Larger alpha can only witness 1/p.
    alpha_cap = (2 * m) // a
    for k in range(1, k_max + 1):
        total, big_m = a * k, m * k
        if big_m % total == 0:
            alpha, beta = next(_coprime_pairs(total, total), (None, None))
            if alpha is not None:
                p = big_m // total
                return CParams(alpha, beta, p, p)
            continue
        for alpha, beta in _coprime_pairs(total, alpha_cap):
            rep = represent(big_m, alpha, beta)
            if rep is not None and rep.p2 >= max(alpha, rep.p1):
                return CParams(alpha, beta, rep.p1, rep.p2)
    return None


def c_member(q: Fraction, k_max: Optional[int] = None) -> Optional[CParams]:
    """Search for a C-parameterization of q in (0, 1].

    Candidates are scanned with k = 1..k_max ascending (alpha + beta = k *
    numerator) and, within one k, alpha descending. ``k_max`` defaults to the
    denominator of q (at least 2, the smallest k reaching 1/p). None means no witness within the bound.
    """
    q = _check_unit_interval(q)
    return _c_member(q, k_max if k_max is not None else max(2, q.denominator))


def c_witnesses(q: Fraction, k_max: Optional[int] = None) -> list[CParams]:
    """Every C-parameterization of q with alpha + beta = k * numerator, k <= k_max."""
    q = _check_unit_interval(q)
    if k_max is None:
        k_max = max(2, q.denominator)
    a, m = q.numerator, q.denominator
    alpha_cap = (2 * m) // a
    found = set()
    for k in range(1, k_max + 1):
        total, big_m = a * k, m * k
        reciprocal = big_m % total == 0
        for alpha, beta in _coprime_pairs(total, total if reciprocal else alpha_cap):
            if reciprocal:
                found.add(CParams(alpha, beta, big_m // total, big_m // total))
            if alpha > alpha_cap:
                continue
            for rep in represent_all(big_m, alpha, beta, big_m // alpha):
                if rep.p2 >= 1 and rep.p2 >= max(alpha, rep.p1):
                    found.add(CParams(alpha, beta, rep.p1, rep.p2))
    return sorted(found)


def _ht2_solve(c1: int, c2: int, rhs: int) -> Optional[HT2Params]:
    """Largest a1 with c2*a1 + c1*a2 = rhs meeting the HT2 constraints (c1, c2 > 0)."""
    g = gcd(c1, c2)
    if rhs < 0 or rhs % g:
        return None
    step = c1 // g
    base = (rhs // g) * mod_inverse(c2 // g, step) % step
    upper = min(
        rhs // c2,
        (rhs - c1 * max(0, 2 - c2)) // c2,  # a2 >= 2 - c2
        (rhs + c1 * c2) // (c1 + c2),  # a1 <= a2 + c2
    )
    lower = max(0, 2 - c1, -((c1 * c1 - rhs) // (c1 + c2)))  # a2 <= a1 + c1
    if upper < lower:
        return None
    a1 = upper - (upper - base) % step
    if a1 < lower:
        return None
    h = HT2Params(c1, c2, a1, (rhs - c2 * a1) // c1)
    return h if h.is_valid() else None


@lru_cache(maxsize=None)
def _ht2_member(q: Fraction, bound: int) -> Optional[HT2Params]:
    a, m = q.numerator, q.denominator
    for k in range(1, bound + 1):
        total, den = a * k, m * k
        # c1*(total - c1) <= den, with c1 <= total/2 where the product is increasing
        half = total // 2
        if total * total <= 4 * den:
            c1_max = half
        else:
            c1_max = (total - isqrt(total * total - 4 * den)) // 2 + 1
            while c1_max > 0 and c1_max * (total - c1_max) > den:
                c1_max -= 1
            c1_max = min(c1_max, half)
        for c1 in range(c1_max, 0, -1):
            c2 = total - c1
            h = _ht2_solve(c1, c2, den - c1 * c2)
            if h is not None:
                return h
    # c1 == 0: value c2/(a1*c2) = 1/a1
    if a == 1:
        for a2 in range(m + 1):
            h = HT2Params(0, 1, m, a2)
            if h.is_valid():
                return h
    return None


def ht2_member(q: Fraction, bound: Optional[int] = None) -> Optional[HT2Params]:
    """Search for an HT2 parameterization of q in (0, 1].

    q == 1 returns the distinguished element. Otherwise k runs over
    1..bound with c1 + c2 = k * numerator, c1 <= c2 descending, a1 descending.
    """
    q = _check_unit_interval(q)
    if q == 1:
        return HT2Params.one()
    return _ht2_member(q, bound if bound is not None else max(2, q.denominator))


def c_to_ht2(p: CParams) -> HT2Params:
    p.validate()
    v = p.value
    if v >= 1:
        raise ValueError(f"value {v} >= 1 maps to the distinguished element of HT2")
    alpha, beta, p1, p2 = p.as_tuple()
    m = p.m
    if m % (alpha + beta) == 0:
        a1 = m // (alpha + beta)
        return HT2Params(1, 1, a1, a1 - 1).validate()
    # (alpha+beta) | m iff (alpha+beta) | (p2 - p1), so here p2 - p1 lies strictly between multiples
    l = (p2 - p1) // (alpha + beta)
    return HT2Params(alpha, beta, p2 - alpha * l - alpha, p1 + beta * l).validate()


def ht2_to_c(h: HT2Params) -> CParams:
    h.validate()
    if h.distinguished:
        return CParams(1, 1, 1, 1)
    v = h.value
    if v > 1:
        raise ValueError(f"value {v} exceeds 1")
    c1, c2, a1, a2 = h.as_tuple()
    if c1 == 0 and c2 == 0:
        raise ValueError("c1 and c2 are both zero")
    if c1 == 0:
        return CParams(1, 1, a1, a1).validate()
    if c2 == 0:
        return CParams(1, 1, a2, a2).validate()
    if c1 > c2:
        c1, c2, a1, a2 = c2, c1, a2, a1
    d = gcd(c1, c2)
    alpha, beta = c1 // d, c2 // d
    # d(alpha+beta) / (d^2 alpha beta + d a1 beta + d a2 alpha)
    p1, p2 = a2, d * alpha + a1
    if alpha == beta == 1:
        total = p1 + p2
        p1, p2 = total // 2, total - total // 2
    out = CParams(alpha, beta, p1, p2).validate()
    assert out.value == v
    return out


def enumerate_interval(
    lo: Fraction, hi: Fraction, max_denominator: int, k_max: Optional[int] = None
) -> list[tuple[Fraction, list[CParams]]]:
    """Elements of C in the open interval (lo, hi) with denominator <= max_denominator.

    Each value carries every witness found with k <= k_max (default: the
    value's own denominator). Output is ascending in value.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not 0 <= lo < hi <= 1:
        raise ValueError(f"need 0 <= lo < hi <= 1, got ({lo}, {hi})")
    out = []
    for m in range(1, max_denominator + 1):
        for a in range(lo.numerator * m // lo.denominator + 1, m + 1):
            q = Fraction(a, m)
            if q >= hi:
                break
            if gcd(a, m) != 1 or q <= lo:
                continue
            if c_member(q, k_max) is not None:
                out.append((q, c_witnesses(q, k_max)))
    out.sort(key=lambda item: item[0])
    return out


def t3_classify(q: Fraction, k_max: Optional[int] = None) -> MembershipVerdict:
    """Membership in the set of all threefold canonical thresholds: {0, 4/5} together with C on (0, 1]."""
    q = Fraction(q)
    if q < 0 or q > 1:
        raise ValueError(f"value {q} outside [0, 1]")
    bound = k_max if k_max is not None else max(2, q.denominator)
    if q == 0:
        return MembershipVerdict(q, True, None, bound, "zero")
    if q == FOUR_FIFTHS:
        return MembershipVerdict(q, True, None, bound, "four-fifths")
    w = c_member(q, bound)
    return MembershipVerdict(q, w is not None, w, bound)


def accumulation_clusters(
    values: Sequence[Fraction],
    epsilon: Fraction,
    candidates: Optional[Iterable[Fraction]] = None,
) -> list[Fraction]:
    """Candidate points c with at least ceil(1/epsilon) distinct values in (c - eps, c + eps).

    Candidates default to 0 and 1/k for k <= ceil(1/epsilon). This is a
    finite-sample detector, not a limit computation.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    need = ceil(1 / epsilon)
    distinct = sorted(set(Fraction(v) for v in values))
    if candidates is None:
        candidates = [Fraction(0)] + [Fraction(1, k) for k in range(1, need + 1)]
    out = []
    for c in sorted(set(Fraction(c) for c in candidates)):
        count = sum(1 for v in distinct if c - epsilon < v < c + epsilon)
        if count >= need:
            out.append(c)
    return out
