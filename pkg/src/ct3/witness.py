"""Explicit divisors realizing each element of C as a smooth canonical threshold.

For valid C-parameters the divisor S = {f = 0} in affine 3-space is built
from four or five monomials, and ``certify_witness`` recomputes every
multiplicity and inequality the construction relies on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import EuclidData, euclid_pair
from .thresholds import CParams
from .weights import (
    PolySupport,
    WeightVector,
    chart_proper_transform,
    kawamata_multiplicity,
    weighted_multiplicity,
)

__all__ = ["WitnessCase", "WitnessReport", "build_witness", "certify_witness", "SMOOTHNESS_DISCLAIMER"]

SMOOTHNESS_DISCLAIMER = (
    "arithmetic only: nonsingularity of the proper transform away from the chart origins is not checked"
)


class WitnessCase(str, enum.Enum):
    SMOOTH_PAIR = "SmoothPair"  # alpha = beta = 1
    CASE1 = "Case1"  # alpha | p2
    CASE2 = "Case2"  # alpha does not divide p2, p1 != p2
    CASE3 = "Case3"  # alpha does not divide p2, p1 == p2

    @classmethod
    def of(cls, p: CParams) -> "WitnessCase":
        if p.alpha == p.beta == 1:
            return cls.SMOOTH_PAIR
        if p.p2 % p.alpha == 0:
            return cls.CASE1
        return cls.CASE3 if p.p1 == p.p2 else cls.CASE2


def _checked(p: CParams) -> CParams:
    p.validate()
    if p.value > 1:
        raise ValueError(f"value {p.value} exceeds 1")
    return p


def _raw_terms(p: CParams, case: WitnessCase) -> list[tuple[int, int, int]]:
    alpha, beta, p1, p2 = p.as_tuple()
    m = p.m
    if case is WitnessCase.SMOOTH_PAIR:
        return [(m, 0, 0), (0, m, 0), (0, 0, m)]
    if case is WitnessCase.CASE1:
        return [(m, 0, 0), (0, p1, p2), (0, (p2 // alpha) * beta + p1, 0), (0, 0, m)]
    if case is WitnessCase.CASE2:
        q = p2 % alpha
        return [(m, 0, 0), (0, p1, p2), (0, (p2 // alpha) * beta + p1, q), (0, m, 0), (0, 0, m)]
    return [(m, 0, 0), (0, p2, p2), (0, m, 0), (0, 0, m)]


def build_witness(p: CParams) -> tuple[PolySupport, WitnessCase]:
    case = WitnessCase.of(_checked(p))
    return PolySupport.of(_raw_terms(p, case)), case


@dataclass
class WitnessReport:
    params: CParams
    case: WitnessCase
    f: PolySupport
    raw_term_count: int
    m: int
    w2_f: Optional[int]
    w3_f: Optional[int]
    hyp2_holds: Optional[bool]
    hyp3_holds: Optional[bool]
    kawamata_mult: Optional[int]
    kawamata_chart: Optional[int]
    chart_transforms: dict[int, PolySupport]
    threshold: Fraction
    euclid: Optional[EuclidData] = None
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    disclaimer: str = SMOOTHNESS_DISCLAIMER

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        from .arith import format_rational

        return {
            "params": self.params.to_json(),
            "case": self.case.value,
            "f": self.f.to_json(),
            "raw_term_count": self.raw_term_count,
            "m": self.m,
            "w2_f": self.w2_f,
            "w3_f": self.w3_f,
            "hyp2_holds": self.hyp2_holds,
            "hyp3_holds": self.hyp3_holds,
            "kawamata_mult": self.kawamata_mult,
            "kawamata_chart": self.kawamata_chart,
            "chart_transforms": {str(c): s.to_json() for c, s in sorted(self.chart_transforms.items())},
            "threshold": format_rational(self.threshold),
            "failures": list(self.failures),
            "notes": list(self.notes),
            "disclaimer": self.disclaimer,
        }


def certify_witness(p: CParams) -> WitnessReport:
    """Recompute and check every arithmetic fact about the witness divisor of p.

    Failed checks are listed in ``failures``; nothing is raised for them.
    """
    f, case = build_witness(p)
    alpha, beta, p1, p2 = p.as_tuple()
    m_expected = p.m
    fails: list[str] = []
    notes: list[str] = []

    def check(cond: bool, label: str) -> bool:
        if not cond:
            fails.append(label)
        return cond

    w = WeightVector((1, alpha, beta))
    m = weighted_multiplicity(w, f)
    check(m == m_expected, f"w(f) = {m} differs from p1*alpha + p2*beta = {m_expected}")
    threshold = min(Fraction(alpha + beta, m_expected), Fraction(1))

    # raises if some term has weight below m, i.e. if m were not the multiplicity
    charts = {c: chart_proper_transform(f, alpha, beta, c, m) for c in (1, 2, 3)}

    if case is WitnessCase.SMOOTH_PAIR:
        return WitnessReport(
            p, case, f, len(_raw_terms(p, case)), m, None, None, None, None, None, None,
            charts, threshold, None, fails, notes,
        )

    e = euclid_pair(alpha, beta)
    s, t, sb, tb = e.s, e.t, e.s_bar, e.t_bar
    ab = alpha + beta

    w3 = WeightVector((1, sb, tb))
    t_eff = beta - tb  # equals t when alpha > 1
    w3_expected = tuple(Fraction(tb, beta) * x + Fraction(y, beta) for x, y in zip((1, alpha, beta), (t_eff, 1, 0)))
    check(w3.as_fractions() == w3_expected, "w3 != (t_bar/beta) w + (1/beta)(t, 1, 0)")
    w3_f = weighted_multiplicity(w3, f)
    w3_closed = (sb + tb) * p2 if case is WitnessCase.CASE3 else p1 * sb + p2 * tb
    check(w3_f == w3_closed, f"w3(f) = {w3_f} differs from closed form {w3_closed}")
    check(beta * (sb + tb) == 1 + tb * ab, "beta*(s_bar + t_bar) != 1 + t_bar*(alpha + beta)")
    check(beta * w3_f == p1 + tb * m, "beta*w3(f) != p1 + t_bar*m")
    hyp3 = (sb + tb) * m >= ab * w3_f
    check(hyp3, "hypothesis (s_bar + t_bar) m >= (alpha + beta) w3(f) fails")

    w2_f = hyp2 = None
    if alpha > 1:
        w2 = WeightVector((1, s, t))
        check(
            w2.as_fractions()
            == tuple(Fraction(s, alpha) * x + y for x, y in zip((1, alpha, beta), (Fraction(sb, alpha), 0, Fraction(1, alpha)))),
            "w2 != (s/alpha) w + (1/alpha)(s_bar, 0, 1)",
        )
        w2_f = weighted_multiplicity(w2, f)
        q = p2 % alpha
        if case is WitnessCase.CASE1:
            # min attained at y^{p1} z^{p2}: s p1 + t p2 - p2/alpha
            w2_closed = s * p1 + t * p2 - p2 // alpha
        elif case is WitnessCase.CASE2:
            w2_closed = s * ((p2 // alpha) * beta + p1) + t * q
            check(alpha * w2_f == q + s * m, "alpha*w2(f) != q + s*m")
            check(ab * w2_f < (s + t) * m, "strict inequality (alpha + beta) w2(f) < (s + t) m fails")
        else:
            w2_closed = (s + t) * p2
        check(w2_f == w2_closed, f"w2(f) = {w2_f} differs from closed form {w2_closed}")
        check(alpha * (s + t) == 1 + s * ab, "alpha*(s + t) != 1 + s*(alpha + beta)")
        hyp2 = (s + t) * m >= ab * w2_f
        check(hyp2, "hypothesis (s + t) m >= (alpha + beta) w2(f) fails")

    v3 = WeightVector((t_eff, 1, tb), beta)
    if case is WitnessCase.CASE2:
        v2 = WeightVector((sb, s, 1), alpha)
        kawamata_chart, kmult = 2, kawamata_multiplicity(charts[2], v2)
        expected = p2 % alpha
        check(kmult == expected, f"Kawamata multiplicity {kmult} on chart 2 differs from q = {expected}")
        check(Fraction(ab, m) < Fraction(1, expected), "(alpha+beta)/m < 1/q fails")
    else:
        kawamata_chart, kmult = 3, kawamata_multiplicity(charts[3], v3)
        expected = p2 if case is WitnessCase.CASE3 else p1
        check(kmult == expected, f"Kawamata multiplicity {kmult} on chart 3 differs from {expected}")
        if case is WitnessCase.CASE3:
            check(Fraction(ab, m) == Fraction(1, p2), "(alpha+beta)/m != 1/p2")
            if alpha > 1:
                k2 = kawamata_multiplicity(charts[2], WeightVector((sb, s, 1), alpha))
                check(k2 == p2, f"Kawamata multiplicity {k2} on chart 2 differs from p2 = {p2}")
        elif p1 > 0:
            check(Fraction(ab, m) <= Fraction(1, p1), "(alpha+beta)/m <= 1/p1 fails")
    if case is WitnessCase.CASE1 and p1 == p2:
        notes.append("p1 == p2 with alpha | p2: the Case 1 construction is used")

    return WitnessReport(
        p, case, f, len(_raw_terms(p, case)), m, w2_f, w3_f, hyp2, hyp3, kmult, kawamata_chart,
        charts, threshold, e, fails, notes,
    )

