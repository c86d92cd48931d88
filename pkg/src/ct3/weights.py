"""Weight vectors, monomial supports and weighted blow-up charts of affine 3-space."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

__all__ = [
    "WeightVector",
    "PolySupport",
    "weighted_multiplicity",
    "chart_proper_transform",
    "kawamata_multiplicity",
    "VARIABLE_NAMES",
]

VARIABLE_NAMES = ("x", "y", "z", "u", "t")


@dataclass(frozen=True)
class WeightVector:
    """Weights ``numerators[i] / index`` on the coordinates."""

    numerators: tuple[int, ...]
    index: int = 1

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(int(v) for v in self.numerators))
        if self.index < 1:
            raise ValueError("index must be positive")
        if any(v < 0 for v in self.numerators):
            raise ValueError("weights must be non-negative")
        if not any(self.numerators):
            raise ValueError("at least one weight must be positive")

    @classmethod
    def from_fractions(cls, weights: Sequence[Fraction | int]) -> "WeightVector":
        fracs = [Fraction(w) for w in weights]
        n = lcm(*(f.denominator for f in fracs))
        return cls(tuple(int(f * n) for f in fracs), n)

    @property
    def dim(self) -> int:
        return len(self.numerators)

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.index) for v in self.numerators)


@dataclass(frozen=True)
class PolySupport:
    """Support of a power series: distinct exponent tuples, coefficients implicit.

    ``merged`` counts terms that collapsed onto an existing exponent when the
    support was built, so callers can tell that merging happened.
    """

    terms: frozenset[tuple[int, ...]]
    merged: int = field(default=0, compare=False)

    @classmethod
    def of(cls, monomials: Iterable[Sequence[int]]) -> "PolySupport":
        raw = [tuple(int(e) for e in mono) for mono in monomials]
        if raw:
            dims = {len(mono) for mono in raw}
            if len(dims) != 1:
                raise ValueError("monomials have differing numbers of variables")
        if any(e < 0 for mono in raw for e in mono):
            raise ValueError("exponents must be non-negative")
        terms = frozenset(raw)
        return cls(terms, len(raw) - len(terms))

    @property
    def dim(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def sorted_terms(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]]) -> "PolySupport":
        return cls.of(data)

    def __str__(self) -> str:
        return " + ".join(_monomial_str(t) for t in self.sorted_terms()) or "0"


def _monomial_str(exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(VARIABLE_NAMES, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def weighted_multiplicity(w: WeightVector, f: PolySupport) -> int:
    """Return ``index * w(f)``: the least weighted degree over the support, scaled to an integer."""
    if not f.terms:
        raise ValueError("empty support")
    if f.dim != w.dim:
        raise ValueError(f"dimension mismatch: weights have {w.dim} entries, monomials {f.dim}")
    return min(sum(e * v for e, v in zip(term, w.numerators)) for term in f.terms)


def chart_proper_transform(f: PolySupport, alpha: int, beta: int, chart: int, m: int) -> PolySupport:
    """Proper transform of ``f`` in chart U_chart of the (1, alpha, beta) blow-up.

    The exponent of the chart's exceptional coordinate is replaced by the
    excess W - m of the term's weighted degree W over the multiplicity m.
    """
    if chart not in (1, 2, 3):
        raise ValueError(f"chart must be 1, 2 or 3, got {chart}")
    if f.dim != 3:
        raise ValueError("chart transforms are defined for three variables only")
    w = (1, alpha, beta)
    out = []
    for term in f.terms:
        excess = sum(e * v for e, v in zip(term, w)) - m
        if excess < 0:
            raise ValueError(f"m={m} exceeds the weight of term {term}")
        new = list(term)
        new[chart - 1] = excess
        out.append(new)
    return PolySupport.of(out)


def kawamata_multiplicity(f_chart: PolySupport, v: WeightVector) -> int:
    """``index * v(f_chart)`` for a Kawamata weight on a cyclic quotient chart."""
    return weighted_multiplicity(v, f_chart)
