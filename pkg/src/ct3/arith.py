"""Exact integer and rational primitives.

Every threshold in this package is a ``fractions.Fraction``; Python ints are
arbitrary precision so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterator, Optional

Rational = Fraction

__all__ = [
    "Rational",
    "EuclidData",
    "Representation",
    "parse_rational",
    "format_rational",
    "floor_scaled",
    "ceil_scaled",
    "floor_div",
    "ceil_div",
    "euclid_pair",
    "represent",
    "represent_all",
    "exists_congruent_in_range",
    "mod_inverse",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/m"`` or ``"a"`` (integers only) into a reduced Fraction."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ValueError(f"malformed rational literal {text!r}") from None
        if d == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(n, d)
    try:
        return Fraction(int(text))
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def floor_div(a: int, b: int) -> int:
    """Exact floor(a/b) for b > 0."""
    return a // b


def ceil_div(a: int, b: int) -> int:
    """Exact ceil(a/b) for b > 0."""
    return -((-a) // b)


def floor_scaled(p: int, q: int, m: int) -> int:
    """Return floor(p*m/q) exactly."""
    if q < 1:
        raise ValueError("q must be positive")
    return (p * m) // q


def ceil_scaled(p: int, q: int, m: int) -> int:
    """Return ceil(p*m/q) exactly."""
    if q < 1:
        raise ValueError("q must be positive")
    return -((-p * m) // q)


def mod_inverse(x: int, n: int) -> int:
    """Inverse of x modulo n (n >= 1); 0 when n == 1."""
    if n == 1:
        return 0
    return pow(x, -1, n)


@dataclass(frozen=True)
class EuclidData:
    """The pairs (s, t) and (s_bar, t_bar) attached to coprime alpha <= beta.

    alpha*t = beta*s + 1 and alpha*t_bar = beta*s_bar - 1. When alpha == 1
    the first pair does not exist and ``s``/``t`` are None.
    """

    alpha: int
    beta: int
    s: Optional[int]
    t: Optional[int]
    s_bar: int
    t_bar: int


def euclid_pair(alpha: int, beta: int) -> EuclidData:
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be positive")
    if alpha > beta:
        raise ValueError(f"need alpha <= beta, got ({alpha}, {beta})")
    if beta == 1:
        raise ValueError("beta must exceed 1")
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha={alpha} and beta={beta} are not coprime")
    # alpha*t_bar ≡ -1 (mod beta), 0 < t_bar < beta
    t_bar = (-mod_inverse(alpha, beta)) % beta
    s_bar = (alpha * t_bar + 1) // beta
    if alpha == 1:
        return EuclidData(alpha, beta, None, None, s_bar, t_bar)
    return EuclidData(alpha, beta, alpha - s_bar, beta - t_bar, s_bar, t_bar)


@dataclass(frozen=True)
class Representation:
    p1: int
    p2: int


def represent(m: int, alpha: int, beta: int) -> Optional[Representation]:
    """Normalized representation m = p1*alpha + p2*beta with 0 <= p1 < beta.

    Returns None when m has no representation with non-negative coefficients.
    """
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha={alpha} and beta={beta} are not coprime")
    p1 = (m * mod_inverse(alpha, beta)) % beta
    rest = m - p1 * alpha
    if rest < 0:
        return None
    return Representation(p1, rest // beta)


def represent_all(m: int, alpha: int, beta: int, p1_max: int) -> Iterator[Representation]:
    """All (p1, p2) >= 0 with p1*alpha + p2*beta = m and p1 <= p1_max, p1 ascending."""
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha={alpha} and beta={beta} are not coprime")
    p1 = (m * mod_inverse(alpha, beta)) % beta
    while p1 <= p1_max:
        rest = m - p1 * alpha
        if rest < 0:
            break
        yield Representation(p1, rest // beta)
        p1 += beta


def exists_congruent_in_range(lo: Fraction | int, hi: Fraction | int, residue: int, modulus: int) -> bool:
    """True iff some integer x in [ceil(lo), floor(hi)] has x ≡ residue (mod modulus)."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    first = ceil(Fraction(lo))
    last = floor(Fraction(hi))
    if first > last:
        return False
    x = first + (residue - first) % modulus
    return x <= last
