"""Independent brute-force oracles used by the tests.

They deliberately share no code with the package: plain loops over bounded
parameter boxes, checking the defining conditions literally.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def c_values(par_max: int) -> frozenset:
    """All (alpha+beta)/(p1 alpha + p2 beta) in (0, 1] with every parameter <= par_max."""
    out = set()
    for beta in range(1, par_max + 1):
        for alpha in range(1, beta + 1):
            if gcd(alpha, beta) != 1:
                continue
            for p2 in range(1, par_max + 1):
                for p1 in range(0, par_max + 1):
                    if p2 >= max(alpha, p1) or p1 == p2:
                        q = Fraction(alpha + beta, p1 * alpha + p2 * beta)
                        if q <= 1:
                            out.add(q)
    return frozenset(out)


@lru_cache(maxsize=None)
def ht2_values(par_max: int) -> frozenset:
    """All (c1+c2)/(c1 c2 + a1 c2 + a2 c1) in (0, 1] with parameters <= par_max, plus 1."""
    out = {Fraction(1)}
    r = range(0, par_max + 1)
    for c1 in r:
        for c2 in r:
            if c1 + c2 == 0:
                continue
            for a1 in r:
                for a2 in r:
                    if a1 + c1 >= max(2, a2) and a2 + c2 >= max(2, a1):
                        den = c1 * c2 + a1 * c2 + a2 * c1
                        if den > 0 and Fraction(c1 + c2, den) <= 1:
                            out.add(Fraction(c1 + c2, den))
    return frozenset(out)


def euclid_brute(alpha: int, beta: int):
    """(s, t, s_bar, t_bar) by direct search; s, t are None when alpha == 1."""
    s = t = None
    if alpha > 1:
        s, t = next((s, t) for s in range(1, alpha) for t in range(1, beta) if alpha * t == beta * s + 1)
    sb, tb = next((sb, tb) for sb in range(1, alpha + 1) for tb in range(1, beta) if alpha * tb == beta * sb - 1)
    return s, t, sb, tb


def representations(m: int, alpha: int, beta: int):
    """All (p1, p2) >= 0 with p1 alpha + p2 beta = m, ascending p1."""
    return [(p1, (m - p1 * alpha) // beta) for p1 in range(0, m // alpha + 1) if (m - p1 * alpha) % beta == 0]


# the explicit rows of the published (1/3, 1/2) table: (alpha, beta, p1, p2) -> ct
TABLE1_ROWS = {
    (1, 1, 1, 4): "2/5", (1, 1, 0, 5): "2/5", (1, 2, 0, 4): "3/8", (2, 3, 0, 4): "5/12",
    (2, 3, 1, 4): "5/14", (2, 5, 0, 4): "7/20", (3, 4, 0, 4): "7/16", (3, 4, 1, 4): "7/19",
    (3, 4, 0, 5): "7/20", (3, 5, 0, 4): "2/5", (3, 5, 1, 4): "8/23", (3, 7, 0, 4): "5/14",
    (3, 8, 0, 4): "11/32", (4, 5, 0, 4): "9/20", (4, 5, 1, 4): "3/8", (4, 5, 0, 5): "9/25",
    (4, 7, 0, 4): "11/28", (4, 7, 1, 4): "11/32", (4, 9, 0, 4): "13/36", (4, 11, 0, 4): "15/44",
    (5, 6, 0, 5): "11/30", (5, 7, 0, 5): "12/35",
}
