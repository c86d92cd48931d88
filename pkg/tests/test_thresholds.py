from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ct3.thresholds import (
    CParams,
    HT2Params,
    accumulation_clusters,
    c_member,
    c_to_ht2,
    c_witnesses,
    enumerate_interval,
    ht2_member,
    ht2_to_c,
    t3_classify,
)
from oracles import c_values, ht2_values

F = Fraction


def reduced(max_den, lo=F(0), hi=F(1)):
    return sorted({F(a, m) for m in range(1, max_den + 1) for a in range(1, m + 1) if lo < F(a, m) <= hi})


# -- CParams / HT2Params --------------------------------------------------------


def test_cparams_validation():
    assert CParams(3, 4, 1, 4).is_valid()
    assert CParams(3, 4, 1, 4).value == F(7, 19)
    assert CParams(2, 5, 3, 3).is_valid()  # p1 == p2 branch below alpha
    for bad in [(2, 4, 1, 4), (4, 3, 1, 4), (3, 4, 1, 2), (1, 2, -1, 3), (1, 2, 0, 0)]:
        assert not CParams(*bad).is_valid()
        with pytest.raises(ValueError):
            CParams(*bad).validate()


def test_ht2params_validation():
    assert HT2Params(3, 4, 1, 1).value == F(7, 19)
    assert HT2Params.one().value == 1 and HT2Params.one().is_valid()
    assert not HT2Params(1, 1, 0, 0).is_valid()
    assert not HT2Params(0, 1, 0, 3).is_valid()


# -- c_member -----------------------------------------------------------------


@pytest.mark.parametrize(
    "q, expected",
    [(F(7, 19), (3, 4, 1, 4)), (F(4, 5), None), (F(1), (1, 1, 1, 1)), (F(5, 6), (2, 3, 0, 2)), (F(7, 9), None)],
)
def test_c_member_examples(q, expected):
    w = c_member(q)
    assert (None if w is None else w.as_tuple()) == expected


def test_c_member_exhausts_on_non_members():
    assert c_member(F(4, 5), 60) is None
    assert c_member(F(7, 9), 9) is None


@pytest.mark.parametrize("q", [F(0), F(-1, 3), F(7, 3)])
def test_c_member_rejects_out_of_range(q):
    with pytest.raises(ValueError):
        c_member(q)


def test_c_member_complete_against_brute_force():
    # every value reachable with parameters <= 10 is found; k <= (alpha+beta) <= 20
    for q in c_values(10):
        w = c_member(q, 20)
        assert w is not None, q
        assert w.is_valid() and w.value == q


def test_c_member_sound_on_small_denominators():
    for q in reduced(40):
        w = c_member(q)
        if w is not None:
            assert w.is_valid() and w.value == q


def test_c_witnesses_against_brute_force():
    # every witness with parameters <= 8 and alpha + beta <= 3 * numerator shows up
    box = range(0, 9)
    for q in reduced(16, lo=F(1, 3)):
        ws = set(c_witnesses(q, 3))
        expected = {
            CParams(al, be, p1, p2)
            for be in box
            for al in box
            for p1 in box
            for p2 in box
            if 1 <= al <= be and gcd(al, be) == 1 and (al + be) % q.numerator == 0 and (al + be) <= 3 * q.numerator
            and CParams(al, be, p1, p2).is_valid() and CParams(al, be, p1, p2).value == q
        }
        assert expected <= ws, q
        assert all(w.is_valid() and w.value == q for w in ws)


# -- ht2 ----------------------------------------------------------------------


@pytest.mark.parametrize("q, expected", [(F(7, 19), (3, 4, 1, 1)), (F(1, 3), (1, 1, 3, 2))])
def test_ht2_member_examples(q, expected):
    assert ht2_member(q).as_tuple() == expected


def test_ht2_member_one_is_distinguished():
    assert ht2_member(F(1)).distinguished


def test_ht2_member_complete_against_brute_force():
    for q in ht2_values(8):
        h = ht2_member(q, 16)
        assert h is not None, q
        assert h.is_valid() and h.value == q


def test_c_and_ht2_agree_on_small_denominators():
    for q in reduced(30):
        c, h = c_member(q), ht2_member(q)
        assert (c is None) == (h is None), q


def test_brute_force_sets_agree():
    # C and HT2 coincide; compare the two literal definitions on a shared window
    lo = F(1, 4)
    cs = {q for q in c_values(12) if q > lo and q.denominator <= 12}
    hs = {q for q in ht2_values(12) if q > lo and q.denominator <= 12}
    assert cs == hs


# -- conversions ----------------------------------------------------------------


@pytest.mark.parametrize(
    "c, h",
    [((3, 4, 1, 4), (3, 4, 1, 1)), ((1, 2, 1, 4), (1, 1, 3, 2)), ((2, 3, 0, 2), (2, 3, 0, 0))],
)
def test_c_to_ht2_examples(c, h):
    assert c_to_ht2(CParams(*c)).as_tuple() == h


@pytest.mark.parametrize(
    "h, c",
    [((3, 4, 1, 1), (3, 4, 1, 4)), ((0, 1, 3, 2), (1, 1, 3, 3)), ((2, 2, 1, 1), (1, 1, 2, 2))],
)
def test_ht2_to_c_examples(h, c):
    assert ht2_to_c(HT2Params(*h)).as_tuple() == c


def test_c_to_ht2_rejects_value_one():
    with pytest.raises(ValueError):
        c_to_ht2(CParams(1, 1, 1, 1))


small = st.integers(0, 25)


@given(st.integers(1, 25), st.integers(1, 25), small, st.integers(1, 25))
def test_conversions_preserve_value(alpha, beta, p1, p2):
    alpha, beta = min(alpha, beta), max(alpha, beta)
    p = CParams(alpha, beta, p1, p2)
    if not p.is_valid() or p.value >= 1:
        return
    h = c_to_ht2(p)
    assert h.is_valid() and h.value == p.value
    back = ht2_to_c(h)
    assert back.is_valid() and back.value == p.value


@given(small, small, small, small)
def test_ht2_to_c_preserves_value(c1, c2, a1, a2):
    h = HT2Params(c1, c2, a1, a2)
    if not h.is_valid() or h.value > 1:
        return
    c = ht2_to_c(h)
    assert c.is_valid() and c.value == h.value


# -- enumerate_interval -----------------------------------------------------------


def test_enumerate_table_values():
    values = {q for q, _ in enumerate_interval(F(1, 3), F(1, 2), 44, 10)}
    for q in ["5/12", "5/14", "7/20", "7/16", "7/19", "2/5", "8/23", "11/32", "9/20", "3/8", "9/25", "11/28",
              "13/36", "15/44", "11/30", "12/35"]:
        assert F(q) in values
    assert F(1, 3) not in values and F(1, 2) not in values


def test_enumerate_upper_half_is_reciprocal_family():
    values = [q for q, _ in enumerate_interval(F(1, 2), F(1), 30, 10)]
    expected = sorted({F(1, 2) + F(1, p) for p in range(3, 61) if (F(1, 2) + F(1, p)).denominator <= 30})
    assert values == expected


def test_enumerate_near_zero_is_empty():
    assert enumerate_interval(F(0), F(1, 100), 50, 10) == []


def test_enumerate_output_sorted_and_witnessed():
    out = enumerate_interval(F(1, 5), F(1, 3), 30)
    assert [q for q, _ in out] == sorted(q for q, _ in out)
    for q, ws in out:
        assert ws and all(w.value == q for w in ws)


def test_enumerate_rejects_bad_interval():
    with pytest.raises(ValueError):
        enumerate_interval(F(1, 2), F(1, 3), 10)


# -- t3_classify / accumulation ---------------------------------------------------------


def test_t3_classify_examples():
    v = t3_classify(F(4, 5))
    assert v.member and v.exceptional == "four-fifths"
    assert not t3_classify(F(13, 15)).member
    v = t3_classify(F(0))
    assert v.member and v.exceptional == "zero"
    assert t3_classify(F(7, 19)).witness == CParams(3, 4, 1, 4)
    with pytest.raises(ValueError):
        t3_classify(F(6, 5))


def test_accumulation_examples():
    values = [q for q, _ in enumerate_interval(F(2, 5), F(3, 5), 400, 10)]
    assert F(1, 2) in accumulation_clusters(values, F(1, 50))
    assert accumulation_clusters([F(1, 3)] * 3, F(1, 100), [F(1, 3)]) == []
    assert accumulation_clusters([], F(1, 50)) == []
    with pytest.raises(ValueError):
        accumulation_clusters([], F(0))
