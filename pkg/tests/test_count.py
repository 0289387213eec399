from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wicks.count import (feasible_params, mass_m1, mass_m2, mass_m3, mass_m6, pointed_count,
                         recursion_check, report)

TABLE = [
    1, 9, 1726, 1349005, 2169056374, 5849686966988, 23808202021448662,
    136415042681045401661, 1047212810636411989605202, 10378926166167927379808819918,
    129040245485216017874985276329588, 1966895941808403901421322270340417352,
    36072568973390464496963227953956789552404, 783676560946907841153290887110277871996495020,
    19903817294929565349602352185144632327980494486370,
]


def test_m1_values():
    assert mass_m1(1) == Fraction(1, 6)
    assert mass_m1(2) == Fraction(35, 6)


def test_m1_genus_three_total():
    rep = report(3)
    assert rep.m1 + rep.m2 + 2 * rep.m3 + 2 * rep.m6 == 1726


@pytest.mark.parametrize("g,r,expected", [(2, 1, Fraction(2)), (2, 5, Fraction(1, 2)), (2, 2, 0), (1, 3, Fraction(1, 6))])
def test_m2(g, r, expected):
    assert mass_m2(g, r) == expected


@pytest.mark.parametrize("g,s,t,expected", [(1, 0, 2, Fraction(1, 6)), (2, 2, 1, Fraction(1, 3)), (2, 0, 0, 0)])
def test_m3(g, s, t, expected):
    assert mass_m3(g, s, t) == expected


def test_m6():
    assert mass_m6(1, 1, 0, 1) == Fraction(1, 6)
    assert mass_m6(1, 0, 0, 0) == 0
    for r in range(0, 8):
        for s in range(0, 8):
            for t in range(0, 8):
                assert mass_m6(2, r, s, t) == 0


def test_feasible_params():
    assert feasible_params(2, 2) == [(1,), (5,)]
    assert feasible_params(2, 3) == [(2, 1)]
    assert feasible_params(1, 6) == [(1, 0, 1)]
    assert feasible_params(2, 6) == []


def test_reports():
    one = report(1)
    assert (one.M1, one.M2, one.M3, one.M6) == (1, 1, 1, 1)
    assert one.exact_orders == {1: 0, 2: 0, 3: 0, 6: 1}
    two = report(2)
    assert (two.M1, two.M2, two.M3, two.M6) == (9, 5, 1, 0)
    assert two.exact_orders == {1: 3, 2: 5, 3: 1, 6: 0}
    assert report(15).M1 == TABLE[14]


def test_table():
    assert [report(g).M1 for g in range(1, 16)] == TABLE


def test_pointed_counts():
    assert pointed_count(1, 1) == 1
    assert pointed_count(2, 1) == 105
    assert pointed_count(2, 3) == 6


def test_recursion_small():
    assert all(recursion_check(g) for g in range(1, 15))


@given(st.integers(1, 50))
def test_integrality(g):
    rep = report(g)
    for d in (1, 2, 3, 6):
        pointed = (12 * g - 6) * rep.mass(d)
        assert pointed.denominator == 1 and pointed >= 0
    for value in (rep.M1, rep.M2, rep.M3, rep.M6, *rep.exact_orders.values()):
        assert isinstance(value, int) and value >= 0


def test_invalid_genus():
    with pytest.raises(ValueError):
        report(0)
