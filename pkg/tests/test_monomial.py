from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from symrees.monomial import (
    INFINITE,
    ArityError,
    MonomialIdeal,
    ZeroIdealError,
    divides,
    format_monomial,
    quotient_dim,
)


def mi(*gens):
    return MonomialIdeal(gens)


def monomials_up_to(arity, degree):
    return [e for e in product(range(degree + 1), repeat=arity) if sum(e) <= degree]


def brute_length(ideal, bound=40):
    """Count monomials outside ``ideal`` in a box, no staircase logic."""
    return sum(1 for e in product(range(bound), repeat=ideal.arity) if e not in ideal)


def brute_colon(ideal, v, degree):
    return {w for w in monomials_up_to(ideal.arity, degree)
            if tuple(a + b for a, b in zip(w, v)) in ideal}


def test_divides():
    assert divides((1, 1), (2, 1))
    assert not divides((2, 0), (1, 3))
    assert divides((0, 0), (0, 3))
    with pytest.raises(ArityError):
        divides((1, 1), (1, 1, 1))


def test_minimalize_examples():
    assert mi((2, 0), (3, 0), (0, 1)).gens == ((2, 0), (0, 1))
    assert mi((4, 0), (3, 1), (2, 2), (1, 3), (0, 3)).gens == ((4, 0), (3, 1), (2, 2), (0, 3))
    assert mi((2, 0)).gens == ((2, 0),)


def test_zero_and_unit_are_distinguished():
    zero = MonomialIdeal.zero_ideal(2)
    one = MonomialIdeal.unit_ideal(2)
    assert zero.is_zero and not zero.is_unit
    assert one.is_unit and not one.is_zero
    assert str(zero) == "(0)" and str(one) == "(1)"
    with pytest.raises(ZeroIdealError):
        MonomialIdeal([])


def test_sum_product_power():
    m2 = mi((2, 0), (1, 1), (0, 2))
    assert m2 + mi((0, 3)) == m2
    assert (m2 ** 2).gens == ((4, 0), (3, 1), (2, 2), (1, 3), (0, 4))
    assert (m2 ** 0).is_unit


def test_power_matches_repeated_products():
    ideal = mi((2, 0), (1, 2), (0, 3))
    acc = MonomialIdeal.unit_ideal(2)
    for k in range(6):
        assert ideal ** k == acc
        acc = acc * ideal


def test_colon_by_monomial():
    m2 = mi((2, 0), (1, 1), (0, 2))
    assert m2.colon((0, 1)) == mi((1, 0), (0, 1))
    assert brute_colon(m2, (0, 1), 3) == {w for w in monomials_up_to(2, 3) if w in mi((1, 0), (0, 1))}
    assert m2.colon((0, 0)) == m2


def test_colon_by_ideal():
    ideal = mi((2, 0), (0, 2))
    result = ideal.colon(mi((1, 0), (0, 1)))
    assert result == mi((2, 0), (1, 1), (0, 2))
    oracle = {w for w in monomials_up_to(2, 4)
              if (w[0] + 1, w[1]) in ideal and (w[0], w[1] + 1) in ideal}
    assert oracle == {w for w in monomials_up_to(2, 4) if w in result}
    assert ideal.colon(mi((0, 1))) == ideal.colon((0, 1))
    assert ideal.colon(ideal).is_unit
    with pytest.raises(ZeroIdealError):
        ideal.colon(MonomialIdeal.zero_ideal(2))


def test_membership_and_inclusion():
    assert (3, 1) in mi((2, 0), (0, 2))
    assert mi((1, 0), (0, 1)) ** 2 == mi((2, 0), (1, 1), (0, 2))
    i2 = mi((4, 0), (3, 1), (2, 2), (0, 3))
    i1 = mi((2, 0), (1, 1), (0, 2))
    assert i2 <= i1 and not i1 <= i2


def test_lengths():
    assert mi((2, 0), (1, 1), (0, 2)).length() == 3
    assert mi((4, 0), (3, 1), (2, 2), (0, 3)).length() == 9
    assert mi((1, 0)).length() == INFINITE
    assert MonomialIdeal([(1, 0, 0), (0, 2, 0), (0, 0, 3)]).length() == 6
    assert MonomialIdeal.unit_ideal(2).length() == 0


def test_quotient_dim():
    i1 = mi((2, 0), (1, 1), (0, 2))
    i2 = mi((4, 0), (3, 1), (2, 2), (0, 3))
    assert quotient_dim(i1, i2.colon((0, 1))) == 2
    assert quotient_dim(i1, i1) == 0
    with pytest.raises(ValueError, match="x2"):
        quotient_dim(i2, i1)


def test_rendering():
    assert format_monomial((2, 1)) == "x2^2*x3"
    assert format_monomial((0, 0)) == "1"
    assert format_monomial((1, 0, 3)) == "x1*x3^3"
    assert str(mi((2, 0), (0, 1))) == "(x2^2, x3)"


# properties --------------------------------------------------------------

exps2 = st.tuples(st.integers(0, 6), st.integers(0, 6))
ideals2 = st.lists(exps2, min_size=1, max_size=5).map(lambda g: MonomialIdeal(g, 2))


@st.composite
def artinian2(draw):
    gens = draw(st.lists(exps2, min_size=0, max_size=4))
    gens += [(draw(st.integers(1, 7)), 0), (0, draw(st.integers(1, 7)))]
    return MonomialIdeal(gens, 2)


@st.composite
def artinian3(draw):
    e = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
    gens = draw(st.lists(e, min_size=0, max_size=4))
    gens += [(draw(st.integers(1, 5)), 0, 0), (0, draw(st.integers(1, 5)), 0), (0, 0, draw(st.integers(1, 5)))]
    return MonomialIdeal(gens, 3)


@settings(max_examples=200)
@given(ideals2)
def test_minimality(ideal):
    for a in ideal.gens:
        for b in ideal.gens:
            assert a == b or not divides(a, b)
    assert list(ideal.gens) == sorted(ideal.gens, reverse=True)


@settings(max_examples=200)
@given(ideals2, exps2)
def test_colon_membership_agreement(ideal, v):
    colon = ideal.colon(v)
    for w in monomials_up_to(2, 10):
        assert (w in colon) == (tuple(a + b for a, b in zip(w, v)) in ideal)


@settings(max_examples=200)
@given(artinian2(), exps2)
def test_length_additive_along_colon(ideal, v):
    assert ideal.length() == ideal.colon(v).length() + (ideal + MonomialIdeal([v])).length()


@settings(max_examples=100)
@given(artinian2())
def test_staircase_matches_enumeration_2(ideal):
    assert ideal.length() == brute_length(ideal, 8)
    assert len(ideal.standard_monomials()) == ideal.length()


@settings(max_examples=60)
@given(artinian3())
def test_staircase_matches_enumeration_3(ideal):
    assert ideal.length() == brute_length(ideal, 6)


@settings(max_examples=100)
@given(ideals2, ideals2)
def test_intersection_membership(a, b):
    meet = a.intersect(b)
    for w in monomials_up_to(2, 12):
        assert (w in meet) == (w in a and w in b)
