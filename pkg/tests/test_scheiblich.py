"""Free inverse monoid elements as (prefix-closed set, point) pairs."""

import pytest
from hypothesis import given, strategies as st

from ehresmann import scheiblich as sch
from ehresmann import words

signed = st.tuples(st.sampled_from("xy"), st.sampled_from((1, -1)))
group_words = st.lists(signed, max_size=6).map(
    lambda ls: words.reduce_group_word(tuple(ls))
)
elements = group_words.map(sch.munn_from_word)


def test_generator_shape():
    x = sch.munn_from_word((("x", 1),))
    assert x.aset == frozenset({(), (("x", 1),)})
    assert x.point == (("x", 1),)


def test_xx_inverse_is_not_identity():
    x = sch.munn_from_word((("x", 1),))
    e = sch.munn_multiply(x, sch.munn_inverse(x))
    assert e != sch.MUNN_ONE
    assert sch.munn_is_idempotent(e)
    assert e == sch.munn_plus(x)


def test_prefix_closure_enforced():
    with pytest.raises(ValueError):
        sch.MunnElement(frozenset({(("x", 1), ("y", 1))}), (("x", 1), ("y", 1)))
    with pytest.raises(ValueError):
        sch.MunnElement(frozenset({()}), (("x", 1),))


@given(elements, elements, elements)
def test_associativity(p, q, r):
    lhs = sch.munn_multiply(sch.munn_multiply(p, q), r)
    assert lhs == sch.munn_multiply(p, sch.munn_multiply(q, r))


@given(elements)
def test_inverse_laws(p):
    pi = sch.munn_inverse(p)
    assert sch.munn_multiply(sch.munn_multiply(p, pi), p) == p
    assert sch.munn_inverse(pi) == p
    assert sch.munn_star(p) == sch.munn_plus(pi)


@given(elements, elements)
def test_idempotents_commute(p, q):
    e, f = sch.munn_plus(p), sch.munn_plus(q)
    assert sch.munn_multiply(e, f) == sch.munn_multiply(f, e)


@given(group_words)
def test_positive_words_are_in_FLA(g):
    p = sch.munn_from_word(g)
    if words.is_positive(g):
        assert sch.in_FA(p) and sch.in_FLA(p)


def test_FA_FLA_membership():
    x = (("x", 1),)
    xx1 = sch.munn_multiply(sch.munn_from_word(x), sch.munn_from_word(words.ginv(x)))
    assert sch.in_FLA(xx1)  # positive set, point 1
    assert sch.in_FA(xx1)
    xinv = sch.munn_from_word(words.ginv(x))
    assert not sch.in_FLA(xinv)
    assert not sch.in_FA(xinv)


@given(elements, elements)
def test_right_ideal_membership_criterion(p, q):
    pq = sch.munn_multiply(p, q)
    assert sch.munn_in_right_ideal(p, pq)
    if sch.munn_in_right_ideal(p, q):
        # q really is a multiple of p, with cofactor p^-1 q
        s = sch.munn_multiply(sch.munn_inverse(p), q)
        assert sch.munn_multiply(p, s) == q


@given(elements, elements)
def test_principal_intersection_generator(p, q):
    gen = sch.munn_principal_intersection(p, q)
    assert sch.munn_in_right_ideal(p, gen)
    assert sch.munn_in_right_ideal(q, gen)


@given(elements)
def test_json_roundtrip(p):
    assert sch.munn_from_json(p.to_json()) == p
