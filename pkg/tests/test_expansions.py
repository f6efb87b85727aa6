"""Cayley-subgraph, Szendrei, and size-truncated expansions."""

import random

import pytest
from hypothesis import given, strategies as st

from ehresmann import expansions as ex
from ehresmann import scheiblich as sch
from ehresmann import words
from ehresmann.psdp import FreeGroup, IntegersAdd, PSetElement

F = FreeGroup(("x", "y"))
Z = IntegersAdd()

signed = st.tuples(st.sampled_from("xy"), st.sampled_from((1, -1)))
group_words = st.lists(signed, max_size=6).map(tuple)


def sz_from_word(base, g):
    acc = ex.sz_identity(base)
    for name, sign in g:
        gen = ex.sz_generator(base, name)
        acc = ex.sz_multiply(acc, gen if sign == 1 else ex.sz_inverse(gen))
    return acc


def test_generator_graph():
    g = ex.mm_generator(F, "x")
    assert g.point == (("x", 1),)
    assert g.graph.edges == frozenset({((), "x")})
    g.graph.validate()


def test_subgraph_validation():
    one = ()
    x = (("x", 1),)
    with pytest.raises(ValueError):
        ex.CayleySubgraph(F, frozenset({x}), frozenset()).validate()
    with pytest.raises(ValueError):
        ex.CayleySubgraph(F, frozenset({one, x}), frozenset()).validate()


@given(group_words, group_words)
def test_mm_munn_isomorphism(u, v):
    pu, pv = ex.mm_from_word(F, u), ex.mm_from_word(F, v)
    mu, mv = sch.munn_from_word(u), sch.munn_from_word(v)
    assert ex.mm_to_munn(pu) == mu
    assert ex.munn_to_mm(F, mu) == pu
    assert ex.mm_to_munn(ex.mm_multiply(pu, pv)) == sch.munn_multiply(mu, mv)
    assert ex.mm_to_munn(ex.mm_inverse(pu)) == sch.munn_inverse(mu)


@given(group_words)
def test_mm_unary_ops(u):
    p = ex.mm_from_word(F, u)
    assert ex.mm_plus(p) == ex.mm_multiply(p, ex.mm_inverse(p))
    assert ex.mm_star(p) == ex.mm_multiply(ex.mm_inverse(p), p)


@given(group_words, group_words, group_words)
def test_sz_is_a_monoid_with_involution(u, v, w):
    pu, pv, pw = (sz_from_word(F, g) for g in (u, v, w))
    assert ex.sz_multiply(ex.sz_multiply(pu, pv), pw) == ex.sz_multiply(
        pu, ex.sz_multiply(pv, pw)
    )
    assert ex.sz_inverse(ex.sz_inverse(pu)) == pu
    one = ex.sz_identity(F)
    assert ex.sz_multiply(one, pu) == pu == ex.sz_multiply(pu, one)


def test_sz_remembers_detours_but_not_backtracking():
    # x y y^-1 keeps the visited vertex xy; x x^-1 x collapses to x
    u = (("x", 1), ("y", 1), ("y", -1))
    v = (("x", 1),)
    assert sz_from_word(F, u) != sz_from_word(F, v)
    uu = (("x", 1), ("x", -1), ("x", 1))
    assert sz_from_word(F, uu) == sz_from_word(F, v)


def test_top_is_a_singleton_and_absorbs():
    assert ex._Top() is ex.TOP
    big = ex.QnElement(Z, 2, frozenset({0, 1}), 0)
    assert big.elems is ex.TOP
    small = ex.QnElement(Z, 2, frozenset({0}), 0)
    assert small.elems == frozenset({0})
    prod = ex.qn_multiply(big, small)
    assert prod.elems is ex.TOP and prod.point == 0


def test_qn_is_a_quotient_of_sdp():
    rng = random.Random(1)
    n = 3
    for _ in range(200):
        p = PSetElement(Z, frozenset(rng.sample(range(-3, 4), rng.randint(0, 4))),
                        rng.randint(-2, 2))
        q = PSetElement(Z, frozenset(rng.sample(range(-3, 4), rng.randint(0, 4))),
                        rng.randint(-2, 2))
        from ehresmann.psdp import sdp_multiply, sdp_plus, sdp_star

        assert ex.qn_from_sdp(sdp_multiply(p, q), n) == ex.qn_multiply(
            ex.qn_from_sdp(p, n), ex.qn_from_sdp(q, n)
        )
        assert ex.qn_from_sdp(sdp_plus(p), n) == ex.qn_plus(ex.qn_from_sdp(p, n))
        assert ex.qn_from_sdp(sdp_star(p), n) == ex.qn_star(ex.qn_from_sdp(p, n))


def test_qn_mixed_parameters_rejected():
    with pytest.raises(ValueError):
        ex.qn_multiply(ex.qn_identity(Z, 2), ex.qn_identity(Z, 3))
