from hypothesis import given, strategies as st

from ehresmann import words

letters = st.sampled_from("abc")
group_words = st.lists(
    st.tuples(letters, st.sampled_from((1, -1))), max_size=8
).map(tuple)


def test_reduce_cancels_adjacent_inverses():
    w = (("a", 1), ("b", 1), ("b", -1), ("a", -1), ("c", 1))
    assert words.reduce_group_word(w) == (("c", 1),)


def test_parse_and_format_roundtrip():
    assert words.parse_group_word("x y^-1 x") == (("x", 1), ("y", -1), ("x", 1))
    assert words.parse_group_word("1") == ()
    assert words.format_group_word(()) == "1"
    assert words.format_group_word((("x", 1), ("y", -1))) == "x y^-1"
    assert words.parse_word("a b a") == ("a", "b", "a")


@given(group_words)
def test_reduce_is_idempotent(w):
    r = words.reduce_group_word(w)
    assert words.is_reduced(r)
    assert words.reduce_group_word(r) == r


@given(group_words, group_words)
def test_gmul_matches_concat_reduce(u, v):
    u, v = words.reduce_group_word(u), words.reduce_group_word(v)
    assert words.gmul(u, v) == words.reduce_group_word(u + v)


@given(group_words)
def test_inverse_cancels(w):
    w = words.reduce_group_word(w)
    assert words.gmul(w, words.ginv(w)) == ()
    assert words.gmul(words.ginv(w), w) == ()


@given(st.lists(letters, max_size=6).map(tuple))
def test_positive_word_roundtrip(w):
    g = words.word_to_group(w)
    assert words.is_positive(g)
    assert words.group_to_word(g) == w


def test_prefix_closure():
    g = (("a", 1), ("b", -1))
    cl = words.prefix_closure({g})
    assert cl == {(), (("a", 1),), g}
    assert words.is_prefix_closed(cl)
    assert not words.is_prefix_closed({g})


def test_is_suffix():
    assert words.is_suffix(("b", "c"), ("a", "b", "c"))
    assert words.is_suffix((), ("a",))
    assert not words.is_suffix(("a", "b"), ("b",))
