"""The marked-letter semilattice and the theta embedding data."""

import itertools
import random

from ehresmann import embed_theta as et
from ehresmann import words, xtree
from ehresmann.xtree import letter_tree, tree_multiply, tree_plus

AP = tree_plus(letter_tree("a"))
BP = tree_plus(letter_tree("b"))
LETTERS = [("a",), ("b",), AP, BP]


def random_cx(rng, max_parts=4):
    return et.CXWord.make([rng.choice(LETTERS) for _ in range(rng.randint(0, max_parts))])


def test_make_normalizes():
    c = et.CXWord.make([("a",), (), ("b",), AP, AP])
    assert len(c.parts) == 2
    assert c.trunk() == ("a", "b")
    assert c.shape() == "tf"
    assert et.CXWord.make([]).shape() == "1"


def test_multiply_merges_at_the_seam():
    c = et.CXWord.make([("a",), AP])
    d = et.CXWord.make([BP, ("b",)])
    prod = et.cx_multiply(c, d)
    assert prod.trunk() == ("a", "b")
    assert len(prod.parts) == 3  # word, merged idempotent, word
    assert prod.parts[1] == tree_multiply(AP, BP)


def test_splitting_positions():
    c = et.CXWord.make([("a",), AP, ("b", "b"), BP])
    pos = et.splitting_positions(c)
    assert pos == [(("a",), AP), (("a", "b", "b"), BP)]


def test_tau_marks_successive_prefixes():
    z = et.tau(("a", "b"))
    assert z.ys == frozenset({("a", ()), ("b", (("a", 1),))})
    shifted = et.tau(("a", "b"), (("c", 1),))
    assert ("a", (("c", 1),)) in shifted.ys


def test_zx_semilattice_laws():
    rng = random.Random(2)
    for _ in range(200):
        a = et.theta(random_cx(rng)).zx
        b = et.theta(random_cx(rng)).zx
        assert et.zx_multiply(a, b) == et.zx_multiply(b, a)
        assert et.zx_multiply(a, a) == a
        assert et.zx_multiply(a, et.ZX_ONE) == a


def test_translate_is_an_action():
    rng = random.Random(4)
    g = (("a", 1),)
    h = (("b", 1), ("a", -1))
    for _ in range(100):
        z = et.theta(random_cx(rng)).zx
        assert et.zx_translate(g, et.zx_translate(h, z)) == et.zx_translate(
            words.gmul(g, h), z
        )
        assert et.zx_translate((), z) == z


def test_y_and_e_generators_differ():
    ya = et.theta(et.CXWord.make([("a",)]))
    ea = et.theta(et.CXWord.make([AP]))
    assert ya.zx != ea.zx


def test_tau_factor_exact_criterion():
    # tau(v, h) divides tau(w, 1) iff h is positive and w = h v u
    assert et.tau_factor(("b",), (("a", 1),), ("a", "b", "c")) == (("a",), ("c",))
    assert et.tau_factor(("b",), (("a", -1),), ("a", "b", "c")) is None
    assert et.tau_factor(("b",), (), ("a", "b")) is None
    got = et.tau_factor((), (), ("a",))
    assert got == ((), ("a",))


def test_theta_morphism_law_random():
    rng = random.Random(6)
    for _ in range(500):
        c, d = random_cx(rng), random_cx(rng)
        assert et.theta_morphism_check(c, d), (c, d)


def test_theta_morphism_law_exhaustive_short():
    cxs = [
        et.CXWord.make(list(seq))
        for k in range(3)
        for seq in itertools.product(LETTERS, repeat=k)
    ]
    cxs = list(dict.fromkeys(cxs))
    for c in cxs:
        for d in cxs:
            assert et.theta_morphism_check(c, d)


def test_theta_separates_normalized_words():
    seen = {}
    for k in range(3):
        for seq in itertools.product(LETTERS, repeat=k):
            c = et.CXWord.make(list(seq))
            img = et.theta(c)
            prev = seen.setdefault((img.zx, img.trunk), c)
            assert prev == c, (prev, c)


def test_json_roundtrip():
    rng = random.Random(8)
    for _ in range(50):
        z = et.theta(random_cx(rng)).zx
        assert et.zx_from_json(z.to_json()) == z
