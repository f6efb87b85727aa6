"""Normal forms for mixed word/idempotent letter sequences."""

import itertools
import random

import pytest

from ehresmann import normalform as nf
from ehresmann import xtree
from ehresmann.xtree import letter_tree, tree_multiply, tree_plus, word_tree

AP = tree_plus(letter_tree("a"))
BP = tree_plus(letter_tree("b"))
ABP = tree_plus(word_tree(("a", "b")))


def le_idempotents(max_edges=2):
    return [
        t
        for t in xtree.enumerate_trees("ab", max_edges, left_ehresmann_only=True)
        if xtree.is_idempotent(t) and t.edges
    ]


def test_letter_tree_rejects_non_idempotents():
    with pytest.raises(ValueError):
        nf.letter_tree(letter_tree("a"))
    with pytest.raises(ValueError):
        nf.letter_tree(xtree.tree_star(letter_tree("a")))  # not left-Ehresmann


def test_merge_absorbs_identities_and_neighbours():
    form = nf.normalize([("a",), (), ("b",), ABP, ABP])
    assert form.words[0] == ("a", "b")
    assert form.m <= 1


def test_redundant_idempotent_disappears():
    # (ab)+ a b = a b, so the leading idempotent is swallowed
    form = nf.normalize([ABP, ("a", "b")])
    assert form == nf.normalize([("a", "b")])
    assert form.m == 0 and form.words == (("a", "b"),)


def test_non_redundant_idempotent_stays():
    form = nf.normalize([BP, ("a",)])
    assert form.m == 1
    assert form.words == ((), ("a",))
    ok, reasons = nf.check_normal_conditions(form)
    assert ok, reasons


def test_step_II_strengthens_the_idempotent():
    # f is kept but replaced by f b+ when f b+ != b+
    form = nf.normalize([BP, ("a",), AP])
    for e in form.idems:
        suffix_plus = tree_plus(
            nf.eval_to_tree(form.letters()[form.letters().index(e) + 1:])
        )
        assert xtree.leq_nat(e, suffix_plus) and e != suffix_plus


def test_normal_form_evaluates_back():
    rng = random.Random(5)
    idems = le_idempotents()
    for _ in range(300):
        letters = []
        for _ in range(rng.randint(0, 4)):
            if rng.random() < 0.5:
                letters.append(tuple(rng.choice("ab") for _ in range(rng.randint(0, 2))))
            else:
                letters.append(rng.choice(idems))
        form = nf.normalize(letters)
        assert form.tree() == nf.eval_to_tree(letters)
        ok, reasons = nf.check_normal_conditions(form)
        assert ok, (letters, reasons)


def test_equal_trees_have_equal_normal_forms():
    """Exhaustive over short sequences: same product tree <=> same form."""
    idems = le_idempotents(1)  # a+, b+
    letters = [("a",), ("b",)] + idems
    by_tree = {}
    for k in range(4):
        for seq in itertools.product(letters, repeat=k):
            t = nf.eval_to_tree(seq)
            form = nf.normalize(seq)
            assert by_tree.setdefault(t, form) == form
    assert len(by_tree) > 30


def test_normal_form_of_tree_roundtrip():
    rng = random.Random(9)
    for _ in range(200):
        raw = xtree.random_raw_tree(rng, "ab", rng.randint(0, 6))
        t = xtree.prune(raw)
        if not xtree.is_left_ehresmann(t):
            continue
        form = nf.normal_form_of_tree(t)
        assert form.tree() == t
        ok, reasons = nf.check_normal_conditions(form)
        assert ok, reasons


def test_repr_is_readable():
    form = nf.normalize([BP, ("a",)])
    assert repr(form).startswith("NF[")
