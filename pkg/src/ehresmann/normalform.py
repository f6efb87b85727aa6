"""Normal forms t0 e1 t1 ... em tm for products of words and idempotent trees.

A letter is either a word over the alphabet or a non-trivial idempotent
pruned tree.  Every sequence of letters rewrites to a unique normal form

    t0 e1 t1 ... em tm,   ti words (interior ones non-empty),
                          ei idempotents with ei < (ti e_{i+1} ... tm)+

by (0) dropping identity letters, (I) merging adjacent letters of the same
kind, and (II) scanning right-to-left: with b the product of everything to
the right of an idempotent f, drop f when f b+ = b+ and replace f by f b+
otherwise.  Two letter sequences multiply to the same pruned tree exactly
when they have the same normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from . import xtree
from .words import Word, format_word
from .xtree import IDENTITY_TREE, XTree, is_idempotent, tree_multiply, tree_plus, word_tree

BXLetter = Union[Word, XTree]


def is_word_letter(letter: BXLetter) -> bool:
    return isinstance(letter, tuple)


def letter_tree(letter: BXLetter) -> XTree:
    if is_word_letter(letter):
        return word_tree(letter)
    if not is_idempotent(letter):
        raise ValueError("tree letters must be idempotent")
    if not xtree.is_left_ehresmann(letter):
        raise ValueError("tree letters must be left-Ehresmann idempotents")
    return letter


def eval_to_tree(letters: Iterable[BXLetter]) -> XTree:
    acc = IDENTITY_TREE
    for letter in letters:
        acc = tree_multiply(acc, letter_tree(letter))
    return acc


@dataclass(frozen=True)
class NormalForm:
    """words = (t0, ..., tm), idems = (e1, ..., em)."""

    words: Tuple[Word, ...]
    idems: Tuple[XTree, ...]

    def __post_init__(self):
        if len(self.words) != len(self.idems) + 1:
            raise ValueError("need one more word than idempotents")

    @property
    def m(self) -> int:
        return len(self.idems)

    def letters(self) -> Tuple[BXLetter, ...]:
        out: List[BXLetter] = [self.words[0]]
        for e, t in zip(self.idems, self.words[1:]):
            out.extend((e, t))
        return tuple(x for x in out if x != ())

    def tree(self) -> XTree:
        return eval_to_tree(self.letters())

    def __repr__(self) -> str:
        bits = [format_word(self.words[0])]
        for e, t in zip(self.idems, self.words[1:]):
            bits.append(repr(e))
            bits.append(format_word(t))
        return "NF[" + " | ".join(bits) + "]"


def _merge(letters: Sequence[BXLetter]) -> Tuple[List[Word], List[XTree]]:
    """Steps (0)+(I): drop identities, merge same-kind neighbours; split
    the alternating result into word list W (len m+1) and idempotent list E."""
    parts: List[BXLetter] = []
    for letter in letters:
        if is_word_letter(letter):
            if letter == ():
                continue
            if parts and is_word_letter(parts[-1]):
                parts[-1] = parts[-1] + letter
            else:
                parts.append(letter)
        else:
            t = letter_tree(letter)
            if len(t.edges) == 0:
                continue
            if parts and not is_word_letter(parts[-1]):
                parts[-1] = tree_multiply(parts[-1], t)
            else:
                parts.append(t)
    # parts now strictly alternates; pad with empty words at the ends
    W: List[Word] = []
    E: List[XTree] = []
    if not parts or not is_word_letter(parts[0]):
        W.append(())
    for p in parts:
        (W if is_word_letter(p) else E).append(p)
    if len(W) == len(E):
        W.append(())
    return W, E


def normalize(letters: Sequence[BXLetter]) -> NormalForm:
    """Rewrite a letter sequence to its normal form."""
    W, E = _merge(letters)
    j = len(E) - 1
    while j >= 0:
        suffix = eval_to_tree(
            [W[j + 1]]
            + [x for e, t in zip(E[j + 1:], W[j + 2:]) for x in (e, t)]
        )
        bplus = tree_plus(suffix)
        fb = tree_multiply(E[j], bplus)
        if fb == bplus:
            W[j] = W[j] + W[j + 1]
            del E[j], W[j + 1]
        else:
            E[j] = fb
        j -= 1
    return NormalForm(tuple(W), tuple(E))


def normal_form_of_tree(t: XTree) -> NormalForm:
    """The normal form of a pruned tree, from its trunk factorization."""
    idems, word = xtree.trunk_factorization(t)
    letters: List[BXLetter] = []
    for i, e in enumerate(idems):
        letters.append(e)
        if i < len(word):
            letters.append((word[i],))
    return normalize(letters)


def check_normal_conditions(nf: NormalForm) -> Tuple[bool, List[str]]:
    """Verify the normal-form side conditions; returns (ok, reasons)."""
    reasons: List[str] = []
    for i, t in enumerate(nf.words[1:-1], start=1):
        if t == ():
            reasons.append(f"interior word t{i} is empty")
    for i, e in enumerate(nf.idems, start=1):
        if not is_idempotent(e):
            reasons.append(f"e{i} is not idempotent")
        if len(e.edges) == 0:
            reasons.append(f"e{i} is trivial")
    for i, e in enumerate(nf.idems, start=1):
        suffix = eval_to_tree(
            [nf.words[i]]
            + [x for f, t in zip(nf.idems[i:], nf.words[i + 1:]) for x in (f, t)]
        )
        bplus = tree_plus(suffix)
        if not (xtree.leq_nat(e, bplus) and e != bplus):
            reasons.append(f"e{i} is not strictly below the +-closure of its suffix")
    return (not reasons, reasons)
