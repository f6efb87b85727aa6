"""The free inverse monoid FI(X) as pairs of a prefix-closed set and a point.

An element is ``(A, a)`` where A is a finite, non-empty, prefix-closed set
of reduced group words and ``a in A``.  The generator x embeds as
``({1, x}, x)``; multiplication is ``(A, a)(B, b) = (A u aB, ab)`` and
inversion is ``(A, a)^-1 = (a^-1 A, a^-1)``.

Two submonoids are singled out by membership tests: the free ample monoid
FA(X) (point a positive word) and the free left ample monoid FLA(X)
(every element of A a positive word).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet

from . import words
from .words import GroupWord, Word


@dataclass(frozen=True)
class MunnElement:
    aset: FrozenSet[GroupWord]
    point: GroupWord

    def __post_init__(self):
        if not isinstance(self.aset, frozenset):
            object.__setattr__(self, "aset", frozenset(self.aset))
        if self.point not in self.aset:
            raise ValueError("point must lie in the set")
        if not words.is_prefix_closed(self.aset):
            raise ValueError("set must be prefix-closed")

    def __repr__(self) -> str:
        inner = ", ".join(sorted(words.format_group_word(g) for g in self.aset))
        return f"({{{inner}}}, {words.format_group_word(self.point)})"

    def to_json(self) -> dict:
        return {
            "set": sorted(words.format_group_word(g) for g in self.aset),
            "point": words.format_group_word(self.point),
        }


def munn_from_json(data: dict) -> MunnElement:
    return MunnElement(
        frozenset(words.parse_group_word(s) for s in data["set"]),
        words.parse_group_word(data["point"]),
    )


MUNN_ONE = MunnElement(frozenset({words.GEMPTY}), words.GEMPTY)


def munn_from_word(g: GroupWord) -> MunnElement:
    """Image of a group word under the generator embedding x |-> ({1,x}, x)."""
    acc = MUNN_ONE
    for letter in g:
        acc = munn_multiply(acc, MunnElement(frozenset({words.GEMPTY, (letter,)}), (letter,)))
    return acc


def munn_multiply(p: MunnElement, q: MunnElement) -> MunnElement:
    shifted = frozenset(words.gmul(p.point, b) for b in q.aset)
    return MunnElement(p.aset | shifted, words.gmul(p.point, q.point))


def munn_inverse(p: MunnElement) -> MunnElement:
    ai = words.ginv(p.point)
    return MunnElement(frozenset(words.gmul(ai, g) for g in p.aset), ai)


def munn_star(p: MunnElement) -> MunnElement:
    """p^-1 p = (a^-1 A, 1)."""
    ai = words.ginv(p.point)
    return MunnElement(frozenset(words.gmul(ai, g) for g in p.aset), words.GEMPTY)


def munn_plus(p: MunnElement) -> MunnElement:
    """p p^-1 = (A, 1)."""
    return MunnElement(p.aset, words.GEMPTY)


def munn_is_idempotent(p: MunnElement) -> bool:
    return p.point == words.GEMPTY


def munn_power(p: MunnElement, n: int) -> MunnElement:
    if n < 0:
        return munn_power(munn_inverse(p), -n)
    acc = MUNN_ONE
    for _ in range(n):
        acc = munn_multiply(acc, p)
    return acc


def in_FA(p: MunnElement) -> bool:
    """Free ample monoid membership: the point is a positive word."""
    return words.is_positive(p.point)


def in_FLA(p: MunnElement) -> bool:
    """Free left ample monoid membership: the whole set is positive."""
    return all(words.is_positive(g) for g in p.aset)


def munn_in_right_ideal(p: MunnElement, r: MunnElement) -> bool:
    """r in pS  iff  p p^-1 r = r."""
    return munn_multiply(munn_plus(p), r) == r


def munn_principal_intersection(p: MunnElement, q: MunnElement) -> MunnElement:
    """A generator of pS n qS (inverse monoids are coherent this way).

    pS n qS = (p p^-1 q q^-1) S, and the generator is an idempotent times
    nothing: the product of the two +-projections.
    """
    return munn_multiply(munn_plus(p), munn_plus(q))
