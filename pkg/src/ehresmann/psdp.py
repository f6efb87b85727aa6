"""Special power-set semidirect products S(M) = P(M) x| M.

Elements are pairs ``(X, x)`` with X a finite subset of the base monoid M
and x in M; the product is ``(X, x)(Y, y) = (X u xY, xy)`` and the identity
is ``(emptyset, 1)``.  When M is a group this is an Ehresmann (in fact
restriction) monoid with

    (Y, g)^-1 = (g^-1 Y, g^-1)
    (Y, g)* = (g^-1 Y, 1)        (Y, g)+ = (Y, 1)

and idempotents exactly the pairs ``(Y, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, FrozenSet

from . import words
from .words import GroupWord, Word


class BaseMonoid:
    """Base monoid interface: canonical hashable elements, total multiply."""

    name = "base"
    is_group = False

    def identity(self) -> Any:
        raise NotImplementedError

    def multiply(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def invert(self, x: Any) -> Any:
        raise NotImplementedError(f"{self.name} is not a group")

    def element_to_json(self, x: Any) -> Any:
        return x

    def element_from_json(self, data: Any) -> Any:
        return data

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.__dict__ == getattr(other, "__dict__", None)

    def __hash__(self) -> int:
        return hash((type(self), tuple(sorted(self.__dict__.items()))))

    def __repr__(self) -> str:
        return self.name


class IntegersAdd(BaseMonoid):
    """The group of integers under addition."""

    name = "Z"
    is_group = True

    def identity(self) -> int:
        return 0

    def multiply(self, x: int, y: int) -> int:
        return x + y

    def invert(self, x: int) -> int:
        return -x


class FreeMonoid(BaseMonoid):
    """X* for a finite alphabet; elements are positive words."""

    is_group = False

    def __init__(self, alphabet):
        self.alphabet = tuple(alphabet)
        self.name = "free-monoid(" + ",".join(self.alphabet) + ")"

    def identity(self) -> Word:
        return words.EMPTY

    def multiply(self, x: Word, y: Word) -> Word:
        return x + y

    def element_to_json(self, x: Word) -> str:
        return words.format_word(x)

    def element_from_json(self, data: str) -> Word:
        return words.parse_word(data)


class FreeGroup(BaseMonoid):
    """F_X for a finite alphabet; elements are reduced group words."""

    is_group = True

    def __init__(self, alphabet):
        self.alphabet = tuple(alphabet)
        self.name = "free-group(" + ",".join(self.alphabet) + ")"

    def identity(self) -> GroupWord:
        return words.GEMPTY

    def multiply(self, x: GroupWord, y: GroupWord) -> GroupWord:
        return words.gmul(x, y)

    def invert(self, x: GroupWord) -> GroupWord:
        return words.ginv(x)

    def element_to_json(self, x: GroupWord) -> str:
        return words.format_group_word(x)

    def element_from_json(self, data: str) -> GroupWord:
        return words.parse_group_word(data)


@dataclass(frozen=True)
class PSetElement:
    """A pair (X, x) in S(M)."""

    base: BaseMonoid
    elems: FrozenSet[Any]
    point: Any

    def __post_init__(self):
        if not isinstance(self.elems, frozenset):
            object.__setattr__(self, "elems", frozenset(self.elems))

    def __repr__(self) -> str:
        inner = ", ".join(sorted(repr(e) for e in self.elems))
        return f"({{{inner}}}, {self.point!r})"

    def to_json(self) -> dict:
        enc = self.base.element_to_json
        return {
            "set": sorted((enc(e) for e in self.elems), key=repr),
            "point": enc(self.point),
        }


def sdp_identity(base: BaseMonoid) -> PSetElement:
    return PSetElement(base, frozenset(), base.identity())


def sdp_from_json(base: BaseMonoid, data: dict) -> PSetElement:
    dec = base.element_from_json
    return PSetElement(base, frozenset(dec(e) for e in data["set"]), dec(data["point"]))


def _check_same_base(p: PSetElement, q: PSetElement) -> None:
    if p.base != q.base:
        raise ValueError(f"mixed bases {p.base!r} and {q.base!r}")


def sdp_multiply(p: PSetElement, q: PSetElement) -> PSetElement:
    _check_same_base(p, q)
    base = p.base
    shifted = frozenset(base.multiply(p.point, e) for e in q.elems)
    return PSetElement(base, p.elems | shifted, base.multiply(p.point, q.point))


def sdp_power(p: PSetElement, n: int) -> PSetElement:
    if n < 0:
        return sdp_power(sdp_inverse(p), -n)
    acc = sdp_identity(p.base)
    for _ in range(n):
        acc = sdp_multiply(acc, p)
    return acc


def sdp_inverse(p: PSetElement) -> PSetElement:
    base = p.base
    gi = base.invert(p.point)
    return PSetElement(base, frozenset(base.multiply(gi, e) for e in p.elems), gi)


def sdp_star(p: PSetElement) -> PSetElement:
    """(Y, g)* = (g^-1 Y, 1); needs a group base."""
    base = p.base
    gi = base.invert(p.point)
    return PSetElement(base, frozenset(base.multiply(gi, e) for e in p.elems), base.identity())


def sdp_plus(p: PSetElement) -> PSetElement:
    """(Y, g)+ = (Y, 1)."""
    return PSetElement(p.base, p.elems, p.base.identity())


def sdp_is_idempotent(p: PSetElement) -> bool:
    return p.point == p.base.identity()


def sdp_leq_L(p: PSetElement, q: PSetElement) -> bool:
    """p <=_L~ q  iff  p (q)* = p."""
    return sdp_multiply(p, sdp_star(q)) == p


def sdp_leq_R(p: PSetElement, q: PSetElement) -> bool:
    """p <=_R~ q  iff  (q)+ p = p."""
    return sdp_multiply(sdp_plus(q), p) == p
