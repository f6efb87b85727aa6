"""Checkers for coherence obstructions and weak-coherence algorithms.

The checkers verify finite certificates: special-annihilator witnesses,
the (g, h, e) configuration, the x^k quotient conditions, the triangular-
number witnesses, and the normal-form algorithms for left/right ideal
intersections and right annihilators in the pruned-tree monoid of
left-Ehresmann trees.  Nothing here decides coherence in general; bounded
negative searches are reported as inconclusive, never as refutations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import expansions, normalform, psdp, xtree
from .expansions import MMElement, QnElement, mm_multiply, mm_plus, mm_star, qn_multiply
from .psdp import BaseMonoid, PSetElement, sdp_multiply, sdp_plus, sdp_star
from .words import Word, is_suffix
from .xtree import XTree, tree_multiply, tree_plus, tree_star


# ---------------------------------------------------------------------------
# contexts

class EhresmannContext:
    """Multiplication plus the *, + unary operations and the L~-preorder."""

    identity: Any

    def multiply(self, a, b):
        raise NotImplementedError

    def star(self, a):
        raise NotImplementedError

    def plus(self, a):
        raise NotImplementedError

    def is_E_idempotent(self, a) -> bool:
        return a == self.plus(a) or a == self.star(a)

    def leq_Ltilde(self, a, b) -> bool:
        return self.multiply(a, self.star(b)) == a

    def power(self, a, n: int):
        acc = self.identity
        for _ in range(n):
            acc = self.multiply(acc, a)
        return acc

    def describe(self, a) -> Any:
        return repr(a)


class SdpContext(EhresmannContext):
    """S(G) for a group base G."""

    def __init__(self, base: BaseMonoid):
        self.base = base
        self.identity = psdp.sdp_identity(base)

    def multiply(self, a: PSetElement, b: PSetElement) -> PSetElement:
        return sdp_multiply(a, b)

    def star(self, a: PSetElement) -> PSetElement:
        return sdp_star(a)

    def plus(self, a: PSetElement) -> PSetElement:
        return sdp_plus(a)

    def is_E_idempotent(self, a: PSetElement) -> bool:
        return psdp.sdp_is_idempotent(a)

    def describe(self, a: PSetElement) -> Any:
        return a.to_json()


class MMContext(EhresmannContext):
    def __init__(self, base: BaseMonoid):
        self.base = base
        self.identity = expansions.mm_identity(base)

    def multiply(self, a: MMElement, b: MMElement) -> MMElement:
        return mm_multiply(a, b)

    def star(self, a: MMElement) -> MMElement:
        return mm_star(a)

    def plus(self, a: MMElement) -> MMElement:
        return mm_plus(a)

    def is_E_idempotent(self, a: MMElement) -> bool:
        return a.point == self.base.identity()


class QnContext(EhresmannContext):
    """Q_n(G), the size-truncated quotient of S(G)."""

    def __init__(self, base: BaseMonoid, n: int):
        self.base = base
        self.n = n
        self.identity = expansions.qn_identity(base, n)

    def multiply(self, a: QnElement, b: QnElement) -> QnElement:
        return qn_multiply(a, b)

    def star(self, a: QnElement) -> QnElement:
        return expansions.qn_star(a)

    def plus(self, a: QnElement) -> QnElement:
        return expansions.qn_plus(a)

    def is_E_idempotent(self, a: QnElement) -> bool:
        return a.point == self.base.identity()


class TreeContext(EhresmannContext):
    """The pruned-tree monoid (free Ehresmann / left Ehresmann)."""

    identity = xtree.IDENTITY_TREE

    def multiply(self, a: XTree, b: XTree) -> XTree:
        return tree_multiply(a, b)

    def star(self, a: XTree) -> XTree:
        return tree_star(a)

    def plus(self, a: XTree) -> XTree:
        return tree_plus(a)

    def is_E_idempotent(self, a: XTree) -> bool:
        return xtree.is_idempotent(a)

    def describe(self, a: XTree) -> Any:
        return a.to_json()


# ---------------------------------------------------------------------------
# reports

@dataclass
class ConfigReport:
    verdict: str  # pass | fail | inconclusive
    depth: int
    failures: List[Tuple[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "depth": self.depth,
            "failures": [
                {"condition": cond, "witness": wit} for cond, wit in self.failures
            ],
            "notes": list(self.notes),
        }


def _finish(depth: int, failures, notes=(), inconclusive: bool = False) -> ConfigReport:
    failures = sorted(failures, key=lambda f: f[0])
    if failures:
        verdict = "fail"
    elif inconclusive:
        verdict = "inconclusive"
    else:
        verdict = "pass"
    return ConfigReport(verdict, depth, failures, list(notes))


@dataclass(frozen=True)
class CongGenSet:
    pairs: frozenset
    side: str  # left | right

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be left or right")


# ---------------------------------------------------------------------------
# annihilator relations and Y-sequences

def lambda_related(u, v, a, b, N: int, ctx: EhresmannContext) -> Optional[Tuple[int, int]]:
    """Least (m, n) with m, n <= N and u b a^m = v b a^n, if any."""
    ub = ctx.multiply(u, b)
    vb = ctx.multiply(v, b)
    upow = [ub]
    vpow = [vb]
    for _ in range(N):
        upow.append(ctx.multiply(upow[-1], a))
        vpow.append(ctx.multiply(vpow[-1], a))
    for total in range(0, 2 * N + 1):
        for m in range(0, total + 1):
            n = total - m
            if m <= N and n <= N and upow[m] == vpow[n]:
                return (m, n)
    return None


def y_sequence_search(
    Y: CongGenSet, a, b, max_len: int, multipliers: Sequence, ctx: EhresmannContext
) -> Optional[List[Tuple[Any, Any, Any]]]:
    """BFS for a Y-sequence from a to b; None means not found at this bound."""
    pairs = set(Y.pairs) | {(d, c) for c, d in Y.pairs}

    def apply(c, t):
        return ctx.multiply(c, t) if Y.side == "right" else ctx.multiply(t, c)

    frontier = [(a, [])]
    seen = {a}
    for _ in range(max_len):
        nxt = []
        for cur, path in frontier:
            if cur == b:
                return path
            for (c, d) in pairs:
                for t in multipliers:
                    if apply(c, t) == cur:
                        new = apply(d, t)
                        if new not in seen:
                            seen.add(new)
                            nxt.append((new, path + [(c, d, t)]))
        frontier = nxt
    for cur, path in frontier:
        if cur == b:
            return path
    return None


# ---------------------------------------------------------------------------
# forbidden configurations

def check_lemma_m_n(
    a, b, witnesses: Sequence[Tuple[Any, Any]], N: int, sample_universe: Sequence, ctx
) -> ConfigReport:
    """Lemma-style certificate: (1) relation at (n, m) implies relation at
    (n, n) — sampled; (2) witnesses u_i, v_i related at i but not i-1 — exact."""
    failures: List[Tuple[str, Any]] = []
    apow = [ctx.identity]
    for _ in range(N + 1):
        apow.append(ctx.multiply(apow[-1], a))

    def uban(u, k):
        return ctx.multiply(ctx.multiply(u, b), apow[k])

    for u, v in itertools.product(sample_universe, repeat=2):
        for n in range(N + 1):
            for m in range(N + 1):
                if uban(u, n) == uban(v, m) and uban(u, n) != uban(v, n):
                    failures.append(
                        ("1", {"u": ctx.describe(u), "v": ctx.describe(v), "m": m, "n": n})
                    )
    for i, (u, v) in enumerate(witnesses[:N], start=1):
        if uban(u, i) != uban(v, i):
            failures.append(("2-eq", {"i": i}))
        if uban(u, i - 1) == uban(v, i - 1):
            failures.append(("2-neq", {"i": i}))
    notes = [
        f"condition (1) checked only over a sample of {len(sample_universe)} elements"
    ]
    return _finish(N, failures, notes)


def check_forbidden_config(a, b, e_stream, N: int, ctx: EhresmannContext) -> ConfigReport:
    """b a^i pairwise L~-incomparable; e_i idempotent with
    e_i b a^i = b a^i and e_i b a^{i-1} != b a^{i-1}."""
    failures: List[Tuple[str, Any]] = []
    ba = [b]
    for _ in range(N):
        ba.append(ctx.multiply(ba[-1], a))
    for i in range(N + 1):
        for j in range(N + 1):
            if i != j and ctx.leq_Ltilde(ba[i], ba[j]):
                failures.append(("incomparable", {"i": i, "j": j}))
    es = [e_stream(i) if callable(e_stream) else e_stream[i - 1] for i in range(1, N + 1)]
    for i, e in enumerate(es, start=1):
        if not ctx.is_E_idempotent(e):
            failures.append(("idempotent", {"i": i}))
        if ctx.multiply(e, ba[i]) != ba[i]:
            failures.append(("fixes", {"i": i}))
        if ctx.multiply(e, ba[i - 1]) == ba[i - 1]:
            failures.append(("moves", {"i": i}))
    return _finish(N, failures)


def check_bgr_config(g, h, e, N: int, ctx: EhresmannContext) -> ConfigReport:
    """The (g, h, e) conditions (0)-(4ii) with exponents bounded by N."""
    failures: List[Tuple[str, Any]] = []
    mul = ctx.multiply

    def prod(*xs):
        acc = ctx.identity
        for x in xs:
            acc = mul(acc, x)
        return acc

    gp = [ctx.power(g, i) for i in range(N + 1)]
    hp = [ctx.power(h, i) for i in range(N + 1)]

    if prod(e, e) != e:
        failures.append(("0-e2", {}))
    if prod(g, h) != prod(h, g):
        failures.append(("0-gh", {}))
    if prod(g, h, g) != g or prod(h, g, h) != h:
        failures.append(("0-ghg", {}))
    if prod(h, g, e) != e or prod(e, h, g) != e:
        failures.append(("1-hge", {}))
    for n in range(1, N + 1):
        if prod(e, gp[n], e, hp[n]) != prod(gp[n], e, hp[n], e):
            failures.append(("2-g", {"n": n}))
        if prod(e, hp[n], e, gp[n]) != prod(hp[n], e, gp[n], e):
            failures.append(("2-h", {"n": n}))
    for m in range(1, N + 1):
        for n in range(1, N + 1):
            lhs = prod(gp[m], e, hp[m])
            rhs = prod(hp[n], e, gp[n])
            mid = mul(lhs, rhs)
            if lhs == mid or rhs == mid:
                failures.append(("3i", {"m": m, "n": n}))
    for m in range(0, N + 1):
        for n in range(0, N + 1):
            if m == n:
                continue
            x1 = prod(gp[m], e, hp[m])
            if x1 == mul(x1, prod(gp[n], e, hp[n])):
                failures.append(("3ii-g", {"m": m, "n": n}))
            x2 = prod(hp[m], e, gp[m])
            if x2 == mul(x2, prod(hp[n], e, gp[n])):
                failures.append(("3ii-h", {"m": m, "n": n}))
    for n in range(1, N + 1):
        base_el = prod(e, gp[n], e, hp[n])
        for k in range(1, n):
            if base_el == mul(base_el, prod(gp[k], e, hp[k])):
                failures.append(("4i", {"n": n, "k": k}))
        for k in range(1, n + 1):
            if base_el == mul(base_el, prod(hp[k], e, gp[k])):
                failures.append(("4ii", {"n": n, "k": k}))
    return _finish(N, failures)


def check_ghe_quotient_conditions(x, N: int, ctx: QnContext) -> ConfigReport:
    """The five non-relation families for the subgroup <x> in a quotient
    of S(M); equality is equality in the quotient (implemented for Q_n)."""
    failures: List[Tuple[str, Any]] = []
    base = ctx.base

    def xp(k: int):
        acc = base.identity()
        step = x if k >= 0 else base.invert(x)
        for _ in range(abs(k)):
            acc = base.multiply(acc, step)
        return acc

    def el(exps) -> QnElement:
        return QnElement(base, ctx.n, frozenset(xp(k) for k in exps), base.identity())

    def related(p, q) -> bool:
        return p == q

    for m in range(-N, N + 1):
        for n in range(-N, N + 1):
            if m != n and related(el([m]), el([n])):
                failures.append(("1", {"m": m, "n": n}))
    for m in range(1, N + 1):
        for n in range(1, N + 1):
            pair = el([m, -n])
            if related(pair, el([m])) or related(pair, el([-n])):
                failures.append(("2", {"m": m, "n": n}))
    for m in range(0, N + 1):
        for n in range(0, N + 1):
            if m == n:
                continue
            if related(el([m, n]), el([m])):
                failures.append(("3+", {"m": m, "n": n}))
            if related(el([-m, -n]), el([-m])):
                failures.append(("3-", {"m": m, "n": n}))
    for n in range(1, N + 1):
        for k in range(1, n):
            if related(el([0, n]), el([k])) or related(el([0, n]), el([0, k, n])):
                failures.append(("4", {"k": k, "n": n}))
        for k in range(1, n + 1):
            if related(el([0, n]), el([-k])) or related(el([0, n]), el([-k, 0, n])):
                failures.append(("5", {"k": k, "n": n}))
    return _finish(N, failures)


# ---------------------------------------------------------------------------
# triangular-number witnesses

def odd_triangulars(count: int) -> List[int]:
    """The first `count` odd triangular numbers: 1, 3, 15, 21, 45, ..."""
    out: List[int] = []
    k = 1
    while len(out) < count:
        t = k * (k + 1) // 2
        if t % 2 == 1:
            out.append(t)
        k += 1
    return out


def check_triangle(N: int, letter: str = "x") -> ConfigReport:
    """Witnesses u_i, v_i for a = (T, x^2), b = ({1}, x) in S(X*), with the
    infinite set T of odd-triangular powers materialized up to a window
    bound large enough for all products compared at depth N."""
    base = psdp.FreeMonoid((letter,))
    tri = odd_triangulars(2 * N + 2)
    window = 2 * N + 1 + tri[-1]
    tset = frozenset((letter,) * t for t in odd_triangulars(window) if t <= window)
    tset = frozenset(w for w in tset if len(w) <= window)
    a = PSetElement(base, tset, (letter,) * 2)
    b = PSetElement(base, frozenset({()}), (letter,))
    failures: List[Tuple[str, Any]] = []
    apow = [psdp.sdp_identity(base)]
    for _ in range(N):
        apow.append(sdp_multiply(apow[-1], a))
    for i in range(1, N + 1):
        t_exp = tri[2 * i] - 2 * i - 1  # t_{2i+1} with 1-based indexing
        u = PSetElement(base, frozenset({(letter,) * t_exp}), ())
        v = PSetElement(base, frozenset(), ())
        aib = sdp_multiply(apow[i], b)
        if sdp_multiply(aib, u) != sdp_multiply(aib, v):
            failures.append(("eq", {"i": i}))
        ai1b = sdp_multiply(apow[i - 1], b)
        if sdp_multiply(ai1b, u) == sdp_multiply(ai1b, v):
            failures.append(("neq", {"i": i}))
    notes = [f"window bound {window} on powers of {letter}"]
    return _finish(N, failures, notes)


# ---------------------------------------------------------------------------
# weak-coherence algorithms on left-Ehresmann trees

@dataclass
class IdealIntersection:
    kind: str  # empty | principal
    generator: Optional[XTree] = None
    left_factor_of_T: Optional[XTree] = None
    left_factor_of_S: Optional[XTree] = None
    conclusive: bool = True
    note: str = ""


def _nf_head(nfm: normalform.NormalForm, r: int) -> List[Any]:
    """Letters t0 e1 t1 ... e_r, i.e. everything strictly before word t_r."""
    if r == 0:
        return []
    pre: List[Any] = [nfm.words[0]]
    for i in range(r):
        pre.append(nfm.idems[i])
        if i + 1 <= r - 1:
            pre.append(nfm.words[i + 1])
    return pre


def left_divisor_candidates(S: XTree, T: XTree) -> List[XTree]:
    """Candidate A with A S = T, read off the normal forms (verified later)."""
    nT = normalform.normal_form_of_tree(T)
    nS = normalform.normal_form_of_tree(S)
    m, n = nT.m, nS.m
    cands: List[XTree] = []
    if n > m:
        return cands
    if n == 0:
        s0 = nS.words[0]
        tm = nT.words[m]
        if is_suffix(s0, tm):
            pre = _nf_head(nT, m)
            pre.append(tm[: len(tm) - len(s0)])
            cands.append(normalform.eval_to_tree(pre))
        return cands
    r = m - n
    # tails must agree: t_{r+i} = s_i (1<=i<=n), f_{r+i} = e_i (2<=i<=n)
    if any(nT.words[r + i] != nS.words[i] for i in range(1, n + 1)):
        return cands
    if any(nT.idems[r + i - 1] != nS.idems[i - 1] for i in range(2, n + 1)):
        return cands
    f_junction = nT.idems[r]
    e1 = nS.idems[0]
    s0 = nS.words[0]
    tr = nT.words[r]
    if f_junction == e1 and is_suffix(s0, tr):
        pre = _nf_head(nT, r)
        pre.append(tr[: len(tr) - len(s0)])
        cands.append(normalform.eval_to_tree(pre))
    if s0 == () and xtree.leq_nat(f_junction, e1):
        pre = _nf_head(nT, r)
        pre.append(tr)
        pre.append(f_junction)
        cands.append(normalform.eval_to_tree(pre))
    return cands


def left_divide(S: XTree, T: XTree) -> Optional[XTree]:
    """An A with A S = T, or None; exact via normal-form alignment plus
    verification by multiplication."""
    for cand in left_divisor_candidates(S, T):
        if tree_multiply(cand, S) == T:
            return cand
    return None


def left_ideal_intersection_FLAd(S: XTree, T: XTree) -> IdealIntersection:
    """MS n MT in the left-Ehresmann tree monoid: empty or principal."""
    for t in (S, T):
        if not xtree.is_left_ehresmann(t):
            raise ValueError("inputs must be left-Ehresmann trees")
    a = left_divide(T, S)  # S = a T  =>  MS <= MT
    if a is not None:
        return IdealIntersection("principal", S, a, xtree.IDENTITY_TREE)
    b = left_divide(S, T)  # T = b S
    if b is not None:
        return IdealIntersection("principal", T, xtree.IDENTITY_TREE, b)
    nT = normalform.normal_form_of_tree(T)
    nS = normalform.normal_form_of_tree(S)
    if (
        nT.words[0] == ()
        and nS.words[0] == ()
        and nT.m >= 1
        and nS.m >= 1
        and nT.m == nS.m
        and nT.words[1:] == nS.words[1:]
        and nT.idems[1:] == nS.idems[1:]
    ):
        e = tree_multiply(nS.idems[0], nT.idems[0])
        gen = tree_multiply(e, T)
        if tree_multiply(e, S) == gen:
            return IdealIntersection("principal", gen, e, e)
    t_trunk = xtree.trunk_word(T)
    s_trunk = xtree.trunk_word(S)
    conclusive = is_suffix(t_trunk, s_trunk) is False and is_suffix(s_trunk, t_trunk) is False
    note = "" if conclusive else "no case matched; emptiness not proven by trunk criterion"
    return IdealIntersection("empty", None, None, None, conclusive, note)


def right_annihilator_FLAd(T: XTree) -> CongGenSet:
    """Generators of r(T) = {(U, V): TU = TV}: empty (equality) unless the
    normal form ends with an idempotent, in which case {(1, f_m)}."""
    if not xtree.is_left_ehresmann(T):
        raise ValueError("input must be a left-Ehresmann tree")
    nf = normalform.normal_form_of_tree(T)
    if nf.m == 0 or nf.words[-1] != ():
        return CongGenSet(frozenset(), "right")
    return CongGenSet(frozenset({(xtree.IDENTITY_TREE, nf.idems[-1])}), "right")


_ENUM_CACHE: Dict[tuple, Tuple[XTree, ...]] = {}


def _enum(labels, max_edges, max_depth=None, budget=500_000) -> Tuple[XTree, ...]:
    key = (tuple(sorted(labels)), max_edges, max_depth)
    if key not in _ENUM_CACHE:
        _ENUM_CACHE[key] = xtree.enumerate_trees(
            labels,
            max_edges,
            left_ehresmann_only=True,
            max_directed_depth=max_depth,
            budget=budget,
        )
    return _ENUM_CACHE[key]


def divides(T: XTree, U: XTree, side: str, bound: Optional[int] = None,
            budget: int = 500_000) -> bool:
    """Bounded search for A with T A = U (right) or A T = U (left).

    A False result only means "not found within the bound" unless an exact
    criterion applies; callers report it as inconclusive.
    """
    if bound is None:
        bound = len(T.edges) + len(U.edges)
    labels = sorted(xtree.label_set(T) | xtree.label_set(U)) or ["a"]
    if side == "left":
        found = left_divide(T, U)
        if found is not None:
            return True
        return any(tree_multiply(A, T) == U for A in _enum(labels, bound, budget=budget))
    if side == "right":
        return any(tree_multiply(T, A) == U for A in _enum(labels, bound, budget=budget))
    raise ValueError("side must be left or right")


def right_ideal_intersection_FLAd(
    S: XTree,
    T: XTree,
    L: Optional[int] = None,
    *,
    max_edges: Optional[int] = None,
    factor_edges: Optional[int] = None,
    budget: int = 500_000,
) -> Tuple[XTree, ...]:
    """The depth-bounded generating set Z_L of TM n SM.

    Z_L = {V : depth_directed(V) <= L, V in TM and V in SM}; the depth-L
    universe is finite but is enumerated here under an additional edge cap
    (max_edges) with a resource guard.
    """
    if L is None:
        L = max(xtree.depth_directed(T), xtree.depth_directed(S))
    if max_edges is None:
        max_edges = len(S.edges) + len(T.edges) + 4
    if factor_edges is None:
        factor_edges = max_edges
    labels = sorted(xtree.label_set(T) | xtree.label_set(S)) or ["a"]
    factors = _enum(labels, factor_edges, budget=budget)
    t_mult = {tree_multiply(T, A) for A in factors}
    s_mult = {tree_multiply(S, A) for A in factors}
    universe = _enum(labels, max_edges, max_depth=L, budget=budget)
    return tuple(V for V in universe if V in t_mult and V in s_mult)


# ---------------------------------------------------------------------------
# worked example instances (used by the CLI and the acceptance suite)

def instance_fi():
    """S(F_{g,h}): a = ({1,g},g), b = ({1,h},h), e_i = ({1,h,hg,..,hg^i},1)."""
    base = psdp.FreeGroup(("g", "h"))
    one: tuple = ()
    g = (("g", 1),)
    h = (("h", 1),)
    a = PSetElement(base, frozenset({one, g}), g)
    b = PSetElement(base, frozenset({one, h}), h)

    def e(i: int) -> PSetElement:
        elems = {one, h}
        cur = h
        for _ in range(i):
            cur = cur + g
            elems.add(cur)
        return PSetElement(base, frozenset(elems), one)

    def star_set(i: int) -> frozenset:
        out = {(("g", -1),) * i + (("h", -1),)}
        for k in range(0, i + 1):
            out.add((("g", -1),) * k)
        return frozenset(out)

    return SdpContext(base), a, b, e, star_set


def instance_freemonoid():
    """S(F_x): a = ({1,x^2},x^2), b = ({x},1), e_i = ({x^{2i}},1)."""
    base = psdp.FreeGroup(("x",))

    def xp(k: int) -> tuple:
        return (("x", 1 if k > 0 else -1),) * abs(k)

    a = PSetElement(base, frozenset({xp(0), xp(2)}), xp(2))
    b = PSetElement(base, frozenset({xp(1)}), xp(0))

    def e(i: int) -> PSetElement:
        return PSetElement(base, frozenset({xp(2 * i)}), xp(0))

    def star_set(i: int) -> frozenset:
        if i == 0:
            return frozenset({xp(1)})
        return frozenset({xp(-2 * i + 1)}) | frozenset(xp(2 * (k - i)) for k in range(i + 1))

    return SdpContext(base), a, b, e, star_set


def instance_mm():
    """M(F_{x,y}): a = (P_x, x), b = (P_y, y), e_i = (P_{y x^i}, 1)."""
    base = psdp.FreeGroup(("x", "y"))
    a = expansions.mm_generator(base, "x")
    b = expansions.mm_generator(base, "y")

    def e(i: int) -> MMElement:
        w = (("y", 1),) + (("x", 1),) * i
        return mm_plus(expansions.mm_from_word(base, w))

    return MMContext(base), a, b, e


def instance_fad():
    """Pruned trees: a, b generators, e_i = (b a^i)+."""
    ctx = TreeContext()
    a = xtree.letter_tree("a")
    b = xtree.letter_tree("b")

    def e(i: int) -> XTree:
        return tree_plus(tree_multiply(b, xtree.tree_power(a, i)))

    return ctx, a, b, e
