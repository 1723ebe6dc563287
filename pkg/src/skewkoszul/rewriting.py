"""Degree-bounded noncommutative rewriting and PBW-basis detection.

Relations are solved for their deglex-leading word. Completion resolves
overlap ambiguities degree by degree; for quadratic systems every overlap
lives in degree 3, so resolving degree 3 certifies the S-monomials as a
basis (Diamond Lemma).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple

from .errors import PreconditionError
from .freealg import FreeAlgebra, FreePoly, GeneratorOrder
from .linalg import Echelon
from .presentation import Presentation, _require_quadratic


class RewriteRule(NamedTuple):
    lhs: tuple
    rhs: FreePoly

    def poly(self) -> FreePoly:
        """``lhs - rhs``, an element of the ideal."""
        return self.rhs.ring.word(self.lhs) - self.rhs


@dataclass(frozen=True)
class RewriteSystem:
    ring: FreeAlgebra
    rules: tuple = ()
    confluent_to: float = 0

    @property
    def ord(self) -> GeneratorOrder:
        return self.ring.order

    @property
    def lhs_set(self) -> frozenset:
        return frozenset(r.lhs for r in self.rules)

    def rule_dict(self) -> dict:
        return {r.lhs: r.rhs.terms for r in self.rules}

    def __str__(self):
        fmt = self.ord.format_word
        return "\n".join(f"{fmt(r.lhs)} -> {r.rhs}" for r in self.rules)


# -- reduction engine --------------------------------------------------------


class _Reducer:
    def __init__(self, ring: FreeAlgebra, rules: dict):
        self.ring = ring
        self.F = ring.field
        self.rules = rules
        self.lens = sorted({len(l) for l in rules}, reverse=True)

    def find(self, w: tuple):
        """Leftmost occurrence of a rule lhs in ``w`` (longest lhs at that position)."""
        rules = self.rules
        n = len(w)
        for i in range(n):
            for L in self.lens:
                if i + L <= n and w[i:i + L] in rules:
                    return i, L
        return None

    def reducible(self, w: tuple) -> bool:
        return self.find(w) is not None

    def nf_terms(self, terms: dict) -> dict:
        F = self.F
        key = self.ring.order.key
        work = dict(terms)
        out = {}
        while work:
            w = max(work, key=key)
            c = work.pop(w)
            hit = self.find(w)
            if hit is None:
                out[w] = c
                continue
            i, L = hit
            a, b = w[:i], w[i + L:]
            for v, e in self.rules[w[i:i + L]].items():
                u = a + v + b
                s = F.add(work.get(u, F.zero), F.mul(c, e))
                if s:
                    work[u] = s
                else:
                    work.pop(u, None)
        return out

    def nf(self, f: FreePoly) -> FreePoly:
        return FreePoly(self.ring, self.nf_terms(f.terms))


def normal_form(RS: RewriteSystem, f: FreePoly) -> FreePoly:
    """Reduce ``f`` until no rule lhs occurs; unique when ``deg f <= RS.confluent_to``."""
    return _Reducer(RS.ring, RS.rule_dict()).nf(f)


def normal_words(RS: RewriteSystem, k: int) -> list:
    """Words of degree ``k`` containing no rule lhs, sorted descending."""
    order = RS.ord
    lhs = RS.lhs_set
    lens = sorted({len(l) for l in lhs})
    table = [[()]]
    for d in range(1, k + 1):
        level = []
        for j, wt in enumerate(order.weights):
            if wt > d:
                continue
            for u in table[d - wt]:
                w = u + (j,)
                if not any(len(w) >= L and w[-L:] in lhs for L in lens):
                    level.append(w)
        table.append(level)
    words = table[k] if k >= 0 else []
    return sorted(words, reverse=True)


# -- orientation and completion ---------------------------------------------------


def _rule_from(poly: FreePoly) -> RewriteRule:
    f = poly.monic()
    lhs = f.leading_word
    rhs = FreePoly(f.ring, {w: f.ring.field.neg(c) for w, c in f.terms.items() if w != lhs})
    return RewriteRule(lhs, rhs)


def _overlaps(rules: dict, order: GeneratorOrder):
    """Yield ``(word, l1, l2, o)`` for each overlap ``l1 = a b``, ``l2 = b c`` with ``|b| = o``."""
    for l1 in rules:
        for l2 in rules:
            for o in range(1, min(len(l1), len(l2))):
                if l1[-o:] == l2[:o]:
                    yield l1 + l2[o:], l1, l2, o


def _overlap_degrees(rules: dict, order: GeneratorOrder) -> list:
    return [order.degree(w) for w, *_ in _overlaps(rules, order)]


def orient(P: Presentation, ord: GeneratorOrder | None = None) -> RewriteSystem:
    """Solve every relation for its deglex-leading word, interreducing as we go."""
    if ord is not None and ord != P.ord:
        P = P.reorder(ord.names)
    ring = P.ring
    F = P.field
    key = P.ord.key
    by_degree: dict = {}
    for r in P.relations:
        if r.is_zero():
            continue
        if not r.is_homogeneous():
            raise PreconditionError(f"inhomogeneous relation {r}")
        by_degree.setdefault(r.degree(), []).append(r)
    rules: dict = {}
    for d in sorted(by_degree):
        red = _Reducer(ring, rules)
        E = Echelon(F)
        for r in by_degree[d]:
            terms = red.nf_terms(r.terms)
            if terms:
                E.insert({_neg_key(key, w): c for w, c in terms.items()})
        for row in E.rref():
            poly = FreePoly(ring, {_from_neg_key(k): c for k, c in row.items()})
            rule = _rule_from(poly)
            rules[rule.lhs] = rule.rhs.terms
    degrees = _overlap_degrees(rules, P.ord)
    top = max((P.ord.degree(l) for l in rules), default=0)
    confluent = min(top, min(degrees) - 1) if degrees else top
    return _system(ring, rules, confluent)


def _neg_key(key, w):
    d, letters = key(w)
    return (-d, tuple(-i for i in letters))


def _from_neg_key(k):
    return tuple(-i for i in k[1])


def _system(ring: FreeAlgebra, rules: dict, confluent_to) -> RewriteSystem:
    key = ring.order.key
    out = tuple(
        RewriteRule(l, FreePoly(ring, rules[l], _trusted=True))
        for l in sorted(rules, key=key)
    )
    return RewriteSystem(ring, out, confluent_to)


def _add_rule(ring: FreeAlgebra, rules: dict, poly_terms: dict) -> list:
    """Insert a reduced nonzero element as a rule and interreduce; return rules added."""
    added = []
    queue = [poly_terms]
    while queue:
        terms = _Reducer(ring, rules).nf_terms(queue.pop(0))
        if not terms:
            continue
        rule = _rule_from(FreePoly(ring, terms))
        new = rule.lhs
        L = len(new)
        for l in list(rules):
            if any(l[i:i + L] == new for i in range(len(l) - L + 1)):
                rhs = rules.pop(l)
                F = ring.field
                old = {w: F.neg(c) for w, c in rhs.items()}
                old[l] = F.one
                queue.append(old)
        rules[new] = rule.rhs.terms
        added.append(rule)
        red = _Reducer(ring, rules)
        for l in list(rules):
            if l == new:
                continue
            rhs = rules[l]
            if any(red.reducible(w) for w in rhs):
                rules[l] = red.nf_terms(rhs)
    return added


def complete_with_history(RS: RewriteSystem, bound: int):
    """Like :func:`complete` but also return the rules added, in discovery order."""
    ring = RS.ring
    order = ring.order
    F = ring.field
    rules = RS.rule_dict()
    added: list = []
    for d in range(1, bound + 1):
        done = set()
        while True:
            todo = sorted(
                (amb for amb in _overlaps(rules, order) if order.degree(amb[0]) == d and amb not in done),
                key=lambda amb: (order.key(amb[0]), amb[1], amb[2]),
            )
            if not todo:
                break
            for amb in todo:
                done.add(amb)
                w, l1, l2, o = amb
                if l1 not in rules or l2 not in rules:
                    continue
                red = _Reducer(ring, rules)
                c = w[len(l1):]
                prefix = w[: len(w) - len(l2)]
                left = {v + c: e for v, e in rules[l1].items()}
                right = {prefix + v: e for v, e in rules[l2].items()}
                h = red.nf_terms(left)
                for u, e in red.nf_terms(right).items():
                    s = F.sub(h.get(u, F.zero), e)
                    if s:
                        h[u] = s
                    else:
                        h.pop(u, None)
                if h:
                    added.extend(_add_rule(ring, rules, h))
    return _system(ring, rules, max(RS.confluent_to, bound)), added


def complete(RS: RewriteSystem, bound: int) -> RewriteSystem:
    """Resolve all overlap ambiguities of degree <= ``bound``."""
    return complete_with_history(RS, bound)[0]


# -- PBW bases -------------------------------------------------------------------


@dataclass(frozen=True)
class PbwVerdict:
    status: str  # "IsPBW" | "NotPBW" | "Inconclusive"
    order: GeneratorOrder
    s_pairs: frozenset
    witness: FreePoly | None = None
    system: RewriteSystem | None = None
    reason: str = ""

    def s_monomials(self, m: int) -> list:
        """Words ``x_{i1}...x_{im}`` with all consecutive pairs in S, sorted descending."""
        n = len(self.order)
        if m == 0:
            return [()]
        words = [(i,) for i in range(n)]
        for _ in range(m - 1):
            words = [w + (j,) for w in words for j in range(n) if (w[-1], j) in self.s_pairs]
        return sorted(words, reverse=True)

    def format_pairs(self) -> str:
        return "{" + ", ".join(f"({i + 1},{j + 1})" for i, j in sorted(self.s_pairs)) + "}"


def pbw_check(P: Presentation, ord: GeneratorOrder | None = None, bound: int = 3) -> PbwVerdict:
    """Decide whether the S-monomials for the order ``ord`` form a basis."""
    _require_quadratic(P)
    if ord is None:
        ord = P.ord
    elif isinstance(ord, (list, tuple)):
        ord = P.ord.permuted(ord)
    RS = orient(P, ord)
    n = len(ord)
    lhs = RS.lhs_set
    S = frozenset((i, j) for i in range(n) for j in range(n) if (i, j) not in lhs)
    if bound < 3:
        return PbwVerdict("Inconclusive", ord, S, None, RS, "bound < 3: quadratic overlaps live in degree 3")
    done, added = complete_with_history(RS, bound)
    if added:
        return PbwVerdict("NotPBW", ord, S, added[0].poly(), done)
    return PbwVerdict("IsPBW", ord, S, None, done)


def find_pbw_order(P: Presentation, max_gens: int = 6) -> PbwVerdict | None:
    """Try every generator order; return the first IsPBW verdict, if any."""
    if P.ngens > max_gens:
        raise PreconditionError(f"refusing to try {P.ngens}! orders (max_gens={max_gens})")
    for names in permutations(P.ord.names):
        v = pbw_check(P, P.ord.permuted(names))
        if v.status == "IsPBW":
            return v
    return None


def rewriting_count(RS: RewriteSystem, k: int) -> int:
    return len(normal_words(RS, k))

