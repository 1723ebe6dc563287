"""Exact scalars and the free associative algebra K<x_1, ..., x_n>.

Words are tuples of generator indices. Generators carry positive integer
weights, and words are compared by weighted degree first and then
lexicographically, left to right, with the generator list order as the
order on letters (earlier = smaller).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ParseError, StructuralError

Word = tuple  # tuple[int, ...]

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: ``rationals`` or ``prime_field`` GF(p).

    Scalars are plain Python values: :class:`fractions.Fraction` over Q and
    ``int`` residues in ``[0, p)`` over GF(p).
    """

    kind: str = "rationals"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise StructuralError("rationals have characteristic 0")
        elif self.kind == "prime_field":
            if not _is_prime(self.characteristic):
                raise StructuralError(
                    f"GF({self.characteristic}): characteristic must be prime"
                )
        else:
            raise StructuralError(f"unknown field kind {self.kind!r}")

    @classmethod
    def Q(cls) -> FieldSpec:
        return cls("rationals", 0)

    @classmethod
    def GF(cls, p: int = DEFAULT_PRIME) -> FieldSpec:
        return cls("prime_field", p)

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime_field"

    @property
    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime else Fraction(1)

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, or a string like ``-3/4``) into the field."""
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad scalar {x!r}") from exc
        if self.is_prime:
            p = self.characteristic
            if isinstance(x, int):
                return x % p
            x = Fraction(x)
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {p}")
            return x.numerator * pow(den, -1, p) % p
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise StructuralError(f"cannot coerce {x!r} into {self}")

    def add(self, a, b):
        return (a + b) % self.characteristic if self.is_prime else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.is_prime else a - b

    def mul(self, a, b):
        return a * b % self.characteristic if self.is_prime else a * b

    def neg(self, a):
        return -a % self.characteristic if self.is_prime else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime:
            return pow(a, -1, self.characteristic)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        if self.is_prime:
            p = self.characteristic
            a = a - p if a > p // 2 else a
            return str(a)
        return str(a)

    def __str__(self):
        return "Q" if not self.is_prime else f"GF({self.characteristic})"


@dataclass(frozen=True)
class GeneratorOrder:
    """Named generators with weights; list order is the order on letters."""

    names: tuple
    weights: tuple = None

    def __post_init__(self):
        names = tuple(self.names)
        weights = (1,) * len(names) if self.weights is None else tuple(self.weights)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        if len(names) != len(weights):
            raise StructuralError("one weight per generator")
        for name in names:
            if not isinstance(name, str) or not NAME_RE.match(name):
                raise StructuralError(f"bad generator name {name!r}")
        for w in weights:
            if not isinstance(w, int) or w < 1:
                raise StructuralError(f"generator weights must be positive integers, got {w!r}")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructuralError(f"unknown generator {name!r}") from None

    @property
    def has_duplicates(self) -> bool:
        return len(set(self.names)) != len(self.names)

    @property
    def unit_weights(self) -> bool:
        return all(w == 1 for w in self.weights)

    def check_word(self, w: Word) -> None:
        n = len(self.names)
        for i in w:
            if not isinstance(i, int) or not 0 <= i < n:
                raise StructuralError(f"invalid generator index {i!r}")

    def degree(self, w: Word) -> int:
        wt = self.weights
        return sum(wt[i] for i in w)

    def key(self, w: Word):
        """Sort key realizing the deglex order."""
        return (self.degree(w), w)

    def permuted(self, names: Sequence[str]) -> GeneratorOrder:
        if sorted(names) != sorted(self.names):
            raise StructuralError(f"{list(names)} is not a permutation of {list(self.names)}")
        return GeneratorOrder(tuple(names), tuple(self.weights[self.index(n)] for n in names))

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.names[w[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)


def compare_deglex(u: Word, v: Word, ord: GeneratorOrder) -> int:
    """Return -1, 0 or 1 as ``u`` is smaller than, equal to, or larger than ``v``."""
    ord.check_word(u)
    ord.check_word(v)
    ku, kv = ord.key(tuple(u)), ord.key(tuple(v))
    return (ku > kv) - (ku < kv)


def words_of_degree(ord: GeneratorOrder, k: int) -> list:
    """All words of weighted degree ``k``, sorted descending."""
    if k < 0:
        return []
    if ord.unit_weights:
        words = list(product(range(len(ord)), repeat=k))
    else:
        table = [[()]] + [[] for _ in range(k)]
        for d in range(1, k + 1):
            for i, w in enumerate(ord.weights):
                if w <= d:
                    table[d].extend(u + (i,) for u in table[d - w])
        words = table[k]
    words.sort(reverse=True)
    return words


class FreeAlgebra:
    """K<x_1, ..., x_n> over a fixed field and generator order."""

    def __init__(self, field: FieldSpec, order: GeneratorOrder):
        self.field = field
        self.order = order

    def __eq__(self, other):
        return (
            isinstance(other, FreeAlgebra)
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.order))

    def __repr__(self):
        return f"FreeAlgebra({self.field}, {list(self.order.names)})"

    def zero(self) -> FreePoly:
        return FreePoly(self, {})

    def one(self) -> FreePoly:
        return FreePoly(self, {(): self.field.one})

    def gen(self, name: str) -> FreePoly:
        return FreePoly(self, {(self.order.index(name),): self.field.one})

    def gens(self) -> list:
        return [FreePoly(self, {(i,): self.field.one}) for i in range(len(self.order))]

    def word(self, w: Iterable[int], coeff=1) -> FreePoly:
        w = tuple(w)
        self.order.check_word(w)
        return FreePoly(self, {w: self.field(coeff)})

    def scalar(self, c) -> FreePoly:
        return FreePoly(self, {(): self.field(c)})

    def poly(self, terms: Mapping) -> FreePoly:
        F = self.field
        out = {}
        for w, c in terms.items():
            w = tuple(w)
            self.order.check_word(w)
            out[w] = F.add(out.get(w, F.zero), F(c))
        return FreePoly(self, out)

    def parse(self, text: str, params: Mapping | None = None) -> FreePoly:
        return parse_poly(self, text, params)

    def words(self, k: int) -> list:
        return words_of_degree(self.order, k)


class FreePoly:
    """An exact linear combination of words; immutable.

    Terms are stored sorted descending by the deglex order, so the leading
    term is the first one.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: FreeAlgebra, terms: Mapping, _trusted: bool = False):
        if not _trusted:
            F = ring.field
            terms = {tuple(w): F(c) for w, c in terms.items()}
            terms = {w: c for w, c in terms.items() if c}
        key = ring.order.key
        self.ring = ring
        self.terms = dict(sorted(terms.items(), key=lambda t: key(t[0]), reverse=True))
        self._hash = None

    # -- basic protocol -------------------------------------------------
    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"FreePoly({self})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: FreePoly):
        if self.ring.field != other.ring.field:
            raise StructuralError(f"mixed fields {self.ring.field} and {other.ring.field}")
        if self.ring.order != other.ring.order:
            raise StructuralError("polynomials live in different free algebras")

    def _coerce(self, other):
        if isinstance(other, FreePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = F.add(out.get(w, F.zero), c)
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return FreePoly(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return FreePoly(self.ring, {w: F.neg(c) for w, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> FreePoly:
        F = self.ring.field
        c = F(c) if not (F.is_prime and isinstance(c, int)) else c % F.characteristic
        if not c:
            return self.ring.zero()
        return FreePoly(self.ring, {w: F.mul(a, c) for w, a in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, FreePoly):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    # -- structure ------------------------------------------------------
    @property
    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return next(iter(self.terms))

    @property
    def leading_coeff(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return next(iter(self.terms.values()))

    def monic(self) -> FreePoly:
        return self.scale(self.ring.field.inv(self.leading_coeff))

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), self.ring.field.zero)

    def degrees(self) -> set:
        deg = self.ring.order.degree
        return {deg(w) for w in self.terms}

    def degree(self) -> int:
        """Largest weighted degree of a term (-1 for zero)."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, k: int) -> FreePoly:
        return component(self, k)

    def components(self) -> dict:
        deg = self.ring.order.degree
        parts: dict = {}
        for w, c in self.terms.items():
            parts.setdefault(deg(w), {})[w] = c
        return {d: FreePoly(self.ring, t, _trusted=True) for d, t in sorted(parts.items())}

    def generators_used(self) -> set:
        return {i for w in self.terms for i in w}

    def substitute(self, images: Sequence[FreePoly], target: FreeAlgebra | None = None) -> FreePoly:
        """Apply the algebra map sending generator ``i`` to ``images[i]``."""
        if target is None:
            target = images[0].ring if images else self.ring
        out = target.zero()
        for w, c in self.terms.items():
            term = target.one()
            for i in w:
                term = term * images[i]
            out = out + term.scale(c)
        return out

    def change_ring(self, ring: FreeAlgebra, letter_map: Sequence[int] | None = None) -> FreePoly:
        """Re-express in ``ring``, relabelling letters and coercing scalars."""
        F = ring.field
        out = {}
        for w, c in self.terms.items():
            if letter_map is not None:
                w = tuple(letter_map[i] for i in w)
            ring.order.check_word(w)
            if self.ring.field.is_prime and not F.is_prime:
                raise StructuralError("cannot lift GF(p) scalars to Q")
            c = F(c)
            if c:
                out[w] = F.add(out.get(w, F.zero), c)
        return FreePoly(ring, out)


def multiply(f: FreePoly, g: FreePoly) -> FreePoly:
    """Bilinear extension of concatenation."""
    f._check(g)
    F = f.ring.field
    out: dict = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            w = u + v
            s = F.add(out.get(w, F.zero), F.mul(a, b))
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return FreePoly(f.ring, out, _trusted=True)


def component(f: FreePoly, k: int) -> FreePoly:
    deg = f.ring.order.degree
    return FreePoly(f.ring, {w: c for w, c in f.terms.items() if deg(w) == k}, _trusted=True)


# -- text syntax -------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", column=pos + 1)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


def parse_poly(ring: FreeAlgebra, text: str, params: Mapping | None = None) -> FreePoly:
    """Parse ``y*x - x*y - x^2``, ``-1/2*x^3``, ``q*t*x`` (``q`` a parameter)."""
    F = ring.field
    params = params or {}
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    pos = 0
    out = ring.zero()

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, len(text) + 1)

    while pos < len(tokens):
        sign = 1
        kind, val, col = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
        elif pos > 0:
            raise ParseError(f"expected + or -, got {val!r}", column=col)
        coeff = F(sign)
        word: list = []
        expect_factor = True
        while True:
            kind, val, col = peek()
            if expect_factor:
                if kind == "num":
                    factor_val, factor_word = F(val), None
                elif kind == "name":
                    if val in params:
                        factor_val, factor_word = F(params[val]), None
                    elif val in ring.order.names:
                        factor_val, factor_word = None, ring.order.index(val)
                    else:
                        raise ParseError(f"unknown generator {val!r}", column=col)
                else:
                    raise ParseError(f"expected a factor, got {val!r}", column=col)
                pos += 1
                power = 1
                kind2, val2, col2 = peek()
                if kind2 == "op" and val2 == "^":
                    pos += 1
                    kind3, val3, col3 = peek()
                    if kind3 != "num" or "/" in val3:
                        raise ParseError("exponent must be a natural number", column=col3)
                    power = int(val3)
                    pos += 1
                if factor_word is None:
                    coeff = F.mul(coeff, _power(F, factor_val, power))
                else:
                    word.extend([factor_word] * power)
                expect_factor = False
            else:
                if kind == "op" and val == "*":
                    pos += 1
                    expect_factor = True
                    continue
                break
        if expect_factor:
            raise ParseError("dangling operator", column=peek()[2])
        out = out + FreePoly(ring, {tuple(word): coeff})
    return out


def _power(F: FieldSpec, a, k: int):
    out = F.one
    for _ in range(k):
        out = F.mul(out, a)
    return out


def format_poly(f: FreePoly) -> str:
    """Render in the text syntax accepted by :func:`parse_poly`."""
    if not f.terms:
        return "0"
    F = f.ring.field
    fmt = f.ring.order.format_word
    pieces = []
    for w, c in f.terms.items():
        s = F.to_str(c)
        neg = s.startswith("-")
        s = s.lstrip("-")
        if not w:
            body = s
        elif s == "1":
            body = fmt(w)
        else:
            body = f"{s}*{fmt(w)}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)
