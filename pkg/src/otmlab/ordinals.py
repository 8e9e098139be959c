"""Cantor-normal-form ordinals below epsilon_0.

An ordinal is a finite sum  w^e1*c1 + ... + w^ek*ck  with ordinal exponents
e1 > e2 > ... > ek and positive integer coefficients.  The representation is
unique, so structural equality is ordinal equality.  Instances are interned:
equal ordinals are the same object.

Also provides the Goedel pairing (the order isomorphism of pairs ordered by
(max, left, right) onto the ordinals), liminf of finitely described
sequences, and the text syntax used everywhere else (`0`, `5`, `w`,
`w^2*3+w*2+7`, `w^(w+1)`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .errors import ParseError, RepresentationOverflow, SourceSpan

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "from_int",
    "omega_power",
    "compare",
    "add",
    "mul",
    "sub_left",
    "godel_pair",
    "godel_unpair",
    "pair_rank",
    "SweepDescriptor",
    "DescribedSequence",
    "liminf",
    "parse_ordinal",
    "format_ordinal",
]


class Ordinal:
    """Immutable CNF ordinal.  Use from_int/omega_power/parse_ordinal to build."""

    __slots__ = ("terms", "_hash")

    _intern: dict = {}

    def __new__(cls, terms: Tuple[Tuple["Ordinal", int], ...] = ()):
        cached = cls._intern.get(terms)
        if cached is not None:
            return cached
        prev = None
        for exp, coef in terms:
            if not isinstance(exp, Ordinal) or not isinstance(coef, int) or coef < 1:
                raise ValueError(f"bad CNF term ({exp!r}, {coef!r})")
            if prev is not None and compare(prev, exp) <= 0:
                raise ValueError("CNF exponents must strictly decrease")
            prev = exp
        self = object.__new__(cls)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", hash(terms))
        cls._intern[terms] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Ordinal is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_natural(self) -> bool:
        """True for 0, 1, 2, ... (at most one term, exponent 0)."""
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def lead_exponent(self) -> "Ordinal":
        """Exponent of the leading term; 0 for finite ordinals."""
        return self.terms[0][0] if self.terms else ZERO

    @property
    def natural_part(self) -> int:
        """The finite tail (coefficient of w^0, possibly 0)."""
        if self.terms and self.terms[-1][0].is_zero:
            return self.terms[-1][1]
        return 0

    def to_int(self) -> int:
        if not self.is_natural:
            raise ValueError(f"{self} is not a natural number")
        return self.terms[0][1] if self.terms else 0

    def successor(self) -> "Ordinal":
        return add(self, ONE)

    def predecessor(self) -> "Ordinal":
        if not self.is_successor:
            raise ValueError(f"{self} is not a successor ordinal")
        exp, coef = self.terms[-1]
        if coef > 1:
            return Ordinal(self.terms[:-1] + ((exp, coef - 1),))
        return Ordinal(self.terms[:-1])

    def limit_part(self) -> "Ordinal":
        """Drop the finite tail: the largest limit-or-zero ordinal <= self."""
        if self.terms and self.terms[-1][0].is_zero:
            return Ordinal(self.terms[:-1])
        return self

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Ordinal) and self.terms == other.terms
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    # -- arithmetic sugar ----------------------------------------------------

    def __add__(self, other):
        return add(self, _coerce(other))

    def __mul__(self, other):
        return mul(self, _coerce(other))

    def __repr__(self):
        return format_ordinal(self)


def _coerce(value) -> Ordinal:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int):
        return from_int(value)
    raise TypeError(f"cannot use {value!r} as an ordinal")


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    if n == 0:
        return ZERO
    return Ordinal(((ZERO, n),))


def omega_power(exp: Ordinal) -> Ordinal:
    """w**exp in CNF (w**0 = 1)."""
    return Ordinal(((exp, 1),))


def compare(a: Ordinal, b: Ordinal) -> int:
    """-1, 0, or 1: lexicographic comparison of CNF term sequences."""
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal addition (non-commutative: 1 + w = w)."""
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    eb = b.terms[0][0]
    kept = []
    merged = None
    for exp, coef in a.terms:
        c = compare(exp, eb)
        if c > 0:
            kept.append((exp, coef))
        elif c == 0:
            merged = coef
            break
        else:
            break
    if merged is None:
        return Ordinal(tuple(kept) + b.terms)
    head = (eb, merged + b.terms[0][1])
    return Ordinal(tuple(kept) + (head,) + b.terms[1:])


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal multiplication (non-commutative: 2 * w = w)."""
    if a.is_zero or b.is_zero:
        return ZERO
    e1 = a.terms[0][0]
    out = []
    for exp, coef in b.terms:
        if exp.is_zero:
            # a * n scales the leading coefficient and keeps the tail.
            out.append((e1, a.terms[0][1] * coef))
            out.extend(a.terms[1:])
        else:
            out.append((add(e1, exp), coef))
    return Ordinal(tuple(out))


def sub_left(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique r with b + r = a; requires b <= a."""
    k = 0
    ta, tb = a.terms, b.terms
    while k < len(ta) and k < len(tb) and ta[k] == tb[k]:
        k += 1
    if k == len(tb):
        return Ordinal(ta[k:])
    if k == len(ta):
        raise ValueError(f"cannot subtract: {b} > {a}")
    (ea, ca), (eb, cb) = ta[k], tb[k]
    c = compare(ea, eb)
    if c < 0 or (c == 0 and ca < cb):
        raise ValueError(f"cannot subtract: {b} > {a}")
    if c > 0:
        return Ordinal(ta[k:])
    if ca == cb:
        # same (exp, coef) would have advanced k; coefficients must differ
        raise AssertionError("unreachable")
    return Ordinal(((ea, ca - cb),) + ta[k + 1 :])


ZERO = Ordinal()
ONE = from_int(1)
TWO = from_int(2)
OMEGA = omega_power(ONE)


# -- Goedel pairing ----------------------------------------------------------
#
# Pairs are well-ordered by (max(a,b), a, b).  pair_rank(alpha) is the order
# type of the set of pairs whose maximum is below alpha; the pairing adds the
# offset of a pair inside its max-shell.  pair_rank is computed term by term
# from the CNF; the shell-block order types are single omega-powers whose
# exponents come from _psi below (derived from the recursion
# rank(shells of w^e blocks) = sup over finite stacks).

_PAIR_RANK_CACHE: dict = {}


def _psi(x: Ordinal, e: Ordinal) -> Ordinal:
    """Exponent of the order type of a block of w^e shells following a prefix
    with leading exponent x (e >= 1)."""
    if compare(x, e) >= 0:
        return add(x, e)
    if e.is_successor:
        return add(mul(e.predecessor(), TWO), ONE)
    # e limit: drop one unit of its last term
    last_exp, last_coef = e.terms[-1]
    if last_coef > 1:
        trimmed = Ordinal(e.terms[:-1] + ((last_exp, last_coef - 1),))
    else:
        trimmed = Ordinal(e.terms[:-1])
    return add(mul(trimmed, TWO), omega_power(last_exp))


def pair_rank(alpha: Ordinal) -> Ordinal:
    """Order type of {(x, y) : max(x, y) < alpha} under the pairing order."""
    cached = _PAIR_RANK_CACHE.get(alpha)
    if cached is not None:
        return cached
    if alpha.is_zero:
        return ZERO
    if alpha.is_natural:
        n = alpha.to_int()
        result = from_int(n * n)
        _PAIR_RANK_CACHE[alpha] = result
        return result
    e1 = alpha.terms[0][0]
    total = ZERO
    for i, (exp, coef) in enumerate(alpha.terms):
        if exp.is_zero:
            # finite tail after an infinite prefix gamma: sum over n shells of
            # gamma*2 + k + 1, which telescopes to gamma*(2n) + n
            gamma = Ordinal(alpha.terms[:-1])
            total = add(total, add(mul(gamma, from_int(2 * coef)), from_int(coef)))
        else:
            x_first = ZERO if i == 0 else e1
            total = add(total, omega_power(_psi(x_first, exp)))
            if coef > 1:
                block = omega_power(_psi(e1, exp))
                total = add(total, mul(block, from_int(coef - 1)))
    _PAIR_RANK_CACHE[alpha] = total
    return total


def godel_pair(a: Ordinal, b: Ordinal) -> Ordinal:
    """Position of (a, b) in the (max, a, b)-lexicographic well-order of pairs."""
    if compare(a, b) < 0:
        return add(pair_rank(b), a)
    return add(add(pair_rank(a), a), b)


def godel_unpair(c: Ordinal) -> Tuple[Ordinal, Ordinal]:
    """Inverse of godel_pair.  Supported for c below w^w (all desk uses)."""
    if c.is_natural:
        n = c.to_int()
        k = math.isqrt(n)
        r = n - k * k
        if r < k:
            return from_int(r), from_int(k)
        return from_int(k), from_int(r - k)
    if not c.lead_exponent.is_natural:
        raise RepresentationOverflow(
            f"godel_unpair above w^w is not supported (got {c})"
        )
    # gallop to the largest mu with pair_rank(mu) <= c
    mu = ZERO
    for t in range(c.lead_exponent.to_int(), -1, -1):
        step = omega_power(from_int(t))
        while True:
            nxt = add(mu, step)
            if compare(pair_rank(nxt), c) <= 0:
                mu = nxt
            else:
                break
    offset = sub_left(c, pair_rank(mu))
    if compare(offset, mu) < 0:
        return offset, mu
    right = sub_left(offset, mu)
    if compare(right, mu) > 0:
        raise AssertionError(f"unpair overflow at {c}")
    return mu, right


# -- described sequences and liminf -------------------------------------------


@dataclass(frozen=True)
class SweepDescriptor:
    """start, start+stride, start+2*stride, ... with supremum limit."""

    start: Ordinal
    stride: int
    limit: Ordinal

    def __post_init__(self):
        if self.stride < 1:
            raise ValueError("stride must be a positive integer")
        if self.limit != add(self.start, OMEGA):
            raise ValueError(
                f"limit {self.limit} is not the supremum of the sweep "
                f"(expected {add(self.start, OMEGA)})"
            )

    def value_at(self, k: int) -> Ordinal:
        return add(self.start, from_int(self.stride * k))


@dataclass(frozen=True)
class DescribedSequence:
    """Eventually periodic sequence (prefix + cycle) or strictly increasing sweep."""

    prefix: Tuple[Ordinal, ...] = ()
    cycle: Optional[Tuple[Ordinal, ...]] = None
    sweep: Optional[SweepDescriptor] = None

    def __post_init__(self):
        if (self.cycle is None) == (self.sweep is None):
            raise ValueError("exactly one of cycle/sweep must be given")
        if self.cycle is not None and len(self.cycle) == 0:
            raise ValueError("cycle must be nonempty")
        if self.sweep is not None and self.prefix:
            raise ValueError("sweep sequences have no prefix")

    def value_at(self, k: int) -> Ordinal:
        if self.sweep is not None:
            return self.sweep.value_at(k)
        if k < len(self.prefix):
            return self.prefix[k]
        return self.cycle[(k - len(self.prefix)) % len(self.cycle)]

    def values(self, n: int) -> Iterator[Ordinal]:
        for k in range(n):
            yield self.value_at(k)


def liminf(seq: DescribedSequence) -> Ordinal:
    """Inferior limit: least cofinally recurring value, or the sweep supremum."""
    if seq.sweep is not None:
        return seq.sweep.limit
    low = seq.cycle[0]
    for v in seq.cycle[1:]:
        if compare(v, low) < 0:
            low = v
    return low


# -- text syntax --------------------------------------------------------------


def format_ordinal(o: Ordinal) -> str:
    if o.is_zero:
        return "0"
    parts = []
    for exp, coef in o.terms:
        if exp.is_zero:
            parts.append(str(coef))
            continue
        if exp == ONE:
            s = "w"
        elif exp.is_natural:
            s = f"w^{exp.to_int()}"
        elif exp == OMEGA:
            s = "w^w"
        else:
            s = f"w^({format_ordinal(exp)})"
        if coef > 1:
            s += f"*{coef}"
        parts.append(s)
    return "+".join(parts)


class _OrdinalScanner:
    def __init__(self, text: str, line: int = 1, col_base: int = 1):
        self.text = text
        self.pos = 0
        self.line = line
        self.col_base = col_base

    def _span(self, length: int = 1) -> SourceSpan:
        return SourceSpan(self.line, self.col_base + self.pos, max(length, 1))

    def error(self, expected: str):
        found = self.text[self.pos : self.pos + 8] or "end of input"
        raise ParseError(self._span(), expected, found)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"'{ch}'")
        self.pos += 1

    def take_nat(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("a number")
        return int(self.text[start : self.pos])

    def parse_expr(self) -> Ordinal:
        total = self.parse_term()
        self.skip_ws()
        while self.peek() == "+":
            self.pos += 1
            self.skip_ws()
            total = add(total, self.parse_term())
            self.skip_ws()
        return total

    def parse_term(self) -> Ordinal:
        self.skip_ws()
        ch = self.peek()
        if ch.isdigit():
            return from_int(self.take_nat())
        if ch != "w":
            self.error("'w' or a number")
        self.pos += 1
        exp = ONE
        if self.peek() == "^":
            self.pos += 1
            exp = self.parse_exponent()
        coef = 1
        if self.peek() == "*":
            self.pos += 1
            coef = self.take_nat()
            if coef < 1:
                self.error("a positive coefficient")
        return mul(omega_power(exp), from_int(coef))

    def parse_exponent(self) -> Ordinal:
        ch = self.peek()
        if ch.isdigit():
            return from_int(self.take_nat())
        if ch == "w":
            self.pos += 1
            return OMEGA
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.skip_ws()
            self.take(")")
            return inner
        self.error("an exponent (number, 'w', or parenthesized ordinal)")


def parse_ordinal(text: str, line: int = 1, col_base: int = 1) -> Ordinal:
    scanner = _OrdinalScanner(text, line, col_base)
    scanner.skip_ws()
    value = scanner.parse_expr()
    scanner.skip_ws()
    if scanner.pos != len(text):
        scanner.error("end of ordinal")
    return value
