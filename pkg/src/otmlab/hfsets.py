"""Hereditarily finite sets with the Ackermann ordering.

HfSet values are interned and canonically ordered (elements sorted ascending
by Ackermann index), so extensional equality is object identity.  The
Ackermann coding n <-> set of positions of 1-bits gives the canonical
enumeration used as the desk-scale stand-in for a constructible enumeration;
comparisons are computed structurally so deep sets never force the
(potentially astronomical) integer index into existence.
"""

from __future__ import annotations

import os
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import ParseError, RepresentationOverflow, SourceSpan

__all__ = [
    "HfSet",
    "EMPTY",
    "hf",
    "singleton",
    "ack_compare",
    "ack_index",
    "ack_enumerate",
    "ack_min",
    "tc",
    "rank",
    "rank_cap",
    "kpair",
    "kpair_parts",
    "set_union",
    "set_difference",
    "parse_set_literal",
    "format_set",
    "universe_rank_le",
    "RANK_LAYER_BOUNDS",
]

# bit positions above this would make 2**p unmanageable
_MAX_ACK_EXPONENT = 1_000_000

_DEFAULT_RANK_CAP = 6


def rank_cap() -> int:
    """Configured decodable-set rank cap (env OTMLAB_RANK_CAP, default 6)."""
    raw = os.environ.get("OTMLAB_RANK_CAP")
    if raw is None:
        return _DEFAULT_RANK_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"OTMLAB_RANK_CAP must be an integer, got {raw!r}")


class HfSet:
    """Interned hereditarily finite set; `elements` sorted by Ackermann order."""

    __slots__ = ("elements", "_rank", "_index")

    _intern: Dict[Tuple[int, ...], "HfSet"] = {}

    def __new__(cls, elements: Tuple["HfSet", ...] = ()):
        key = tuple(id(e) for e in elements)
        cached = cls._intern.get(key)
        if cached is not None:
            return cached
        self = object.__new__(cls)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_rank", None)
        object.__setattr__(self, "_index", None)
        cls._intern[key] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("HfSet is immutable")

    def __contains__(self, item):
        return isinstance(item, HfSet) and item in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return format_set(self)


EMPTY = HfSet()


def hf(elements: Iterable[HfSet]) -> HfSet:
    """Build a set: deduplicate and sort elements into canonical order."""
    unique: List[HfSet] = []
    seen = set()
    for e in elements:
        if not isinstance(e, HfSet):
            raise TypeError(f"HfSet elements must be HfSets, got {e!r}")
        if id(e) not in seen:
            seen.add(id(e))
            unique.append(e)
    unique.sort(key=_AckKey)
    return HfSet(tuple(unique))


def singleton(x: HfSet) -> HfSet:
    return hf([x])


_ACK_CMP_CACHE: Dict[Tuple[int, int], int] = {}


def ack_compare(x: HfSet, y: HfSet) -> int:
    """Compare by Ackermann index without materializing the index.

    Viewing sets as binary numbers (bit i set iff the set with index i is an
    element), compares the bit strings from the most significant end.
    """
    if x is y:
        return 0
    key = (id(x), id(y))
    cached = _ACK_CMP_CACHE.get(key)
    if cached is not None:
        return cached
    xs, ys = x.elements, y.elements
    i, j = len(xs) - 1, len(ys) - 1
    result = 0
    while True:
        if i < 0 or j < 0:
            if i < 0 and j < 0:
                result = 0
            else:
                result = -1 if i < 0 else 1
            break
        c = ack_compare(xs[i], ys[j])
        if c != 0:
            result = c
            break
        i -= 1
        j -= 1
    _ACK_CMP_CACHE[key] = result
    _ACK_CMP_CACHE[(id(y), id(x))] = -result
    return result


class _AckKey:
    __slots__ = ("value",)

    def __init__(self, value: HfSet):
        self.value = value

    def __lt__(self, other):
        return ack_compare(self.value, other.value) < 0


def ack_index(x: HfSet) -> int:
    """Ackermann index: sum of 2**ack_index(y) over elements y."""
    if x._index is not None:
        return x._index
    total = 0
    for e in x.elements:
        p = ack_index(e)
        if p > _MAX_ACK_EXPONENT:
            raise RepresentationOverflow(
                f"Ackermann index needs more than {_MAX_ACK_EXPONENT} bits; "
                "set too deep to materialize"
            )
        total += 1 << p
    object.__setattr__(x, "_index", total)
    return total


_ENUM_CACHE: Dict[int, HfSet] = {0: EMPTY}


def ack_enumerate(n: int) -> HfSet:
    """Inverse of ack_index (bijection between naturals and HfSets)."""
    if n < 0:
        raise ValueError("Ackermann indices are non-negative")
    cached = _ENUM_CACHE.get(n)
    if cached is not None:
        return cached
    elements = []
    m, pos = n, 0
    while m:
        if m & 1:
            elements.append(ack_enumerate(pos))
        m >>= 1
        pos += 1
    result = hf(elements)
    if n < (1 << 20):
        _ENUM_CACHE[n] = result
    return result


def ack_min(x: HfSet) -> HfSet:
    """Ackermann-least element of a nonempty set (elements are sorted)."""
    if not x.elements:
        raise ValueError("ack_min of the empty set")
    return x.elements[0]


_TC_CACHE: Dict[int, HfSet] = {}


def tc(x: HfSet) -> HfSet:
    """Transitive closure: least transitive set containing all elements of x."""
    cached = _TC_CACHE.get(id(x))
    if cached is not None:
        return cached
    members: List[HfSet] = []
    for y in x.elements:
        members.append(y)
        members.extend(tc(y).elements)
    result = hf(members)
    _TC_CACHE[id(x)] = result
    return result


def rank(x: HfSet) -> int:
    if x._rank is not None:
        return x._rank
    r = 0 if not x.elements else 1 + max(rank(e) for e in x.elements)
    object.__setattr__(x, "_rank", r)
    return r


# -- pure-set encodings --------------------------------------------------------


def kpair(a: HfSet, b: HfSet) -> HfSet:
    """Kuratowski pair {{a},{a,b}}."""
    return hf([singleton(a), hf([a, b])])


def kpair_parts(p: HfSet) -> Optional[Tuple[HfSet, HfSet]]:
    """Decompose a Kuratowski pair; None if p is not one."""
    if len(p.elements) == 1:
        inner = p.elements[0]
        if len(inner.elements) == 1:
            e = inner.elements[0]
            return e, e
        return None
    if len(p.elements) == 2:
        u, v = p.elements
        small, big = (u, v) if len(u.elements) <= len(v.elements) else (v, u)
        if len(small.elements) == 1 and len(big.elements) == 2:
            a = small.elements[0]
            if a in big:
                b = next(e for e in big.elements if e is not a)
                return a, b
    return None


def set_union(x: HfSet) -> HfSet:
    """Union of the elements of x."""
    members: List[HfSet] = []
    for y in x.elements:
        members.extend(y.elements)
    return hf(members)


def set_difference(x: HfSet, y: HfSet) -> HfSet:
    return hf(e for e in x.elements if e not in y)


# -- literals ------------------------------------------------------------------


def format_set(x: HfSet) -> str:
    return "{" + ",".join(format_set(e) for e in x.elements) + "}"


def parse_set_literal(text: str, line: int = 1, col_base: int = 1) -> HfSet:
    pos = 0

    def error(expected):
        found = text[pos : pos + 8] or "end of input"
        raise ParseError(SourceSpan(line, col_base + pos, 1), expected, found)

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos] in " \t\r\n":
            pos += 1

    def parse() -> HfSet:
        nonlocal pos
        skip_ws()
        if pos >= len(text) or text[pos] != "{":
            error("'{'")
        pos += 1
        elements = []
        skip_ws()
        if pos < len(text) and text[pos] == "}":
            pos += 1
            return hf(elements)
        while True:
            elements.append(parse())
            skip_ws()
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos < len(text) and text[pos] == "}":
                pos += 1
                return hf(elements)
            error("',' or '}'")

    result = parse()
    skip_ws()
    if pos != len(text):
        error("end of set literal")
    return result


# -- rank-layer enumeration ------------------------------------------------------

# sets of rank <= r are exactly those with Ackermann index < RANK_LAYER_BOUNDS[r]
RANK_LAYER_BOUNDS = [1, 2, 4, 16, 65536]


def universe_rank_le(r: int) -> List[HfSet]:
    """All HfSets of rank <= r (exhaustive; r <= 4 only)."""
    if r < 0:
        return []
    if r >= len(RANK_LAYER_BOUNDS):
        raise ValueError(f"rank {r} universe is too large to enumerate")
    return [ack_enumerate(i) for i in range(RANK_LAYER_BOUNDS[r])]
