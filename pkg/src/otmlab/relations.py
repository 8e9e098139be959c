"""Binary relations on sets: the choice-principle catalog and canonifications.

Relations are kept in implication form: an instance outside the stated domain
is satisfied by any value, so a canonification only has real obligations on
the domain (off-domain entries default to the empty set).  Structured
instances (orders, posets) are plain sets built from Kuratowski pairs.

Each relation also knows its canonical witness sets: the finite range
universe a verification sweep quantifies canonifications over.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import EmptyWitnessSet
from .formulas import Delta0Formula, parse_delta0
from .hfsets import (
    EMPTY,
    HfSet,
    ack_compare,
    hf,
    kpair,
    kpair_parts,
    set_union,
)
from .logic import eval_delta0

__all__ = [
    "Relation",
    "Canonification",
    "check_canonification",
    "enumerate_canonifications",
    "relation_from_formula",
    "PRINCIPLES",
    "encode_poset",
    "decode_poset",
    "encode_order",
    "decode_linear_order",
    "ack_order_on",
    "maximal_elements",
    "maximal_chains",
]


@dataclass(frozen=True)
class Relation:
    name: str
    domain: Callable[[HfSet], bool]
    holds: Callable[[HfSet, HfSet], bool]
    witness_set: Callable[[HfSet], List[HfSet]]
    matrix: Optional[Delta0Formula] = None
    note: str = ""

    def satisfied(self, x: HfSet, y: HfSet) -> bool:
        """Implication form: off-domain instances accept anything."""
        return (not self.domain(x)) or self.holds(x, y)

    def __repr__(self):
        return f"Relation({self.name})"


@dataclass(frozen=True)
class Canonification:
    """A finite choice of witnesses over a stated instance universe."""

    mapping: Dict[HfSet, HfSet]
    label: str = ""

    def __call__(self, x: HfSet) -> HfSet:
        return self.mapping.get(x, EMPTY)

    def defined_at(self, x: HfSet) -> bool:
        return x in self.mapping

    def __repr__(self):
        return f"Canonification({self.label or len(self.mapping)})"


def check_canonification(
    canon: Canonification, relation: Relation, universe: Sequence[HfSet]
) -> Tuple[bool, Optional[HfSet]]:
    """True iff every domain instance in the universe gets a real witness."""
    for x in universe:
        if relation.domain(x) and not relation.holds(x, canon(x)):
            return False, x
    return True, None


def enumerate_canonifications(
    relation: Relation,
    instances: Sequence[HfSet],
    cap: int,
    seed: int = 0,
    sample_size: int = 100,
) -> Tuple[str, List[Canonification], int]:
    """Canonifications of the relation over the given instances.

    Returns (mode, canonifications, product_size): the full product of
    witness choices when it fits in `cap`, otherwise the two extremal
    choices (Ackermann-least and -greatest everywhere) plus a seeded sample
    of `sample_size` random choices.
    """
    domain_instances = [x for x in instances if relation.domain(x)]
    witness_sets: List[List[HfSet]] = []
    for x in domain_instances:
        ws = relation.witness_set(x)
        ws = _ack_sorted(ws)
        if not ws:
            raise EmptyWitnessSet(x)
        witness_sets.append(ws)

    product_size = 1
    for ws in witness_sets:
        product_size *= len(ws)
        if product_size > cap:
            break

    def build(choice: Sequence[HfSet], label: str) -> Canonification:
        return Canonification(
            mapping=dict(zip(domain_instances, choice)), label=label
        )

    if product_size <= cap:
        canons = [
            build(choice, f"product[{i}]")
            for i, choice in enumerate(itertools.product(*witness_sets))
        ]
        return "exhaustive", canons, product_size

    canons = [
        build([ws[0] for ws in witness_sets], "extremal-min"),
        build([ws[-1] for ws in witness_sets], "extremal-max"),
    ]
    rng = random.Random(seed)
    for i in range(sample_size):
        canons.append(
            build([rng.choice(ws) for ws in witness_sets], f"sample[{i}]")
        )
    return "sampled", canons, product_size


def _ack_sorted(values: Iterable[HfSet]) -> List[HfSet]:
    out = list(values)
    out.sort(key=_AckSortKey)
    return out


class _AckSortKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return ack_compare(self.v, other.v) < 0


def relation_from_formula(
    name: str,
    psi: Delta0Formula,
    instance_var: str = "x",
    witness_var: str = "y",
    witness_budget: int = 256,
) -> Relation:
    """The relation {(x, y) : psi(x, y)} with Ackermann-enumerated witnesses."""
    from .hfsets import ack_enumerate

    def holds(x, y):
        return eval_delta0(psi, {instance_var: x, witness_var: y})

    def witness_set(x):
        return [
            b
            for b in (ack_enumerate(k) for k in range(witness_budget))
            if holds(x, b)
        ]

    return Relation(
        name=name,
        domain=lambda x: True,
        holds=holds,
        witness_set=witness_set,
        matrix=psi,
    )


# -- structured instances --------------------------------------------------------


def encode_poset(f: HfSet, order: Iterable[Tuple[HfSet, HfSet]]) -> HfSet:
    """Kuratowski pair (field, strict-order pair set)."""
    return kpair(f, hf(kpair(a, b) for a, b in order))


def decode_poset(c: HfSet) -> Optional[Tuple[HfSet, List[Tuple[HfSet, HfSet]]]]:
    """(field, strict partial order pairs), or None if c is not a valid
    encoded poset."""
    parts = kpair_parts(c)
    if parts is None:
        return None
    f, r = parts
    pairs = []
    for p in r.elements:
        ab = kpair_parts(p)
        if ab is None:
            return None
        a, b = ab
        if a not in f or b not in f:
            return None
        pairs.append((a, b))
    rel = set((id(a), id(b)) for a, b in pairs)
    for a, b in pairs:
        if a is b:
            return None  # irreflexive
        if (id(b), id(a)) in rel:
            return None  # asymmetric
    for a, b in pairs:
        for c2, d in pairs:
            if b is c2 and (id(a), id(d)) not in rel:
                return None  # transitive
    return f, pairs


def encode_order(elements: Sequence[HfSet]) -> HfSet:
    """Strict linear order pairs for the listed ordering (as a bare pair set)."""
    pairs = []
    for i, a in enumerate(elements):
        for b in elements[i + 1 :]:
            pairs.append(kpair(a, b))
    return hf(pairs)


def decode_linear_order(y: HfSet, f: HfSet) -> Optional[List[HfSet]]:
    """Elements of f in the order given by the strict total order y, or None."""
    pairs = []
    for p in y.elements:
        ab = kpair_parts(p)
        if ab is None:
            return None
        a, b = ab
        if a not in f or b not in f or a is b:
            return None
        pairs.append((a, b))
    rel = set((id(a), id(b)) for a, b in pairs)
    if any((id(b), id(a)) in rel for a, b in pairs):
        return None
    elements = list(f.elements)
    n = len(elements)
    # totality and transitivity for finite strict orders: sort by predecessor count
    below = {id(e): 0 for e in elements}
    for a, b in pairs:
        below[id(b)] += 1
    if sorted(below.values()) != list(range(n)):
        return None
    ordered = sorted(elements, key=lambda e: below[id(e)])
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if (id(a), id(b)) not in rel:
                return None
    return ordered


def ack_order_on(x: HfSet) -> HfSet:
    """The canonical well-order of x: order-by-Ackermann-index, encoded."""
    return encode_order(list(x.elements))


def maximal_elements(f: HfSet, pairs: Sequence[Tuple[HfSet, HfSet]]) -> List[HfSet]:
    non_maximal = {id(a) for a, _ in pairs}
    return [e for e in f.elements if id(e) not in non_maximal]


def maximal_chains(f: HfSet, pairs: Sequence[Tuple[HfSet, HfSet]]) -> List[HfSet]:
    rel = {(id(a), id(b)) for a, b in pairs}

    def comparable(a, b):
        return (id(a), id(b)) in rel or (id(b), id(a)) in rel

    def is_chain(subset):
        for i, a in enumerate(subset):
            for b in subset[i + 1 :]:
                if not comparable(a, b):
                    return False
        return True

    elements = list(f.elements)
    chains = [c for c in itertools.chain.from_iterable(
        itertools.combinations(elements, r) for r in range(len(elements) + 1)
    ) if is_chain(c)]
    out = []
    for c in chains:
        extendable = any(
            e not in c and all(comparable(e, m) for m in c) for e in elements
        )
        if not extendable:
            out.append(hf(c))
    return out


# -- the catalog -----------------------------------------------------------------


def _nonempty(x: HfSet) -> bool:
    return len(x) > 0


def _pairwise_disjoint_nonempty(x: HfSet) -> bool:
    members = x.elements
    if any(len(m) == 0 for m in members):
        return False
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if any(e in b for e in a.elements):
                return False
    return True


def _subsets(x: HfSet, nonempty_only: bool = False) -> List[HfSet]:
    out = []
    for r in range(0 if not nonempty_only else 1, len(x) + 1):
        for combo in itertools.combinations(x.elements, r):
            out.append(hf(combo))
    return out


def _pp_holds(x, y):
    return y in x


def _mpp_holds(x, y):
    return len(y) > 0 and all(e in x for e in y.elements)


def _muc_holds(x, y):
    return all(any(e in y for e in z.elements) for z in x.elements)


def _muc_witnesses(x):
    return [y for y in _subsets(set_union(x)) if _muc_holds(x, y)]


def _ac_holds(x, y):
    union = set_union(x)
    if not all(e in union for e in y.elements):
        return False
    for z in x.elements:
        if sum(1 for e in y.elements if e in z) != 1:
            return False
    return True


def _ac_witnesses(x):
    picks = [list(z.elements) for z in x.elements]
    return [hf(choice) for choice in itertools.product(*picks)]


def _acp_holds(x, y):
    entries = {}
    for p in y.elements:
        ab = kpair_parts(p)
        if ab is None:
            return False
        z, e = ab
        if z not in x or e not in z or id(z) in entries:
            return False
        entries[id(z)] = e
    return len(entries) == len(x)


def _acp_witnesses(x):
    members = list(x.elements)
    picks = [list(z.elements) for z in members]
    return [
        hf(kpair(z, e) for z, e in zip(members, choice))
        for choice in itertools.product(*picks)
    ]


def _wo_holds(x, y):
    return decode_linear_order(y, x) is not None


def _wo_witnesses(x):
    return [
        encode_order(list(perm)) for perm in itertools.permutations(x.elements)
    ]


def _zl_domain(c):
    decoded = decode_poset(c)
    return decoded is not None and len(decoded[0]) > 0


def _zl_holds(c, y):
    decoded = decode_poset(c)
    if decoded is None:
        return False
    f, pairs = decoded
    return y in f and id(y) not in {id(a) for a, _ in pairs}


def _zl_witnesses(c):
    f, pairs = decode_poset(c)
    return maximal_elements(f, pairs)


def _hmp_domain(c):
    return decode_poset(c) is not None


def _hmp_holds(c, y):
    decoded = decode_poset(c)
    if decoded is None:
        return False
    f, pairs = decoded
    if not all(e in f for e in y.elements):
        return False
    rel = {(id(a), id(b)) for a, b in pairs}
    els = list(y.elements)
    for i, a in enumerate(els):
        for b in els[i + 1 :]:
            if (id(a), id(b)) not in rel and (id(b), id(a)) not in rel:
                return False
    for e in f.elements:
        if e in y:
            continue
        if all(
            (id(e), id(c2)) in rel or (id(c2), id(e)) in rel for c2 in els
        ):
            return False
    return True


def _hmp_witnesses(c):
    f, pairs = decode_poset(c)
    return maximal_chains(f, pairs)


_PP_MATRIX = parse_delta0("(ex u in x (u = u)) -> y in x")

PRINCIPLES: Dict[str, Relation] = {
    "ZERO": Relation(
        name="ZERO",
        domain=lambda x: True,
        holds=lambda x, y: y is EMPTY,
        witness_set=lambda x: [EMPTY],
        note="the trivially effective bottom relation V x {0}",
    ),
    "PP": Relation(
        name="PP",
        domain=_nonempty,
        holds=_pp_holds,
        witness_set=lambda x: list(x.elements),
        matrix=_PP_MATRIX,
        note="every nonempty set contains an element",
    ),
    "PP2": Relation(
        name="PP2",
        domain=lambda x: len(x) == 2,
        holds=_pp_holds,
        witness_set=lambda x: list(x.elements),
        note="every 2-element set contains an element",
    ),
    "PPfin": Relation(
        name="PPfin",
        domain=_nonempty,
        holds=_pp_holds,
        witness_set=lambda x: list(x.elements),
        note="every nonempty finite set contains an element; on the "
        "hereditarily finite universe the domain coincides with PP",
    ),
    "MPP": Relation(
        name="MPP",
        domain=_nonempty,
        holds=_mpp_holds,
        witness_set=lambda x: _subsets(x, nonempty_only=True),
        note="every nonempty set has a nonempty finite subset",
    ),
    "MuC": Relation(
        name="MuC",
        domain=_pairwise_disjoint_nonempty,
        holds=_muc_holds,
        witness_set=_muc_witnesses,
        note="multiple choice; degenerate on hereditarily finite sets, "
        "where every intersection is finite",
    ),
    "AC": Relation(
        name="AC",
        domain=_pairwise_disjoint_nonempty,
        holds=_ac_holds,
        witness_set=_ac_witnesses,
        note="transversals for disjoint families",
    ),
    "ACprime": Relation(
        name="ACprime",
        domain=lambda x: all(len(z) > 0 for z in x.elements),
        holds=_acp_holds,
        witness_set=_acp_witnesses,
        note="choice functions for families of nonempty sets",
    ),
    "WO": Relation(
        name="WO",
        domain=lambda x: True,
        holds=_wo_holds,
        witness_set=_wo_witnesses,
        note="strict well-orders (finite: linear orders) of the instance",
    ),
    "ZL": Relation(
        name="ZL",
        domain=_zl_domain,
        holds=_zl_holds,
        witness_set=_zl_witnesses,
        note="maximal elements of encoded nonempty posets",
    ),
    "HMP": Relation(
        name="HMP",
        domain=_hmp_domain,
        holds=_hmp_holds,
        witness_set=_hmp_witnesses,
        note="maximal chains of encoded posets",
    ),
}
