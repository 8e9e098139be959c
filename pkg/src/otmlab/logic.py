"""Truth evaluation over hereditarily finite sets.

eval_delta0 is the native stand-in for a tape-level bounded-truth program:
it decides any bounded formula over given set values.  search_witness runs
the enumerate-and-check loop (canonical Ackermann enumeration plus the truth
evaluator).  eval_prenex and the s-/t-canonification checkers relativize
unbounded quantifiers to an explicit finite carrier.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .errors import Exhausted, RangeEscape, UnboundVariable
from .formulas import (
    And,
    BoundedAll,
    BoundedEx,
    Delta0Formula,
    Equal,
    Implies,
    Member,
    Node,
    Not,
    Or,
    PrenexStatement,
)
from .hfsets import HfSet, ack_enumerate, hf, rank

__all__ = [
    "Carrier",
    "eval_delta0",
    "search_witness",
    "search_witness_set",
    "eval_prenex",
    "check_s_canonification",
    "check_t_canonification",
]


@dataclass(frozen=True)
class Carrier:
    """Finite nonempty set of HfSets over which unbounded quantifiers range."""

    members: Tuple[HfSet, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("carrier must be nonempty")
        if len({id(m) for m in self.members}) != len(self.members):
            raise ValueError("carrier members must be distinct")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return any(m is x for m in self.members)


def eval_delta0(formula: Union[Delta0Formula, Node], env: Dict[str, HfSet]) -> bool:
    """Tarskian evaluation; bounded quantifiers range over the bound's elements."""
    root = formula.root if isinstance(formula, Delta0Formula) else formula
    return _eval(root, env)


def _lookup(env: Dict[str, HfSet], name: str) -> HfSet:
    try:
        return env[name]
    except KeyError:
        raise UnboundVariable(name) from None


def _eval(node: Node, env: Dict[str, HfSet]) -> bool:
    if isinstance(node, Member):
        return _lookup(env, node.left) in _lookup(env, node.right)
    if isinstance(node, Equal):
        return _lookup(env, node.left) is _lookup(env, node.right)
    if isinstance(node, Not):
        return not _eval(node.body, env)
    if isinstance(node, And):
        return _eval(node.left, env) and _eval(node.right, env)
    if isinstance(node, Or):
        return _eval(node.left, env) or _eval(node.right, env)
    if isinstance(node, Implies):
        return (not _eval(node.left, env)) or _eval(node.right, env)
    if isinstance(node, BoundedAll):
        domain = _lookup(env, node.bound)
        return all(_eval(node.body, {**env, node.var: w}) for w in domain)
    if isinstance(node, BoundedEx):
        domain = _lookup(env, node.bound)
        return any(_eval(node.body, {**env, node.var: w}) for w in domain)
    raise TypeError(f"not a formula node: {node!r}")


def search_witness(
    psi: Delta0Formula,
    a: HfSet,
    budget: int,
    instance_var: str = "a",
    witness_var: str = "b",
) -> HfSet:
    """Least witness in Ackermann order: the first b among the canonical
    enumeration with psi(a, b).  Raises Exhausted after `budget` candidates."""
    expected = {instance_var, witness_var}
    if set(psi.free) != expected:
        raise UnboundVariable(
            f"witness search needs free variables {sorted(expected)}, "
            f"formula has {list(psi.free)}"
        )
    for k in range(budget):
        b = ack_enumerate(k)
        if eval_delta0(psi, {instance_var: a, witness_var: b}):
            return b
    raise Exhausted(budget)


def search_witness_set(
    psi: Delta0Formula,
    a: HfSet,
    budget: int,
    instance_var: str = "a",
    witness_var: str = "b",
) -> HfSet:
    """All witnesses of minimal rank, as a set.

    The Ackermann enumeration refines the rank layering (sets of rank r occupy
    a contiguous index block), so the first witness found has minimal rank and
    its whole layer can be scanned.  Raises Exhausted if the layer does not
    fit in the budget.
    """
    first = search_witness(psi, a, budget, instance_var, witness_var)
    target = rank(first)
    layer_end = _rank_layer_end(target)
    if layer_end > budget:
        raise Exhausted(budget)
    found: List[HfSet] = []
    for k in range(layer_end):
        b = ack_enumerate(k)
        if rank(b) == target and eval_delta0(
            psi, {instance_var: a, witness_var: b}
        ):
            found.append(b)
    return hf(found)


def _rank_layer_end(r: int) -> int:
    # sets of rank <= r have index < tower(r+1) where tower(0)=1, tower(k+1)=2**tower(k)
    bound = 1
    for _ in range(r + 1):
        bound = 2**bound
        if bound > 1 << 20:
            return bound
    return bound


def eval_prenex(statement: PrenexStatement, carrier: Carrier) -> bool:
    """Brute-force alternating-quantifier truth over the carrier."""
    return _eval_blocks(statement.blocks, statement.matrix, carrier, {})


def _eval_blocks(
    blocks: Tuple[Tuple[str, str], ...],
    matrix: Delta0Formula,
    carrier: Carrier,
    env: Dict[str, HfSet],
) -> bool:
    if not blocks:
        return eval_delta0(matrix, env)
    (avar, evar), rest = blocks[0], blocks[1:]
    for a in carrier:
        if not any(
            _eval_blocks(rest, matrix, carrier, {**env, avar: a, evar: e})
            for e in carrier
        ):
            return False
    return True


CheckResult = Tuple[bool, Optional[Tuple[HfSet, ...]]]


def check_s_canonification(
    statement: PrenexStatement,
    outer: Callable[[HfSet], HfSet],
    carrier: Carrier,
) -> CheckResult:
    """Superficial check: instantiating only the first block with (a, outer(a))
    must leave a true statement over the carrier.

    Returns (True, None) or (False, (a,)) with the failing first-block value.
    """
    blocks = statement.blocks
    if not blocks:
        raise ValueError("prenex statement has no quantifier blocks")
    (avar, evar), rest = blocks[0], blocks[1:]
    for a in carrier:
        value = outer(a)
        if value not in carrier:
            raise RangeEscape(a, value)
        env = {avar: a, evar: value}
        if not _eval_blocks(rest, statement.matrix, carrier, env):
            return False, (a,)
    return True, None


def check_t_canonification(
    statement: PrenexStatement,
    functions: Sequence[Callable[..., HfSet]],
    carrier: Carrier,
) -> CheckResult:
    """Thorough check: the function tuple must penetrate the whole prefix.

    For every i and every tuple (a_1, ..., a_i) from the carrier, the
    statement with blocks 1..i instantiated by (a_j, F_j(a_1..a_j)) and the
    remaining blocks quantified over the carrier must hold; with i = n this
    is the fully instantiated matrix, which is what makes the n = 1 case
    coincide with the superficial check.

    Returns (True, None) or (False, (a_1, ..., a_i)) for the least failing
    instantiation depth.
    """
    blocks = statement.blocks
    n = len(blocks)
    if len(functions) != n:
        raise ValueError(f"need {n} functions, got {len(functions)}")
    for depth in range(1, n + 1):
        for prefix in itertools.product(carrier, repeat=depth):
            env: Dict[str, HfSet] = {}
            escape = False
            for j in range(depth):
                avar, evar = blocks[j]
                value = functions[j](*prefix[: j + 1])
                if value not in carrier:
                    raise RangeEscape(prefix[: j + 1], value)
                env[avar] = prefix[j]
                env[evar] = value
            if not _eval_blocks(blocks[depth:], statement.matrix, carrier, env):
                return False, tuple(prefix)
    return True, None
