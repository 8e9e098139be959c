"""Reduction witnesses and their verification.

A witness reduces a relation R to a relation R' in one of three senses:

  soW   post(F'(pre(x)))            single oracle use, no side channel
  oW    post(F'(pre(x)), x)         single oracle use, original instance kept
  OTM   a procedure that may consult F' any number of times (miracle tape)

Stages are either whitelisted native procedures (compositions of
OTM-effective primitives) or machine programs executed on set codes.
verify_reduction sweeps every canonification of the target relation over the
relevant instances (full product when small, extremal plus seeded samples
otherwise) and reports counterexamples.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import machine
from .codes import code_to_tape, decode, encode, is_valid, tape_to_code
from .errors import (
    EmptyWitnessSet,
    Exhausted,
    InvalidCode,
    MiracleRangeEscape,
    OracleDomainError,
    WitnessExecutionError,
)
from .formulas import PrenexStatement
from .hfsets import (
    EMPTY,
    HfSet,
    ack_compare,
    hf,
    kpair,
    kpair_parts,
    rank,
    rank_cap,
    set_difference,
    singleton,
    tc,
)
from .logic import eval_delta0
from .machine import RunBudget
from .programs import Program
from .relations import (
    Canonification,
    Relation,
    decode_linear_order,
    decode_poset,
    encode_order,
    enumerate_canonifications,
    maximal_elements,
)

__all__ = [
    "NativeProcedure",
    "NATIVE_REGISTRY",
    "PRIMITIVES",
    "ReductionWitness",
    "apply_oW",
    "run_with_miracle",
    "MiracleStats",
    "verify_reduction",
    "VerificationReport",
    "CaseFailure",
    "builtin_witnesses",
    "load_witness_manifest",
    "witness_path",
    "search_reduction_zfc_analog",
]

PRIMITIVES = (
    "encode",
    "decode",
    "tc",
    "ack-min",
    "set-algebra",
    "kuratowski",
    "miracle",
)


@dataclass(frozen=True)
class NativeProcedure:
    """A named composition of whitelisted OTM-effective primitives."""

    name: str
    arity: int
    func: Callable
    uses: Tuple[str, ...]

    def __post_init__(self):
        unknown = [u for u in self.uses if u not in PRIMITIVES]
        if unknown:
            raise ValueError(f"{self.name} uses non-whitelisted {unknown}")

    def __call__(self, *args):
        return self.func(*args)


Stage = Union[NativeProcedure, Program]


@dataclass(frozen=True)
class ReductionWitness:
    name: str
    kind: str  # "oW" | "soW" | "OTM"
    source: str
    target: str
    pre: Optional[Stage] = None
    post: Optional[Stage] = None
    otm: Optional[Stage] = None

    def __post_init__(self):
        if self.kind not in ("oW", "soW", "OTM"):
            raise ValueError(f"unknown witness kind {self.kind}")
        if self.kind == "OTM":
            if self.otm is None:
                raise ValueError("OTM witnesses need their procedure")
        else:
            if self.pre is None or self.post is None:
                raise ValueError(f"{self.kind} witnesses need pre and post stages")


# -- stage execution ---------------------------------------------------------------


def _run_program_on_set(
    program: Program, value: HfSet, budget: RunBudget
) -> HfSet:
    outcome = machine.run(program, code_to_tape(encode(value)), budget)
    if outcome.kind != "halted":
        raise WitnessExecutionError(
            f"program did not halt ({outcome.kind}: "
            f"{getattr(outcome, 'reason', 'divergent')})"
        )
    out_tape = outcome.final.tapes[program.tape_index("out")]
    try:
        return decode(tape_to_code(out_tape))
    except InvalidCode as exc:
        raise WitnessExecutionError(f"program output is not a set code: {exc}")


class _StageRunner:
    """Executes stages, memoizing program runs (they are pure in their input)."""

    def __init__(self, budget: RunBudget):
        self.budget = budget
        self._memo: Dict[Tuple[int, HfSet], HfSet] = {}

    def apply(self, stage: Stage, value: HfSet) -> HfSet:
        if isinstance(stage, NativeProcedure):
            if stage.arity != 1:
                raise WitnessExecutionError(
                    f"{stage.name} expects {stage.arity} arguments"
                )
            return stage(value)
        key = (id(stage), value)
        if key not in self._memo:
            self._memo[key] = _run_program_on_set(stage, value, self.budget)
        return self._memo[key]

    def apply_pair(self, stage: Stage, answer: HfSet, instance: HfSet) -> HfSet:
        if isinstance(stage, NativeProcedure):
            if stage.arity == 2:
                return stage(answer, instance)
            return stage(answer)
        return self.apply(stage, kpair(answer, instance))


def apply_oW(
    witness: ReductionWitness,
    canon: Canonification,
    x: HfSet,
    budget: RunBudget = RunBudget(),
    *,
    runner: Optional[_StageRunner] = None,
) -> HfSet:
    """One round trip through a single-use witness.

    oW: post(F'(q), x) with q = pre(x); soW: post(F'(q)).  The canonification
    must be defined at q (OracleDomainError otherwise).
    """
    if witness.kind not in ("oW", "soW"):
        raise ValueError("apply_oW is for oW/soW witnesses")
    runner = runner or _StageRunner(budget)
    q = runner.apply(witness.pre, x)
    if not canon.defined_at(q):
        raise OracleDomainError(f"canonification undefined at {q}")
    answer = canon(q)
    if witness.kind == "soW":
        return runner.apply(witness.post, answer)
    return runner.apply_pair(witness.post, answer, x)


@dataclass
class MiracleStats:
    calls: int = 0  # oracle applications (valid codes)
    entries: int = 0  # arrivals in the miracle state / primitive invocations


def run_with_miracle(
    witness: ReductionWitness,
    oracle: Callable[[HfSet], HfSet],
    x: HfSet,
    budget: RunBudget = RunBudget(),
) -> Tuple[HfSet, MiracleStats]:
    """Execute an OTM-kind witness against an oracle function.

    The oracle is consulted through the miracle protocol: for native
    procedures it is passed as the miracle primitive; for programs, each
    arrival in the miracle state reads the miracle tape, and a valid set code
    is replaced by a code of its oracle image (anything else is left alone
    and execution simply continues).
    """
    if witness.kind != "OTM":
        raise ValueError("run_with_miracle is for OTM witnesses")
    stats = MiracleStats()
    cap = rank_cap()

    def call(s: HfSet) -> HfSet:
        stats.calls += 1
        y = oracle(s)
        if rank(y) > cap:
            raise MiracleRangeEscape(
                f"oracle image has rank {rank(y)} > cap {cap}"
            )
        return y

    stage = witness.otm
    if isinstance(stage, NativeProcedure):
        stats.entries = 0

        def miracle(s: HfSet) -> HfSet:
            stats.entries += 1
            return call(s)

        return stage(x, miracle), stats

    def hook(tape):
        stats.entries += 1
        try:
            code = tape_to_code(tape)
        except InvalidCode:
            return None
        ok, _ = is_valid(code)
        if not ok:
            return None
        s = decode(code)
        return code_to_tape(encode(call(s)))

    outcome = machine.run(
        stage, code_to_tape(encode(x)), budget, miracle_hook=hook
    )
    if outcome.kind != "halted":
        raise WitnessExecutionError(f"miracle program did not halt ({outcome.kind})")
    out_tape = outcome.final.tapes[stage.tape_index("out")]
    try:
        return decode(tape_to_code(out_tape)), stats
    except InvalidCode as exc:
        raise WitnessExecutionError(f"miracle program output invalid: {exc}")


# -- verification -------------------------------------------------------------------


@dataclass
class CaseFailure:
    instance: HfSet
    canonification: str
    reason: str

    def to_json(self):
        from .hfsets import format_set

        return {
            "instance": format_set(self.instance),
            "canonification": self.canonification,
            "reason": self.reason,
        }


@dataclass
class VerificationReport:
    witness: str
    kind: str
    source: str
    target: str
    universe_size: int
    instance_count: int
    mode: str
    canonification_count: int
    product_size: int
    cases: int
    failures: List[CaseFailure] = field(default_factory=list)
    miracle_calls: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "witness": self.witness,
            "kind": self.kind,
            "source": self.source,
            "target": self.target,
            "universe": self.universe_size,
            "instances": self.instance_count,
            "mode": self.mode,
            "canonifications": self.canonification_count,
            "product_size": self.product_size,
            "cases": self.cases,
            "ok": self.ok,
            "failures": [f.to_json() for f in self.failures],
            "miracle_calls": self.miracle_calls,
        }

    def summary(self) -> str:
        status = "OK" if self.ok else f"FAIL ({len(self.failures)} counterexamples)"
        return (
            f"{self.witness}: {status} {self.mode} "
            f"({self.instance_count} instances x {self.canonification_count} "
            f"canonifications, {self.cases} cases)"
        )


class _NeedInstance(Exception):
    def __init__(self, instance):
        self.instance = instance


def _ack_sorted(values):
    out = list(values)

    class K:
        __slots__ = ("v",)

        def __init__(self, v):
            self.v = v

        def __lt__(self, other):
            return ack_compare(self.v, other.v) < 0

    out.sort(key=K)
    return out


def verify_reduction(
    witness: ReductionWitness,
    source: Relation,
    target: Relation,
    universe: Sequence[HfSet],
    cap: int = 10_000,
    seed: int = 0,
    budget: RunBudget = RunBudget(),
    sample_size: int = 100,
) -> VerificationReport:
    """Check the witness against every (or cap-sampled) canonification of the
    target over the instances the pre-stage actually produces.

    Execution errors are recorded as failures for their case.  The sweep is
    deterministic for a fixed (witness, universe, cap, seed).
    """
    instances = [x for x in universe if source.domain(x)]
    report = VerificationReport(
        witness=witness.name,
        kind=witness.kind,
        source=source.name,
        target=target.name,
        universe_size=len(universe),
        instance_count=len(instances),
        mode="exhaustive",
        canonification_count=0,
        product_size=0,
        cases=0,
    )
    if witness.kind in ("oW", "soW"):
        _verify_single_use(
            witness, source, target, instances, cap, seed, budget, report, sample_size
        )
    else:
        _verify_otm(
            witness, source, target, instances, cap, seed, budget, report, sample_size
        )
    return report


def _verify_single_use(
    witness, source, target, instances, cap, seed, budget, report, sample_size=100
):
    runner = _StageRunner(budget)
    pre_images = []
    for x in instances:
        try:
            pre_images.append(runner.apply(witness.pre, x))
        except Exception as exc:
            report.failures.append(CaseFailure(x, "-", f"pre stage failed: {exc}"))
            pre_images.append(None)
    targets = []
    seen = set()
    for q in pre_images:
        if q is not None and q not in seen:
            seen.add(q)
            targets.append(q)
    try:
        mode, canons, product = enumerate_canonifications(
            target, targets, cap, seed, sample_size
        )
    except EmptyWitnessSet as exc:
        report.mode = "aborted"
        report.failures.append(
            CaseFailure(exc.instance, "-", "target instance has no witness")
        )
        return
    report.mode = mode
    report.canonification_count = len(canons)
    report.product_size = product
    for canon in canons:
        for x, q in zip(instances, pre_images):
            if q is None:
                continue
            report.cases += 1
            try:
                y = apply_oW(witness, canon, x, budget, runner=runner)
            except Exception as exc:
                report.failures.append(CaseFailure(x, canon.label, str(exc)))
                continue
            if not source.holds(x, y):
                report.failures.append(
                    CaseFailure(x, canon.label, f"result {y} fails {source.name}")
                )


def _verify_otm(
    witness, source, target, instances, cap, seed, budget, report, sample_size=100
):
    """Adaptive sweep: oracle instances appear dynamically, so enumerate the
    tree of witness choices per run (full tree when it fits the cap)."""
    total_leaves = 0
    exhaustive = True
    for x in instances:
        leaves, exh = _otm_tree(witness, source, target, x, cap, budget, report)
        total_leaves += leaves
        exhaustive = exhaustive and exh
        if not exh:
            break
    if exhaustive:
        report.mode = "exhaustive"
        report.canonification_count = total_leaves
        report.product_size = total_leaves
        return
    # fall back to deterministic choice rules: extremal plus seeded samples
    report.mode = "sampled"
    report.failures.clear()
    report.cases = 0
    report.miracle_calls.clear()
    rules = _choice_rules(target, cap=sample_size, seed=seed)
    report.canonification_count = len(rules)
    report.product_size = -1
    for label, rule in rules:
        # off-domain oracle instances take the conventional empty value
        def oracle(s, _rule=rule):
            return _rule(s) if target.domain(s) else EMPTY

        for x in instances:
            report.cases += 1
            try:
                y, stats = run_with_miracle(witness, oracle, x, budget)
            except Exception as exc:
                report.failures.append(CaseFailure(x, label, str(exc)))
                continue
            _record_calls(report, x, stats)
            if not source.holds(x, y):
                report.failures.append(
                    CaseFailure(x, label, f"result {y} fails {source.name}")
                )


def _otm_tree(witness, source, target, x, cap, budget, report):
    """DFS over oracle-choice branches for one instance.  Returns
    (completed_leaf_count, stayed_exhaustive)."""
    stack: List[Dict[HfSet, HfSet]] = [{}]
    leaves = 0
    while stack:
        partial = dict(stack.pop())

        def oracle(s: HfSet) -> HfSet:
            if not target.domain(s):
                return EMPTY
            if s in partial:
                return partial[s]
            raise _NeedInstance(s)

        try:
            y, stats = run_with_miracle(witness, oracle, x, budget)
        except _NeedInstance as need:
            options = _ack_sorted(target.witness_set(need.instance))
            if not options:
                report.failures.append(
                    CaseFailure(x, "-", f"no witness for oracle instance {need.instance}")
                )
                leaves += 1
                continue
            if len(stack) + len(options) > cap:
                return leaves, False
            for opt in reversed(options):
                branch = dict(partial)
                branch[need.instance] = opt
                stack.append(branch)
            continue
        except Exception as exc:
            leaves += 1
            report.cases += 1
            report.failures.append(CaseFailure(x, _label(partial), str(exc)))
            continue
        leaves += 1
        report.cases += 1
        _record_calls(report, x, stats)
        if leaves > cap:
            return leaves, False
        if not source.holds(x, y):
            report.failures.append(
                CaseFailure(x, _label(partial), f"result {y} fails {source.name}")
            )
    return leaves, True


def _label(partial: Dict[HfSet, HfSet]) -> str:
    from .hfsets import format_set

    if not partial:
        return "(no oracle use)"
    return ",".join(
        f"{format_set(k)}->{format_set(v)}" for k, v in list(partial.items())[:4]
    )


def _record_calls(report: VerificationReport, x: HfSet, stats: MiracleStats):
    from .hfsets import format_set

    key = format_set(x)
    prev = report.miracle_calls.get(key)
    if prev is None or stats.calls > prev:
        report.miracle_calls[key] = stats.calls


def _choice_rules(target: Relation, cap: int, seed: int):
    """Deterministic oracle rules standing in for sampled canonifications."""

    def min_rule(s):
        return _ack_sorted(target.witness_set(s))[0]

    def max_rule(s):
        return _ack_sorted(target.witness_set(s))[-1]

    rules = [("rule:ack-min", min_rule), ("rule:ack-max", max_rule)]
    for i in range(cap):
        rng = random.Random(seed * 1_000_003 + i)

        def sample_rule(s, _rng=rng, _memo={}):
            if s not in _memo:
                _memo[s] = _rng.choice(_ack_sorted(target.witness_set(s)))
            return _memo[s]

        rules.append((f"rule:sample[{i}]", sample_rule))
    return rules


# -- the Pi2-provable search reduction ----------------------------------------------


def search_reduction_zfc_analog(
    statement: PrenexStatement,
    x: HfSet,
    wo_canon: Canonification,
    budget: int = 65_536,
) -> HfSet:
    """Reduce a (finitely witnessed) Pi2 statement to one well-ordering use:
    well-order the transitive closure, then search the canonical enumeration
    for the least witness of the matrix."""
    if len(statement.blocks) != 1:
        raise ValueError("the search reduction handles Pi2 statements")
    closure = tc(x)
    if not wo_canon.defined_at(closure):
        raise OracleDomainError(f"well-ordering oracle undefined at {closure}")
    order = wo_canon(closure)
    if decode_linear_order(order, closure) is None:
        raise WitnessExecutionError("oracle answer is not a well-order of tc(x)")
    from .hfsets import ack_enumerate

    xvar, yvar = statement.blocks[0]
    for k in range(budget):
        y = ack_enumerate(k)
        if eval_delta0(statement.matrix, {xvar: x, yvar: y}):
            return y
    raise Exhausted(budget)


# -- native procedure registry -------------------------------------------------------


def _recover_top(field_set: HfSet) -> HfSet:
    tops = [
        u for u in field_set.elements
        if not any(u in v for v in field_set.elements)
    ]
    if len(tops) != 1:
        raise WitnessExecutionError(f"no unique top in {field_set}")
    return tops[0]


def _order_field(w: HfSet) -> HfSet:
    parts: List[HfSet] = []
    for p in w.elements:
        ab = kpair_parts(p)
        if ab is None:
            raise WitnessExecutionError("order value is not a set of pairs")
        parts.extend(ab)
    return hf(parts)


def _ordered_field(w: HfSet) -> List[HfSet]:
    f = _order_field(w)
    ordered = decode_linear_order(w, f)
    if ordered is None:
        raise WitnessExecutionError("oracle answer is not a linear order")
    return ordered


def _least_in(ordered: List[HfSet], members: HfSet) -> HfSet:
    for e in ordered:
        if e in members:
            return e
    raise WitnessExecutionError("order does not reach the requested set")


def _pp_from_wo(w: HfSet) -> HfSet:
    if len(w) == 0:
        raise WitnessExecutionError("empty order cannot locate an element")
    ordered = _ordered_field(w)
    top = _recover_top(_order_field(w))
    return _least_in(ordered, top)


def _ac_from_wo(w: HfSet) -> HfSet:
    if len(w) == 0:
        return EMPTY  # the empty family's transversal
    ordered = _ordered_field(w)
    top = _recover_top(_order_field(w))
    return hf(_least_in(ordered, z) for z in top.elements)


def _acp_from_wo(w: HfSet) -> HfSet:
    if len(w) == 0:
        return EMPTY
    ordered = _ordered_field(w)
    top = _recover_top(_order_field(w))
    return hf(kpair(z, _least_in(ordered, z)) for z in top.elements)


def _mpp_from_wo(w: HfSet) -> HfSet:
    return singleton(_pp_from_wo(w))


def _zl_from_wo(w: HfSet) -> HfSet:
    ordered = _ordered_field(w)
    top = _recover_top(_order_field(w))
    decoded = decode_poset(top)
    if decoded is None:
        raise WitnessExecutionError("top element is not an encoded poset")
    f, pairs = decoded
    maxima = maximal_elements(f, pairs)
    for e in ordered:
        if any(e is m for m in maxima):
            return e
    raise WitnessExecutionError("no maximal element found in the order")


def _hmp_from_wo(w: HfSet) -> HfSet:
    ordered = _ordered_field(w)
    top = _recover_top(_order_field(w))
    decoded = decode_poset(top)
    if decoded is None:
        raise WitnessExecutionError("top element is not an encoded poset")
    f, pairs = decoded
    rel = {(id(a), id(b)) for a, b in pairs}
    chain: List[HfSet] = []
    for e in ordered:
        if e not in f:
            continue
        if all(
            (id(e), id(c)) in rel or (id(c), id(e)) in rel for c in chain
        ):
            chain.append(e)
    return hf(chain)


def _wo_from_pp_iterative(x: HfSet, miracle: Callable[[HfSet], HfSet]) -> HfSet:
    remaining = x
    picked: List[HfSet] = []
    while len(remaining) > 0:
        choice = miracle(remaining)
        if choice not in remaining:
            raise WitnessExecutionError(
                f"oracle picked {choice} outside {remaining}"
            )
        picked.append(choice)
        remaining = set_difference(remaining, singleton(choice))
    return encode_order(picked)


def _pp_from_wo_otm(x: HfSet, miracle: Callable[[HfSet], HfSet]) -> HfSet:
    order = miracle(x)
    ordered = decode_linear_order(order, x)
    if ordered is None:
        raise WitnessExecutionError("oracle answer is not a well-order of x")
    return ordered[0]


def _maximal_elements_stage(c: HfSet) -> HfSet:
    decoded = decode_poset(c)
    if decoded is None:
        raise WitnessExecutionError(f"not an encoded poset: {c}")
    return hf(maximal_elements(*decoded))


def _unique_element(y: HfSet) -> HfSet:
    if len(y) != 1:
        raise WitnessExecutionError(f"expected a singleton, got {y}")
    return y.elements[0]


def _untag_subset(y: HfSet) -> HfSet:
    out = []
    for p in y.elements:
        ab = kpair_parts(p)
        if ab is not None:
            out.append(ab[1])
    return hf(out)


def _kpair_range(y: HfSet) -> HfSet:
    out = []
    for p in y.elements:
        ab = kpair_parts(p)
        if ab is None:
            raise WitnessExecutionError("choice function value is not a pair set")
        out.append(ab[1])
    return hf(out)


def _disjointify(x: HfSet) -> HfSet:
    return hf(hf(kpair(z, e) for e in z.elements) for z in x.elements)


_PP2_CONSTANT = hf([EMPTY, singleton(EMPTY)])

NATIVE_REGISTRY: Dict[str, NativeProcedure] = {}


def _register(name: str, arity: int, func: Callable, uses: Tuple[str, ...]):
    proc = NativeProcedure(name=name, arity=arity, func=func, uses=uses)
    NATIVE_REGISTRY[name] = proc
    return proc

_register("identity", 1, lambda x: x, ("set-algebra",))
_register("const-empty", 1, lambda x: EMPTY, ("set-algebra",))
_register("pp2-instance", 1, lambda x: _PP2_CONSTANT, ("set-algebra",))
_register("singleton-family", 1, singleton, ("set-algebra",))
_register("discrete-poset", 1, lambda x: kpair(x, EMPTY), ("kuratowski",))
_register("maximal-elements", 1, _maximal_elements_stage, ("kuratowski", "set-algebra"))
_register("unique-element", 1, _unique_element, ("set-algebra",))
_register("tag-family", 1,
          lambda x: singleton(hf(kpair(x, z) for z in x.elements)),
          ("kuratowski", "set-algebra"))
_register("untag-subset", 1, _untag_subset, ("kuratowski", "set-algebra"))
_register("kpair-range", 1, _kpair_range, ("kuratowski", "set-algebra"))
_register("disjointify", 1, _disjointify, ("kuratowski", "set-algebra"))
_register("downclose", 1, lambda x: hf(list(tc(x).elements) + [x]), ("tc", "set-algebra"))
_register("pp-from-wo", 1, _pp_from_wo, ("kuratowski", "set-algebra", "ack-min"))
_register("mpp-from-wo", 1, _mpp_from_wo, ("kuratowski", "set-algebra"))
_register("ac-from-wo", 1, _ac_from_wo, ("kuratowski", "set-algebra"))
_register("acp-from-wo", 1, _acp_from_wo, ("kuratowski", "set-algebra"))
_register("zl-from-wo", 1, _zl_from_wo, ("kuratowski", "set-algebra"))
_register("hmp-from-wo", 1, _hmp_from_wo, ("kuratowski", "set-algebra"))
_register("wo-from-pp-iterative", 2, _wo_from_pp_iterative,
          ("miracle", "set-algebra", "kuratowski"))
_register("pp-from-wo-otm", 2, _pp_from_wo_otm, ("miracle", "kuratowski", "set-algebra"))


def builtin_witnesses() -> Dict[str, ReductionWitness]:
    """The shipped witnesses for the reducibility diagram's positive edges."""
    reg = NATIVE_REGISTRY

    def w(name, kind, source, target, pre=None, post=None, otm=None):
        return ReductionWitness(
            name=name,
            kind=kind,
            source=source,
            target=target,
            pre=reg[pre] if pre else None,
            post=reg[post] if post else None,
            otm=reg[otm] if otm else None,
        )

    catalog = [
        w("zero_le_pp2", "soW", "ZERO", "PP2", "pp2-instance", "const-empty"),
        w("pp2_le_ppfin", "soW", "PP2", "PPfin", "identity", "identity"),
        w("ppfin_le_pp", "soW", "PPfin", "PP", "identity", "identity"),
        w("pp_le_zl", "soW", "PP", "ZL", "discrete-poset", "identity"),
        w("zl_le_pp", "soW", "ZL", "PP", "maximal-elements", "identity"),
        w("pp_le_ac", "soW", "PP", "AC", "singleton-family", "unique-element"),
        w("pp_le_hmp", "soW", "PP", "HMP", "discrete-poset", "unique-element"),
        w("mpp_le_muc", "soW", "MPP", "MuC", "tag-family", "untag-subset"),
        w("muc_le_ac", "soW", "MuC", "AC", "identity", "identity"),
        w("ac_le_acprime", "soW", "AC", "ACprime", "identity", "kpair-range"),
        w("acprime_le_ac", "soW", "ACprime", "AC", "disjointify", "identity"),
        w("zero_le_wo", "soW", "ZERO", "WO", "downclose", "const-empty"),
        w("pp_le_wo", "soW", "PP", "WO", "downclose", "pp-from-wo"),
        w("pp2_le_wo", "soW", "PP2", "WO", "downclose", "pp-from-wo"),
        w("ppfin_le_wo", "soW", "PPfin", "WO", "downclose", "pp-from-wo"),
        w("mpp_le_wo", "soW", "MPP", "WO", "downclose", "mpp-from-wo"),
        w("muc_le_wo", "soW", "MuC", "WO", "downclose", "ac-from-wo"),
        w("ac_le_wo", "soW", "AC", "WO", "downclose", "ac-from-wo"),
        w("acprime_le_wo", "soW", "ACprime", "WO", "downclose", "acp-from-wo"),
        w("zl_le_wo", "soW", "ZL", "WO", "downclose", "zl-from-wo"),
        w("hmp_le_wo", "soW", "HMP", "WO", "downclose", "hmp-from-wo"),
        w("wo_otm_pp", "OTM", "WO", "PP", otm="wo-from-pp-iterative"),
        w("pp_otm_wo", "OTM", "PP", "WO", otm="pp-from-wo-otm"),
    ]
    return {wit.name: wit for wit in catalog}


# -- manifests ---------------------------------------------------------------------


def witness_path(filename: str) -> Path:
    """Path of a shipped witness data file."""
    return Path(__file__).parent / "witnesses" / filename


def _resolve_stage(spec: Optional[str], base: Path) -> Optional[Stage]:
    if spec is None:
        return None
    if spec.startswith("native:"):
        name = spec[len("native:") :]
        if name not in NATIVE_REGISTRY:
            raise ValueError(f"unknown native procedure {name!r}")
        return NATIVE_REGISTRY[name]
    if spec.startswith("file:"):
        from .asm import load_program

        return load_program(base / spec[len("file:") :])
    raise ValueError(f"stage spec must be native:NAME or file:PATH, got {spec!r}")


def load_witness_manifest(path) -> ReductionWitness:
    """Witness manifest JSON: {name, kind, source_relation, target_relation,
    pre, post, otm} with stages as native:NAME or file:RELATIVE.otm."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    base = path.parent
    return ReductionWitness(
        name=data.get("name", path.stem),
        kind=data["kind"],
        source=data["source_relation"],
        target=data["target_relation"],
        pre=_resolve_stage(data.get("pre"), base),
        post=_resolve_stage(data.get("post"), base),
        otm=_resolve_stage(data.get("otm"), base),
    )
