"""Command-line front end.

Subcommands: run, check, encode, decode, eval, canon, list-universe.
Exit codes: 0 success, 1 verification counterexample, 2 usage/parse error,
3 execution error.  OTMLAB_RANK_CAP overrides the default rank cap (6).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codes, hfsets, logic, machine, ordinals, relations, reductions
from .asm import load_program
from .errors import (
    ConflictingRules,
    NotDelta0,
    OtmLabError,
    ParseError,
    TotalityError,
    UnboundVariable,
)
from .formulas import PrenexStatement, parse_formula

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_EXECUTION = 3

_USAGE_ERRORS = (ParseError, TotalityError, ConflictingRules, NotDelta0, UnboundVariable)


def _read_arg_text(value: str) -> str:
    """Literal text, or the contents of a file when prefixed with '@'."""
    if value.startswith("@"):
        return Path(value[1:]).read_text(encoding="utf-8")
    return value


def _parse_budget(text: str) -> machine.RunBudget:
    try:
        steps, jumps = (int(part) for part in text.split(","))
        return machine.RunBudget(steps, jumps)
    except (ValueError, TypeError):
        raise ValueError(f"budget must be STEPS,JUMPS; got {text!r}") from None


def _universe(spec: str):
    if not spec.startswith("rank:"):
        raise ValueError(f"universe must be rank:N, got {spec!r}")
    r = int(spec[len("rank:") :])
    return hfsets.universe_rank_le(r)


def _emit(data, as_json: bool, human: str):
    if as_json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(human)


# -- subcommands --------------------------------------------------------------------


def cmd_run(args) -> int:
    program = load_program(args.program)
    if args.input is not None:
        value = hfsets.parse_set_literal(_read_arg_text(args.input))
        input_tape = codes.code_to_tape(codes.encode(value))
    elif args.input_code is not None:
        code = codes.code_from_json(_read_arg_text(args.input_code))
        input_tape = codes.code_to_tape(code)
    else:
        from .tapes import Tape

        input_tape = Tape()
    budget = _parse_budget(args.budget)

    trace_fh = None
    trace_cb = None
    if args.trace:
        trace_fh = open(args.trace, "w", encoding="utf-8")

        def trace_cb(record):
            trace_fh.write(json.dumps(record) + "\n")

    try:
        outcome = machine.run(
            program,
            input_tape,
            budget,
            trace=trace_cb,
            trace_steps=args.trace_steps,
        )
    finally:
        if trace_fh:
            trace_fh.close()

    def tape_lines(config):
        return {
            role: list(t.interval_strings())
            for role, t in zip(program.tape_roles, config.tapes)
        }

    if outcome.kind == "halted":
        cfg = outcome.final
        data = {
            "outcome": "halted",
            "time": ordinals.format_ordinal(cfg.time),
            "state": program.state_name(cfg.state),
            "heads": [ordinals.format_ordinal(h) for h in cfg.heads],
            "tapes": tape_lines(cfg),
        }
        human = f"HALTED time={data['time']}"
        for role, ivs in data["tapes"].items():
            human += f"\n  {role}: {' '.join(ivs) if ivs else '(all 0)'}"
        _emit(data, args.json, human)
        return EXIT_OK
    if outcome.kind == "diverges":
        cfg = outcome.limit_behavior
        data = {
            "outcome": "diverges",
            "time": ordinals.format_ordinal(cfg.time),
            "state": program.state_name(cfg.state),
            "tapes": tape_lines(cfg),
        }
        _emit(data, args.json, f"DIVERGES (provable loop) at time={data['time']}")
        return EXIT_OK
    data = {
        "outcome": "unresolved",
        "reason": outcome.reason,
        "time": ordinals.format_ordinal(outcome.last.time),
    }
    _emit(data, args.json, f"UNRESOLVED ({outcome.reason}) at time={data['time']}")
    return EXIT_EXECUTION


def _load_witness(spec: str) -> reductions.ReductionWitness:
    builtin = reductions.builtin_witnesses()
    if spec in builtin:
        return builtin[spec]
    path = Path(spec)
    if path.exists():
        return reductions.load_witness_manifest(path)
    shipped = reductions.witness_path(spec)
    if shipped.exists():
        return reductions.load_witness_manifest(shipped)
    raise ValueError(
        f"unknown witness {spec!r}: not a builtin name, file, or shipped manifest"
    )


def cmd_check(args) -> int:
    if args.all:
        names = sorted(reductions.builtin_witnesses())
    else:
        names = [args.witness]
        if args.witness is None:
            print("check: provide a witness (name or manifest) or --all", file=sys.stderr)
            return EXIT_USAGE
    universe = _universe(args.universe)
    budget = _parse_budget(args.budget)
    reports = []
    for name in names:
        witness = _load_witness(name)
        source = relations.PRINCIPLES[witness.source]
        target = relations.PRINCIPLES[witness.target]
        report = reductions.verify_reduction(
            witness,
            source,
            target,
            universe,
            cap=args.cap,
            seed=args.seed if args.seed is not None else 0,
            budget=budget,
            sample_size=args.samples,
        )
        if report.mode == "sampled" and args.seed is None:
            print(
                f"check: {witness.name} needs sampling (product {report.product_size}); "
                "pass --seed for reproducibility",
                file=sys.stderr,
            )
            return EXIT_USAGE
        reports.append(report)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:10]:
                print(f"  counterexample: x={hfsets.format_set(f.instance)} "
                      f"F'={f.canonification}: {f.reason}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_encode(args) -> int:
    value = hfsets.parse_set_literal(_read_arg_text(args.set))
    code = codes.encode(value)
    print(codes.code_to_json(code))
    return EXIT_OK


def cmd_decode(args) -> int:
    code = codes.code_from_json(_read_arg_text(args.code))
    value = codes.decode(code)
    _emit(
        {"set": hfsets.format_set(value)}, args.json, hfsets.format_set(value)
    )
    return EXIT_OK


def cmd_eval(args) -> int:
    formula = parse_formula(_read_arg_text(args.formula))
    if isinstance(formula, PrenexStatement):
        if not args.carrier:
            print("eval: prenex statements need --carrier", file=sys.stderr)
            return EXIT_USAGE
        members = [
            hfsets.parse_set_literal(part.strip())
            for part in _read_arg_text(args.carrier).split(";")
            if part.strip()
        ]
        result = logic.eval_prenex(formula, logic.Carrier(tuple(members)))
    else:
        env = {}
        for binding in args.env or ():
            name, _, literal = binding.partition("=")
            if not _:
                print(f"eval: bad --env {binding!r} (want VAR=SET)", file=sys.stderr)
                return EXIT_USAGE
            env[name.strip()] = hfsets.parse_set_literal(literal.strip())
        result = logic.eval_delta0(formula, env)
    _emit({"value": result}, args.json, "true" if result else "false")
    return EXIT_OK


def _canonification_from_args(args, relation, universe):
    if args.map:
        entries = json.loads(_read_arg_text(args.map))
        mapping = {
            hfsets.parse_set_literal(k): hfsets.parse_set_literal(v)
            for k, v in entries
        }
        return relations.Canonification(mapping, label="map-file")
    rule = args.rule or "ack-min"
    mapping = {}
    for x in universe:
        if relation.domain(x):
            ws = relations._ack_sorted(relation.witness_set(x))
            if ws:
                mapping[x] = ws[0] if rule == "ack-min" else ws[-1]
    return relations.Canonification(mapping, label=f"rule:{rule}")


def cmd_canon(args) -> int:
    relation = relations.PRINCIPLES[args.relation]
    universe = _universe(args.universe)
    canon = _canonification_from_args(args, relation, universe)
    ok, counterexample = relations.check_canonification(canon, relation, universe)
    data = {
        "relation": relation.name,
        "ok": ok,
        "counterexample": None if ok else hfsets.format_set(counterexample),
    }
    human = (
        f"OK: canonification of {relation.name} over {len(universe)} instances"
        if ok
        else f"FAIL at x={data['counterexample']}"
    )
    _emit(data, args.json, human)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def cmd_list_universe(args) -> int:
    for x in _universe(args.universe):
        print(hfsets.format_set(x))
    return EXIT_OK


# -- argument plumbing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="otmlab",
        description="Ordinal Turing Machine lab: run transfinite programs, "
        "code sets, evaluate bounded truth, verify choice-principle reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="assemble and execute a program")
    p_run.add_argument("program", help=".otm program file")
    p_run.add_argument("--input", help="input as a set literal (encoded onto the input tape)")
    p_run.add_argument("--input-code", help="input as SetCode JSON (text or @file)")
    p_run.add_argument("--budget", default="100000,64", help="STEPS,JUMPS (default 100000,64)")
    p_run.add_argument("--trace", help="write a JSONL trace to this path")
    p_run.add_argument("--trace-steps", action="store_true",
                       help="trace every successor step, not just limit events")
    p_run.add_argument("--json", action="store_true")
    p_run.set_defaults(func=cmd_run)

    p_check = sub.add_parser("check", help="verify a reduction witness")
    p_check.add_argument("witness", nargs="?",
                         help="builtin witness name, manifest path, or shipped manifest")
    p_check.add_argument("--all", action="store_true", help="verify every builtin witness")
    p_check.add_argument("--universe", default="rank:3", help="rank:N (default rank:3)")
    p_check.add_argument("--cap", type=int, default=30_000,
                         help="full canonification product up to this size (default 30000)")
    p_check.add_argument("--samples", type=int, default=100,
                         help="sample count past the cap (default 100)")
    p_check.add_argument("--seed", type=int, default=None,
                         help="sampling seed (required when sampling occurs)")
    p_check.add_argument("--budget", default="100000,64")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_enc = sub.add_parser("encode", help="encode a set literal as a membership code")
    p_enc.add_argument("set", help="set literal, e.g. {{},{{}}} (or @file)")
    p_enc.set_defaults(func=cmd_encode)

    p_dec = sub.add_parser("decode", help="decode a membership code")
    p_dec.add_argument("code", help="SetCode JSON (text or @file)")
    p_dec.add_argument("--json", action="store_true")
    p_dec.set_defaults(func=cmd_decode)

    p_eval = sub.add_parser("eval", help="evaluate a formula")
    p_eval.add_argument("formula", help="formula text (or @file)")
    p_eval.add_argument("--env", action="append", help="VAR=SET-LITERAL (repeatable)")
    p_eval.add_argument("--carrier", help="semicolon-separated set literals (prenex)")
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(func=cmd_eval)

    p_canon = sub.add_parser("canon", help="check a canonification against a relation")
    p_canon.add_argument("relation", choices=sorted(relations.PRINCIPLES))
    p_canon.add_argument("--map", help="JSON list of [instance, value] set-literal pairs")
    p_canon.add_argument("--rule", choices=("ack-min", "ack-max"),
                         help="use the Ackermann-least/-greatest witness everywhere")
    p_canon.add_argument("--universe", default="rank:3")
    p_canon.add_argument("--json", action="store_true")
    p_canon.set_defaults(func=cmd_canon)

    p_list = sub.add_parser("list-universe", help="list the sets of a bounded-rank universe")
    p_list.add_argument("universe", help="rank:N")
    p_list.set_defaults(func=cmd_list_universe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"otmlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OtmLabError, OSError, ValueError, KeyError) as exc:
        print(f"otmlab: {exc}", file=sys.stderr)
        return EXIT_EXECUTION


if __name__ == "__main__":
    sys.exit(main())
