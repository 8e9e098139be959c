"""Assembly syntax for machine programs (`.otm` files, UTF-8, `#` comments).

    tapes in work out;            # ordered roles: in, work, out, miracle, oracle
    state q0;                     # first declared state is the start state
    state done halt;              # attributes: halt, miracle
    rule q0 work=0 -> write work=1 move work=R goto q0;
    rule q0 work=1 -> move work=R goto q0;

A rule constrains any subset of the tapes; omitted reads match both bits,
omitted writes keep the bit that was read, omitted moves stay.  Rules expand
into explicit transitions; two rules covering the same (state, read-vector)
conflict, and missing coverage is a totality error naming the gaps.  States
are numbered in declaration order, which is also the order the limit rule
minimizes over.

The printer emits the fully explicit canonical form, and parse(print(p))
reproduces p exactly.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Tuple

from .errors import ConflictingRules, ParseError, SourceSpan, TotalityError
from .programs import MOVES, ROLE_ORDER, Program, Transition

__all__ = ["parse_program", "format_program", "load_program"]

_ROLE_ALIASES = {"input": "in", "output": "out"}

_KEYWORDS = ("tapes", "state", "rule", "halt", "miracle", "write", "move", "goto")


class _Token:
    __slots__ = ("kind", "text", "span")

    def __init__(self, kind, text, span):
        self.kind = kind
        self.text = text
        self.span = span


def _scan(text: str) -> List[_Token]:
    tokens = []
    line, col, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if text.startswith("->", i):
            tokens.append(_Token("punct", "->", SourceSpan(line, col, 2)))
            i += 2
            col += 2
            continue
        if ch in ";,=":
            tokens.append(_Token("punct", ch, SourceSpan(line, col, 1)))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(
                _Token("number", text[start:i], SourceSpan(line, col, i - start))
            )
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            word = text[start:i]
            tokens.append(_Token("ident", word, SourceSpan(line, col, len(word))))
            col += len(word)
            continue
        raise ParseError(SourceSpan(line, col, 1), "a token", ch)
    tokens.append(_Token("eof", "", SourceSpan(line, col, 1)))
    return tokens


class _Rule:
    __slots__ = ("state", "reads", "writes", "moves", "goto", "span")

    def __init__(self, state, reads, writes, moves, goto, span):
        self.state = state
        self.reads = reads  # role -> bit (partial)
        self.writes = writes
        self.moves = moves
        self.goto = goto
        self.span = span


class _ProgramParser:
    def __init__(self, text: str):
        self.tokens = _scan(text)
        self.pos = 0
        self.roles: Optional[Tuple[str, ...]] = None
        self.state_names: List[str] = []
        self.state_ids: Dict[str, int] = {}
        self.halt_states = set()
        self.miracle_state: Optional[int] = None
        self.rules: List[_Rule] = []

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, expected, tok=None):
        tok = tok or self.peek()
        raise ParseError(tok.span, expected, tok.text or "end of input")

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok.text != text:
            self.error(f"'{text}'")
        return self.next()

    def expect_ident(self, what="a name") -> _Token:
        tok = self.peek()
        if tok.kind != "ident":
            self.error(what)
        return self.next()

    def parse(self) -> Program:
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.text == "tapes":
                self.parse_tapes()
            elif tok.text == "state":
                self.parse_state()
            elif tok.text == "rule":
                self.parse_rule()
            else:
                self.error("'tapes', 'state', or 'rule'")
        return self.build()

    def parse_tapes(self):
        tok = self.next()
        if self.roles is not None:
            self.error("a single 'tapes' declaration", tok)
        roles = []
        while self.peek().text != ";":
            r = self.expect_ident("a tape role")
            role = _ROLE_ALIASES.get(r.text, r.text)
            if role not in ROLE_ORDER:
                self.error(f"a tape role (one of {', '.join(ROLE_ORDER)})", r)
            if role in roles:
                self.error("a role not declared twice", r)
            roles.append(role)
        semi = self.expect(";")
        for required in ("in", "work", "out"):
            if required not in roles:
                raise ParseError(semi.span, f"tape role '{required}'", ";")
        self.roles = tuple(roles)

    def parse_state(self):
        self.next()
        name = self.expect_ident("a state name")
        if name.text in self.state_ids:
            self.error("a fresh state name", name)
        sid = len(self.state_names)
        self.state_names.append(name.text)
        self.state_ids[name.text] = sid
        while self.peek().text != ";":
            attr = self.expect_ident("'halt' or 'miracle'")
            if attr.text == "halt":
                self.halt_states.add(sid)
            elif attr.text == "miracle":
                if self.miracle_state is not None:
                    self.error("a single miracle state", attr)
                self.miracle_state = sid
            else:
                self.error("'halt' or 'miracle'", attr)
        self.expect(";")

    def _role_token(self) -> str:
        tok = self.expect_ident("a tape role")
        role = _ROLE_ALIASES.get(tok.text, tok.text)
        if self.roles is None or role not in self.roles:
            self.error("a declared tape role", tok)
        return role

    def _parse_assignments(self, kind: str) -> Dict[str, str]:
        """role=VALUE, role=VALUE, ... (at least one)."""
        out: Dict[str, str] = {}
        while True:
            start = self.peek()
            role = self._role_token()
            if role in out:
                self.error("each role at most once", start)
            self.expect("=")
            val = self.next()
            if kind == "bit":
                if val.text not in ("0", "1"):
                    self.error("bit 0 or 1", val)
            else:
                if val.text not in MOVES:
                    self.error("a move L, R, or S", val)
            out[role] = val.text
            if self.peek().text == ",":
                self.next()
                continue
            return out

    def parse_rule(self):
        span = self.next().span
        state_tok = self.expect_ident("a state name")
        if state_tok.text not in self.state_ids:
            self.error("a declared state", state_tok)
        state = self.state_ids[state_tok.text]
        if state in self.halt_states:
            self.error("a non-halt state (halt states have no rules)", state_tok)
        reads: Dict[str, str] = {}
        if self.peek().text != "->":
            reads = self._parse_assignments("bit")
        self.expect("->")
        writes: Dict[str, str] = {}
        moves: Dict[str, str] = {}
        if self.peek().text == "write":
            self.next()
            writes = self._parse_assignments("bit")
        if self.peek().text == "move":
            self.next()
            moves = self._parse_assignments("move")
        self.expect("goto")
        target = self.expect_ident("a state name")
        if target.text not in self.state_ids:
            self.error("a declared state", target)
        self.expect(";")
        self.rules.append(
            _Rule(state, reads, writes, moves, self.state_ids[target.text], span)
        )

    def build(self) -> Program:
        if self.roles is None:
            raise ParseError(
                SourceSpan(1, 1, 1), "a 'tapes' declaration", "end of input"
            )
        if not self.state_names:
            raise ParseError(SourceSpan(1, 1, 1), "a 'state' declaration", "end of input")
        transitions: Dict[Tuple[int, Tuple[int, ...]], Transition] = {}
        owner: Dict[Tuple[int, Tuple[int, ...]], _Rule] = {}
        for rule in self.rules:
            free = [r for r in self.roles if r not in rule.reads]
            for combo in itertools.product((0, 1), repeat=len(free)):
                reads = tuple(
                    int(rule.reads[r]) if r in rule.reads else combo[free.index(r)]
                    for r in self.roles
                )
                key = (rule.state, reads)
                if key in transitions:
                    other = owner[key]
                    raise ConflictingRules(
                        f"{rule.span.line}:{rule.span.column}: rule overlaps the "
                        f"rule at {other.span.line}:{other.span.column} on state "
                        f"{self.state_names[rule.state]}, reads {reads}"
                    )
                writes = tuple(
                    int(rule.writes[r]) if r in rule.writes else reads[i]
                    for i, r in enumerate(self.roles)
                )
                moves = tuple(rule.moves.get(r, "S") for r in self.roles)
                transitions[key] = Transition(writes, moves, rule.goto)
                owner[key] = rule
        return Program(
            state_names=tuple(self.state_names),
            tape_roles=self.roles,
            start_state=0,
            halt_states=frozenset(self.halt_states),
            transitions=transitions,
            miracle_state=self.miracle_state,
        )


def parse_program(text: str) -> Program:
    """Parse assembly text.  Raises ParseError, ConflictingRules, or
    TotalityError (naming every uncovered (state, read-vector))."""
    return _ProgramParser(text).parse()


def format_program(program: Program) -> str:
    """Canonical fully explicit form; parsing it reproduces the program."""
    lines = [f"tapes {' '.join(program.tape_roles)};"]
    for sid, name in enumerate(program.state_names):
        attrs = ""
        if sid in program.halt_states:
            attrs += " halt"
        if program.miracle_state == sid:
            attrs += " miracle"
        lines.append(f"state {name}{attrs};")
    roles = program.tape_roles
    for (state, reads), tr in sorted(program.transitions.items()):
        read_s = ", ".join(f"{r}={b}" for r, b in zip(roles, reads))
        write_s = ", ".join(f"{r}={b}" for r, b in zip(roles, tr.writes))
        move_s = ", ".join(f"{r}={m}" for r, m in zip(roles, tr.moves))
        lines.append(
            f"rule {program.state_names[state]} {read_s} -> "
            f"write {write_s} move {move_s} goto {program.state_names[tr.next_state]};"
        )
    return "\n".join(lines) + "\n"


def load_program(path) -> Program:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_program(fh.read())
