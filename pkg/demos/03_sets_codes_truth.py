"""Hereditarily finite sets, membership codes on tapes, and bounded truth.

Run:  python3 demos/03_sets_codes_truth.py
"""

from otmlab import (
    Carrier,
    EMPTY,
    ack_enumerate,
    ack_index,
    code_to_json,
    code_to_tape,
    decode,
    encode,
    eval_delta0,
    eval_prenex,
    format_set,
    parse_formula,
    parse_set_literal,
    search_witness,
    singleton,
    tape_to_code,
    tc,
    universe_rank_le,
)

print("== The Ackermann enumeration ==")
for n in range(8):
    print(f"  {n}: {format_set(ack_enumerate(n))}")
x = parse_set_literal("{{},{{}}}")
print(f"index of {format_set(x)} = {ack_index(x)}")

print()
print("== Coding sets as sets of ordinals ==")
print("a code lists the pair p(i,j) whenever the i-th element of the")
print("transitive closure belongs to the j-th (sorted by Ackermann index).")
code = encode(x)
print(f"encode({format_set(x)}) = {code_to_json(code)}")
tape = code_to_tape(code)
print(f"as a tape: {tape}")
print(f"read back: {format_set(decode(tape_to_code(tape)))}")
print(f"tc({format_set(x)}) = {format_set(tc(x))}")

print()
print("== Bounded truth ==")
formula = parse_formula("all z in x (z in y)")
env = {"x": singleton(EMPTY), "y": x}
print(f"[ all z in x (z in y) ] with x={format_set(env['x'])}, "
      f"y={format_set(env['y'])}: {eval_delta0(formula, env)}")

print()
print("== Enumerate-and-check witness search ==")
psi = parse_formula("a in b")
for a in universe_rank_le(1):
    b = search_witness(psi, a, budget=65536)
    print(f"  least b with {format_set(a)} in b:  {format_set(b)}")

print()
print("== Alternating quantifiers over a finite carrier ==")
carrier = Carrier(tuple(universe_rank_le(2)))
for text in ["ALL x EX y (y = x)", "ALL x EX y (x in y)"]:
    print(f"  {text} over rank<=2: {eval_prenex(parse_formula(text), carrier)}")
