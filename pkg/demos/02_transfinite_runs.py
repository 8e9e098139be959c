"""Machines running past omega: limit jumps, the head reset, provable loops.

Run:  python3 demos/02_transfinite_runs.py
"""

from otmlab import RunBudget, format_ordinal, parse_program, run

SWEEP_AND_HALT = """
# Write 1s rightward forever; the input tape's cell 0 is a limit detector.
# During the loop, state qa always reads flag 1, but the flag dips to 0 in
# between, so its value at time w is the inferior limit 0 and qa branches
# out of the loop exactly at the limit.
tapes in work out;
state qs;
state qa;
state qb;
state qc;
state qd;
state done halt;
rule qs -> write in=1 goto qa;
rule qa in=1 -> goto qb;
rule qa in=0 -> goto qd;
rule qb -> write in=0 goto qc;
rule qc -> write in=1, work=1 move work=R goto qa;
rule qd -> move work=L goto done;
"""

print("== A sweep to omega, then one step left ==")
program = parse_program(SWEEP_AND_HALT)
events = []
outcome = run(program, budget=RunBudget(2000, 2), trace=events.append)
final = outcome.final
print(f"outcome: {outcome.kind} at time {format_ordinal(final.time)}")
wi = program.tape_index("work")
print(f"work tape: {final.tapes[wi]}")
print(f"work head after moving left from w: {format_ordinal(final.heads[wi])}"
      "   (the head reset rule)")
print("trace events:")
for record in events:
    print(f"  {record['event']:<6} t={record['time']}"
          + (f" tapes={record['tapes']['work']}" if record["event"] == "limit" else ""))

print()
print("== The pure sweeper climbs the tower w, w*2, w^2, w^3, ... ==")
SWEEPER = """
tapes in work out;
state q0;
rule q0 -> write work=1 move work=R goto q0;
"""
sweeper = parse_program(SWEEPER)
events = []
outcome = run(sweeper, budget=RunBudget(1000, 5), trace=events.append)
for record in events:
    if record["event"] == "limit":
        print(f"  limit jump -> t={record['time']:<6} work={record['tapes']['work']}")
print(f"stopped: {outcome.kind} ({outcome.reason})")

print()
print("== Exact repetition is a proof of divergence ==")
TOGGLE = """
tapes in work out;
state q3;
state q5;
rule q3 -> goto q5;
rule q5 -> goto q3;
"""
outcome = run(parse_program(TOGGLE), budget=RunBudget(100, 3))
print(f"outcome: {outcome.kind}")
print(f"behaviour at the limit: state index {outcome.limit_behavior.state} "
      f"(the least state visited cofinally) at t={format_ordinal(outcome.limit_behavior.time)}")
