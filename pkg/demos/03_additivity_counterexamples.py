"""
Where additivity breaks
=======================

An operator is additive when closing a union is the same as closing the
parts. The pull-down operators are additive; the operators that build
new groups out of several members are not, and the counterexample is
always the same: mix C2 with C3 and a product-like construction reaches
C6, which neither side can see alone.
"""
from __future__ import annotations

from grouplat import build_universe, check_additive, parse_operator

u = build_universe(12)

# All eight pull-down and extension operators distribute over unions.
for text in ("Id", "S", "Q", "Sn", "EPhi", "Ep(2)", "CTop"):
    verdict = check_additive(parse_operator(text), u, trials=120, seed=0)
    print(f"{text:>6} additive: {verdict.additive}")

# The three constructive operators do not, and the checker surfaces the
# canonical witness deterministically before trying random pairs.
for text in ("R0", "N0", "D0"):
    verdict = check_additive(parse_operator(text), u, trials=120, seed=0)
    a, b, g = verdict.witness
    print(f"{text:>6} additive: {verdict.additive}  witness: {g} in op({a} + {b}) only")

# The same break propagates to the formation closure Q v R0: close
# {1, C2} and {1, C3} separately and C6 appears in neither, but close
# the union and the subdirect product C2 x C3 = C6 arrives.
verdict = check_additive(parse_operator("Q v R0"), u, trials=120, seed=0)
print("formation closure additive:", verdict.additive, "witness:", verdict.witness)
