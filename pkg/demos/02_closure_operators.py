"""
Closure operators on classes of groups
======================================

The ten primitive operators close a class of groups under some
structural reach: subgroups, quotients, subdirect products, and so on.
Expressions combine them with composition, meet, and join, and every
combination can be checked against the closure axioms by machine.
"""
from __future__ import annotations

from grouplat import apply_text, build_universe, check_axioms, class_from_text, parse_operator

u = build_universe(12)

# A class is written either as an explicit list or as a predicate.
# Nonempty classes always contain the trivial group.
x = class_from_text("{C6}", u)
print("start:", x.render())

# S pulls in subgroups, Q pulls in quotients.
print("S X =", apply_text("S", x).render())
print("Q X =", apply_text("Q", x).render())

# Operators compose left to right with '.', so Q . R0 applies R0 first.
# The join 'v' iterates both sides to a common fixpoint, and here it is
# strictly bigger than either one-sided composition.
composed = apply_text("Q . R0", x)
joined = apply_text("Q v R0", x)
print("Q.R0 X =", composed.render())
print("QvR0 X =", joined.render())
print("composition strictly below join:", composed.is_subset(joined) and composed.ids != joined.ids)

# The axioms (extensive, monotone, idempotent) can be checked
# exhaustively over a small catalog. Every primitive passes; a
# composition like Q . R0 fails idempotence, which is exactly why the
# join is needed.
report = check_axioms(parse_operator("Q . R0"), u, trials=60, seed=1)
print("Q . R0 idempotent:", report.idempotent)
report = check_axioms(parse_operator("Q v R0"), u, trials=60, seed=1)
print("Q v R0 is a closure operator:", report.is_closure)
