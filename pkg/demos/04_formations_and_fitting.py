"""
Formations, residuals, and the class product
============================================

A formation is a class closed under quotients and subdirect products.
Each formation assigns every group a residual, the smallest normal
subgroup with quotient in the class, and formations multiply through
these residuals.
"""
from __future__ import annotations

from grouplat import (
    build_universe,
    class_from_text,
    fitting_closure,
    formation_closure,
    gaschutz_product,
    residual,
    verify_formation,
)

u = build_universe(12)
abelian = class_from_text("abelian", u)

# The abelian residual is the derived subgroup. For S3 that is the
# rotation subgroup C3, with abelian quotient C2.
w = residual(abelian, u.name_index["S3"])
print("S3 abelian residual:", u.name(w.residual_id), "quotient:", u.name(w.quotient_id))
w = residual(abelian, u.name_index["A4"])
print("A4 abelian residual:", u.name(w.residual_id))

# verify_formation checks the two closure properties by machine.
spec = verify_formation(abelian)
print("abelian is a formation:", spec.is_formation)
bad = verify_formation(class_from_text("{1, C4}", u))
print("{1, C4} is a formation:", bad.is_formation)

# The product of two formations collects the groups whose inner
# residual lands in the outer class. Abelian-by-abelian covers every
# group of order at most 12: all of them are metabelian.
p2 = verify_formation(class_from_text("p-group(2)", u))
p3 = verify_formation(class_from_text("p-group(3)", u))
print("abelian o abelian size:", len(gaschutz_product(spec, spec)))
print("2-groups o 3-groups:", gaschutz_product(p2, p3).render())

# Arbitrary classes generate a least formation and a least Fitting
# class. Starting from C2 alone, the formation closure collects the
# elementary abelian 2-groups, while the Fitting closure builds up all
# 2-groups it can generate by subnormal members (C8 stays out: its
# proper subnormal subgroups generate only C4).
print("formation closure of {C2}:", formation_closure(class_from_text("{C2}", u)).render())
print("fitting closure of {C2}:", fitting_closure(class_from_text("{C2}", u)).render())
