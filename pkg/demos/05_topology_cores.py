"""
Finite spaces over a catalog
============================

Ordering the catalog by embeddability gives a finite topological space
in which closure is the down-set. These spaces turn out to be
contractible: repeatedly removing beat points collapses each one to a
single group.
"""
from __future__ import annotations

from grouplat import (
    alexandrov_closure,
    build_preorder,
    build_universe,
    connected_components_bfs,
    homotopy_equivalent,
    operator_space_probe,
    stong_core,
    to_dot,
)

u = build_universe(12)

# Three specialization orders over the same point set.
subgroup = build_preorder(u, "subgroup")
subnormal = build_preorder(u, "subnormal")
quotient = build_preorder(u, "quotient")
print("points:", subgroup.n, "poset:", subgroup.is_antisymmetric)

# The topological closure of a point is its down-set: for D8 that is
# exactly its subgroup classes.
d8 = u.name_index["D8"]
closed = alexandrov_closure(subgroup, (d8,))
print("closure of {D8}:", ", ".join(sorted(u.name(i) for i in closed)))

# All three spaces are connected and collapse to a point, so they are
# homotopy equivalent to each other.
print("components:", connected_components_bfs(subgroup))
core = stong_core(subgroup)
print("core size:", core.size, "survivor:", core.core.names[0])
print("subgroup ~ quotient:", homotopy_equivalent(subgroup, quotient))
print("subgroup ~ subnormal:", homotopy_equivalent(subgroup, subnormal))

# The Frattini extension relation gives a much looser preorder whose
# components separate the catalog; the probe is stamped experimental
# because the relation depends on the truncation bound.
probe = operator_space_probe(u)
print("probe:", probe.stamp, "components:", probe.components)

# Hasse diagrams render to DOT for external layout tools.
dot = to_dot(stong_core(build_preorder(build_universe(8), "subgroup")).core, "core")
print(dot)
