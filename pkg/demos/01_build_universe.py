"""
Building and saving a group catalog
===================================

A universe is a catalog of all isomorphism classes of groups up to a
bound, each carrying its resolved subgroup, quotient, and subnormal
structure. Everything else in the library works over these catalogs.
"""
from __future__ import annotations

from grouplat import build_universe, catalog_counts, load_catalog, save_catalog

# Build the catalog of every group of order at most 12. Construction
# enumerates candidate tables, canonicalizes them, and resolves each
# entry's subgroups and quotients back to catalog ids.
u = build_universe(12)
print(f"catalog holds {len(u.entries)} classes up to order {u.max_order}")

# The per-order counts reproduce the classical tally: five groups of
# order 8, five of order 12, one of every prime order.
for order, count in sorted(catalog_counts(u).items()):
    print(f"  order {order:>2}: {count}")

# Each entry knows its own structure. Q8 is the smallest group whose
# subgroup family and quotient family genuinely differ.
q8 = u.name_index["Q8"]
st = u.structure(q8)
print("Q8 subgroups:", ", ".join(sorted(u.name(i) for i in st.subgroup_ids)))
print("Q8 quotients:", ", ".join(sorted(u.name(i) for i in st.quotient_ids)))

# Catalogs round-trip through a plain text format, so a build can be
# done once and shared.
save_catalog(u, "/tmp/u12.cat")
again = load_catalog("/tmp/u12.cat")
print("reloaded entries:", len(again.entries))
