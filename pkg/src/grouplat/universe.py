"""Bounded catalogs of finite groups up to isomorphism.

A universe ``U_N`` holds one representative per isomorphism class for a
curated family of constructions, every group of order at most ``N``. The
catalog is provably complete through order 15 and documented as curated
(not exhaustive) beyond that; what the closure operators actually rely on
is that the catalog is closed under subgroups, quotients and bounded
direct products of its members, and lookups of a missing group abort
loudly rather than degrade silently.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundTooLarge,
    FormatError,
    NotInCatalog,
    VersionMismatch,
)
from .groups import (
    GroupPredicateFlags,
    GroupTable,
    alternating,
    cyclic,
    cyclic_semidirect,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    find_isomorphism,
    generalized_dihedral,
    isomorphic,
    special_linear_2_3,
    symmetric,
    trivial_group,
)

MAX_SUPPORTED_ORDER = 64

# (m, n, k, name): C_m semidirect C_n with the generator acting by x -> k*x.
# These extend coverage past order 15; every tuple is a valid action.
_SEMIDIRECT_SEEDS = (
    (8, 2, 3, "SD16"),
    (8, 2, 5, "M16"),
    (4, 4, 3, "C4:C4"),
    (5, 4, 2, "C5:C4"),
    (7, 3, 2, "C7:C3"),
    (3, 8, 2, "C3:C8"),
    (9, 3, 4, "C9:C3"),
    (16, 2, 7, "SD32"),
    (16, 2, 9, "M32"),
    (9, 4, 8, "C9:C4"),
    (13, 3, 3, "C13:C3"),
    (5, 8, 2, "C5:C8"),
    (7, 6, 3, "C7:C6"),
    (13, 4, 5, "C13:C4"),
    (9, 6, 2, "C9:C6"),
    (11, 5, 3, "C11:C5"),
    (15, 4, 2, "C15:C4"),
    (16, 4, 3, "C16:C4"),
)


@dataclass(frozen=True)
class UniverseEntry:
    iso_id: int
    name: str
    group: GroupTable
    flags: GroupPredicateFlags


@dataclass(frozen=True)
class _NormalInfo:
    members: tuple[int, ...]
    sub_id: int
    quot_id: int


@dataclass(frozen=True)
class _SubgroupInfo:
    members: tuple[int, ...]
    sub_id: int


@dataclass(frozen=True)
class EntryStructure:
    """Catalog-resolved structure of one entry.

    Ids are isomorphism ids into the owning universe; member tuples are
    element indices of the entry's own table. A sub_id or quot_id of -1
    marks a subgroup or quotient whose isomorphism class the curated
    catalog does not carry (possible above order 15); such classes can
    never belong to a class over the catalog, so the id sets skip them.
    """

    subgroup_ids: frozenset[int]
    subnormal_ids: frozenset[int]
    quotient_ids: frozenset[int]
    normals: tuple[_NormalInfo, ...]
    subnormals: tuple[_SubgroupInfo, ...]
    frattini_members: tuple[int, ...]
    frattini_quotient_ids: frozenset[int]

    @property
    def unresolved_count(self) -> int:
        miss = sum(1 for x in self.normals if x.sub_id < 0 or x.quot_id < 0)
        return miss + sum(1 for x in self.subnormals if x.sub_id < 0)


class Universe:
    def __init__(self, max_order: int, entries: tuple[UniverseEntry, ...]):
        self.max_order = max_order
        self.entries = entries
        self.name_index = {e.name: e.iso_id for e in entries}
        if len(self.name_index) != len(entries):
            raise ValueError("catalog names must be unique")
        self._canon: dict[bytes, int] = {
            e.group.table.tobytes(): e.iso_id for e in entries
        }
        self._by_order: dict[int, list[int]] = {}
        for e in entries:
            self._by_order.setdefault(e.group.order, []).append(e.iso_id)
        self._structures: dict[int, EntryStructure] = {}
        self._ep: dict[tuple[int, int], frozenset[int]] = {}
        self._products: dict[tuple[int, int], int | None] = {}

    # -- identity -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Universe):
            return NotImplemented
        return self.max_order == other.max_order and tuple(
            (e.name, e.group) for e in self.entries
        ) == tuple((e.name, e.group) for e in other.entries)

    def __hash__(self) -> int:
        return hash((self.max_order, len(self.entries)))

    def __repr__(self) -> str:
        return f"Universe(max_order={self.max_order}, classes={len(self.entries)})"

    # -- lookups ------------------------------------------------------------

    def group(self, i: int) -> GroupTable:
        return self.entries[i].group

    def name(self, i: int) -> str:
        return self.entries[i].name

    def order(self, i: int) -> int:
        return self.entries[i].group.order

    def all_ids(self) -> frozenset[int]:
        return frozenset(range(len(self.entries)))

    def ids_of_order(self, n: int) -> tuple[int, ...]:
        return tuple(self._by_order.get(n, ()))

    def canonical_id_or_none(self, tab: GroupTable) -> int | None:
        """The isomorphism id of ``tab``, or None if no entry matches.

        A miss is a definitive answer, not a failure: every same-order
        entry has been checked, so the group's class is simply absent
        from this curated catalog and cannot belong to any class over it.
        """
        key = tab.table.tobytes()
        hit = self._canon.get(key)
        if hit is not None:
            return hit if hit >= 0 else None
        for i in self._by_order.get(tab.order, []):
            if find_isomorphism(self.entries[i].group, tab) is not None:
                self._canon[key] = i
                return i
        self._canon[key] = -1
        return None

    def canonical_id(self, tab: GroupTable) -> int:
        """The isomorphism id of ``tab``; raises when the catalog lacks it."""
        hit = self.canonical_id_or_none(tab)
        if hit is None:
            raise NotInCatalog(
                f"no catalog entry of order {tab.order} matches"
                f" (universe max_order={self.max_order})"
            )
        return hit

    # -- cached structure -----------------------------------------------------

    def structure(self, i: int) -> EntryStructure:
        s = self._structures.get(i)
        if s is None:
            s = self._compute_structure(i)
            self._structures[i] = s
        return s

    def _compute_structure(self, i: int) -> EntryStructure:
        g = self.entries[i].group
        pairs: list[tuple[tuple[int, ...], int]] = []
        sub_ids: set[int] = set()
        for h in g.subgroups_raw:
            got = self.canonical_id_or_none(g.subgroup_table(h))
            sid = -1 if got is None else got
            pairs.append((h, sid))
            if sid >= 0:
                sub_ids.add(sid)

        abelian = g.is_abelian
        normals: list[_NormalInfo] = []
        quot_ids: set[int] = set()
        for h, sid in pairs:
            if abelian or g.is_normal_set(h):
                qtab, _ = g.quotient_data(h)
                got = self.canonical_id_or_none(qtab)
                qid = -1 if got is None else got
                normals.append(_NormalInfo(h, sid, qid))
                if qid >= 0:
                    quot_ids.add(qid)

        nilpotent = g.flags.nilpotent
        subnormals: list[_SubgroupInfo] = []
        subnormal_ids: set[int] = set()
        for h, sid in pairs:
            if nilpotent or g.is_subnormal_set(h):
                subnormals.append(_SubgroupInfo(h, sid))
                if sid >= 0:
                    subnormal_ids.add(sid)

        fr = g.frattini_members
        fr_set = set(fr)
        fq = frozenset(
            info.quot_id
            for info in normals
            if info.quot_id >= 0 and set(info.members) <= fr_set
        )
        return EntryStructure(
            subgroup_ids=frozenset(sub_ids),
            subnormal_ids=frozenset(subnormal_ids),
            quotient_ids=frozenset(quot_ids),
            normals=tuple(normals),
            subnormals=tuple(subnormals),
            frattini_members=fr,
            frattini_quotient_ids=fq,
        )

    def ep_quot_ids(self, i: int, p: int) -> frozenset[int]:
        """Ids of quotients G/K over normal K inside the p-core of entry i."""
        key = (i, p)
        got = self._ep.get(key)
        if got is None:
            core = set(self.entries[i].group.o_p_members(p))
            st = self.structure(i)
            got = frozenset(
                info.quot_id
                for info in st.normals
                if info.quot_id >= 0 and set(info.members) <= core
            )
            self._ep[key] = got
        return got

    def product_id(self, ia: int, ib: int) -> int | None:
        """Catalog id of the direct product, or None when it exceeds the bound."""
        key = (min(ia, ib), max(ia, ib))
        if key in self._products:
            return self._products[key]
        a = self.entries[key[0]].group
        b = self.entries[key[1]].group
        if a.order * b.order > self.max_order:
            pid = None
        else:
            pid = self.canonical_id(direct_product(a, b))
        self._products[key] = pid
        return pid


def _product_part(nm: str) -> str:
    # split-extension names bind looser than the product join, so wrap them
    return f"({nm})" if ":" in nm else nm


_UNIVERSE_MEMO: dict[int, Universe] = {}


def build_universe(max_order: int) -> Universe:
    """Construct (and memoize) the curated catalog up to ``max_order``."""
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    if max_order > MAX_SUPPORTED_ORDER:
        raise BoundTooLarge(
            f"max_order {max_order} exceeds the supported bound {MAX_SUPPORTED_ORDER}"
        )
    hit = _UNIVERSE_MEMO.get(max_order)
    if hit is not None:
        return hit

    pool: list[GroupTable] = []
    atoms: list[tuple[tuple[int, str], ...]] = []
    by_order: dict[int, list[int]] = {}

    def register(tab: GroupTable, atom_list=None) -> tuple[int, bool]:
        o = tab.order
        for idx in by_order.get(o, []):
            if isomorphic(pool[idx], tab):
                return idx, False
        idx = len(pool)
        pool.append(tab)
        atoms.append(atom_list if atom_list is not None else ((o, tab.name),))
        by_order.setdefault(o, []).append(idx)
        return idx, True

    register(trivial_group())
    for n in range(2, max_order + 1):
        register(cyclic(n))
    for p in (2, 3, 5, 7):
        k = 2
        while p**k <= max_order:
            register(elementary_abelian(p, k))
            k += 1
    n = 3
    while math.factorial(n) <= max_order:
        register(symmetric(n))
        n += 1
    n = 4
    while math.factorial(n) // 2 <= max_order:
        register(alternating(n))
        n += 1
    for o in range(6, max_order + 1, 2):
        register(dihedral(o))
    n = 2
    while 4 * n <= max_order:
        register(dicyclic(n))
        n += 1
    if 24 <= max_order:
        register(special_linear_2_3())
    for m, n, k, name in _SEMIDIRECT_SEEDS:
        if m * n <= max_order:
            register(cyclic_semidirect(m, n, k, name=name))
    for idx in [i for i in range(len(pool)) if pool[i].is_abelian]:
        base = pool[idx]
        if base.order >= 2 and 2 * base.order <= max_order:
            register(generalized_dihedral(base))

    # close under direct products; candidates are registered in
    # (order, name) order so catalog names do not depend on the bound
    seen_pairs: set[tuple[int, int]] = set()
    while True:
        size = len(pool)
        candidates = []
        for ia in range(size):
            oa = pool[ia].order
            if oa < 2:
                continue
            for ib in range(ia, size):
                ob = pool[ib].order
                if ob < 2 or oa * ob > max_order or (ia, ib) in seen_pairs:
                    continue
                seen_pairs.add((ia, ib))
                fused = tuple(sorted(atoms[ia] + atoms[ib]))
                name = "x".join(_product_part(nm) for _, nm in fused)
                candidates.append((oa * ob, name, ia, ib, fused))
        if not candidates:
            break
        for _, name, ia, ib, fused in sorted(candidates, key=lambda c: (c[0], c[1])):
            tab = direct_product(pool[ia], pool[ib], name=name)
            register(tab, atom_list=fused)

    order_index = sorted(range(len(pool)), key=lambda i: (pool[i].order, i))
    entries = tuple(
        UniverseEntry(iso_id, pool[i].name, pool[i], pool[i].flags)
        for iso_id, i in enumerate(order_index)
    )
    u = Universe(max_order, entries)
    _UNIVERSE_MEMO[max_order] = u
    return u


def catalog_counts(u: Universe) -> dict[int, int]:
    out: dict[int, int] = {}
    for e in u.entries:
        out[e.group.order] = out.get(e.group.order, 0) + 1
    return out


# -- serialization ----------------------------------------------------------------

_HEADER_RE = re.compile(r"^GROUPCAT v(\S+) max_order=(\d+) count=(\d+)$")
_ENTRY_RE = re.compile(r"^id=(\d+) name=(\S+) order=(\d+)$")


def render_catalog(u: Universe) -> str:
    lines = [f"GROUPCAT v1 max_order={u.max_order} count={len(u.entries)}"]
    for e in u.entries:
        n = e.group.order
        lines.append(f"id={e.iso_id} name={e.name} order={n}")
        for row in e.group.table:
            lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def save_catalog(u: Universe, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(render_catalog(u))


def load_catalog(path: str) -> Universe:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if not text.endswith("\n"):
        raise FormatError("catalog must end with a newline")
    lines = text.split("\n")[:-1]
    if not lines:
        raise FormatError("empty catalog", line=1)
    head = _HEADER_RE.match(lines[0])
    if head is None:
        raise FormatError("bad header", line=1)
    if head.group(1) != "1":
        raise VersionMismatch(f"unsupported catalog version v{head.group(1)}", line=1)
    max_order = int(head.group(2))
    count = int(head.group(3))
    entries: list[UniverseEntry] = []
    ln = 1
    for want_id in range(count):
        if ln >= len(lines):
            raise FormatError("truncated catalog: missing entry header", line=ln + 1)
        m = _ENTRY_RE.match(lines[ln])
        if m is None:
            raise FormatError("bad entry header", line=ln + 1)
        got_id, name, order = int(m.group(1)), m.group(2), int(m.group(3))
        if got_id != want_id:
            raise FormatError(f"entry ids must run 0..{count - 1} in order", line=ln + 1)
        if order < 1 or order > max_order:
            raise FormatError("entry order outside the declared bound", line=ln + 1)
        ln += 1
        if ln + order > len(lines):
            raise FormatError("truncated catalog: missing table rows", line=len(lines))
        rows = []
        for r in range(order):
            parts = lines[ln + r].split(" ")
            if len(parts) != order:
                raise FormatError(f"expected {order} entries in table row", line=ln + r + 1)
            try:
                rows.append([int(p) for p in parts])
            except ValueError:
                raise FormatError("non-integer table entry", line=ln + r + 1) from None
        try:
            tab = GroupTable(np.asarray(rows, dtype=np.int64), name=name, check=True)
        except ValueError as exc:
            raise FormatError(f"invalid group table: {exc}", line=ln) from None
        entries.append(UniverseEntry(want_id, name, tab, tab.flags))
        ln += order
    if ln != len(lines):
        raise FormatError("trailing content after the last entry", line=ln + 1)
    try:
        return Universe(max_order, tuple(entries))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
