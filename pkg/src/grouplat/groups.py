"""Dense Cayley-table groups and the structural queries everything else uses.

Elements are integers ``0..n-1`` with ``0`` the identity. A group is an
``(n, n)`` int64 numpy array ``T`` with ``T[a, b]`` the product ``a*b``.
Subgroups, quotients, series and the like all work directly on element
indices; nothing here knows about catalogs or classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NotNormal, NotPrime, NotSubgroup


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class GroupPredicateFlags:
    abelian: bool
    nilpotent: bool
    soluble: bool
    p_group_for: int | None


@dataclass(frozen=True)
class Subset:
    """A subgroup-shaped set of elements remembered together with its parent."""

    parent: "GroupTable"
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)


class GroupTable:
    """A finite group given by its full multiplication table."""

    def __init__(self, table, name: str | None = None, check: bool = True):
        t = np.ascontiguousarray(np.asarray(table, dtype=np.int64))
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise ValueError("multiplication table must be square and non-empty")
        t.setflags(write=False)
        self._t = t
        self.name = name
        if check:
            self._validate()

    def _validate(self) -> None:
        t = self._t
        n = t.shape[0]
        ar = np.arange(n)
        if int(t.min()) < 0 or int(t.max()) >= n:
            raise ValueError("table entries out of range")
        if not np.array_equal(np.sort(t, axis=1), np.broadcast_to(ar, t.shape)):
            raise ValueError("some row is not a permutation")
        if not np.array_equal(np.sort(t, axis=0), np.broadcast_to(ar[:, None], t.shape)):
            raise ValueError("some column is not a permutation")
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise ValueError("element 0 is not a two-sided identity")
        # (ab)c == a(bc) for all triples, as one tensor comparison
        if not np.array_equal(t[t], t[:, t]):
            raise ValueError("table is not associative")

    # -- basics -------------------------------------------------------------

    @property
    def order(self) -> int:
        return self._t.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._t

    def mul(self, a: int, b: int) -> int:
        return int(self._t[a, b])

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmax(self._t == 0, axis=1)
        inv.setflags(write=False)
        return inv

    def inv_of(self, a: int) -> int:
        return int(self.inverse[a])

    @cached_property
    def element_orders(self) -> np.ndarray:
        t = self._t
        out = np.ones(self.order, dtype=np.int64)
        for a in range(1, self.order):
            cur, k = a, 1
            while cur != 0:
                cur = int(t[cur, a])
                k += 1
            out[a] = k
        out.setflags(write=False)
        return out

    @cached_property
    def order_histogram(self) -> tuple[tuple[int, int], ...]:
        vals, counts = np.unique(self.element_orders, return_counts=True)
        return tuple((int(v), int(c)) for v, c in zip(vals, counts))

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._t, self._t.T))

    @cached_property
    def center_members(self) -> tuple[int, ...]:
        commutes = self._t == self._t.T
        return tuple(int(a) for a in np.flatnonzero(commutes.all(axis=1)))

    @cached_property
    def commutator_table(self) -> np.ndarray:
        # c[a, b] = (ab)(ba)^-1, trivial exactly when a and b commute
        t, inv = self._t, self.inverse
        c = t[t, inv[t.T]]
        c.setflags(write=False)
        return c

    # -- subgroups ----------------------------------------------------------

    def subgroup_closure(self, seed) -> tuple[int, ...]:
        """Members of the subgroup generated by ``seed``."""
        t = self._t
        members = np.unique(np.concatenate((
            np.zeros(1, dtype=np.int64), np.asarray(seed, dtype=np.int64).ravel())))
        while True:
            prods = np.unique(t[np.ix_(members, members)])
            if prods.size == members.size:
                return tuple(int(m) for m in members)
            members = prods

    @cached_property
    def subgroups_raw(self) -> tuple[tuple[int, ...], ...]:
        """Every subgroup as a sorted member tuple, smallest first.

        Layered search: each subgroup arises from a maximal chain by
        adjoining one generator at a time, so extending every known
        subgroup by every outside element finds them all.
        """
        trivial = (0,)
        found = {trivial}
        frontier = [trivial]
        n = self.order
        while frontier:
            nxt = []
            for h in frontier:
                hset = set(h)
                for g in range(1, n):
                    if g in hset:
                        continue
                    k = self.subgroup_closure(h + (g,))
                    if k not in found:
                        found.add(k)
                        nxt.append(k)
            frontier = nxt
        return tuple(sorted(found, key=lambda m: (len(m), m)))

    def is_subgroup_set(self, members) -> bool:
        m = np.unique(np.asarray(list(members), dtype=np.int64))
        if m.size == 0 or m[0] != 0:
            return False
        prods = np.unique(self._t[np.ix_(m, m)])
        return bool(prods.size == m.size and np.array_equal(prods, m))

    def is_normal_set(self, members) -> bool:
        m = np.asarray(sorted(members), dtype=np.int64)
        t = self._t
        left = np.sort(t[:, m], axis=1)      # row g: the set gM
        right = np.sort(t[m, :], axis=0).T   # row g: the set Mg
        return bool(np.array_equal(left, right))

    @cached_property
    def normal_subgroups_raw(self) -> tuple[tuple[int, ...], ...]:
        if self.is_abelian:
            return self.subgroups_raw
        return tuple(h for h in self.subgroups_raw if self.is_normal_set(h))

    def normal_closure_in(self, h_members, k_members) -> tuple[int, ...]:
        """Smallest subgroup containing H that is normalized by K (H <= K)."""
        t, inv = self._t, self.inverse
        h = np.asarray(sorted(h_members), dtype=np.int64)
        k = np.asarray(sorted(k_members), dtype=np.int64)
        conj = t[t[np.ix_(k, h)], inv[k][:, None]]
        return self.subgroup_closure(np.unique(conj))

    def is_subnormal_set(self, members) -> bool:
        h = tuple(sorted(int(x) for x in members))
        if self.is_abelian or self.is_normal_set(h):
            return True
        # descending series of iterated normal closures; it stabilizes at H
        # exactly when H is subnormal
        cur = tuple(range(self.order))
        while True:
            nxt = self.normal_closure_in(h, cur)
            if nxt == cur:
                return cur == h
            cur = nxt

    @cached_property
    def subnormal_subgroups_raw(self) -> tuple[tuple[int, ...], ...]:
        if self.flags.nilpotent:
            return self.subgroups_raw
        return tuple(h for h in self.subgroups_raw if self.is_subnormal_set(h))

    @cached_property
    def maximal_subgroups_raw(self) -> tuple[tuple[int, ...], ...]:
        proper = [h for h in self.subgroups_raw if len(h) < self.order]
        sets = [frozenset(h) for h in proper]
        out = []
        for i, h in enumerate(proper):
            if not any(sets[i] < other for other in sets):
                out.append(h)
        return tuple(out)

    @cached_property
    def frattini_members(self) -> tuple[int, ...]:
        maxes = self.maximal_subgroups_raw
        if not maxes:
            return (0,)
        acc = frozenset(maxes[0])
        for h in maxes[1:]:
            acc &= frozenset(h)
        return tuple(sorted(acc))

    def o_p_members(self, p: int) -> tuple[int, ...]:
        """The largest normal p-subgroup, as the join of all normal p-subgroups."""
        if not _is_prime(p):
            raise NotPrime(p)
        gens: list[int] = [0]
        for h in self.normal_subgroups_raw:
            if _is_p_power(len(h), p):
                gens.extend(h)
        members = self.subgroup_closure(gens)
        assert _is_p_power(len(members), p), "join of normal p-subgroups must be a p-group"
        return members

    # -- commutators and series ----------------------------------------------

    def commutator_subgroup_of(self, a_members, b_members) -> tuple[int, ...]:
        c = self.commutator_table[np.ix_(sorted(a_members), sorted(b_members))]
        return self.subgroup_closure(np.unique(c))

    @cached_property
    def derived_series(self) -> tuple[tuple[int, ...], ...]:
        series = [tuple(range(self.order))]
        while True:
            nxt = self.commutator_subgroup_of(series[-1], series[-1])
            if nxt == series[-1]:
                return tuple(series)
            series.append(nxt)

    @cached_property
    def lower_central_series(self) -> tuple[tuple[int, ...], ...]:
        full = tuple(range(self.order))
        series = [full]
        while True:
            nxt = self.commutator_subgroup_of(series[-1], full)
            if nxt == series[-1]:
                return tuple(series)
            series.append(nxt)

    @cached_property
    def flags(self) -> GroupPredicateFlags:
        n = self.order
        p = None
        if n > 1:
            f = _factorize(n)
            if len(f) == 1:
                p = next(iter(f))
        return GroupPredicateFlags(
            abelian=self.is_abelian,
            nilpotent=self.lower_central_series[-1] == (0,),
            soluble=self.derived_series[-1] == (0,),
            p_group_for=p,
        )

    # -- derived tables -------------------------------------------------------

    def subgroup_table(self, members, name: str | None = None) -> "GroupTable":
        """The subgroup on ``members`` relabeled to ``0..k-1`` (sorted order)."""
        m = np.asarray(sorted(set(int(x) for x in members)), dtype=np.int64)
        if not self.is_subgroup_set(m):
            raise NotSubgroup(f"{tuple(int(x) for x in m)} is not a subgroup")
        pos = np.full(self.order, -1, dtype=np.int64)
        pos[m] = np.arange(m.size)
        return GroupTable(pos[self._t[np.ix_(m, m)]], name=name, check=False)

    def quotient_data(self, members, name: str | None = None) -> tuple["GroupTable", np.ndarray]:
        """Quotient by a normal subgroup plus the element -> coset index map.

        Cosets are numbered by first appearance scanning elements in
        ascending order, so the identity coset is 0.
        """
        m = sorted(set(int(x) for x in members))
        if not self.is_subgroup_set(m):
            raise NotSubgroup(f"{tuple(m)} is not a subgroup")
        if not self.is_normal_set(m):
            raise NotNormal(f"{tuple(m)} is not normal")
        t = self._t
        n = self.order
        marr = np.asarray(m, dtype=np.int64)
        coset_of = np.full(n, -1, dtype=np.int64)
        reps = []
        for a in range(n):
            if coset_of[a] < 0:
                coset_of[t[a, marr]] = len(reps)
                reps.append(a)
        reps_arr = np.asarray(reps, dtype=np.int64)
        q = coset_of[t[np.ix_(reps_arr, reps_arr)]]
        coset_of.setflags(write=False)
        return GroupTable(q, name=name, check=False), coset_of

    # -- invariants and identity ----------------------------------------------

    @cached_property
    def fingerprint(self) -> tuple:
        """Cheap isomorphism invariants used to prefilter candidate matches."""
        ds = self.derived_series
        derived_size = len(ds[1]) if len(ds) > 1 else 1
        return (
            self.order,
            self.is_abelian,
            self.order_histogram,
            len(self.center_members),
            derived_size,
        )

    @cached_property
    def generating_sequence(self) -> tuple[int, ...]:
        """A short generating list, greedily preferring high-order elements."""
        gens: list[int] = []
        members = {0}
        orders = self.element_orders
        n = self.order
        while len(members) < n:
            pick = max(
                (g for g in range(n) if g not in members),
                key=lambda g: (int(orders[g]), -g),
            )
            gens.append(pick)
            members = set(self.subgroup_closure(list(members) + [pick]))
        return tuple(gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupTable) and self._t.tobytes() == other._t.tobytes()

    def __hash__(self) -> int:
        return hash(self._t.tobytes())

    def __repr__(self) -> str:
        label = self.name if self.name is not None else "?"
        return f"GroupTable({label}, order={self.order})"


# -- module-level wrappers ----------------------------------------------------


def subgroups(g: GroupTable) -> tuple[Subset, ...]:
    return tuple(Subset(g, h) for h in g.subgroups_raw)


def normal_subgroups(g: GroupTable) -> tuple[Subset, ...]:
    return tuple(Subset(g, h) for h in g.normal_subgroups_raw)


def is_subnormal(g: GroupTable, members) -> bool:
    return g.is_subnormal_set(members)


def quotient(g: GroupTable, members) -> GroupTable:
    return g.quotient_data(members)[0]


def frattini(g: GroupTable) -> Subset:
    return Subset(g, g.frattini_members)


def o_p(g: GroupTable, p: int) -> Subset:
    return Subset(g, g.o_p_members(p))


def predicates(g: GroupTable) -> GroupPredicateFlags:
    return g.flags


# -- isomorphism ----------------------------------------------------------------


def find_isomorphism(a: GroupTable, b: GroupTable) -> np.ndarray | None:
    """An explicit isomorphism a -> b as an index array, or None.

    Backtracks over images of a generating sequence of ``a``. A partial
    choice of images is grown to the subgroup it generates by a breadth
    first sweep that both defines the map on products and cross-checks
    every previously defined value, so a completed sweep with no conflict
    is already a homomorphism on that subgroup.
    """
    if a.order != b.order or a.fingerprint != b.fingerprint:
        return None
    n = a.order
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    gens = a.generating_sequence
    ta, tb = a.table, b.table
    a_orders, b_orders = a.element_orders, b.element_orders
    cand = [
        tuple(h for h in range(n) if b_orders[h] == a_orders[g])
        for g in gens
    ]
    images: list[int] = []

    def closed_map() -> dict[int, int] | None:
        phi = {0: 0}
        used = {0}
        queue = [0]
        pairs = list(zip(gens[: len(images)], images))
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            fx = phi[x]
            for g, h in pairs:
                xg = int(ta[x, g])
                fxh = int(tb[fx, h])
                cur = phi.get(xg)
                if cur is None:
                    if fxh in used:
                        return None
                    phi[xg] = fxh
                    used.add(fxh)
                    queue.append(xg)
                elif cur != fxh:
                    return None
        return phi

    def search(level: int) -> np.ndarray | None:
        if level == len(gens):
            phi = closed_map()
            if phi is not None and len(phi) == n:
                out = np.empty(n, dtype=np.int64)
                for x, y in phi.items():
                    out[x] = y
                return out
            return None
        for h in cand[level]:
            images.append(h)
            if closed_map() is not None:
                hit = search(level + 1)
                if hit is not None:
                    return hit
            images.pop()
        return None

    return search(0)


def isomorphic(a: GroupTable, b: GroupTable) -> bool:
    return find_isomorphism(a, b) is not None


# -- constructions ---------------------------------------------------------------


def trivial_group() -> GroupTable:
    return GroupTable(np.zeros((1, 1), dtype=np.int64), name="1")


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return trivial_group()
    ar = np.arange(n)
    return GroupTable(np.add.outer(ar, ar) % n, name=f"C{n}")


def direct_product(a: GroupTable, b: GroupTable, name: str | None = None) -> GroupTable:
    na, nb = a.order, b.order
    t = (a.table[:, None, :, None] * nb + b.table[None, :, None, :]).reshape(na * nb, na * nb)
    return GroupTable(t, name=name)


def elementary_abelian(p: int, k: int) -> GroupTable:
    if not _is_prime(p):
        raise NotPrime(p)
    if k < 1:
        raise ValueError("rank must be positive")
    g = cyclic(p)
    for _ in range(k - 1):
        g = direct_product(g, cyclic(p))
    g.name = "x".join([f"C{p}"] * k)
    return g


def dihedral(order: int) -> GroupTable:
    """Dihedral group of the given (even) order; elements (i, e) -> i + half*e."""
    if order < 2 or order % 2:
        raise ValueError("dihedral groups have even order >= 2")
    half = order // 2
    t = np.empty((order, order), dtype=np.int64)
    for i in range(half):
        for e in (0, 1):
            for j in range(half):
                for f in (0, 1):
                    rot = (i + j) % half if e == 0 else (i - j) % half
                    t[i + half * e, j + half * f] = rot + half * (e ^ f)
    return GroupTable(t, name=f"D{order}")


def dicyclic(n: int) -> GroupTable:
    """Dicyclic group of order 4n: a^(2n)=1, b^2=a^n, b a b^-1 = a^-1."""
    if n < 2:
        raise ValueError("dicyclic groups need n >= 2")
    m = 2 * n
    t = np.empty((4 * n, 4 * n), dtype=np.int64)
    for i in range(m):
        for e in (0, 1):
            for j in range(m):
                for f in (0, 1):
                    if e == 0:
                        t[i + m * e, j + m * f] = (i + j) % m + m * f
                    elif f == 0:
                        t[i + m * e, j + m * f] = (i - j) % m + m
                    else:
                        t[i + m * e, j + m * f] = (i - j + n) % m
    return GroupTable(t, name="Q8" if n == 2 else f"Dic{n}")


def _perm_parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _perm_group(perms: list[tuple[int, ...]], name: str) -> GroupTable:
    index = {p: i for i, p in enumerate(perms)}
    k = len(perms)
    t = np.empty((k, k), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            t[i, j] = index[tuple(p[q[x]] for x in range(len(p)))]
    return GroupTable(t, name=name)


def symmetric(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("n must be positive")
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    return _perm_group(perms, name=f"S{n}")


def alternating(n: int) -> GroupTable:
    if n < 3:
        raise ValueError("n must be at least 3")
    perms = [tuple(p) for p in itertools.permutations(range(n)) if _perm_parity(tuple(p)) == 0]
    return _perm_group(perms, name=f"A{n}")


def special_linear_2_3() -> GroupTable:
    """SL(2, 3), the 24 determinant-one 2x2 matrices over F_3."""
    p = 3
    mats = [(1, 0, 0, 1)]
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 1 and (a, b, c, d) != (1, 0, 0, 1):
            mats.append((a, b, c, d))
    index = {m: i for i, m in enumerate(mats)}
    k = len(mats)
    t = np.empty((k, k), dtype=np.int64)
    for i, (a, b, c, d) in enumerate(mats):
        for j, (e, f, g, h) in enumerate(mats):
            prod = ((a * e + b * g) % p, (a * f + b * h) % p,
                    (c * e + d * g) % p, (c * f + d * h) % p)
            t[i, j] = index[prod]
    return GroupTable(t, name="SL(2,3)")


def cyclic_semidirect(m: int, n: int, k: int, name: str | None = None) -> GroupTable:
    """C_m semidirect C_n where the C_n generator acts on C_m by x -> k*x."""
    import math

    if math.gcd(k, m) != 1 or pow(k, n, m) != 1:
        raise ValueError(f"action x -> {k}x is not an order-dividing automorphism of C{m}")
    t = np.empty((m * n, m * n), dtype=np.int64)
    for x1 in range(m):
        for y1 in range(n):
            twist = pow(k, y1, m)
            for x2 in range(m):
                for y2 in range(n):
                    t[x1 + m * y1, x2 + m * y2] = (x1 + twist * x2) % m + m * ((y1 + y2) % n)
    return GroupTable(t, name=name if name is not None else f"C{m}:C{n}")


def generalized_dihedral(a: GroupTable) -> GroupTable:
    """The split extension of an abelian group by the inversion involution."""
    if not a.is_abelian:
        raise ValueError("generalized dihedral needs an abelian base")
    na = a.order
    ta, inv = a.table, a.inverse
    t = np.empty((2 * na, 2 * na), dtype=np.int64)
    for x in range(na):
        for e in (0, 1):
            for y in range(na):
                for f in (0, 1):
                    prod = int(ta[x, y]) if e == 0 else int(ta[x, inv[y]])
                    t[x + na * e, y + na * f] = prod + na * (e ^ f)
    return GroupTable(t, name=f"{a.name}:C2")
