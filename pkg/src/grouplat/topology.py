"""Finite Alexandrov spaces attached to a universe of groups.

A finite preorder and a finite topological space are the same data:
points are catalog entries, ``rel[g, h]`` holds when g sits below h, the
closure of a set is its down-set. Three orders ship built in, by
subgroup containment, by subnormal containment, and by quotient
reachability (smaller groups below the groups they are images of).

Cores follow Stong: repeatedly delete beat points, points whose strict
up-set has a unique minimum or whose strict down-set has a unique
maximum. Deleting a beat point is a deformation retract, so two spaces
are homotopy equivalent exactly when their cores are isomorphic as
posets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NotAntisymmetric
from .universe import Universe

_KIND_FIELDS = {
    "subgroup": "subgroup_ids",
    "subnormal": "subnormal_ids",
    "quotient": "quotient_ids",
}


class FinitePreorder:
    """A reflexive transitive relation on named points, as a bool matrix."""

    def __init__(self, rel: np.ndarray, names, kind: str = "", check: bool = True):
        rel = np.ascontiguousarray(np.asarray(rel, dtype=bool))
        n = rel.shape[0]
        if rel.shape != (n, n):
            raise ValueError("relation matrix must be square")
        names = tuple(names)
        if len(names) != n:
            raise ValueError("one name per point")
        if check:
            if not rel.diagonal().all():
                raise ValueError("relation is not reflexive")
            two = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
            if np.any(two & ~rel):
                raise ValueError("relation is not transitive")
        rel.setflags(write=False)
        self.rel = rel
        self.names = names
        self.kind = kind

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def is_antisymmetric(self) -> bool:
        both = self.rel & self.rel.T
        return not np.any(both & ~np.eye(self.n, dtype=bool))

    def restricted(self, indices) -> "FinitePreorder":
        idx = sorted(indices)
        sub = self.rel[np.ix_(idx, idx)].copy()
        return FinitePreorder(sub, [self.names[i] for i in idx], self.kind, check=False)

    def down_set(self, j: int) -> np.ndarray:
        return np.flatnonzero(self.rel[:, j])

    def up_set(self, j: int) -> np.ndarray:
        return np.flatnonzero(self.rel[j, :])


def build_preorder(u: Universe, kind: str) -> FinitePreorder:
    try:
        field = _KIND_FIELDS[kind]
    except KeyError:
        raise ValueError(f"unknown space kind {kind!r}") from None
    n = len(u.entries)
    rel = np.zeros((n, n), dtype=bool)
    for h in range(n):
        below = [i for i in getattr(u.structure(h), field) if 0 <= i < n]
        rel[below, h] = True
    rel[np.arange(n), np.arange(n)] = True
    return FinitePreorder(rel, [e.name for e in u.entries], kind)


def alexandrov_closure(pre: FinitePreorder, indices) -> tuple[int, ...]:
    """The topological closure, the down-set of the given points."""
    idx = list(indices)
    if not idx:
        return ()
    mask = pre.rel[:, idx].any(axis=1)
    return tuple(int(i) for i in np.flatnonzero(mask))


# -- connectivity, two ways ----------------------------------------------------


def connected_components_bfs(pre: FinitePreorder) -> int:
    adj = pre.rel | pre.rel.T
    seen = np.zeros(pre.n, dtype=bool)
    count = 0
    for start in range(pre.n):
        if seen[start]:
            continue
        count += 1
        frontier = np.zeros(pre.n, dtype=bool)
        frontier[start] = True
        while frontier.any():
            seen |= frontier
            frontier = adj[frontier].any(axis=0) & ~seen
    return count


def connected_components_union_find(pre: FinitePreorder) -> int:
    parent = list(range(pre.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    rows, cols = np.nonzero(pre.rel)
    for a, b in zip(rows.tolist(), cols.tolist()):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(a) for a in range(pre.n)})


def is_path_connected(pre: FinitePreorder) -> bool:
    return pre.n <= 1 or connected_components_bfs(pre) == 1


# -- Stong cores ------------------------------------------------------------------


@dataclass(frozen=True)
class CoreResult:
    core: FinitePreorder
    kept_indices: tuple[int, ...]
    removed_names: tuple[str, ...]

    @property
    def size(self) -> int:
        return self.core.n


def _beat_point(rel: np.ndarray, alive: np.ndarray, x: int) -> bool:
    strict = rel.copy()
    np.fill_diagonal(strict, False)
    up = np.flatnonzero(strict[x] & alive)
    if up.size:
        sub = strict[np.ix_(up, up)]
        if (sub.sum(axis=0) == 0).sum() == 1:
            return True
    down = np.flatnonzero(strict[:, x] & alive)
    if down.size:
        sub = strict[np.ix_(down, down)]
        if (sub.sum(axis=1) == 0).sum() == 1:
            return True
    return False


def stong_core(pre: FinitePreorder, variant: str = "lowest") -> CoreResult:
    """Remove beat points until none remain; the result is unique up to
    poset isomorphism, so the scan variant only changes bookkeeping."""
    if variant not in ("lowest", "highest"):
        raise ValueError(f"unknown variant {variant!r}")
    if not pre.is_antisymmetric:
        raise NotAntisymmetric("cores are defined for posets")
    alive = np.ones(pre.n, dtype=bool)
    removed: list[str] = []
    while True:
        order = np.flatnonzero(alive)
        if variant == "highest":
            order = order[::-1]
        hit = None
        for x in order.tolist():
            if _beat_point(pre.rel, alive, x):
                hit = x
                break
        if hit is None:
            break
        alive[hit] = False
        removed.append(pre.names[hit])
    kept = tuple(int(i) for i in np.flatnonzero(alive))
    return CoreResult(pre.restricted(kept), kept, tuple(removed))


def _order_isomorphic(a: FinitePreorder, b: FinitePreorder) -> bool:
    n = a.n
    if n != b.n:
        return False
    if n == 0:
        return True

    def profile(pre: FinitePreorder):
        strict = pre.rel & ~np.eye(pre.n, dtype=bool)
        return [
            (int(strict[:, j].sum()), int(strict[j, :].sum())) for j in range(pre.n)
        ]

    pa, pb = profile(a), profile(b)
    if sorted(pa) != sorted(pb):
        return False
    candidates = [
        [j for j in range(n) if pb[j] == pa[i]] for i in range(n)
    ]
    assignment: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            ok = all(
                a.rel[k, i] == b.rel[assignment[k], j]
                and a.rel[i, k] == b.rel[j, assignment[k]]
                for k in range(i)
            )
            if ok:
                used[j] = True
                assignment.append(j)
                if extend(i + 1):
                    return True
                assignment.pop()
                used[j] = False
        return False

    return extend(0)


def homotopy_equivalent(a: FinitePreorder, b: FinitePreorder) -> bool:
    """Finite spaces are homotopy equivalent iff their cores match as posets."""
    return _order_isomorphic(stong_core(a).core, stong_core(b).core)


# -- the experimental operator-space probe -------------------------------------------


@dataclass(frozen=True)
class ProbeResult:
    stamp: str
    space: FinitePreorder
    components: int
    core_names: tuple[str, ...]


def operator_space_probe(u: Universe, prime: int | None = None) -> ProbeResult:
    """Order entries by iterated Frattini-style extension and core the result.

    ``rel[g, h]`` starts from single steps, h covering the quotients it
    reaches through a kernel inside its Frattini subgroup (inside its
    p-core when ``prime`` is given), then closes transitively. Proper
    steps strictly shrink the order, so the result is a poset. Stamped
    experimental: a larger catalog can only add relations, never remove
    them, but absent covers change cores unpredictably.
    """
    n = len(u.entries)
    rel = np.eye(n, dtype=bool)
    for h in range(n):
        if prime is None:
            quots = u.structure(h).frattini_quotient_ids
        else:
            quots = u.ep_quot_ids(h, prime)
        for g in quots:
            if 0 <= g < n:
                rel[g, h] = True
    while True:
        two = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
        merged = rel | two
        if np.array_equal(merged, rel):
            break
        rel = merged
    kind = "frattini-extension" if prime is None else f"{prime}-core-extension"
    space = FinitePreorder(rel, [e.name for e in u.entries], kind)
    if not space.is_antisymmetric:
        raise NotAntisymmetric("extension steps must strictly grow the order")
    core = stong_core(space)
    return ProbeResult(
        stamp="EXPERIMENTAL-TRUNCATED",
        space=space,
        components=connected_components_bfs(space),
        core_names=tuple(space.names[i] for i in core.kept_indices),
    )


# -- rendering -----------------------------------------------------------------


def to_dot(pre: FinitePreorder, title: str = "poset") -> str:
    """Graphviz source for the Hasse diagram of the preorder."""
    strict = pre.rel & ~np.eye(pre.n, dtype=bool)
    through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    covers = strict & ~through
    lines = [f'digraph "{title}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, nm in enumerate(pre.names):
        lines.append(f'  n{i} [label="{nm}"];')
    for i in range(pre.n):
        for j in np.flatnonzero(covers[i]).tolist():
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
