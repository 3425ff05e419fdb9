from __future__ import annotations

import itertools

import numpy as np
import pytest

from grouplat.errors import NotAntisymmetric
from grouplat.topology import (
    FinitePreorder,
    alexandrov_closure,
    build_preorder,
    connected_components_bfs,
    connected_components_union_find,
    homotopy_equivalent,
    is_path_connected,
    operator_space_probe,
    stong_core,
    to_dot,
)

KINDS = ("subgroup", "subnormal", "quotient")


def _chain(k: int) -> FinitePreorder:
    rel = np.triu(np.ones((k, k), dtype=bool))
    return FinitePreorder(rel, tuple(f"x{i}" for i in range(k)))


def _antichain(k: int) -> FinitePreorder:
    rel = np.eye(k, dtype=bool)
    return FinitePreorder(rel, tuple(f"x{i}" for i in range(k)))


def test_catalog_orders_are_posets(u8, u12, u15):
    for u in (u8, u12, u15):
        for kind in KINDS:
            pre = build_preorder(u, kind)
            assert pre.n == len(u.entries)
            assert pre.is_antisymmetric


def test_validation_rejects_broken_relations():
    rel = np.eye(3, dtype=bool)
    rel[0, 1] = rel[1, 2] = True
    with pytest.raises(ValueError):
        FinitePreorder(rel, ("a", "b", "c"))
    rel2 = np.zeros((2, 2), dtype=bool)
    with pytest.raises(ValueError):
        FinitePreorder(rel2, ("a", "b"))


def test_two_cycle_preorder_is_not_a_poset():
    rel = np.ones((2, 2), dtype=bool)
    pre = FinitePreorder(rel, ("a", "b"))
    assert not pre.is_antisymmetric
    with pytest.raises(NotAntisymmetric):
        stong_core(pre)


def test_alexandrov_closure_is_the_down_set(u8):
    pre = build_preorder(u8, "subgroup")
    d8 = u8.name_index["D8"]
    got = {u8.name(i) for i in alexandrov_closure(pre, (d8,))}
    assert got == {u8.name(i) for i in u8.structure(d8).subgroup_ids}
    assert got == {"1", "C2", "C4", "C2xC2", "D8"}
    assert alexandrov_closure(pre, ()) == ()


def test_kuratowski_axioms_on_the_subgroup_space(u6):
    pre = build_preorder(u6, "subgroup")
    n = pre.n
    close = {}
    for bits in range(1 << n):
        subset = frozenset(i for i in range(n) if bits >> i & 1)
        close[subset] = frozenset(alexandrov_closure(pre, tuple(subset)))
    assert close[frozenset()] == frozenset()
    for subset, cl in close.items():
        assert subset <= cl
        assert close[cl] == cl
    for a, b in itertools.product(list(close)[:32], repeat=2):
        assert close[a | b] == close[a] | close[b]


def test_connectivity_algorithms_agree(u8, u12, u15):
    for u in (u8, u12, u15):
        for kind in KINDS:
            pre = build_preorder(u, kind)
            assert connected_components_bfs(pre) == 1
            assert connected_components_union_find(pre) == 1
            assert is_path_connected(pre)
    anti = _antichain(4)
    assert connected_components_bfs(anti) == 4
    assert connected_components_union_find(anti) == 4
    assert not is_path_connected(anti)


def test_catalog_spaces_are_contractible(u8, u12, u15):
    for u in (u8, u12, u15):
        for kind in KINDS:
            pre = build_preorder(u, kind)
            for variant in ("lowest", "highest"):
                core = stong_core(pre, variant=variant)
                assert core.size == 1
                assert len(core.removed_names) == pre.n - 1


def test_core_of_a_chain_is_a_point():
    core = stong_core(_chain(5))
    assert core.size == 1
    assert stong_core(_chain(5), variant="highest").size == 1


def test_antichain_has_no_beat_points():
    core = stong_core(_antichain(3))
    assert core.size == 3
    assert core.removed_names == ()


def test_homotopy_equivalence_of_catalog_spaces(u12):
    subgroup = build_preorder(u12, "subgroup")
    subnormal = build_preorder(u12, "subnormal")
    quotient = build_preorder(u12, "quotient")
    assert homotopy_equivalent(subgroup, subnormal)
    assert homotopy_equivalent(subgroup, quotient)


def test_chain_and_antichain_are_not_equivalent():
    assert not homotopy_equivalent(_chain(2), _antichain(2))
    assert homotopy_equivalent(_chain(2), _chain(7))


def test_restriction_keeps_the_induced_order(u8):
    pre = build_preorder(u8, "subgroup")
    keep = [u8.name_index[n] for n in ("1", "C2", "C4", "Q8")]
    sub = pre.restricted(keep)
    assert sub.n == 4
    assert sub.names == ("1", "C2", "C4", "Q8")
    assert stong_core(sub).size == 1


def test_operator_space_probe_is_stamped(u12):
    probe = operator_space_probe(u12)
    assert probe.stamp == "EXPERIMENTAL-TRUNCATED"
    assert probe.components == 16
    assert len(probe.core_names) == 16
    assert probe.space.n == 24


def test_two_core_probe_collapses_further(u12):
    probe = operator_space_probe(u12, prime=2)
    assert probe.stamp == "EXPERIMENTAL-TRUNCATED"
    assert probe.components == 9


def test_dot_rendering(u8):
    pre = build_preorder(u8, "subgroup")
    dot = to_dot(pre, "subgroup order")
    assert dot.startswith('digraph "subgroup order" {')
    assert dot.endswith("}\n")
    assert dot.count("->") == 17
    assert '[label="C2xC2"]' in dot
    assert "n0 ->" in dot
