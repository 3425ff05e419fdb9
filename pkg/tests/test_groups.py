from __future__ import annotations

import numpy as np
import pytest

from grouplat.errors import NotNormal, NotPrime, NotSubgroup
from grouplat.groups import (
    GroupTable,
    alternating,
    cyclic,
    cyclic_semidirect,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    find_isomorphism,
    frattini,
    generalized_dihedral,
    is_subnormal,
    isomorphic,
    normal_subgroups,
    o_p,
    predicates,
    quotient,
    special_linear_2_3,
    subgroups,
    symmetric,
    trivial_group,
)


def _element_of_order(g: GroupTable, k: int) -> int:
    return next(i for i, o in enumerate(g.element_orders) if o == k)


def test_table_validation_rejects_broken_tables():
    with pytest.raises(ValueError):
        GroupTable(np.array([[0, 1], [0, 1]]))
    with pytest.raises(ValueError):
        GroupTable(np.array([[1, 0], [0, 1]]))
    t = symmetric(3).table.copy()
    t[4, 4], t[4, 5] = t[4, 5], t[4, 4]
    with pytest.raises(ValueError):
        GroupTable(t)


def test_cyclic_group_basics():
    g = cyclic(6)
    assert g.order == 6
    assert g.name == "C6"
    assert g.is_abelian
    assert sorted(g.element_orders) == [1, 2, 3, 3, 6, 6]
    assert g.inverse[1] == 5


def test_direct_product_matches_cyclic_when_coprime():
    assert isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6))
    assert not isomorphic(direct_product(cyclic(2), cyclic(2)), cyclic(4))


def test_elementary_abelian_rejects_composite_base():
    with pytest.raises(NotPrime):
        elementary_abelian(4, 2)
    g = elementary_abelian(2, 3)
    assert g.order == 8
    assert all(o in (1, 2) for o in g.element_orders)


def test_dihedral_subgroup_count():
    d8 = dihedral(8)
    assert len(subgroups(d8)) == 10
    assert len(normal_subgroups(d8)) == 6


def test_dihedral_frattini_is_the_center():
    d8 = dihedral(8)
    assert frattini(d8).members == (0, 2)
    assert d8.center_members == (0, 2)


def test_quaternion_group_structure():
    q8 = dicyclic(2)
    assert q8.name == "Q8"
    assert sorted(len(s.members) for s in subgroups(q8)) == [1, 2, 4, 4, 4, 8]
    assert len(subgroups(q8)) == len(normal_subgroups(q8))
    center = q8.center_members
    assert len(center) == 2
    assert isomorphic(quotient(q8, center), elementary_abelian(2, 2))


def test_symmetric_three_is_the_hexagonal_dihedral():
    assert find_isomorphism(symmetric(3), dihedral(6)) is not None
    assert isomorphic(generalized_dihedral(cyclic(3)), symmetric(3))


def test_transposition_is_not_subnormal_in_s3():
    s3 = symmetric(3)
    t = _element_of_order(s3, 2)
    sub = s3.subgroup_closure([t])
    assert len(sub) == 2
    assert not is_subnormal(s3, sub)
    assert is_subnormal(s3, s3.subgroup_closure([_element_of_order(s3, 3)]))


def test_every_subgroup_of_a_nilpotent_group_is_subnormal():
    d8 = dihedral(8)
    assert predicates(d8).nilpotent
    for s in subgroups(d8):
        assert is_subnormal(d8, s.members)


def test_alternating_four_structure():
    a4 = alternating(4)
    assert a4.order == 12
    flags = predicates(a4)
    assert flags.soluble and not flags.nilpotent and not flags.abelian
    assert [len(layer) for layer in a4.derived_series] == [12, 4, 1]
    assert len(o_p(a4, 2).members) == 4
    assert len(o_p(a4, 3).members) == 1


def test_special_linear_group_over_three_elements():
    sl = special_linear_2_3()
    assert sl.order == 24
    assert len(o_p(sl, 2).members) == 8
    assert [len(layer) for layer in sl.derived_series] == [24, 8, 2, 1]


def test_semidirect_inversion_is_dicyclic():
    assert isomorphic(cyclic_semidirect(3, 4, 2), dicyclic(3))
    with pytest.raises(ValueError):
        cyclic_semidirect(3, 3, 2)


def test_quotient_rejects_bad_kernels():
    s3 = symmetric(3)
    t = _element_of_order(s3, 2)
    with pytest.raises(NotNormal):
        quotient(s3, s3.subgroup_closure([t]))
    with pytest.raises(NotSubgroup):
        quotient(s3, (0, t, 5 - t))


def test_quotient_of_s3_by_rotations_is_c2():
    s3 = symmetric(3)
    a3 = s3.subgroup_closure([_element_of_order(s3, 3)])
    assert isomorphic(quotient(s3, a3), cyclic(2))


def test_generating_sequence_generates():
    for g in (symmetric(3), dicyclic(2), cyclic(12), alternating(4)):
        gens = g.generating_sequence
        assert len(g.subgroup_closure(gens)) == g.order


def test_trivial_group_and_identity_labels():
    e = trivial_group()
    assert e.order == 1
    assert e.name == "1"
    g = dihedral(10)
    assert g.element_orders[0] == 1


def test_isomorphism_is_a_real_homomorphism():
    a = direct_product(cyclic(2), cyclic(4))
    b = direct_product(cyclic(4), cyclic(2))
    phi = find_isomorphism(a, b)
    assert phi is not None
    ta, tb = a.table, b.table
    for x in range(a.order):
        for y in range(a.order):
            assert phi[ta[x, y]] == tb[phi[x], phi[y]]
