from __future__ import annotations

import pytest

from grouplat.classes import class_from_text, empty_class, full_class
from grouplat.errors import EmptyFormation, NotAFormation
from grouplat.formations import (
    class_product,
    class_product_associativity_gap,
    fitting_closure,
    formation_closure,
    gaschutz_product,
    residual,
    residual_composition_check,
    residual_epi_commute_check,
    residual_members_of_table,
    verify_formation,
)


def _names(x) -> set[str]:
    return {x.universe.name(i) for i in x.ids}


def _res_name(u, f, gname: str) -> str:
    return u.name(residual(f, u.name_index[gname]).residual_id)


def test_abelian_residuals_are_derived_subgroups(u12):
    ab = class_from_text("abelian", u12)
    assert _res_name(u12, ab, "S3") == "C3"
    assert _res_name(u12, ab, "A4") == "C2xC2"
    assert _res_name(u12, ab, "D12") == "C3"
    assert _res_name(u12, ab, "Dic3") == "C3"
    assert _res_name(u12, ab, "D8") == "C2"
    assert _res_name(u12, ab, "C12") == "1"


def test_p_group_residuals(u12):
    p2 = class_from_text("p-group(2)", u12)
    p3 = class_from_text("p-group(3)", u12)
    assert _res_name(u12, p2, "A4") == "A4"
    assert _res_name(u12, p3, "A4") == "C2xC2"
    assert _res_name(u12, p2, "D12") == "C3"


def test_nilpotent_residuals(u12):
    nil = class_from_text("nilpotent", u12)
    assert _res_name(u12, nil, "S3") == "C3"
    assert _res_name(u12, nil, "Q8") == "1"


def test_residual_witness_quotient_lies_in_the_class(u12):
    ab = class_from_text("abelian", u12)
    w = residual(ab, u12.name_index["S3"])
    assert w.quotient_in_class
    assert u12.name(w.quotient_id) == "C2"
    assert len(w.members) == 3


def test_residual_extremes(u12):
    full = full_class(u12)
    trivial = class_from_text("trivial", u12)
    for gname in ("S3", "Q8", "C12"):
        gid = u12.name_index[gname]
        assert u12.name(residual(full, gid).residual_id) == "1"
        assert residual(trivial, gid).residual_id == gid


def test_residual_rejects_the_empty_class(u12):
    with pytest.raises(EmptyFormation):
        residual(empty_class(u12), u12.name_index["S3"])


def test_residual_members_agree_with_catalog_residual(u12):
    ab = class_from_text("abelian", u12)
    g = u12.group(u12.name_index["A4"])
    members = residual_members_of_table(g, ab)
    assert len(members) == 4
    w = residual(ab, u12.name_index["A4"])
    assert frozenset(w.members) == members


def test_verify_formation_flags(u12):
    assert verify_formation(class_from_text("abelian", u12)).is_formation
    assert verify_formation(class_from_text("nilpotent", u12)).is_formation
    assert verify_formation(class_from_text("soluble", u12)).is_formation
    bad = verify_formation(class_from_text("{1, C4}", u12))
    assert not bad.q_closed and not bad.r0_closed and not bad.is_formation
    sub_only = verify_formation(class_from_text("{1, C2, C4}", u12))
    assert sub_only.q_closed


def test_gaschutz_product_requires_an_inner_formation(u12):
    ab = verify_formation(class_from_text("abelian", u12))
    c4 = verify_formation(class_from_text("{1, C4}", u12))
    with pytest.raises(NotAFormation):
        gaschutz_product(ab, c4)
    with pytest.raises(EmptyFormation):
        gaschutz_product(ab, verify_formation(empty_class(u12)))


def test_metabelian_product_covers_every_small_group(u12):
    ab = verify_formation(class_from_text("abelian", u12))
    assert len(gaschutz_product(ab, ab)) == 24


def test_two_by_three_product_membership(u12):
    p2 = verify_formation(class_from_text("p-group(2)", u12))
    p3 = verify_formation(class_from_text("p-group(3)", u12))
    got = _names(gaschutz_product(p2, p3))
    assert got == {
        "1", "C2", "C3", "C2xC2", "C4", "C6", "C2xC2xC2", "C2xC4",
        "C8", "D8", "Q8", "C3xC3", "C9", "A4", "C12", "C2xC6",
    }
    assert "S3" not in got and "D12" not in got and "Dic3" not in got


def test_unit_laws(u12):
    trivial = verify_formation(class_from_text("trivial", u12))
    for text in ("abelian", "nilpotent", "p-group(2)"):
        f = verify_formation(class_from_text(text, u12))
        assert gaschutz_product(f, trivial).ids == f.cls.ids
        assert gaschutz_product(trivial, f).ids == f.cls.ids


def test_product_associativity(u12):
    ab = verify_formation(class_from_text("abelian", u12))
    p2 = verify_formation(class_from_text("p-group(2)", u12))
    p3 = verify_formation(class_from_text("p-group(3)", u12))
    left = gaschutz_product(verify_formation(gaschutz_product(ab, p2)), p3)
    right = gaschutz_product(ab, verify_formation(gaschutz_product(p2, p3)))
    assert left.ids == right.ids


def test_residual_commutes_with_epimorphic_images(u12):
    for text in ("abelian", "nilpotent", "p-group(2)"):
        checked, failures = residual_epi_commute_check(class_from_text(text, u12))
        assert checked == 113
        assert failures == []


def test_composite_residual_is_the_iterated_residual(u12):
    ab = verify_formation(class_from_text("abelian", u12))
    nil = verify_formation(class_from_text("nilpotent", u12))
    p3 = verify_formation(class_from_text("p-group(3)", u12))
    for outer, inner in ((nil, ab), (ab, ab), (p3, ab)):
        checked, failures = residual_composition_check(outer, inner)
        assert checked == 24
        assert failures == []


def test_class_product_of_cyclic_atoms(u12):
    x = class_from_text("{1, C2}", u12)
    y = class_from_text("{1, C3}", u12)
    assert _names(class_product(x, y)) == {"1", "C2", "C3", "C6"}


def test_class_product_associativity_gap_is_empty_here(u12):
    x = class_from_text("{1, C2}", u12)
    y = class_from_text("{1, C3}", u12)
    z = class_from_text("{1, C5}", u12)
    assert class_product_associativity_gap(x, y, z) == []


def test_formation_closure_frozen_values(u12):
    got = formation_closure(class_from_text("{1, C2}", u12))
    assert _names(got) == {"1", "C2", "C2xC2", "C2xC2xC2"}
    spec = verify_formation(got)
    assert spec.is_formation
    s3 = formation_closure(class_from_text("{S3}", u12))
    assert _names(s3) == {"1", "C2", "C2xC2", "S3", "C2xC2xC2", "D12"}


def test_fitting_closure_frozen_value(u12):
    got = fitting_closure(class_from_text("{1, C2}", u12))
    assert _names(got) == {
        "1", "C2", "C4", "C2xC2", "C2xC2xC2", "D8", "Q8", "C2xC4",
    }
    assert "C8" not in _names(got)
