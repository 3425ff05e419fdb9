from __future__ import annotations

import pytest

from grouplat.classes import (
    GroupClass,
    class_from_text,
    empty_class,
    full_class,
    lift_class,
    predicate_class,
    restrict_class,
)
from grouplat.errors import (
    ExpressionError,
    NotPrime,
    UniverseMismatch,
    UnknownName,
    UnknownPredicate,
)


def _names(x: GroupClass) -> set[str]:
    return {x.universe.name(i) for i in x.ids}


def test_explicit_lists_and_bare_names(u12):
    assert _names(class_from_text("{1, C2, C6}", u12)) == {"1", "C2", "C6"}
    assert _names(class_from_text("S3", u12)) == {"1", "S3"}
    assert _names(class_from_text("{}", u12)) == set()


def test_nonempty_classes_always_contain_the_trivial_group(u12):
    assert "1" in _names(class_from_text("{C2}", u12))
    assert class_from_text("{C2}", u12).render() == "{1, C2}"
    assert len(empty_class(u12)) == 0


def test_predicates_select_by_stored_flags(u12):
    assert len(class_from_text("abelian", u12)) == 17
    assert len(class_from_text("nilpotent", u12)) == 19
    assert len(class_from_text("soluble", u12)) == 24
    assert _names(class_from_text("trivial", u12)) == {"1"}
    assert len(class_from_text("all", u12)) == 24


def test_p_group_predicate(u12):
    two = class_from_text("p-group(2)", u12)
    assert _names(two) == {
        "1", "C2", "C4", "C2xC2", "C8", "C2xC2xC2", "D8", "Q8", "C2xC4",
    }
    assert _names(class_from_text("elementary-abelian(3)", u12)) == {"1", "C3", "C3xC3"}
    with pytest.raises(NotPrime):
        predicate_class(u12, "p-group", 4)


def test_intersection_binds_tighter_than_union(u12):
    x = class_from_text("{1, C5} + abelian & p-group(2)", u12)
    assert "C5" in _names(x)
    assert "D8" not in _names(x)
    assert "C2xC4" in _names(x)
    y = class_from_text("abelian & p-group(2) + {D8}", u12)
    assert "D8" in _names(y)
    assert "C12" not in _names(y)


def test_render_normalizes_and_round_trips(u12):
    x = class_from_text("{C6,C2,  1}", u12)
    assert x.render() == "{1, C2, C6}"
    assert _names(class_from_text(x.render(), u12)) == _names(x)
    assert empty_class(u12).render() == "{}"


def test_membership_and_len(u12):
    x = class_from_text("{1, C2, C6}", u12)
    assert u12.name_index["C6"] in x.ids
    assert len(x) == 3
    assert len(full_class(u12)) == 24
    assert x.is_subset(full_class(u12))
    assert not full_class(u12).is_subset(x)


def test_union_and_intersect(u12):
    a = class_from_text("{1, C2}", u12)
    b = class_from_text("{C2, C3}", u12)
    assert _names(a.union(b)) == {"1", "C2", "C3"}
    assert _names(a.intersect(b)) == {"1", "C2"}
    assert _names(a.intersect(empty_class(u12))) == set()


def test_unknown_names_and_predicates(u12):
    with pytest.raises(UnknownName):
        class_from_text("{1, C99}", u12)
    with pytest.raises(UnknownName):
        class_from_text("perfect", u12)
    with pytest.raises(UnknownPredicate):
        class_from_text("perfect(2)", u12)
    with pytest.raises(ExpressionError):
        class_from_text("{1, C2", u12)
    with pytest.raises(ExpressionError):
        class_from_text("{1} + ", u12)


def test_lift_preserves_members_by_name(u6, u12):
    x = class_from_text("{1, C2, S3}", u6)
    lifted = lift_class(x, u12)
    assert lifted.universe is u12
    assert _names(lifted) == {"1", "C2", "S3"}


def test_restrict_drops_large_members(u12):
    x = class_from_text("{1, C2, D12, Q8}", u12)
    small = restrict_class(x, 6)
    assert _names(small) == {"1", "C2"}
    assert restrict_class(x, 12).ids == x.ids


def test_restrict_can_retarget_to_a_smaller_catalog(u6, u12):
    x = class_from_text("{1, S3, A4}", u12)
    moved = restrict_class(x, 6, target=u6)
    assert moved.universe is u6
    assert _names(moved) == {"1", "S3"}


def test_cross_universe_operations_are_rejected(u6, u12):
    a = class_from_text("{1}", u6)
    b = class_from_text("{1}", u12)
    with pytest.raises(UniverseMismatch):
        a.union(b)
    with pytest.raises(UniverseMismatch):
        a.intersect(b)


def test_members_lists_ids_in_catalog_order(u12):
    x = class_from_text("{S3, C2}", u12)
    assert x.members == tuple(sorted(x.ids))
    tables = [u12.group(i) for i in x.members]
    assert [g.order for g in tables] == [1, 2, 6]
    assert not tables[-1].is_abelian
