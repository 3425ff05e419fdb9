from __future__ import annotations

import pytest

from grouplat.errors import BoundTooLarge, FormatError, NotInCatalog, VersionMismatch
from grouplat.groups import cyclic, dicyclic, direct_product, symmetric
from grouplat.universe import (
    build_universe,
    catalog_counts,
    load_catalog,
    render_catalog,
    save_catalog,
)

FROZEN_COUNTS = {6: 8, 8: 14, 12: 24, 15: 28, 16: 40, 24: 71}


def test_catalog_sizes_match_the_classical_counts(u6, u8, u12, u15, u24):
    built = {6: u6, 8: u8, 12: u12, 15: u15, 24: u24}
    for bound, u in built.items():
        assert len(u.entries) == FROZEN_COUNTS[bound]
    assert len(build_universe(16).entries) == FROZEN_COUNTS[16]


def test_per_order_histogram_up_to_fifteen(u15):
    counts = catalog_counts(u15)
    assert [counts[n] for n in range(1, 16)] == [
        1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1,
    ]


def test_entry_names_are_unique_and_trivial_comes_first(u12):
    names = [e.name for e in u12.entries]
    assert len(set(names)) == len(names)
    assert u12.name(0) == "1"
    assert u12.entries[0].group.order == 1


def test_catalogs_agree_on_their_common_prefix(u8, u12, u15):
    small = [e.name for e in u8.entries]
    assert [e.name for e in u12.entries][: len(small)] == small
    mid = [e.name for e in u12.entries]
    assert [e.name for e in u15.entries][: len(mid)] == mid


def test_canonical_id_recognizes_fresh_tables(u12):
    assert u12.name(u12.canonical_id(direct_product(cyclic(2), cyclic(3)))) == "C6"
    assert u12.name(u12.canonical_id(symmetric(3))) == "S3"
    assert u12.name(u12.canonical_id(dicyclic(3))) == "Dic3"


def test_groups_outside_the_bound_are_rejected(u12):
    s4 = symmetric(4)
    assert u12.canonical_id_or_none(s4) is None
    with pytest.raises(NotInCatalog):
        u12.canonical_id(s4)


def test_build_universe_bound_validation():
    with pytest.raises(ValueError):
        build_universe(0)
    with pytest.raises(BoundTooLarge):
        build_universe(65)


def test_quaternion_structure_id_sets(u12):
    q8 = u12.name_index["Q8"]
    s = u12.structure(q8)
    as_names = lambda ids: {u12.name(i) for i in ids}
    assert as_names(s.subgroup_ids) == {"1", "C2", "C4", "Q8"}
    assert as_names(s.quotient_ids) == {"1", "C2", "C2xC2", "Q8"}
    assert s.subnormal_ids == s.subgroup_ids
    assert s.frattini_members == (0, 2)


def test_dihedral_frattini_quotients(u12):
    d8 = u12.name_index["D8"]
    s = u12.structure(d8)
    assert {u12.name(i) for i in s.frattini_quotient_ids} == {"C2xC2", "D8"}


def test_structures_resolve_fully_within_the_curated_range(u24):
    for e in u24.entries:
        assert u24.structure(e.iso_id).unresolved_count == 0


def test_p_core_quotients_of_the_quaternion_group(u12):
    q8 = u12.name_index["Q8"]
    assert u12.ep_quot_ids(q8, 2) == u12.structure(q8).quotient_ids
    assert u12.ep_quot_ids(q8, 3) == frozenset((q8,))


def test_product_id_stays_inside_the_catalog(u12):
    c2, c3 = u12.name_index["C2"], u12.name_index["C3"]
    assert u12.name(u12.product_id(c2, c3)) == "C6"
    s3 = u12.name_index["S3"]
    assert u12.product_id(s3, s3) is None


def test_ids_of_order_lists_every_class_of_that_order(u12):
    assert [u12.name(i) for i in u12.ids_of_order(8)] == [
        "C8", "C2xC2xC2", "D8", "Q8", "C2xC4",
    ]
    assert u12.ids_of_order(7) == (u12.name_index["C7"],)


def test_catalog_round_trip_is_byte_exact(u12, tmp_path):
    path = str(tmp_path / "u12.cat")
    save_catalog(u12, path)
    text = (tmp_path / "u12.cat").read_text()
    again = load_catalog(path)
    assert render_catalog(again) == text
    assert [e.name for e in again.entries] == [e.name for e in u12.entries]
    assert again.max_order == 12


def test_load_rejects_future_versions(u6, tmp_path):
    text = render_catalog(u6).replace("GROUPCAT v1", "GROUPCAT v2", 1)
    path = tmp_path / "bad.cat"
    path.write_text(text)
    with pytest.raises(VersionMismatch):
        load_catalog(str(path))


def test_load_rejects_truncated_and_corrupt_files(u6, tmp_path):
    text = render_catalog(u6)

    def _load(content: str):
        path = tmp_path / "case.cat"
        path.write_text(content)
        return load_catalog(str(path))

    with pytest.raises(FormatError, match="newline"):
        _load(text.rstrip("\n"))
    lines = text.split("\n")
    with pytest.raises(FormatError, match="line"):
        _load("\n".join(lines[:4]) + "\n")
    corrupt = text.replace("0 1 2", "0 1 x", 1)
    assert corrupt != text
    with pytest.raises(FormatError):
        _load(corrupt)
