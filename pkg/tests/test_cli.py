from __future__ import annotations

import pytest

from grouplat.cli import main


def _run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_universe_build_summary(capsys):
    code, out = _run(capsys, "universe", "build", "--max-order", "8")
    assert code == 0
    assert "UNIVERSE max_order=8 count=14" in out
    assert "ORDER 8: 5" in out


def test_universe_info_describes_a_group(capsys):
    code, out = _run(capsys, "universe", "info", "--group", "Q8", "--max-order", "8")
    assert code == 0
    assert "GROUP Q8 id=12 order=8" in out
    assert "SUBGROUPS" in out and "QUOTIENTS" in out
    assert "C2xC2" in out


def test_universe_info_unknown_group_is_a_usage_error(capsys):
    code, out = _run(capsys, "universe", "info", "--group", "M11", "--max-order", "8")
    assert code == 2


def test_universe_save_load_round_trip(tmp_path, capsys):
    path = str(tmp_path / "u8.cat")
    code, _ = _run(capsys, "universe", "save", "--max-order", "8", "--out", path)
    assert code == 0
    code, out = _run(capsys, "universe", "load", "--catalog", path)
    assert code == 0
    assert "count=14" in out
    assert "CHECK round trip byte-exact: PASS" in out


def test_catalog_env_variable_is_honored(tmp_path, capsys, monkeypatch):
    path = str(tmp_path / "u6.cat")
    _run(capsys, "universe", "save", "--max-order", "6", "--out", path)
    monkeypatch.setenv("GROUPLAT_CATALOG", path)
    code, out = _run(capsys, "universe", "info")
    assert code == 0
    assert "max_order=6 count=8" in out


def test_op_apply(capsys):
    code, out = _run(capsys, "op", "apply", "--op", "Q", "--class", "{C6}", "--max-order", "8")
    assert code == 0
    assert "RESULT {1, C2, C3, C6}" in out
    assert "COUNT 4" in out


def test_op_apply_bad_expression_is_a_usage_error(capsys):
    code, _ = _run(capsys, "op", "apply", "--op", "Q .", "--class", "{C6}")
    assert code == 2
    code, _ = _run(capsys, "op", "apply", "--op", "Q", "--class", "{C99}")
    assert code == 2


def test_op_axioms(capsys):
    code, out = _run(capsys, "op", "axioms", "--op", "S", "--max-order", "6")
    assert code == 0
    assert "CHECK S idempotent: PASS" in out


def test_op_axioms_reports_failures(capsys):
    code, out = _run(capsys, "op", "axioms", "--op", "Q . R0", "--max-order", "12")
    assert code == 1
    assert "CHECK Q.R0 idempotent: FAIL" in out
    assert "WITNESS" in out


def test_op_additive(capsys):
    code, out = _run(capsys, "op", "additive", "--op", "S", "--max-order", "12")
    assert code == 0
    assert "CHECK S additive: PASS" in out
    code, out = _run(capsys, "op", "additive", "--op", "R0", "--max-order", "12")
    assert code == 1
    assert "WITNESS" in out and "C6" in out


def test_op_leq(capsys):
    code, out = _run(capsys, "op", "leq", "--left", "Sn", "--right", "S", "--max-order", "12")
    assert code == 0
    assert "CHECK Sn below S: PASS" in out
    code, out = _run(capsys, "op", "leq", "--left", "S", "--right", "Sn", "--max-order", "12")
    assert code == 1
    assert "WITNESS" in out


def test_op_adjunction(capsys):
    code, out = _run(
        capsys, "op", "adjunction", "--a", "Q", "--b", "R0", "--c", "Q v R0",
        "--max-order", "12", "--trials", "8",
    )
    assert code == 0
    assert "CHECK" in out


def test_formation_residual(capsys):
    code, out = _run(
        capsys, "formation", "residual", "--formation", "abelian", "--group", "S3",
        "--max-order", "12",
    )
    assert code == 0
    assert "RESIDUAL C3" in out
    assert "QUOTIENT C2" in out


def test_formation_residual_warns_on_non_formations(capsys):
    code, out = _run(
        capsys, "formation", "residual", "--formation", "{1, C4}", "--group", "D8",
        "--max-order", "12",
    )
    assert code == 0
    assert "NOTE" in out


def test_formation_product(capsys):
    code, out = _run(
        capsys, "formation", "product", "--a", "p-group(2)", "--b", "p-group(3)",
        "--max-order", "12",
    )
    assert code == 0
    assert "COUNT 16" in out


def test_formation_product_gate(capsys):
    code, out = _run(
        capsys, "formation", "product", "--a", "abelian", "--b", "{1, C4}",
        "--max-order", "12",
    )
    assert code == 1


def test_formation_closures(capsys):
    code, out = _run(capsys, "formation", "closure", "--class", "{C2}", "--max-order", "12")
    assert code == 0
    assert "RESULT {1, C2, C2xC2, C2xC2xC2}" in out
    code, out = _run(capsys, "formation", "fit", "--class", "{C2}", "--max-order", "12")
    assert code == 0
    assert "COUNT 8" in out


def test_topology_core(capsys):
    code, out = _run(capsys, "topology", "core", "--relation", "subgroup", "--max-order", "8")
    assert code == 0
    assert "CORE size=1" in out


def test_topology_core_emits_dot(capsys):
    code, out = _run(
        capsys, "topology", "core", "--relation", "subgroup", "--max-order", "8",
        "--emit-dot",
    )
    assert code == 0
    assert "digraph" in out


def test_topology_connected(capsys):
    code, out = _run(capsys, "topology", "connected", "--relation", "quotient", "--max-order", "12")
    assert code == 0
    assert "COMPONENTS bfs=1 union_find=1" in out
    assert "CHECK the two algorithms agree: PASS" in out


def test_topology_equiv(capsys):
    code, out = _run(
        capsys, "topology", "equiv", "--a", "subgroup", "--b", "quotient",
        "--max-order", "12",
    )
    assert code == 0
    assert "PASS" in out


def test_topology_equiv_rejects_unknown_relations(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["topology", "equiv", "--a", "subgroup", "--b", "frattini"])
    assert exc.value.code == 2


def test_topology_probe(capsys):
    code, out = _run(capsys, "topology", "probe", "--max-order", "12")
    assert code == 0
    assert "STATUS EXPERIMENTAL-TRUNCATED" in out
    assert "components=16" in out
    code, out = _run(capsys, "topology", "probe", "--max-order", "12", "--prime", "2")
    assert code == 0
    assert "components=9" in out


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["op"])
    assert exc.value.code == 2
