"""Acceptance gate: the nine standing verification criteria.

Runs the full verification once at bound 15 and asserts each criterion
separately so the report reads one line per criterion. Criterion 3 is
expected to fail until the additivity question for the formation
closure is settled: the closure of {1, C2} + {1, C3} contains C6 via a
subdirect product mixing the two sides, while the union of the two
one-sided closures does not. The test states the criterion as written
and is left red on purpose; see the criterion 3 docstring below.
"""
from __future__ import annotations

import pytest

from grouplat.verify import run_verification


@pytest.fixture(scope="module")
def report():
    return run_verification(max_order=15, seed=7, trials=200)


def _criterion(report, k: int):
    res = next(r for r in report.results if r.criterion == k)
    print(f"CRITERION {k} {res.status} {res.title}")
    for line in res.lines:
        print(f"  {line}")
    return res


def test_criterion_1_primitive_closure_axioms(report):
    res = _criterion(report, 1)
    assert all("FAIL" not in line for line in res.lines if line.startswith("CHECK exhaustive"))
    assert res.status == "PASS"


def test_criterion_2_additivity_partition(report):
    res = _criterion(report, 2)
    assert res.status == "PASS"


def test_criterion_3_closure_join_additivity(report):
    """Formation closure additive, fitting closure not.

    The fitting clause holds with the canonical witness. The formation
    clause fails: Q v R0 applied to the union {1, C2} + {1, C3} reaches
    C6 as a subdirect product of C2 and C3, and C6 lies in neither
    one-sided closure, so additivity breaks. The witness is printed by
    the verification run. Left red deliberately rather than weakening
    the stated criterion.
    """
    res = _criterion(report, 3)
    fitting_lines = [l for l in res.lines if "fitting closure" in l]
    assert fitting_lines and all(": PASS" in l for l in fitting_lines)
    assert res.status == "PASS"


def test_criterion_4_residual_epi_commutation(report):
    res = _criterion(report, 4)
    assert res.status == "PASS"


def test_criterion_5_monoidal_product(report):
    res = _criterion(report, 5)
    assert res.status == "PASS"


def test_criterion_6_operator_lattice(report):
    res = _criterion(report, 6)
    assert res.status == "PASS"


def test_criterion_7_comparison_diagram(report):
    res = _criterion(report, 7)
    assert res.status == "PASS"
    assert not any("FAIL" in line for line in res.lines)


def test_criterion_8_topology(report):
    res = _criterion(report, 8)
    assert res.status == "PASS"


def test_criterion_9_oracle_agreement(report):
    res = _criterion(report, 9)
    assert res.status == "PASS"
