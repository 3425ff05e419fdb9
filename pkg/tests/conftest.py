from __future__ import annotations

import pytest

from grouplat.universe import build_universe


@pytest.fixture(scope="session")
def u6():
    return build_universe(6)


@pytest.fixture(scope="session")
def u8():
    return build_universe(8)


@pytest.fixture(scope="session")
def u12():
    return build_universe(12)


@pytest.fixture(scope="session")
def u15():
    return build_universe(15)


@pytest.fixture(scope="session")
def u24():
    return build_universe(24)
