from __future__ import annotations

import pytest

from tracerepair.field import construct_field


@pytest.fixture(scope="session")
def gf4():
    return construct_field(2, 1, 2)


@pytest.fixture(scope="session")
def gf9():
    return construct_field(3, 1, 2)


@pytest.fixture(scope="session")
def gf8():
    return construct_field(2, 1, 3)


@pytest.fixture(scope="session")
def gf16_over_gf4():
    return construct_field(2, 2, 2)


@pytest.fixture(scope="session")
def gf16_over_gf2():
    return construct_field(2, 1, 4)


@pytest.fixture(scope="session")
def gf25():
    return construct_field(5, 1, 2)


@pytest.fixture(scope="session")
def gf64_over_gf8():
    return construct_field(2, 3, 2)
