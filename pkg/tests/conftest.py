import pytest

from adjfx.finite import BOOL, UNIT, Z2, Z3


@pytest.fixture
def small_universe():
    return [UNIT, BOOL]


@pytest.fixture
def triangle_universe():
    return [UNIT, BOOL, Z3]


@pytest.fixture
def z2():
    return Z2
