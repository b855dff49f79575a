import random

import pytest

from qcstab import make_field


@pytest.fixture
def gf2():
    return make_field(2, 1)


@pytest.fixture
def gf3():
    return make_field(3, 1)


@pytest.fixture
def gf4():
    return make_field(2, 2)


@pytest.fixture
def gf8():
    return make_field(2, 3)


@pytest.fixture
def gf9():
    return make_field(3, 2)


@pytest.fixture
def rng():
    return random.Random(0xC0DE)
