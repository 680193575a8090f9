import pytest
from hypothesis import settings

from helpers import EXAMPLE_B, EXAMPLE_C, EXAMPLE_C_PLUS

settings.register_profile('default', max_examples=200, deadline=None)
settings.load_profile('default')


@pytest.fixture
def example_b():
    return EXAMPLE_B


@pytest.fixture
def example_c():
    return EXAMPLE_C


@pytest.fixture
def example_c_plus():
    return EXAMPLE_C_PLUS
