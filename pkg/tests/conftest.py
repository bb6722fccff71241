import pytest

from causal_hydrogen.constants import default_constants


@pytest.fixture(scope="session")
def consts():
    return default_constants()
