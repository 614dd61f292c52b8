import pytest

from cartier3 import Field


@pytest.fixture(scope="session")
def f2():
    return Field(2, 1)


@pytest.fixture(scope="session")
def f3():
    return Field(3, 1)


@pytest.fixture(scope="session")
def f4():
    return Field(2, 2)


@pytest.fixture(scope="session")
def f5():
    return Field(5, 1)


@pytest.fixture(scope="session")
def f9():
    return Field(3, 2)


@pytest.fixture(scope="session")
def caches():
    """Shared per-session measurement caches so the heavy sweeps run once."""
    return {"census": {}, "sweep": {}, "counts": {}}
