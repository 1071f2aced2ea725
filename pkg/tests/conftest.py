import pytest

from phasecat import fixtures as fx

GROUP_NAMES = ["trivial", "c2", "c4", "s3", "d4", "a4", "s4"]


@pytest.fixture(scope="session")
def groups():
    return {name: fx.load_group(name) for name in GROUP_NAMES}


@pytest.fixture(scope="session")
def s3(groups):
    return groups["s3"]


@pytest.fixture(scope="session")
def c2(groups):
    return groups["c2"]


@pytest.fixture(scope="session")
def square_reflection(c2):
    return fx.load_complex("square_reflection", c2)


@pytest.fixture(scope="session")
def square_halfturn(c2):
    return fx.load_complex("square_halfturn", c2)
