import pytest

from quadprime.sieve import build_table


@pytest.fixture(scope="session")
def t_small():
    return build_table(10**4 + 2)


@pytest.fixture(scope="session")
def t_med():
    return build_table(10**6 + 2)


@pytest.fixture(scope="session")
def t_big():
    return build_table(10**7)
