import pytest

from covg import braid_com, fixture


@pytest.fixture(scope="session")
def figure1():
    return fixture("figure1")


@pytest.fixture(scope="session")
def figure1_rect():
    return fixture("figure1-rectangle")


@pytest.fixture(scope="session")
def braid1():
    return braid_com(1)


@pytest.fixture(scope="session")
def braid2():
    return braid_com(2)


@pytest.fixture(scope="session")
def braid3():
    return braid_com(3)


@pytest.fixture(scope="session")
def braid4():
    return braid_com(4)


@pytest.fixture(scope="session")
def corpus(figure1, figure1_rect, braid1, braid2, braid3, braid4):
    """The COMs every counting/structure suite runs over."""
    return {
        "figure1": figure1,
        "figure1-rectangle": figure1_rect,
        "braid1": braid1,
        "braid2": braid2,
        "braid3": braid3,
        "braid4": braid4,
    }
