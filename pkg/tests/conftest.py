import pytest

from kmcrystals import CartanData


@pytest.fixture(scope="session")
def a1():
    return CartanData.preset("A1")


@pytest.fixture(scope="session")
def a2():
    return CartanData.preset("A2")


@pytest.fixture(scope="session")
def a3():
    return CartanData.preset("A3")


@pytest.fixture(scope="session")
def b2():
    return CartanData.preset("B2")


@pytest.fixture(scope="session")
def g2():
    return CartanData.preset("G2")


@pytest.fixture(scope="session")
def a1aff():
    return CartanData.preset("A1~")
