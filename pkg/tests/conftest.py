import pytest

from singforms import Ring, parse_poly


@pytest.fixture
def ring2():
    return Ring(("x", "y"))


@pytest.fixture
def ring3():
    return Ring(("x", "y", "z"))


@pytest.fixture
def ring4():
    return Ring(("x", "y", "z", "w"))


@pytest.fixture
def ring5():
    return Ring(("x", "y", "z", "w", "v"))


@pytest.fixture
def quadric3(ring3):
    return parse_poly("x^2+y^2+z^2", ring3)


@pytest.fixture
def quadric4(ring4):
    return parse_poly("x^2+y^2+z^2+w^2", ring4)


@pytest.fixture
def quadric5(ring5):
    return parse_poly("x^2+y^2+z^2+w^2+v^2", ring5)


@pytest.fixture
def cubic3(ring3):
    return parse_poly("x^3+y^3+z^3", ring3)


@pytest.fixture
def whitney(ring3w):
    return parse_poly("x^2 - y^2*z", ring3w)


@pytest.fixture
def ring3w():
    return Ring(("x", "y", "z"), weights=(3, 2, 2))
