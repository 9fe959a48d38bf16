import pytest

from ultranev.algebra import FieldBuilder, FieldSpec
from ultranev.sampling import half_integer_field, make_rng


@pytest.fixture
def qq5():
    return FieldSpec(0, 5)


@pytest.fixture
def qq3():
    return FieldSpec(0, 3)


@pytest.fixture
def sqrt3():
    return FieldBuilder(5).with_extension('s', 'x^2 - 3').get_result()


@pytest.fixture
def sqrt33():
    return FieldBuilder(5).with_extension('u', 'x^2 - 33').get_result()


@pytest.fixture
def gf3t():
    return FieldBuilder(3).with_characteristic(3).get_result()


@pytest.fixture
def wfield():
    return half_integer_field(5)


@pytest.fixture
def rng():
    return make_rng(20240611)
