import pytest

from proxalg.core.space import Region
from proxalg.services.spacefile import load_space
from tests.helpers import FIXTURES, x


@pytest.fixture
def table1():
    """The 5x5, 1-based RGB grid of the min-index example."""
    return load_space(FIXTURES / "table1.space")


@pytest.fixture
def table2():
    """The 6x6, 0-based RGB grid of the addition-modulo-5 example."""
    return load_space(FIXTURES / "table2.space")


@pytest.fixture
def region_a(table1):
    return Region.of(table1, [x(2, 1), x(2, 2), x(3, 2), x(3, 3)])


@pytest.fixture
def region_b(table2):
    return Region.of(table2, [x(2, 3), x(3, 2)])
