import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from scx import cross_polytope_boundary, cycle, join, simplex_boundary


@pytest.fixture(scope="session")
def bd3():
    return simplex_boundary(3)


@pytest.fixture(scope="session")
def bd4():
    return simplex_boundary(4)


@pytest.fixture(scope="session")
def bd5():
    return simplex_boundary(5)


@pytest.fixture(scope="session")
def oct3():
    """Boundary of the 4-dimensional cross polytope."""
    return cross_polytope_boundary(4)


@pytest.fixture(scope="session")
def cycle_join():
    """The 3-sphere C4 * boundary of a triangle, prime with g2 = 1."""
    return join(cycle(4), simplex_boundary(2))
