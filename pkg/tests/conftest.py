import pytest

from app.functions.betti import clear_homology_cache
from app.functions.graph_core import from_edge_list
from tests.graphs import complete, cycle, path, star


@pytest.fixture(autouse=True)
def fresh_homology_cache():
    clear_homology_cache()
    yield
    clear_homology_cache()


@pytest.fixture
def K2():
    return complete(2)


@pytest.fixture
def P3():
    return path(3)


@pytest.fixture
def P4():
    return path(4)


@pytest.fixture
def P5():
    return path(5)


@pytest.fixture
def C3():
    return cycle(3)


@pytest.fixture
def C4():
    return cycle(4)


@pytest.fixture
def C5():
    return cycle(5)


@pytest.fixture
def K4():
    return complete(4)


@pytest.fixture
def claw():
    return star(3)


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 0"""
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
