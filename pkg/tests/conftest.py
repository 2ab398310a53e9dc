import pytest

import config as cfg
from gems import log
from gems.graph import build_graph, sphere_graph


def gem(name, n, *matchings):
    return build_graph(n, [list(m) for m in matchings], name)


@pytest.fixture(autouse=True)
def quiet_library():
    verbose, sinks = cfg.VERBOSE, list(log.discrepancy_sinks)
    cfg.VERBOSE = False
    yield
    cfg.VERBOSE = verbose
    log.discrepancy_sinks[:] = sinks


@pytest.fixture
def g2():
    return sphere_graph()


@pytest.fixture
def j4():
    return gem('J4', 4,
               [(1, 2), (3, 4)],
               [(2, 3), (4, 1)],
               [(1, 2), (3, 4)],
               [(2, 3), (4, 1)])


@pytest.fixture
def k4neg():
    return gem('K4NEG', 4,
               [(1, 2), (3, 4)],
               [(1, 3), (2, 4)],
               [(1, 4), (2, 3)],
               [(1, 2), (3, 4)])


@pytest.fixture
def b2():
    return gem('B2', 4,
               [(1, 2), (3, 4)],
               [(1, 2), (3, 4)],
               [(1, 2), (3, 4)],
               [(2, 3), (4, 1)])


@pytest.fixture
def j6():
    return gem('J6', 6,
               [(1, 5), (2, 6), (3, 4)],
               [(3, 5), (2, 6), (4, 1)],
               [(1, 2), (3, 4), (5, 6)],
               [(2, 3), (4, 1), (5, 6)])


@pytest.fixture
def j8():
    return gem('J8', 8,
               [(1, 4), (2, 3), (5, 8), (6, 7)],
               [(1, 6), (2, 5), (3, 4), (7, 8)],
               [(1, 2), (3, 4), (5, 6), (7, 8)],
               [(2, 3), (4, 5), (6, 7), (8, 1)])


@pytest.fixture
def c8():
    return gem('C8', 8,
               [(1, 4), (2, 3), (5, 8), (6, 7)],
               [(1, 6), (5, 8), (3, 4), (2, 7)],
               [(1, 8), (3, 4), (5, 6), (2, 7)],
               [(2, 3), (4, 5), (6, 7), (1, 8)])
