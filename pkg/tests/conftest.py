import pytest

from brauergraph.census import census
from brauergraph.graph import (
    BrauerGraph,
    HalfEdge,
    cycle_graph,
    loop_graph,
    path_graph,
    star_graph,
    triangle_graph,
)


def pendant_triangle() -> BrauerGraph:
    """Three-cycle with one extra pendant edge; both edge kinds present."""
    vertices = [("alpha", 1), ("beta", 1), ("gamma", 1), ("delta", 1)]
    edges = [
        ("e1", ("alpha", "beta")),
        ("e2", ("beta", "gamma")),
        ("e3", ("gamma", "alpha")),
        ("e4", ("alpha", "delta")),
    ]
    rotation = {
        "alpha": [HalfEdge("e1", 0), HalfEdge("e3", 1), HalfEdge("e4", 0)],
        "beta": [HalfEdge("e1", 1), HalfEdge("e2", 0)],
        "gamma": [HalfEdge("e2", 1), HalfEdge("e3", 0)],
        "delta": [HalfEdge("e4", 1)],
    }
    return BrauerGraph(vertices, edges, rotation)


@pytest.fixture
def triangle():
    return triangle_graph()


@pytest.fixture
def triangle_m2():
    return triangle_graph(2)


@pytest.fixture
def a2():
    return path_graph(2)


@pytest.fixture
def a3():
    return path_graph(3)


@pytest.fixture
def a4():
    return path_graph(4)


@pytest.fixture
def star3_m2():
    return star_graph(3, center_multiplicity=2)


def reduced_desk_graphs() -> list[tuple[str, BrauerGraph]]:
    return [
        ("triangle", triangle_graph()),
        ("square", cycle_graph(4)),
        ("a3", path_graph(3)),
        ("a4", path_graph(4)),
        ("a5", path_graph(5)),
        ("star3", star_graph(3)),
        ("star4", star_graph(4)),
        ("pendant_triangle", pendant_triangle()),
    ]


def desk_graphs() -> list[tuple[str, BrauerGraph]]:
    return reduced_desk_graphs() + [
        ("a2", path_graph(2)),
        ("loop", loop_graph()),
        ("loop_m2", loop_graph(2)),
        ("triangle_m2", triangle_graph(2)),
        ("two_cycle_m2", cycle_graph(2, 2)),
        ("star3_m2", star_graph(3, 2)),
        ("a_n_ends_m2", path_graph(4, [2, 1, 1, 2])),
        ("a3_one_end_m2", path_graph(3, [1, 1, 2])),
    ]


@pytest.fixture(scope="session")
def small_census():
    """Every connected Brauer graph with at most 4 edges and multiplicities
    at most 2, all rotation systems up to isomorphism."""
    return list(census(4, 2))
