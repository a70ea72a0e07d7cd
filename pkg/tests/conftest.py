"""Shared fixtures: the running examples used throughout the test suite."""

import pytest
from hypothesis import settings

from complexpand import Graph, SimplicialComplex

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

VERTICES5 = ("x1", "x2", "x3", "x4", "x5")


@pytest.fixture
def delta0():
    """Three-facet complex on five vertices: two triangles glued along an
    edge, plus an edge hanging off one of them.  Vertex decomposable and
    shellable but not Cohen-Macaulay (it is not pure)."""
    return SimplicialComplex.from_facets(
        VERTICES5,
        [["x1", "x2", "x3"], ["x1", "x2", "x4"], ["x4", "x5"]],
    )


@pytest.fixture
def delta0_shelling():
    """A shelling order for ``delta0`` (larger facets first)."""
    return (
        frozenset({"x1", "x2", "x3"}),
        frozenset({"x1", "x2", "x4"}),
        frozenset({"x4", "x5"}),
    )


@pytest.fixture
def g0():
    """A chordal graph on five vertices."""
    return Graph.from_edges(
        VERTICES5,
        [
            ["x1", "x2"],
            ["x1", "x4"],
            ["x1", "x5"],
            ["x2", "x3"],
            ["x2", "x4"],
            ["x2", "x5"],
            ["x3", "x4"],
        ],
    )


@pytest.fixture
def diamond_graph():
    """Two triangles glued along the edge x2 x4, plus the pendant vertex x5
    attached to x2.  Chordal."""
    return Graph.from_edges(
        VERTICES5,
        [
            ["x1", "x2"],
            ["x1", "x4"],
            ["x2", "x3"],
            ["x2", "x4"],
            ["x2", "x5"],
            ["x3", "x4"],
        ],
    )


@pytest.fixture
def projective_plane():
    """Minimal six-vertex triangulation of the real projective plane.
    Cohen-Macaulay over the rationals but not over GF(2)."""
    return SimplicialComplex.from_facets(
        ("v1", "v2", "v3", "v4", "v5", "v6"),
        [
            ["v1", "v2", "v3"],
            ["v1", "v2", "v4"],
            ["v1", "v3", "v5"],
            ["v1", "v4", "v6"],
            ["v1", "v5", "v6"],
            ["v2", "v3", "v6"],
            ["v2", "v4", "v5"],
            ["v2", "v5", "v6"],
            ["v3", "v4", "v5"],
            ["v3", "v4", "v6"],
        ],
    )


@pytest.fixture
def two_sphere():
    """Boundary of the tetrahedron: a triangulated two-sphere."""
    return SimplicialComplex.from_facets(
        ("a", "b", "c", "d"),
        [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]],
    )
