from itertools import product

import pytest

from lediagrams._kernels import kernel
from lediagrams.filling import Filling, PatternClass, avoids, filling_from_rows
from lediagrams.graph import (
    BipartiteGraph,
    Orientation,
    chromatic_polynomial,
    chromatic_recurrence_check,
    count_acyclic_orientations,
    filling_to_orientation,
    graph_from_shape,
    is_acyclic,
    orientation_to_filling,
)
from lediagrams.polynomial import IntPolynomial
from lediagrams.shape import young_shape


def proper_colourings(g: BipartiteGraph, t: int) -> int:
    vertices = [("r", i) for i in range(1, g.k + 1)] + [("c", j) for j in range(1, g.m + 1)]
    n = 0
    for colours in product(range(t), repeat=len(vertices)):
        c = dict(zip(vertices, colours))
        if all(c[("r", i)] != c[("c", j)] for i, j in g.edges):
            n += 1
    return n


def test_k2_and_c4():
    k2 = graph_from_shape((1,), (1, 1))
    assert chromatic_polynomial(k2) == IntPolynomial([0, -1, 1])
    c4 = graph_from_shape((2, 2), (2, 2))
    assert len(c4.edges) == 4
    assert chromatic_polynomial(c4).to_list() == [0, -3, 6, -4, 1]
    assert count_acyclic_orientations(c4) == 14


def test_isolated_vertices_multiply_by_t():
    g = graph_from_shape((1,), (2, 2))
    assert g.n_vertices == 4 and len(g.edges) == 1
    assert chromatic_polynomial(g) == chromatic_polynomial(graph_from_shape((1,), (1, 1))) * IntPolynomial([0, 0, 1])


def test_edgeless_graph():
    g = BipartiteGraph(2, 1, frozenset())
    assert chromatic_polynomial(g) == IntPolynomial.monomial(3)
    assert count_acyclic_orientations(g) == 1


def test_box_must_contain_partition():
    with pytest.raises(ValueError):
        graph_from_shape((3, 1), (2, 2))
    with pytest.raises(ValueError):
        BipartiteGraph(1, 1, frozenset({(2, 1)}))


@pytest.mark.parametrize("p, box", [((2, 1), None), ((2, 2, 1), None), ((3, 1), (3, 3)), ((2, 2), (2, 3))])
def test_chromatic_matches_colour_count(p, box):
    g = graph_from_shape(p, box)
    chi = chromatic_polynomial(g)
    for t in range(4):
        assert chi(t) == proper_colourings(g, t)


def test_orientation_examples():
    zero = filling_to_orientation(Filling.zeros(young_shape((2, 2))))
    assert is_acyclic(zero)
    cyc = filling_to_orientation(filling_from_rows(["10", "01"]))
    assert not is_acyclic(cyc)
    assert len(cyc.arcs()) == 4


def test_forest_orientations_are_acyclic():
    g = graph_from_shape((3, 1, 1))
    edges = sorted(g.edges)
    for bits in product((0, 1), repeat=len(edges)):
        assert is_acyclic(Orientation(g, dict(zip(edges, bits))))


def test_orientation_round_trip_on_square():
    s = young_shape((2, 2))
    for code in range(16):
        f = Filling.from_code(s, code)
        assert orientation_to_filling(filling_to_orientation(f)) == f


def test_orientation_rejects_non_young():
    with pytest.raises(ValueError):
        filling_to_orientation(filling_from_rows(["1", "11"]))
    g = graph_from_shape((1,))
    with pytest.raises(ValueError):
        Orientation(g, {})


@pytest.mark.parametrize("p", [(2, 2), (3, 2, 1), (3, 3), (4, 2, 1), (2, 2, 2)])
def test_x_avoidance_is_acyclicity(p):
    s = young_shape(p)
    g, nr, nc = s.template()
    for code in range(1 << len(s)):
        f = Filling.from_code(s, code)
        ac = is_acyclic(filling_to_orientation(f))
        assert ac == avoids(f, PatternClass.X)
        assert ac == bool(kernel.acyclic(f.grid()[0], nr, nc))


def test_recurrence_report():
    r = chromatic_recurrence_check((2, 1))
    assert r.holds and r.bridge and bool(r)
    shrunk = chromatic_recurrence_check((1,), convention="shrunk")
    assert not shrunk.holds
    assert str(shrunk.rhs) == "t^2 - 2 + t^-1"
    with pytest.raises(ValueError):
        chromatic_recurrence_check((1,), convention="other")
    with pytest.raises(ValueError):
        chromatic_recurrence_check(())
