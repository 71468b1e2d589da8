import json
import math
from fractions import Fraction

import pytest
from hypothesis import given

from gainrank.gain_core import (
    I,
    MINUS_I,
    ONE,
    AngleGain,
    ExactGain,
    GraphError,
    adjacency_matrix,
    build_graph,
    components,
    delete_vertices,
    disjoint_union,
    graph_from_dict,
    graph_from_matrix,
    graph_to_dict,
    loads_graph,
    dumps_graph,
)
from gainrank.qi import QI

from conftest import cycle, gain_graphs, path


def test_reversed_edge_is_stored_conjugated():
    g = build_graph(2, [(1, 0, 1j)])
    assert g.edges == ((0, 1, MINUS_I),)
    assert g.gain(1, 0) == I
    assert g.gain(0, 1) == MINUS_I


def test_triangle_all_ones():
    g = build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert g.m == 3
    assert all(z == ONE for _, _, z in g.edges)


def test_single_vertex_and_empty():
    assert build_graph(1, []).n == 1
    assert build_graph(0, []).m == 0


@pytest.mark.parametrize(
    "n, edges, msg",
    [
        (2, [(0, 0, 1)], "loop"),
        (2, [(0, 1, 1), (1, 0, 1)], "duplicate"),
        (2, [(0, 1, QI(Fraction(1, 2), Fraction(1, 2)))], "unit modulus"),
        (2, [(0, 2, 1)], "out of range"),
        (3, [(0, 1, 1), (1, 2, AngleGain(0.3))], "mixed"),
    ],
)
def test_build_graph_rejects(n, edges, msg):
    with pytest.raises(GraphError, match=msg):
        build_graph(n, edges)


def test_pythagorean_gain_is_exact_unit():
    z = ExactGain(QI(3, 4) / 5)
    assert (z * z.conjugate()).value == QI(1)


def test_angle_gain_conjugate_product_is_one():
    z = AngleGain(0.7)
    assert abs((z * z.conjugate()).to_complex() - 1) < 1e-15


def test_adjacency_of_all_ones_triangle_is_01_matrix():
    a = adjacency_matrix(cycle(3))
    assert [[int(x.re) for x in row] for row in a.entries] == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_adjacency_hermitian_entries():
    a = adjacency_matrix(build_graph(2, [(0, 1, 1j)]))
    assert a[0, 1] == QI(0, 1)
    assert a[1, 0] == QI(0, -1)


def test_adjacency_of_edgeless_graph():
    a = adjacency_matrix(build_graph(3))
    assert all(x.is_zero() for row in a.entries for x in row)


def test_approx_adjacency_is_numpy():
    g = build_graph(2, [(0, 1, AngleGain(math.pi / 3))])
    a = adjacency_matrix(g)
    assert not a.exact
    assert abs(a[0, 1] - complex(0.5, math.sqrt(3) / 2)) < 1e-12
    assert abs(a[1, 0] - a[0, 1].conjugate()) < 1e-15


@given(gain_graphs())
def test_matrix_round_trip(g):
    assert graph_from_matrix(adjacency_matrix(g)) == g


@given(gain_graphs())
def test_entries_multiply_to_one(g):
    a = adjacency_matrix(g)
    for u, v, _ in g.edges:
        assert a[u, v] * a[v, u] == QI(1)


@given(gain_graphs())
def test_delete_nothing_is_identity(g):
    h, mapping = delete_vertices(g, [])
    assert h == g
    assert mapping == {v: v for v in range(g.n)}


def test_delete_vertex_of_triangle_keeps_gain():
    g = cycle(3, [1, 1j, -1])
    h, mapping = delete_vertices(g, [1])
    assert mapping == {0: 0, 2: 1}
    assert h.edges == ((0, 1, ExactGain(QI(-1))),)


def test_c4_minus_vertex_is_p3():
    h, _ = delete_vertices(cycle(4), [0])
    assert h.n == 3 and sorted(h.degree(v) for v in range(3)) == [1, 1, 2]


def test_delete_out_of_range():
    with pytest.raises(GraphError):
        delete_vertices(cycle(3), [5])


def test_components():
    two_edges = build_graph(4, [(0, 1), (2, 3)])
    assert len(components(two_edges)) == 2
    assert len(components(cycle(5))) == 1
    parts = components(build_graph(4))
    assert len(parts) == 4 and sum(h.n for h, _ in parts) == 4


@given(gain_graphs())
def test_component_sizes_sum_to_n(g):
    parts = components(g)
    assert sum(h.n for h, _ in parts) == g.n
    assert sum(h.m for h, _ in parts) == g.m


def test_disjoint_union_offsets():
    g = disjoint_union(cycle(3), path(2))
    assert g.n == 5 and (3, 4) in g.edge_pairs()


def test_json_round_trip_exact():
    g = build_graph(3, [(0, 1, QI(3, 4) / 5), (1, 2, -1j)])
    assert loads_graph(dumps_graph(g)) == g
    assert graph_from_dict(json.loads(dumps_graph(g))) == g


def test_json_angle_gain():
    g = graph_from_dict({"n": 2, "edges": [{"u": 0, "v": 1, "gain": {"angle_deg": 90}}]})
    assert isinstance(g.edges[0][2], AngleGain)
    assert abs(g.edges[0][2].to_complex() - 1j) < 1e-12
    assert graph_to_dict(g)["edges"][0]["gain"] == {"angle_deg": 90.0}


@pytest.mark.parametrize(
    "payload",
    [
        '{"n": 2, "edges": [{"u": 0, "v": 1, "gain": {"re": "1/2", "im": "1/2"}}]}',
        '{"n": 3, "edges": [{"u": 0, "v": 1, "gain": {"re": "1", "im": "0"}},'
        ' {"u": 1, "v": 2, "gain": {"angle_deg": 30}}]}',
        '{"edges": []}',
        '{"n": 2, "edges": [{"u": 0}]}',
        "not json",
        '{"n": 2, "edges": [{"u": 0, "v": 1, "gain": {"re": "x"}}]}',
    ],
)
def test_json_rejects(payload):
    with pytest.raises(GraphError):
        loads_graph(payload)
