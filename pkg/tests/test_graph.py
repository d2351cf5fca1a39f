import pytest

from hdecomp.errors import DomainError
from hdecomp.graph import (Graph, bits, complete_multipartite, named_graph,
                           plant, random_graph, turan_graph, turan_part_sizes)


def test_from_edges_and_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edge_count() == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.degree(1) == 2
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    assert g.min_degree() == 1 and g.max_degree() == 2


def test_validation_rejects_bad_rows():
    with pytest.raises(DomainError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(DomainError):
        Graph(1, (1,))  # self-loop
    with pytest.raises(DomainError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(DomainError):
        Graph.from_edges(2, [(1, 1)])


def test_add_remove_edges_immutable():
    g = Graph.from_edges(3, [(0, 1)])
    h = g.add_edges([(1, 2)])
    assert g.edge_count() == 1 and h.edge_count() == 2
    assert h.remove_edges([(0, 1), (1, 2)]).edge_count() == 0


def test_induced_and_permuted():
    g = named_graph("bowtie")
    tri = g.induced([0, 1, 2])
    assert tri.edge_count() == 3 and tri.n == 3
    p = g.permuted([4, 3, 2, 1, 0])
    assert p.edge_count() == g.edge_count()
    assert p.has_edge(4, 3)  # image of (0, 1)


def test_connectivity():
    assert named_graph("c5").is_connected()
    assert not Graph.from_edges(4, [(0, 1), (2, 3)]).is_connected()
    assert Graph(0, ()).is_connected()


def test_bits():
    assert bits(0) == []
    assert bits(0b10110) == [1, 2, 4]


def test_turan_structure():
    assert turan_part_sizes(10, 3) == [4, 3, 3]
    g = turan_graph(10, 3)
    assert g.edge_count() == (100 - 16 - 9 - 9) // 2
    assert complete_multipartite([2, 2, 2]).edge_count() == 12


def test_random_graph_seeded():
    a = random_graph(12, 0.5, seed=7)
    b = random_graph(12, 0.5, seed=7)
    assert a.rows == b.rows
    assert random_graph(12, 0.5, seed=8).rows != a.rows


def test_plant_counts_overlaps():
    base = complete_multipartite([3, 3])
    g, overlaps = plant(base, named_graph("c4"), [0, 3, 1, 4])
    assert overlaps == 4  # all C4 edges already crossing
    assert g.edge_count() == base.edge_count()
    g2, overlaps2 = plant(base, named_graph("c4"), [0, 1, 2, 3])
    assert overlaps2 == 2
    assert g2.edge_count() == base.edge_count() + 2


def test_named_graph_errors():
    with pytest.raises(DomainError):
        named_graph("petersen")
    assert named_graph("K3").edge_count() == 3  # case-insensitive
