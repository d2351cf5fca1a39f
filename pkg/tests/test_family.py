import pytest

from hdecomp.canon import are_isomorphic, canonical_key
from hdecomp.errors import DomainError
from hdecomp.family import (chromatic_excess, decomposition_family,
                            is_edge_critical, min_class_colorings,
                            minimal_subfamily)
from hdecomp.graph import Graph, named_graph


P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
K2 = Graph.from_edges(2, [(0, 1)])
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])


def keys(fam):
    return {canonical_key(g) for g in fam.graphs()}


def test_k4_family_is_single_edge():
    fam = decomposition_family(named_graph("k4"))
    assert keys(fam) == {canonical_key(K2)}
    assert keys(minimal_subfamily(fam)) == {canonical_key(K2)}


def test_bowtie_family():
    fam = decomposition_family(named_graph("bowtie"))
    assert keys(fam) == {canonical_key(P3), canonical_key(TWO_K2)}
    # neither member contains the other: both survive minimisation
    assert keys(minimal_subfamily(fam)) == keys(fam)


def test_k222_family_is_c4():
    fam = decomposition_family(named_graph("k222"))
    assert keys(fam) == {canonical_key(named_graph("c4"))}
    fstar = minimal_subfamily(fam)
    assert fstar.minimal and len(fstar.members) == 1


def test_c5_family():
    # class pairs of a 3-colouring of C5: P4, and K2 plus an isolated vertex
    fam = decomposition_family(named_graph("c5"))
    assert sorted((g.n, g.edge_count()) for g in fam.graphs()) == \
        [(3, 1), (4, 3)]
    # the P4 member contains the single-edge member, so only that survives
    fstar = minimal_subfamily(fam)
    assert [(g.n, g.edge_count()) for g in fstar.graphs()] == [(3, 1)]


def test_members_record_valid_provenance():
    h = named_graph("bowtie")
    fam = decomposition_family(h)
    for m in fam.members:
        i, j = m.kept_pair
        pair_vertices = sorted(m.coloring[i] + m.coloring[j])
        assert list(m.h_vertices) == pair_vertices
        assert are_isomorphic(m.graph, h.induced(m.h_vertices))


def test_chromatic_excess():
    assert chromatic_excess(named_graph("k4")) == 1
    assert chromatic_excess(named_graph("bowtie")) == 1
    assert chromatic_excess(named_graph("k222")) == 2
    assert chromatic_excess(named_graph("c5")) == 1


def test_min_class_colorings():
    cols = min_class_colorings(named_graph("k222"))
    assert all(len(classes[ci]) == 2 for classes, ci in cols)


def test_edge_critical():
    assert is_edge_critical(named_graph("k4"))
    assert is_edge_critical(named_graph("c5"))
    assert is_edge_critical(named_graph("c7"))
    assert not is_edge_critical(named_graph("bowtie"))
    assert not is_edge_critical(named_graph("k222"))


def test_bipartite_pattern_rejected():
    with pytest.raises(DomainError):
        decomposition_family(named_graph("c4"))
