import pytest

from hdecomp.coloring import (chromatic_number, has_proper_coloring,
                              proper_colorings)
from hdecomp.errors import SizeError
from hdecomp.graph import Graph, named_graph, random_graph, turan_graph


def test_chromatic_numbers():
    assert chromatic_number(named_graph("k4")) == 4
    assert chromatic_number(named_graph("c5")) == 3
    assert chromatic_number(named_graph("c4")) == 2
    assert chromatic_number(named_graph("k222")) == 3
    assert chromatic_number(named_graph("bowtie")) == 3
    assert chromatic_number(Graph(3, (0, 0, 0))) == 1
    assert chromatic_number(Graph(0, ())) == 0


def test_c5_three_colorings():
    # C5 has exactly 5 proper 3-colourings up to class relabeling
    cols = list(proper_colorings(named_graph("c5"), 3))
    assert len(cols) == 5
    g = named_graph("c5")
    for classes in cols:
        assert sorted(v for c in classes for v in c) == list(range(5))
        for c in classes:
            assert not any(g.has_edge(u, v) for u in c for v in c if u < v)


def test_k222_unique_coloring():
    cols = list(proper_colorings(named_graph("k222"), 3))
    assert cols == [((0, 1), (2, 3), (4, 5))]


def test_coloring_counts_are_exact():
    # every partition appears exactly once up to relabeling
    g = turan_graph(6, 2)
    twos = list(proper_colorings(g, 2))
    assert len(twos) == 1
    assert len(set(twos)) == len(twos)
    assert not list(proper_colorings(named_graph("k4"), 3))


def test_has_proper_coloring_consistency():
    for seed in range(5):
        g = random_graph(7, 0.5, seed=seed)
        chi = chromatic_number(g)
        assert has_proper_coloring(g, chi)
        assert chi == 1 or not has_proper_coloring(g, chi - 1)


def test_cap():
    with pytest.raises(SizeError):
        chromatic_number(random_graph(17, 0.5, seed=0))
