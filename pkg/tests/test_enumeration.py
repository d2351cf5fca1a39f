import itertools

import pytest

from hdecomp.canon import canonical_key
from hdecomp.enumeration import enumerate_graphs, enumerate_graphs_filtered
from hdecomp.errors import SizeError
from hdecomp.graph import Graph


KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_counts_match_known_sequence():
    for n, want in KNOWN_COUNTS.items():
        if n <= 6:
            assert sum(1 for _ in enumerate_graphs(n)) == want


def test_count_n7():
    assert sum(1 for _ in enumerate_graphs(7)) == 1044


def labeled_dedup_count(n):
    classes = set()
    pairs = list(itertools.combinations(range(n), 2))
    for bitsy in range(1 << len(pairs)):
        g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs))
                                 if bitsy >> i & 1])
        classes.add(canonical_key(g))
    return len(classes)


def test_against_labeled_brute_force():
    for n in range(1, 5):
        assert sum(1 for _ in enumerate_graphs(n)) == labeled_dedup_count(n)


def test_output_is_sorted_and_isomorph_free():
    keys = [canonical_key(g) for g in enumerate_graphs(5)]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_filtered_respects_monotone_predicate():
    from hdecomp.embed import contains_subgraph
    from hdecomp.graph import named_graph

    k3 = named_graph("k3")
    level = enumerate_graphs_filtered(5, lambda g: not contains_subgraph(g, k3))
    triangle_free = [g for g in enumerate_graphs(5)
                     if not contains_subgraph(g, k3)]
    assert len(level) == len(triangle_free)


def test_cap():
    with pytest.raises(SizeError):
        next(enumerate_graphs(11))
