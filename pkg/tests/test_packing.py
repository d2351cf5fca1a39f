import pytest

from hdecomp.errors import DomainError
from hdecomp.extremal import turan_number
from hdecomp.graph import Graph, named_graph, turan_graph
from hdecomp.packing import (enumerate_copies, max_packing, phi_exact,
                             phi_max_over_n)


def test_copy_enumeration_dedups_edge_sets():
    copies = enumerate_copies(named_graph("k4"), named_graph("k3"), cap=10)
    assert len(copies) == 4  # one per vertex triple, not per automorphism


def test_max_packing_sizes():
    assert len(max_packing(named_graph("k4"), named_graph("k3")).copies) == 1
    k6 = Graph.from_edges(6, [(u, v) for u in range(6)
                              for v in range(u + 1, 6)])
    assert len(max_packing(k6, named_graph("k3")).copies) == 4
    k7 = Graph.from_edges(7, [(u, v) for u in range(7)
                              for v in range(u + 1, 7)])
    assert len(max_packing(k7, named_graph("k3")).copies) == 7  # Steiner


def test_packing_is_edge_disjoint():
    g = turan_graph(7, 3)
    packing = max_packing(g, named_graph("k3"))
    seen = set()
    for emb in packing.copies:
        es = emb.edge_set()
        assert not (es & seen)
        seen |= es


def test_phi_values():
    k7 = Graph.from_edges(7, [(u, v) for u in range(7)
                              for v in range(u + 1, 7)])
    t, dec = phi_exact(k7, named_graph("k3"))
    assert t == 7 and dec.part_count() == 7
    assert len(dec.copies) == 7 and not dec.singles
    t2, dec2 = phi_exact(named_graph("k4"), named_graph("k3"))
    assert t2 == 4
    assert len(dec2.copies) == 1 and len(dec2.singles) == 3


def test_phi_max_over_n():
    value, witnesses, scanned = phi_max_over_n(5, named_graph("k3"))
    assert value == 6  # floor(25/4)
    assert scanned == 34
    for w in witnesses:
        assert phi_exact(w, named_graph("k3"))[0] == value
    assert phi_max_over_n(6, named_graph("k4"))[0] == turan_number(6, 4)


def test_single_edge_pattern_rejected():
    with pytest.raises(DomainError):
        phi_exact(named_graph("k4"), Graph.from_edges(2, [(0, 1)]))
