import json

import pytest

from hdecomp.embed import contains_subgraph
from hdecomp.errors import DomainError
from hdecomp.extremal import (biex, check_fact_biex_sigma, extremal_number,
                              turan_number)
from hdecomp.family import FamilyMember, GraphFamily, decomposition_family, \
    minimal_subfamily
from hdecomp.graph import Graph, named_graph


P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])


def family_of(*graphs):
    return GraphFamily(tuple(FamilyMember(g, tuple(range(g.n)), (), (0, 0))
                             for g in graphs), False, "test")


def test_turan_closed_form():
    assert turan_number(10, 3) == 25  # e(T_2(10)) = ex(10, K_3)
    assert turan_number(7, 3) == 12
    assert [turan_number(n, 4) for n in (4, 5, 6)] == [5, 8, 12]
    with pytest.raises(DomainError):
        turan_number(0, 3)


def test_ex_c4():
    fam = family_of(named_graph("c4"))
    want = {4: 4, 5: 6, 6: 7, 7: 9, 8: 11}
    got = {n: extremal_number(n, fam).value for n in want}
    assert got == want


@pytest.mark.filterwarnings("ignore::UserWarning")
def test_ex_matchings_and_paths():
    fam = family_of(TWO_K2, P3)
    for n in range(2, 9):
        assert extremal_number(n, fam).value == 1


def test_single_edge_member_shortcut():
    fam = family_of(Graph.from_edges(2, [(0, 1)]))
    rec = extremal_number(40, fam)
    assert rec.value == 0 and rec.status == "exact"


def test_witness_is_family_free_and_extremal():
    fam = family_of(named_graph("k3"))
    rec = extremal_number(6, fam)
    assert rec.value == turan_number(6, 3)
    assert rec.witness.edge_count() == rec.value
    assert not contains_subgraph(rec.witness, named_graph("k3"))


def test_monotone_in_n():
    fam = family_of(named_graph("c4"))
    vals = [extremal_number(n, fam).value for n in range(4, 9)]
    assert vals == sorted(vals)


def test_budget_degrades_to_lower_bound():
    fam = family_of(named_graph("c4"))
    rec = extremal_number(7, fam, budget=20)
    assert rec.status == "lower-bound"
    assert rec.value <= extremal_number(7, fam).value


def test_beyond_cap_is_lower_bound():
    fam = family_of(named_graph("c4"))
    rec = extremal_number(14, fam)
    assert rec.status == "lower-bound"
    assert not contains_subgraph(rec.witness, named_graph("c4"))


def test_cache_round_trip(tmp_path):
    path = str(tmp_path / "cache.jsonl")
    fam = family_of(named_graph("c4"))
    rec1 = extremal_number(6, fam, cache_path=path)
    with open(path) as fh:
        lines = [json.loads(ln) for ln in fh if ln.strip()]
    assert len(lines) == 1 and lines[0]["value"] == rec1.value
    rec2 = extremal_number(6, fam, cache_path=path)
    assert rec2.value == rec1.value and rec2.status == "exact"
    with open(path) as fh:
        assert len(fh.readlines()) == 1  # cache hit, no new line


def test_biex_values():
    assert biex(5, named_graph("bowtie")).value == 1
    assert biex(8, named_graph("bowtie")).value == 1
    assert biex(6, named_graph("k222")).value == 7  # = ex(6, C4)
    fstar = minimal_subfamily(decomposition_family(named_graph("k222")))
    assert extremal_number(6, fstar).value == 7


def test_biex_edge_critical_zero():
    assert all(biex(n, named_graph("k4")).value == 0 for n in range(2, 8))


def test_fact_check():
    rep = check_fact_biex_sigma(named_graph("k222"), 6)
    assert rep["sigma"] == 2 and rep["biex_value"] == 7
    assert rep["consistent"]
