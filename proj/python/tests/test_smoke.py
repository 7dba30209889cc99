import pytest

import ptc


def test_complete_graph_tau():
    assert ptc.tau(ptc.generate("complete:6"), 3) == 3


def test_generic_solver_matches_fast_path():
    g = ptc.generate("complete_bipartite:4,4")
    fast = ptc.connectivity(g, 3)
    slow = ptc.connectivity(g, 3, fast_paths=False, bound_caps=False)
    assert fast["value"] == slow["value"] == 2


def test_harary():
    g = ptc.generate("harary:9,3")
    assert g.edge_count == 14
    assert ptc.vertex_connectivity(g) == 3
    assert ptc.tau(g, 3) == 1


def test_witness_trees_are_pendant():
    g = ptc.generate("complete:5")
    r = ptc.local_connectivity(g, [0, 1, 2])
    assert r["value"] == 2
    for tree in r["witness"]["trees"]:
        for s in (0, 1, 2):
            assert sum(s in e for e in tree) == 1


def test_modes_order():
    g = ptc.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    assert ptc.tau(g, 3) <= ptc.mu(g, 3) <= ptc.min_degree(g)
    assert ptc.tau(g, 3) <= ptc.kappa_k(g, 3)


def test_graph6():
    assert ptc.encode_graph6(ptc.generate("complete:3")) == "Bw"
    assert ptc.Graph(2).to_graph6() == "A?"
    g = ptc.generate("cycle:7")
    assert ptc.Graph.from_graph6(g.to_graph6()) == g
    with pytest.raises(ValueError):
        ptc.decode_graph6("Bw!")


def test_extremal_record():
    rec = ptc.f_min_edges(6, 3, 1)
    assert rec["outputs"]["f"] == 9
    assert rec["exhaustive"] is True
    assert ptc.decode_graph6(rec["witness"]).edge_count == 9
    assert ptc.extremal_lower_bound(6, 3, 1) == 9


def test_input_errors():
    with pytest.raises(ptc.InputError):
        ptc.generate("nope:3")
    with pytest.raises(ValueError):
        ptc.f_min_edges(5, 6, 0)
