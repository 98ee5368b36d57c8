import itertools
import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog import diamond, path3
from strategies import digraphs, graph_with_terminals
from ftreach import Digraph, GraphInputError, max_flow_bounded, normalize, reachable_set, split_vertices
from ftreach.oracle import edge_disjoint_paths_bruteforce


def test_normalize_strips_self_loop(caplog):
    g = Digraph.from_pairs(4, [(0, 1), (3, 3), (1, 2)])
    with caplog.at_level(logging.WARNING):
        h = normalize(g)
    assert h.edges() == [(0, 0, 1), (2, 1, 2)]
    assert "self-loop" in caplog.text


def test_normalize_identity_and_parallel_edges():
    g = Digraph.from_pairs(3, [(1, 2), (1, 2), (0, 1)])
    assert normalize(g) == g
    assert normalize(g).m == 3


def test_digraph_rejects_bad_edges():
    with pytest.raises(GraphInputError):
        Digraph.from_pairs(2, [(0, 5)])
    with pytest.raises(GraphInputError):
        Digraph(3, [(0, 0, 1), (0, 1, 2)])


def test_delete_keeps_ids():
    g = diamond()
    h = g.without([1])
    assert h.edge_ids() == [0, 2, 3]
    assert h.has_edge(1) and not h.is_alive(1)
    assert g.is_alive(1)
    assert h.endpoints(3) == (2, 3)


def test_reachable_set_examples():
    g = path3()
    assert reachable_set(g, {0}) == {0, 1, 2}
    assert reachable_set(g.without([1]), {0}) == {0, 1}
    assert reachable_set(Digraph(3), {1}) == {1}
    with pytest.raises(GraphInputError):
        reachable_set(g, {7})
    with pytest.raises(GraphInputError):
        reachable_set(g, set())


def test_max_flow_examples():
    assert max_flow_bounded(diamond(), {0}, {3}, 3).value == 2
    assert max_flow_bounded(path3(), {0}, {2}, 3).value == 1
    disc = Digraph.from_pairs(3, [(0, 1)])
    res = max_flow_bounded(disc, {0}, {2}, 3)
    assert res.value == 0 and res.source_side == {0, 1} and not res.overflow
    with pytest.raises(GraphInputError):
        max_flow_bounded(disc, {0, 1}, {1}, 3)


def test_max_flow_overflow_flag():
    res = max_flow_bounded(diamond(), {0}, {3}, 1)
    assert res.value == 2 and res.overflow
    assert res.source_side == frozenset() and res.sink_side == frozenset()


def test_max_flow_residual_sets_on_diamond():
    res = max_flow_bounded(diamond(), {0}, {3}, 5)
    assert res.source_side == {0}
    assert res.sink_side == {3}


def test_split_vertices_path():
    h, smap = split_vertices(path3(), protected={0})
    assert h.n == 5
    assert smap.vertex_in == {0: 0, 1: 1, 2: 3} and smap.vertex_out == {0: 0, 1: 2, 2: 4}
    assert sorted((t, hd) for _, t, hd in h.edges()) == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert len(smap.split_edge) == 2
    assert smap.edge_image == {0: 0, 1: 1}
    for v, e in smap.split_edge.items():
        assert h.endpoints(e) == (smap.vertex_in[v], smap.vertex_out[v])


def test_split_vertices_identity_when_all_protected():
    g = Digraph(3)
    h, smap = split_vertices(g, protected={0, 1, 2})
    assert h == g and smap.split_edge == {} and smap.edge_image == {}


def _vertex_reach(g, s, failed):
    gone = {e for e, t, h in g.edges() if t in failed or h in failed}
    return reachable_set(g, {s}, removed=gone) - set(failed)


def test_split_diamond_single_failures():
    g = diamond()
    h, smap = split_vertices(g, protected={0, 3})
    for w in (1, 2):
        via_split = smap.vertex_out[3] in reachable_set(h, {0}, removed=smap.fault_edges([w]))
        assert via_split == (3 in _vertex_reach(g, 0, {w})) == True


@settings(max_examples=150, deadline=None)
@given(digraphs(max_n=7, max_m=12), st.data())
def test_split_models_vertex_failures(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    h, smap = split_vertices(g, protected={s})
    others = [v for v in range(g.n) if v != s]
    for r in range(3):
        for W in itertools.combinations(others, r):
            direct = _vertex_reach(g, s, set(W))
            reach = reachable_set(h, {smap.vertex_out[s]}, removed=smap.fault_edges(W))
            assert {v for v in range(g.n) if smap.vertex_out[v] in reach} == direct


@settings(max_examples=150, deadline=None)
@given(digraphs(), st.data())
def test_reachability_monotone_under_deletion(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    base = reachable_set(g, {s})
    for e in g.edge_ids():
        assert reachable_set(g.without([e]), {s}) <= base


@settings(max_examples=200, deadline=None)
@given(graph_with_terminals(max_n=8, max_m=12))
def test_flow_matches_path_packing(case):
    g, s, t = case
    assert max_flow_bounded(g, {s}, {t}, g.m + 1).value == edge_disjoint_paths_bruteforce(g, s, t)


@settings(max_examples=200, deadline=None)
@given(graph_with_terminals(max_n=7, max_m=12), st.integers(0, 4))
def test_flow_value_is_capped(case, budget):
    g, s, t = case
    full = max_flow_bounded(g, {s}, {t}, g.m + 1).value
    res = max_flow_bounded(g, {s}, {t}, budget)
    assert res.value == min(full, budget + 1)
    assert res.overflow == (full > budget)
    if not res.overflow:
        # both residual sides induce minimum cuts
        assert len(g.delta_out(res.source_side)) == full
        assert len(g.delta_in(res.sink_side)) == full
        assert s in res.source_side and t in res.sink_side


@settings(max_examples=100, deadline=None)
@given(digraphs(max_n=6), st.data())
def test_delta_out_definition(g, data):
    R = data.draw(st.sets(st.integers(0, g.n - 1)))
    expected = {e for e, t, h in g.edges() if t in R and h not in R}
    assert g.delta_out(R) == expected
    assert g.delta_in(set(range(g.n)) - R) == expected
