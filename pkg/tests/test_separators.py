import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog import diamond, path3, star_of_paths
from strategies import graph_with_terminals
from ftreach import (
    BudgetError,
    Digraph,
    GraphInputError,
    Separator,
    dominates,
    enumerate_important,
    furthest_min_cut,
    min_cut,
)
from ftreach.oracle import all_cuts_bruteforce, important_separators_bruteforce


def _sets(*groups):
    return {frozenset(g) for g in groups}


def test_min_cut_examples():
    cut = min_cut(path3(), {0}, {2}, 2)
    assert len(cut) == 1
    assert min_cut(diamond(), {0}, {3}, 1) is None
    disc = Digraph.from_pairs(3, [(0, 1)])
    empty = min_cut(disc, {0}, {2}, 0)
    assert empty.edges == frozenset() and empty.reach == {0, 1}
    with pytest.raises(GraphInputError):
        min_cut(disc, {0}, {0, 2}, 1)


def test_min_cut_is_closest():
    # the closest minimum cut of the path is the first edge
    assert min_cut(path3(), {0}, {2}, 2) == Separator(frozenset({0}), frozenset({0}))


def test_furthest_min_cut_path_and_diamond():
    assert furthest_min_cut(path3(), {0}, {2}, 1) == Separator(frozenset({1}), frozenset({0, 1}))
    assert furthest_min_cut(diamond(), {0}, {3}, 2) == Separator(frozenset({2, 3}), frozenset({0, 1, 2}))
    assert furthest_min_cut(diamond(), {0}, {3}, 1) is None


def test_furthest_min_cut_at_source():
    # s=0 -> a=1 is the only way out of s; a fans out to t=3 twice (directly and via b=2)
    g = Digraph.from_pairs(4, [(0, 1), (1, 3), (1, 2), (2, 3)])
    assert furthest_min_cut(g, {0}, {3}, 3) == Separator(frozenset({0}), frozenset({0}))


def _min_cuts_bruteforce(g, S, T):
    cuts = all_cuts_bruteforce(g, S, T, g.m)
    best = min(len(c.edges) for c in cuts)
    return [c for c in cuts if len(c.edges) == best], best


@settings(max_examples=150, deadline=None)
@given(graph_with_terminals(max_n=6, max_m=9))
def test_furthest_min_cut_against_bruteforce(case):
    g, s, t = case
    mins, value = _min_cuts_bruteforce(g, {s}, {t})
    far = furthest_min_cut(g, {s}, {t}, g.m)
    assert len(far) == value
    assert all(c.reach <= far.reach for c in mins)
    assert far.edges == g.delta_out(far.reach)


def test_enumerate_examples():
    assert enumerate_important(path3(), {0}, {2}, 1).edge_sets() == _sets({1})
    assert enumerate_important(diamond(), {0}, {3}, 2).edge_sets() == _sets({2, 3})
    assert len(enumerate_important(diamond(), {0}, {3}, 1)) == 0


def test_enumerate_matches_bruteforce_on_fixtures():
    for g, s, t in [(path3(), 0, 2), (diamond(), 0, 3), (star_of_paths(), 0, 7), (star_of_paths(3), 1, 4)]:
        for b in range(4):
            fast = enumerate_important(g, {s}, {t}, b).edge_sets()
            slow = {c.edges for c in important_separators_bruteforce(g, {s}, {t}, b)}
            assert fast == slow


def test_unreachable_target_gives_empty_separator():
    g = Digraph.from_pairs(3, [(0, 1), (2, 1)])
    fam = enumerate_important(g, {0}, {2}, 2)
    assert fam.members == [Separator(frozenset(), frozenset({0, 1}))]


def test_budget_limit():
    with pytest.raises(BudgetError):
        enumerate_important(path3(), {0}, {2}, 17)
    assert len(enumerate_important(path3(), {0}, {2}, 17, limit=20)) == 1


def test_members_sorted():
    g = Digraph.from_pairs(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (1, 4)])
    fam = enumerate_important(g, {0}, {4}, 3)
    keys = [m.sort_key() for m in fam]
    assert keys == sorted(keys)


def test_dominates_examples():
    far = Separator(frozenset({2, 3}), frozenset({0, 1, 2}))
    near = Separator(frozenset({0, 1}), frozenset({0}))
    assert dominates(far, near)
    assert not dominates(near, far)
    assert not dominates(far, far)
    big = Separator(frozenset({0, 2, 3}), frozenset({0, 1, 2}))
    assert not dominates(big, near)


def test_set_terminals():
    g = Digraph.from_pairs(5, [(0, 2), (1, 2), (2, 3), (2, 4)])
    fam = enumerate_important(g, {0, 1}, {3, 4}, 2)
    slow = {c.edges for c in important_separators_bruteforce(g, {0, 1}, {3, 4}, 2)}
    assert fam.edge_sets() == slow == _sets({2, 3})


@settings(max_examples=300, deadline=None)
@given(graph_with_terminals(max_n=6, max_m=10), st.integers(0, 3))
def test_enumerate_equals_bruteforce(case, budget):
    g, s, t = case
    fam = enumerate_important(g, {s}, {t}, budget)
    assert fam.edge_sets() == {c.edges for c in important_separators_bruteforce(g, {s}, {t}, budget)}


@settings(max_examples=200, deadline=None)
@given(graph_with_terminals(max_n=7, max_m=14), st.integers(0, 3))
def test_family_invariants(case, budget):
    g, s, t = case
    fam = enumerate_important(g, {s}, {t}, budget)
    assert len(fam) <= 4 ** budget
    for x in fam:
        assert len(x) <= budget
        assert s in x.reach and t not in x.reach
        assert x.edges == g.delta_out(x.reach)
        assert not any(dominates(y, x) for y in fam)


@settings(max_examples=150, deadline=None)
@given(graph_with_terminals(max_n=6, max_m=10), st.integers(0, 3))
def test_every_small_cut_is_covered(case, budget):
    g, s, t = case
    fam = enumerate_important(g, {s}, {t}, budget)
    for y in all_cuts_bruteforce(g, {s}, {t}, budget):
        assert any(len(x) <= len(y.edges) and y.reach <= x.reach for x in fam)
