import itertools

import pytest
from hypothesis import given, settings

from lossycvc.graph import Graph, GraphError, is_connected_vertex_cover
from lossycvc.oracle import (
    GuardExceeded,
    cvc_oracle,
    forced_by_leaves,
    minimal_cvcs,
    opt,
)

from conftest import complete, connected_graphs, cycle, path, star


def naive_opt(g, required=(), forbidden=()):
    vs = g.nodes()
    for r in range(len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            T = set(sub)
            if set(required) <= T and not (T & set(forbidden)) and is_connected_vertex_cover(g, T):
                return r
    return None


# values frozen from the exhaustive search
@pytest.mark.parametrize("g, value", [
    (star(4), 1), (path(5), 3), (complete(3), 2), (cycle(6), 5), (path(4), 2), (cycle(4), 3),
    (Graph([1]), 0), (Graph([1, 2], [(1, 2)]), 1),
])
def test_small_optima(g, value):
    assert opt(g) == value


def test_tie_break_is_lexicographic():
    assert cvc_oracle(cycle(4)).cover == {1, 2, 3}
    assert cvc_oracle(path(4)).cover == {2, 3}


def test_constraints():
    assert cvc_oracle(cycle(4), required={1}).cover == {1, 2, 3}
    assert cvc_oracle(cycle(4), forbidden={1}).cover == {2, 3, 4}
    assert not cvc_oracle(path(3), forbidden={2}).feasible
    with pytest.raises(GraphError):
        cvc_oracle(path(3), required={1}, forbidden={1})


def test_guard():
    g = cycle(20)
    with pytest.raises(GuardExceeded):
        cvc_oracle(g)
    assert cvc_oracle(g, limit=20).size == 19


def test_leaf_rule_only_with_two_edges():
    assert forced_by_leaves(Graph([1, 2], [(1, 2)])) == (frozenset(), frozenset())
    leaves, supports = forced_by_leaves(path(4))
    assert leaves == {1, 4} and supports == {2, 3}


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=9))
def test_oracle_matches_naive(g):
    assert cvc_oracle(g).size == naive_opt(g)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_oracle_with_constraints_matches_naive(g):
    v, w = g.nodes()[0], g.nodes()[-1]
    for req, forb in (({v}, ()), ((), {v}), ({v}, {w})):
        want = naive_opt(g, req, forb)
        got = cvc_oracle(g, req, forb)
        assert (got.size if got.feasible else None) == want


def test_minimal_cvcs_examples():
    assert minimal_cvcs(path(4)) == [frozenset({2, 3})]
    assert len(minimal_cvcs(cycle(4))) == 4
    assert sorted(map(len, minimal_cvcs(cycle(5)))) == [4] * 5


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8))
def test_minimal_cvcs_are_exactly_the_minimal_ones(g):
    vs = g.nodes()
    every = [frozenset(s) for r in range(len(vs) + 1) for s in itertools.combinations(vs, r)
             if is_connected_vertex_cover(g, s)]
    minimal = {s for s in every if not any(t < s for t in every)}
    assert set(minimal_cvcs(g)) == minimal
