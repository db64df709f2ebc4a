import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lossycvc.classes import build_clique_tree, recognize_chordal
from lossycvc.decomposition import DecompositionError, heuristic_decomposition, to_nice, treewidth_small
from lossycvc.dp import cvc_treewidth_dp
from lossycvc.graph import Graph, is_connected_vertex_cover
from lossycvc.oracle import cvc_oracle

from conftest import A, complete, connected_graphs, cycle, path


def solve(g, **kw):
    return cvc_treewidth_dp(g, to_nice(heuristic_decomposition(g), g), **kw)


@pytest.mark.parametrize("g, size", [(path(4), 2), (cycle(4), 3), (cycle(7), 6), (complete(5), 4)])
def test_small_values(g, size):
    sol = solve(g)
    assert sol.size == size
    assert is_connected_vertex_cover(g, sol.cover)


def test_required_vertex():
    sol = solve(complete(4), required={A})
    assert sol.size == 3 and A in sol.cover


def test_forbidden_cut_vertex_is_infeasible():
    assert not solve(path(3), forbidden={2}).feasible


def test_edgeless_single_vertex():
    assert solve(Graph([1])).cover == frozenset()


def test_decomposition_must_cover_graph():
    g = path(3)
    with pytest.raises(DecompositionError):
        cvc_treewidth_dp(g, to_nice(heuristic_decomposition(path(2)), path(2)))


def test_different_decompositions_agree():
    g = Graph(range(1, 8), [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4), (6, 7)])
    chordal = to_nice(build_clique_tree(g, recognize_chordal(g)), g)
    exact = to_nice(treewidth_small(g, 4), g)
    heur = to_nice(heuristic_decomposition(g), g)
    sizes = {cvc_treewidth_dp(g, t).size for t in (chordal, exact, heur)}
    assert sizes == {cvc_oracle(g).size}


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=10))
def test_dp_matches_oracle(g):
    sol = solve(g)
    assert sol.size == cvc_oracle(g).size
    assert is_connected_vertex_cover(g, sol.cover)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=9), st.data())
def test_dp_constraints_match_oracle(g, data):
    vs = g.nodes()
    req = data.draw(st.sets(st.sampled_from(vs), max_size=2))
    forb = data.draw(st.sets(st.sampled_from(vs), max_size=2)) - req
    want = cvc_oracle(g, req, forb)
    got = solve(g, required=req, forbidden=forb)
    assert got.feasible == want.feasible
    if got.feasible:
        assert got.size == want.size
        assert req <= got.cover and not (forb & got.cover)
