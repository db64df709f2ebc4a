import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lossycvc.apex import (
    apex_contract_holds,
    cvc_apex_compose,
    cvc_chordal_apex,
    cvc_cograph_apex,
    cvc_split_apex,
    cvc_tw_apex,
    solve_apex_problem,
    solve_in_class,
)
from lossycvc.graph import Graph, GraphError, is_connected_vertex_cover
from lossycvc.harness import class_component
from lossycvc.oracle import cvc_oracle

from conftest import A, B, complete, cycle, path, star

SOLVERS = {
    "split": cvc_split_apex,
    "chordal": cvc_chordal_apex,
    "tw": cvc_tw_apex,
    "cograph": lambda comp, M, a: cvc_cograph_apex(comp, None, M, a),
}


def brute_apex(comp, M, apex_in):
    vs = comp.nodes()
    for r in range(len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            if apex_contract_holds(comp, M, sub, apex_in):
                return r
    return None


def size_or_none(sol):
    return sol.size if sol.feasible else None


@pytest.mark.parametrize("cls, g, M, apex_in, want", [
    ("chordal", complete(3), {A}, True, 2),
    ("tw", Graph([1]), set(), True, 0),
    ("tw", path(3), {B}, True, 1),
    ("split", Graph([1, 2], [(1, 2)]), {A}, True, 1),
    ("split", complete(3), set(), True, None),
    ("cograph", cycle(4), {A}, False, 3),
    ("split", Graph([1, 2], [(1, 2)]), set(), True, None),
    ("chordal", complete(3), {1, 2, 3}, False, 3),
    ("chordal", complete(3), {1, 2, 3}, True, 2),
])
def test_contract_examples(cls, g, M, apex_in, want):
    sol = SOLVERS[cls](g, M, apex_in)
    assert size_or_none(sol) == want
    if sol.feasible:
        assert apex_contract_holds(g, M, sol.cover, apex_in)


def test_all_solvers_agree_on_examples():
    g = complete(4)
    for apex_in in (True, False):
        sizes = {size_or_none(f(g, {A, B}, apex_in)) for f in SOLVERS.values()}
        assert len(sizes) == 1


def test_compose_examples():
    assert cvc_apex_compose(star(3), 1).cover == {1}
    # apex adjacent to both ends of an edge
    g = Graph([0], [(0, 1), (0, 2), (1, 2)])
    assert cvc_apex_compose(g, 0).size == 2
    assert cvc_apex_compose(path(4), 1).size == 2
    assert cvc_apex_compose(Graph([5]), 5).cover == frozenset()
    with pytest.raises(GraphError):
        cvc_apex_compose(path(3), 9)


def test_unsupported_label():
    with pytest.raises(GraphError):
        solve_apex_problem(path(3), set(), False, "none")


@pytest.mark.parametrize("cls", ["split", "chordal", "cograph", "tw"])
def test_solve_in_class_matches_oracle(cls):
    rng = random.Random(7)
    for _ in range(25):
        g = class_component(rng, cls, rng.randint(1, 9))
        assert solve_in_class(g, cls).size == cvc_oracle(g).size


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(SOLVERS)), st.integers(1, 8), st.integers(0, 10**6), st.booleans())
def test_apex_solvers_match_brute_force(cls, n, seed, apex_in):
    rng = random.Random(seed)
    comp = class_component(rng, cls, n)
    M = {v for v in comp.nodes() if rng.random() < 0.4}
    sol = SOLVERS[cls](comp, M, apex_in)
    assert size_or_none(sol) == brute_apex(comp, M, apex_in)
    if sol.feasible:
        assert apex_contract_holds(comp, M, sol.cover, apex_in)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(["split", "chordal", "cograph", "tw"]), st.integers(1, 4)),
                min_size=1, max_size=3), st.integers(0, 10**6))
def test_composition_matches_oracle(parts, seed):
    rng = random.Random(seed)
    edges, next_v = [], 1
    for cls, n in parts:
        comp = class_component(rng, cls, n)
        shift = {v: v + next_v for v in comp.nodes()}
        edges += [(shift[u], shift[v]) for u, v in comp.edges()]
        touch = [shift[v] for v in comp.nodes() if rng.random() < 0.5] or [next_v]
        edges += [(0, t) for t in touch]
        next_v += n
    ghat = Graph(range(next_v), edges)
    sol = cvc_apex_compose(ghat, 0)
    assert is_connected_vertex_cover(ghat, sol.cover)
    assert sol.size == cvc_oracle(ghat).size
