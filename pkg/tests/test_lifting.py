import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lossycvc.approx import savage_2approx
from lossycvc.generate import GenSpec, gen_instance
from lossycvc.graph import Graph, GraphError, is_connected_vertex_cover
from lossycvc.instance import ModulatorInstance
from lossycvc.kernel import CaseTag, ContractClique, KernelOutput, KernelTranscript, kernelize
from lossycvc.lifting import LiftError, certify, lift, undo_clique_contractions
from lossycvc.oracle import cvc_oracle

from conftest import A, B, connected_graphs, path

HALF = Fraction(1, 2)


def clique_edges(vs):
    return [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]


def test_small_branch_ignores_q():
    inst = ModulatorInstance(path(6), set(), HALF, "tw(1)")
    out = kernelize(inst)
    a, b = out.graph.nodes()
    for Q in ({a}, {b}, {a, b}):
        cert = lift(inst, out, Q)
        assert cert.cover == out.stored_cover
        assert cert.bound == 1 + HALF and cert.passed


def test_q_must_be_a_kernel_cover():
    inst = ModulatorInstance(path(6), set(), HALF, "tw(1)")
    out = kernelize(inst)
    with pytest.raises(GraphError):
        lift(inst, out, set())


def test_broken_transcript_is_caught():
    inst = ModulatorInstance(path(4), {B}, HALF, "tw(1)")
    tr = KernelTranscript()
    tr.add(CaseTag("large-modulator", 12))
    fake = KernelOutput(Graph([A, B], [(A, B)]), frozenset({B}), 12, tr, 10, "large-modulator", HALF, inst.mode)
    with pytest.raises(LiftError):
        lift(inst, fake, {A})


def test_clique_stage_growth():
    # D' holds u_C with 6 other vertices; expanding a 4-clique adds 3
    ev = ContractClique((1, 2, 3, 4), 20, 21)
    Dp = frozenset({20, 10, 11, 12, 13, 14, 15})
    stages = []
    D = undo_clique_contractions(Dp, [ev], stages)
    assert len(D) == 10 and len(D) <= len(Dp) + 4 - 1
    assert stages == [{"event": "ContractClique", "label": 20, "before": 7, "after": 10}]
    assert undo_clique_contractions(frozenset({10}), [ev]) == {10}


def test_chordal_stage_factor():
    g = Graph([0], clique_edges(list(range(1, 7))) + [(0, 1), (0, 7), (7, 8)])
    inst = ModulatorInstance(g, {0}, HALF, "chordal")
    out = kernelize(inst)
    Q = cvc_oracle(out.graph).cover
    lifted = lift(inst, out, Q)
    cert = certify(g, lifted.cover, lifted.bound)
    assert lifted.bound == Fraction(3, 2)
    assert lifted.conservative_bound == Fraction(9, 4)
    assert is_connected_vertex_cover(g, lifted.cover)
    assert cert.passed and cert.ratio <= lifted.bound


def test_certify_examples():
    g = path(5)
    best = cvc_oracle(g).cover
    cert = certify(g, best, 1)
    assert cert.ratio == 1 and cert.passed and cert.opt == 3
    bad = certify(g, {A}, 2)
    assert not bad.passed and dict(bad.checks)["connected-vertex-cover"] is False
    assert certify(Graph([1]), set(), 1).ratio == 1
    big = path(30)
    unchecked = certify(big, set(range(2, 30)), 1)
    assert unchecked.opt is None and unchecked.passed
    doc = cert.to_dict()
    assert doc["ratio"] == "1" and doc["checks"] == {"connected-vertex-cover": True, "ratio-within-bound": True}


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=12))
def test_savage_certificate(g):
    cert = certify(g, savage_2approx(g).cover, 2)
    assert cert.passed


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["unified(2)", "chordal", "split-cograph", "tw(2)"]))
def test_end_to_end_exact_kernel_solve(seed, mode):
    rng = random.Random(seed)
    kinds = {"chordal": ["chordal", "split", "tree"], "split-cograph": ["split", "cograph"],
             "tw(2)": ["tree", "tw"], "unified(2)": ["tree", "chordal", "split", "cograph", "tw"]}[mode]
    comps = [(rng.choice(kinds), rng.randint(1, 4)) for _ in range(rng.randint(1, 2))]
    eps = rng.choice([HALF, Fraction(1)])
    inst = gen_instance(GenSpec(comps, k=rng.randint(1, 2), seed=seed, epsilon=eps, mode=mode))
    out = kernelize(inst)
    if out.graph.n > 16:
        return
    Q = cvc_oracle(out.graph).cover
    cert = lift(inst, out, Q)
    certify(inst.graph, cert.cover, cert.bound, cert=cert)
    assert cert.passed, cert.to_dict()
    assert cert.ratio <= 1 + eps
