import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lossycvc.approx import savage_2approx
from lossycvc.classes import maximal_cliques_chordal, recognize_chordal
from lossycvc.generate import GenSpec, gen_instance
from lossycvc.graph import Graph, GraphError, is_connected, is_connected_vertex_cover, remove_vertices
from lossycvc.instance import InstanceError, ModulatorInstance
from lossycvc.kernel import (
    TRIVIAL_BOUND,
    CaseTag,
    ContractClique,
    IdentifySet,
    KernelTranscript,
    MarkRecord,
    PendantAdded,
    SuperVertexMerge,
    TwinDropped,
    event_from_dict,
    event_to_dict,
    kernelize,
    lpr_kernel,
    replay,
    rr1_contract_cliques,
    rr1_eta,
    size_bound,
    small_modulator_solve,
)
from lossycvc.oracle import cvc_oracle

from conftest import A, B, C, complete, path, star

HALF = Fraction(1, 2)


def clique_edges(vs):
    return [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]


def test_kprime_arithmetic():
    out = lpr_kernel(path(5), {2, 3}, 5, HALF)
    assert out.kprime == 60


def test_empty_high_degree_set_keeps_graph():
    out = lpr_kernel(path(5), {2, 3}, 2, HALF)
    assert out.stats["H"] == 0 and out.stats["iterations"] == 0 and out.stats["dropped"] == 0
    assert out.graph == path(5)
    assert out.modulator == {2, 3}


def test_large_branch_precondition():
    with pytest.raises(GraphError):
        lpr_kernel(path(5), set(), 1, HALF)


def two_hubs_with_shared_leaves(count):
    return Graph(range(1, 3 + count), [(1, 2)] + [(h, v) for h in (1, 2) for v in range(3, 3 + count)])


def test_twin_pass_keeps_one_representative():
    # k' = 12, so each hub marks its 13 smallest neighbors; the other 20 are twins
    out = lpr_kernel(two_hubs_with_shared_leaves(33), {1}, 1, HALF)
    twins = out.transcript.of_type(TwinDropped)
    assert len(twins) == 1
    assert twins[0].kept == 16 and len(twins[0].dropped) == 19 and twins[0].neighborhood == (1, 2)
    assert [e.host for e in out.transcript.of_type(PendantAdded)] == [1, 2]
    assert out.graph.n == 2 + 13 + 1 + 2
    assert out.stats["marked"] == 13 and out.stats["within_bound"]


def test_contraction_merges_vertex_with_its_hubs():
    # two non-adjacent hubs: a shared unmarked leaf sees two components of G[H]
    edges = [(h, v) for h in (1, 2) for v in range(3, 18)]
    g = Graph(range(1, 18), edges)
    out = lpr_kernel(g, {1, 2}, 1, HALF)
    merges = out.transcript.of_type(SuperVertexMerge)
    assert len(merges) == 1
    assert merges[0].vertex == 16 and merges[0].members == (1, 2, 16)
    assert out.modulator == {merges[0].label}
    assert out.stats["iterations"] == 1 and out.stats["H_final"] == 1


def test_mark_record_partitions_the_vertices():
    out = lpr_kernel(two_hubs_with_shared_leaves(33), {1}, 1, HALF)
    rec, = out.transcript.of_type(MarkRecord)
    assert set(rec.H) | set(rec.R) | set(rec.I) == set(range(1, 36))
    assert set(rec.marked) <= set(rec.I) and rec.H == (1, 2)


def test_size_bound_values():
    assert size_bound(0, HALF) == 4
    assert size_bound(1, 1) == 6 + 36 + 42 + 6 + (2 * 6 + 2) + 6
    assert size_bound(8, HALF) >= 96


def test_rr1_examples():
    assert rr1_eta(HALF) == 4 and rr1_eta(1) == 3 and rr1_eta(Fraction(1, 3)) == 5
    k4 = Graph([0], clique_edges([1, 2, 3, 4]) + [(0, 1)])
    g, tr = rr1_contract_cliques(k4, {0}, HALF)
    ev, = tr.events
    assert ev.members == (1, 2, 3, 4)
    assert g.edges() == [(0, ev.label), (ev.label, ev.pendant)]
    tri = Graph([0], clique_edges([1, 2, 3]) + [(0, 1)])
    g, tr = rr1_contract_cliques(tri, {0}, HALF)
    assert g == tri and not tr.events


def test_rr1_two_k5_sharing_a_vertex():
    g = Graph([0], clique_edges([1, 2, 3, 4, 5]) + clique_edges([5, 6, 7, 8, 9]) + [(0, 1)])
    g2, tr = rr1_contract_cliques(g, {0}, 1)
    # eta = 3: every contraction swallows three clique vertices
    assert [e.members for e in tr.events] == [(1, 2, 3), (4, 5, 10), (6, 7, 8), (9, 12, 14)]
    rest = remove_vertices(g2, {0})
    assert max(map(len, maximal_cliques_chordal(rest, recognize_chordal(rest)))) <= 2
    assert is_connected(g2)


def test_rr1_rejects_non_chordal():
    c4 = Graph([0], [(1, 2), (2, 3), (3, 4), (4, 1), (0, 1)])
    with pytest.raises(GraphError):
        rr1_contract_cliques(c4, {0}, HALF)


def test_chordal_pipeline_k10_and_p3():
    g = Graph([0], clique_edges(list(range(1, 11))) + [(11, 12), (12, 13), (0, 1), (0, 11)])
    out = kernelize(ModulatorInstance(g, {0}, HALF, "chordal"))
    kinds = [type(e).__name__ for e in out.transcript.events]
    assert kinds[:4] == ["ContractClique"] * 3 + ["CaseTag"]
    pre = replay(g, out.transcript, stop_at_case=True)
    rest = remove_vertices(pre, {0})
    assert max(map(len, maximal_cliques_chordal(rest, recognize_chordal(rest)))) <= 3


def test_small_modulator_examples():
    sol = small_modulator_solve(path(4), {A}, HALF, "tw(1)")
    assert sol.cover == {A, B, C}
    assert sol.size <= cvc_oracle(path(4)).size + 2
    assert small_modulator_solve(star(5), {1}, HALF, "tw(1)").cover == {1}
    with pytest.raises(GraphError):
        small_modulator_solve(complete(5), {A}, HALF, "tw(1)")


def test_empty_modulator_takes_small_branch():
    out = kernelize(ModulatorInstance(path(6), set(), HALF, "tw(1)"))
    assert out.case == "small-modulator"
    assert out.graph.n == TRIVIAL_BOUND and out.graph.m == 1 and not out.modulator
    assert out.stored_cover == cvc_oracle(path(6)).cover
    tag = out.transcript.case()
    assert tag.kprime == 0 and set(tag.edge) == out.graph.vertices


def test_branch_guard_is_exact():
    # savage on a path of n vertices has n - 2; |S| = 1 is small iff 6 <= eps * (n - 2)
    assert savage_2approx(path(14)).size == 12
    at_equality = kernelize(ModulatorInstance(path(14), {7}, HALF, "tw(1)"))
    just_below = kernelize(ModulatorInstance(path(13), {7}, HALF, "tw(1)"))
    assert at_equality.case == "small-modulator" and just_below.case == "large-modulator"


def test_invalid_instance_is_rejected():
    with pytest.raises(InstanceError):
        kernelize(ModulatorInstance(Graph([1, 2]), set(), HALF, "tw(1)"))
    with pytest.raises(InstanceError):
        kernelize(ModulatorInstance(complete(4), set(), HALF, "tw(1)"))


def test_large_random_instance_within_bound():
    spec = GenSpec([("tree", 8), ("chordal", 8), ("split", 8), ("cograph", 8)], k=8, seed=0, mode="unified(2)")
    inst = gen_instance(spec)
    out = kernelize(inst)
    assert inst.graph.n == 40 and out.case == "large-modulator"
    assert out.graph.n <= out.bound == size_bound(8, HALF)


def instance_stream(seed):
    rng = random.Random(seed)
    kinds = ["tree", "chordal", "split", "cograph"]
    comps = [(rng.choice(kinds), rng.randint(1, 5)) for _ in range(rng.randint(1, 3))]
    k = rng.randint(1, 3)
    eps = rng.choice([Fraction(1, 2), Fraction(1), Fraction(1, 3)])
    return gen_instance(GenSpec(comps, k=k, seed=seed, epsilon=eps, mode="unified(2)"))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_replay_and_serialization_are_exact(seed):
    inst = instance_stream(seed)
    out = kernelize(inst)
    assert replay(inst.graph, out.transcript) == out.graph
    text = out.transcript.to_jsonl()
    assert kernelize(inst).transcript.to_jsonl() == text
    back = KernelTranscript.from_jsonl(text)
    assert back.events == out.transcript.events
    assert all(event_from_dict(event_to_dict(e)) == e for e in out.transcript.events)
    assert out.graph.n <= out.bound
    assert out.modulator <= out.graph.vertices


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_fresh_labels_have_one_creating_event(seed):
    inst = instance_stream(seed)
    out = kernelize(inst)
    created = []
    for e in out.transcript.events:
        if isinstance(e, ContractClique):
            created += [e.label, e.pendant]
        elif isinstance(e, (SuperVertexMerge, IdentifySet, PendantAdded)):
            created.append(e.label)
        elif isinstance(e, CaseTag) and e.edge:
            created += list(e.edge)
    assert len(created) == len(set(created))
    fresh = out.graph.vertices - inst.graph.vertices
    assert fresh <= set(created)


def test_small_branch_cover_is_valid_on_random_instances():
    for seed in range(30):
        inst = instance_stream(seed)
        out = kernelize(inst)
        if out.case == "small-modulator":
            assert is_connected_vertex_cover(inst.graph, out.stored_cover)


def test_loop_count_exceeds_eps_h_at_eps_one():
    # with eps = 1 every unmarked leaf of the hub triggers a merge
    g = star(9)
    out = lpr_kernel(g, {1}, 1, Fraction(1))
    assert out.stats["H"] == 1 and out.stats["marked"] == 7
    assert out.stats["iterations"] == 2
