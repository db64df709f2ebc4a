import pytest
from hypothesis import given, settings

from lossycvc.classes import (
    Cotree,
    Mode,
    build_clique_tree,
    classify_components,
    component_label,
    is_perfect_elimination_order,
    maximal_cliques_chordal,
    mode_labels,
    parse_mode,
    recognize_chordal,
    recognize_cograph,
    recognize_split,
)
from lossycvc.decomposition import DecompositionError, treewidth, verify_tree_decomposition
from lossycvc.graph import Graph
from lossycvc.harness import brute_is_chordal, brute_is_cograph, brute_is_split, brute_maximal_cliques

from conftest import A, B, C, D, complete, cycle, graphs, path, star


def test_split_examples():
    assert recognize_split(complete(3)) == (frozenset({1, 2, 3}), frozenset())
    assert recognize_split(cycle(4)) is None
    C_, I_ = recognize_split(star(3))
    assert C_ == {1, 2} and I_ == {3, 4}
    # a path on four vertices is split: its middle edge is the clique
    assert recognize_split(path(4)) == (frozenset({B, C}), frozenset({A, D}))


def test_chordal_examples():
    assert recognize_chordal(cycle(4)) is None
    tree = Graph(range(1, 7), [(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)])
    assert is_perfect_elimination_order(tree, recognize_chordal(tree))
    k4_minus = Graph([], [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
    assert is_perfect_elimination_order(k4_minus, recognize_chordal(k4_minus))
    assert brute_is_chordal(k4_minus)


def test_clique_tree_examples():
    g = path(4)
    td = build_clique_tree(g, recognize_chordal(g))
    assert sorted(map(sorted, td.bags.values())) == [[1, 2], [2, 3], [3, 4]]
    assert len(td.edges) == 2
    k4 = complete(4)
    assert list(build_clique_tree(k4, recognize_chordal(k4)).bags.values()) == [frozenset({1, 2, 3, 4})]
    diamond = Graph([], [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    td = build_clique_tree(diamond, recognize_chordal(diamond))
    (a, b), = td.edges
    assert len(td.bags[a] & td.bags[b]) == 2


def test_clique_tree_rejects_bad_order():
    with pytest.raises(DecompositionError):
        build_clique_tree(path(4), [2, 1, 3, 4][::-1][:3] + [9])


def test_cograph_examples():
    assert recognize_cograph(path(4)) is None
    k3 = recognize_cograph(complete(3))
    assert k3.kind == "join" and len(k3.children) == 3
    c4 = recognize_cograph(cycle(4))
    assert c4.kind == "join" and [ch.kind for ch in c4.children] == ["union", "union"]
    assert c4.to_graph() == cycle(4)


def test_cotree_evaluation():
    t = Cotree("join", None, (Cotree("leaf", 1), Cotree("union", None, (Cotree("leaf", 2), Cotree("leaf", 3)))))
    assert t.to_graph() == Graph([], [(1, 2), (1, 3)])
    assert t.is_canonical()
    assert not Cotree("join", None, (Cotree("leaf", 1),)).is_canonical()


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_recognizers_match_brute_force(g):
    peo = recognize_chordal(g)
    assert (peo is not None) == brute_is_chordal(g)
    cot = recognize_cograph(g)
    # the empty graph has no cotree
    assert (cot is not None) == (g.n > 0 and brute_is_cograph(g))
    if cot is not None:
        assert cot.to_graph() == g and cot.is_canonical()
    part = recognize_split(g)
    assert (part is not None) == brute_is_split(g)
    if peo is not None and g.n:
        td = build_clique_tree(g, peo)
        assert verify_tree_decomposition(g, td)
        assert set(td.bags.values()) == brute_maximal_cliques(g)
        assert set(maximal_cliques_chordal(g, peo)) == brute_maximal_cliques(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_clique_tree_width_is_treewidth_for_chordal(g):
    peo = recognize_chordal(g)
    if peo is None or g.n == 0:
        return
    assert build_clique_tree(g, peo).width == treewidth(g)


def test_parse_mode():
    assert parse_mode("tw(3)") == Mode("tw", 3)
    assert parse_mode("chordal") == Mode("chordal")
    assert str(parse_mode(" unified(2) ")) == "unified(2)"
    with pytest.raises(ValueError):
        parse_mode("tw")


def test_component_label_priority():
    assert component_label(complete(3), 2) == "split"
    assert component_label(cycle(4), 2) == "cograph"
    assert component_label(path(5), 2) == "chordal"
    assert component_label(cycle(6), 2) == "tw"
    assert component_label(cycle(6), 1) == "none"


def test_classify_c5_and_k4():
    # modulator 0 touches one vertex of each component
    c5 = [(i, i % 5 + 1) for i in range(1, 6)]
    k4 = [(a, b) for a in range(6, 10) for b in range(a + 1, 10)]
    g = Graph([0], c5 + k4 + [(0, 1), (0, 6)])
    labels = classify_components(g, {0}, 2)
    assert labels == {frozenset(range(1, 6)): "tw", frozenset(range(6, 10)): "split"}


def test_classify_p4_and_c6():
    p4 = [(1, 2), (2, 3), (3, 4)]
    c6 = [(i, i + 1) for i in range(5, 10)] + [(10, 5)]
    g = Graph([0], p4 + c6 + [(0, 1), (0, 5)])
    labels = classify_components(g, {0}, 2)
    assert labels[frozenset({5, 6, 7, 8, 9, 10})] == "tw"
    assert labels[frozenset({1, 2, 3, 4})] == "split"


def test_edgeless_remainder_is_all_split():
    labels = classify_components(star(4), {1}, 0)
    assert set(labels.values()) == {"split"} and len(labels) == 4


def test_mode_labels_respect_the_mode():
    g = Graph([0], [(1, 2), (2, 3), (3, 4), (4, 1), (0, 1)])
    assert set(mode_labels(g, {0}, "chordal").values()) == {"none"}
    assert set(mode_labels(g, {0}, "split-cograph").values()) == {"cograph"}
    assert set(mode_labels(g, {0}, "tw(1)").values()) == {"none"}
    assert set(mode_labels(g, {0}, "tw(2)").values()) == {"cograph"}
