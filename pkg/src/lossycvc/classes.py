"""Recognition and structural witnesses for split graphs, chordal graphs and cographs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .decomposition import (
    TREEWIDTH_GUARD,
    DecompositionError,
    TreeDecomposition,
    heuristic_decomposition,
    treewidth_small,
)
from .graph import (
    Graph,
    complement_components,
    connected_components,
    induced_subgraph,
    is_clique,
    remove_vertices,
)


def recognize_split(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Split partition ``(clique, independent)`` with the largest clique, or None.

    Uses the degree-sequence characterization: with degrees sorted descending
    and ``m = max{i : d_i >= i - 1}``, the graph is split iff
    ``sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i``.
    """
    if g.n == 0:
        return frozenset(), frozenset()
    order = sorted(g, key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = max(i for i in range(1, len(deg) + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    clique = frozenset(order[:m])
    indep = frozenset(order[m:])
    # an independent vertex seeing the whole clique would enlarge it
    for v in sorted(indep):
        if clique <= g.neighbors(v):
            clique, indep = clique | {v}, indep - {v}
            break
    assert is_clique(g, clique) and not any(g.neighbors(v) & indep for v in indep)
    return clique, indep


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties to the smallest label."""
    weight = {v: 0 for v in g}
    visited = []
    while weight:
        v = max(weight, key=lambda x: (weight[x], -x))
        del weight[v]
        visited.append(v)
        for w in g.neighbors(v):
            if w in weight:
                weight[w] += 1
    return visited


def is_perfect_elimination_order(g: Graph, order: Iterable[int]) -> bool:
    """True iff each vertex's later neighbors in ``order`` form a clique."""
    order = list(order)
    if sorted(order) != g.nodes():
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        if not set(later) - {first} <= g.neighbors(first):
            return False
    return True


def recognize_chordal(g: Graph) -> list[int] | None:
    """A perfect elimination order (each vertex's later neighbors form a clique), or None."""
    peo = maximum_cardinality_search(g)[::-1]
    return peo if is_perfect_elimination_order(g, peo) else None


def maximal_cliques_chordal(g: Graph, peo: list[int]) -> list[frozenset[int]]:
    pos = {v: i for i, v in enumerate(peo)}
    candidates = [frozenset({v} | {w for w in g.neighbors(v) if pos[w] > pos[v]}) for v in peo]
    cliques = set()
    for c in candidates:
        if not any(c < d for d in candidates):
            cliques.add(c)
    return sorted(cliques, key=lambda c: sorted(c))


def build_clique_tree(g: Graph, peo: list[int]) -> TreeDecomposition:
    """Clique tree: maximal cliques joined by a maximum-weight spanning tree.

    Edge weight is the size of the clique intersection; zero-weight edges are
    allowed so disconnected graphs still get a single tree.
    """
    if not is_perfect_elimination_order(g, peo):
        raise DecompositionError("invalid perfect elimination order")
    cliques = maximal_cliques_chordal(g, peo)
    bags = dict(enumerate(cliques))
    pairs = sorted(
        ((-len(cliques[i] & cliques[j]), i, j) for i in bags for j in bags if i < j)
    )
    root = list(range(len(cliques)))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    edges = []
    for _, i, j in pairs:
        a, b = find(i), find(j)
        if a != b:
            root[a] = b
            edges.append((i, j))
    return TreeDecomposition(bags, tuple(edges))


@dataclass(frozen=True)
class Cotree:
    kind: str  # leaf | union | join
    vertex: int | None = None
    children: tuple["Cotree", ...] = ()

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def to_graph(self) -> Graph:
        """Evaluate the cotree: disjoint union at union nodes, complete join at join nodes."""
        edges = []

        def walk(t: Cotree) -> list[int]:
            if t.kind == "leaf":
                return [t.vertex]
            parts = [walk(c) for c in t.children]
            if t.kind == "join":
                for i in range(len(parts)):
                    for j in range(i + 1, len(parts)):
                        edges.extend((a, b) for a in parts[i] for b in parts[j])
            return [v for p in parts for v in p]

        vs = walk(self)
        return Graph(vs, edges)

    def is_canonical(self) -> bool:
        if self.kind == "leaf":
            return not self.children
        return len(self.children) >= 2 and all(
            c.kind != self.kind and c.is_canonical() for c in self.children
        )


def recognize_cograph(g: Graph) -> Cotree | None:
    """Canonical cotree, or None iff ``g`` has an induced P4."""
    if g.n == 0:
        return None

    def build(vs: frozenset[int]) -> Cotree | None:
        if len(vs) == 1:
            return Cotree("leaf", next(iter(vs)))
        comps = connected_components(g, vs)
        kind = "union"
        if len(comps) == 1:
            comps = complement_components(g, vs)
            kind = "join"
            if len(comps) == 1:
                return None
        kids = []
        for c in comps:
            sub = build(c)
            if sub is None:
                return None
            kids.append(sub)
        return Cotree(kind, None, tuple(kids))

    return build(g.vertices)


class Mode(NamedTuple):
    kind: str  # tw | chordal | split-cograph | unified
    eta: int | None = None

    def __str__(self) -> str:
        return f"{self.kind}({self.eta})" if self.eta is not None else self.kind


_MODE_RE = re.compile(r"^(tw|unified)\((\d+)\)$")


def parse_mode(text: str | Mode) -> Mode:
    if isinstance(text, Mode):
        return text
    text = text.strip()
    if text in ("chordal", "split-cograph"):
        return Mode(text)
    match = _MODE_RE.match(text)
    if not match:
        raise ValueError(f"unknown mode {text!r}; expected tw(N), chordal, split-cograph or unified(N)")
    return Mode(match.group(1), int(match.group(2)))


def treewidth_at_most(g: Graph, eta: int) -> bool | None:
    """Decide ``tw(g) <= eta``; None when undecidable within the exact-treewidth guard."""
    if heuristic_decomposition(g).width <= eta:
        return True
    if g.n > TREEWIDTH_GUARD:
        return None
    return treewidth_small(g, eta) is not None


def component_label(g: Graph, eta: int | None, allowed: Iterable[str] | None = None) -> str:
    """First matching class in priority order split > cograph > chordal > tw."""
    allowed = set(allowed) if allowed is not None else {"split", "cograph", "chordal", "tw"}
    if "split" in allowed and recognize_split(g) is not None:
        return "split"
    if "cograph" in allowed and recognize_cograph(g) is not None:
        return "cograph"
    if "chordal" in allowed and recognize_chordal(g) is not None:
        return "chordal"
    if "tw" in allowed and eta is not None and treewidth_at_most(g, eta):
        return "tw"
    return "none"


def classify_components(g: Graph, S: Iterable[int], eta: int | None,
                        allowed: Iterable[str] | None = None) -> dict[frozenset[int], str]:
    rest = remove_vertices(g, S)
    return {
        comp: component_label(induced_subgraph(rest, comp), eta, allowed)
        for comp in connected_components(rest)
    }


MODE_CLASSES = {
    "tw": {"split", "cograph", "chordal", "tw"},
    "chordal": {"split", "chordal"},
    "split-cograph": {"split", "cograph"},
    "unified": {"split", "cograph", "chordal", "tw"},
}


def mode_labels(g: Graph, S: Iterable[int], mode: Mode) -> dict[frozenset[int], str]:
    """Per-component solver labels for ``mode``; "none" marks an invalid component.

    In tw mode every label other than "none" still certifies ``tw <= eta``: a
    component labelled split/cograph/chordal there was also checked for width.
    """
    mode = parse_mode(mode)
    labels = classify_components(g, S, mode.eta, MODE_CLASSES[mode.kind])
    if mode.kind == "tw":
        rest = remove_vertices(g, S)
        for comp, lab in labels.items():
            if lab != "tw" and lab != "none" and not treewidth_at_most(induced_subgraph(rest, comp), mode.eta):
                labels[comp] = "none"
    return labels
