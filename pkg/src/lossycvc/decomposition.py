"""Tree decompositions: validation, nice form, elimination orders, exact small treewidth."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ._accel import treewidth_order
from .graph import Graph, GraphError

TREEWIDTH_GUARD = 25


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class TreeDecomposition:
    bags: dict[int, frozenset[int]]
    edges: tuple[tuple[int, int], ...] = ()

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def neighbors(self) -> dict[int, list[int]]:
        nb: dict[int, list[int]] = {t: [] for t in self.bags}
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        for t in nb:
            nb[t].sort()
        return nb

    def with_vertex(self, v: int) -> "TreeDecomposition":
        """Same tree with ``v`` added to every bag."""
        return TreeDecomposition({t: b | {v} for t, b in self.bags.items()}, self.edges)


def decomposition_violation(g: Graph, td: TreeDecomposition) -> str | None:
    """Describe the first violated tree-decomposition condition, or None if valid."""
    bags = td.bags
    if not bags:
        return None if g.n == 0 else "decomposition has no bags"
    for a, b in td.edges:
        if a not in bags or b not in bags:
            return f"tree edge ({a}, {b}) references an unknown bag"
    # the tree must be a tree: connected with |bags|-1 edges
    if len(td.edges) != len(bags) - 1:
        return f"tree has {len(td.edges)} edges for {len(bags)} bags"
    nb = td.neighbors()
    start = min(bags)
    seen = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for s in nb[t]:
            if s not in seen:
                seen.add(s)
                stack.append(s)
    if len(seen) != len(bags):
        return "tree is disconnected"
    for t, bag in bags.items():
        stray = bag - g.vertices
        if stray:
            return f"bag {t} contains unknown vertices {sorted(stray)}"
    for u, v in g.edges():
        if not any(u in b and v in b for b in bags.values()):
            return f"edge ({u}, {v}) is not contained in any bag"
    for v in g:
        holders = {t for t, b in bags.items() if v in b}
        if not holders:
            return f"vertex {v} is in no bag"
        first = min(holders)
        reach = {first}
        stack = [first]
        while stack:
            t = stack.pop()
            for s in nb[t]:
                if s in holders and s not in reach:
                    reach.add(s)
                    stack.append(s)
        if reach != holders:
            return f"bags containing vertex {v} do not form a connected subtree"
    return None


def verify_tree_decomposition(g: Graph, td: TreeDecomposition) -> bool:
    return decomposition_violation(g, td) is None


@dataclass(frozen=True)
class NiceNode:
    kind: str  # leaf | introduce | forget | join
    bag: frozenset[int]
    vertex: int | None = None
    children: tuple[int, ...] = ()


@dataclass
class NiceTreeDecomposition:
    nodes: list[NiceNode] = field(default_factory=list)
    root: int = 0

    @property
    def width(self) -> int:
        return max((len(x.bag) for x in self.nodes), default=0) - 1

    def _add(self, node: NiceNode) -> int:
        self.nodes.append(node)
        return len(self.nodes) - 1

    def postorder(self) -> list[int]:
        order = []
        stack = [(self.root, False)]
        while stack:
            t, done = stack.pop()
            if done:
                order.append(t)
                continue
            stack.append((t, True))
            for c in reversed(self.nodes[t].children):
                stack.append((c, False))
        return order

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = tuple((c, t) for t, x in enumerate(self.nodes) for c in x.children)
        return TreeDecomposition({t: x.bag for t, x in enumerate(self.nodes)}, edges)


def nice_violation(ntd: NiceTreeDecomposition) -> str | None:
    """Check the structural rules of a nice decomposition (not validity for a graph)."""
    if ntd.nodes[ntd.root].bag:
        return "root bag is not empty"
    for t, x in enumerate(ntd.nodes):
        kids = [ntd.nodes[c] for c in x.children]
        if x.kind == "leaf":
            if kids or x.bag:
                return f"leaf {t} must be childless with an empty bag"
        elif x.kind == "introduce":
            if len(kids) != 1 or x.bag != kids[0].bag | {x.vertex} or x.vertex in kids[0].bag:
                return f"introduce node {t} is malformed"
        elif x.kind == "forget":
            if len(kids) != 1 or x.bag != kids[0].bag - {x.vertex} or x.vertex not in kids[0].bag:
                return f"forget node {t} is malformed"
        elif x.kind == "join":
            if len(kids) != 2 or any(k.bag != x.bag for k in kids):
                return f"join node {t} is malformed"
        else:
            return f"node {t} has unknown kind {x.kind!r}"
    return None


def to_nice(td: TreeDecomposition, g: Graph | None = None) -> NiceTreeDecomposition:
    """Convert to a nice decomposition of the same width, rooted at the smallest bag id."""
    if g is not None:
        problem = decomposition_violation(g, td)
        if problem:
            raise DecompositionError(problem)
    ntd = NiceTreeDecomposition()
    if not td.bags:
        ntd.root = ntd._add(NiceNode("leaf", frozenset()))
        return ntd
    nb = td.neighbors()
    root = min(td.bags)

    def grow(top: int, src: frozenset, dst: frozenset) -> int:
        bag = src
        for v in sorted(src - dst):
            bag = bag - {v}
            top = ntd._add(NiceNode("forget", bag, v, (top,)))
        for v in sorted(dst - src):
            bag = bag | {v}
            top = ntd._add(NiceNode("introduce", bag, v, (top,)))
        return top

    # iterative post-order over the decomposition tree
    parent = {root: None}
    order = []
    stack = [root]
    while stack:
        t = stack.pop()
        order.append(t)
        for s in nb[t]:
            if s not in parent:
                parent[s] = t
                stack.append(s)
    built: dict[int, int] = {}
    for t in reversed(order):
        bag = td.bags[t]
        kids = [s for s in nb[t] if parent.get(s) == t]
        if not kids:
            leaf = ntd._add(NiceNode("leaf", frozenset()))
            built[t] = grow(leaf, frozenset(), bag)
            continue
        tops = [grow(built[c], td.bags[c], bag) for c in kids]
        top = tops[0]
        for other in tops[1:]:
            top = ntd._add(NiceNode("join", bag, None, (top, other)))
        built[t] = top
    ntd.root = grow(built[root], td.bags[root], frozenset())
    return ntd


def decomposition_from_order(g: Graph, order: Iterable[int]) -> TreeDecomposition:
    """Decomposition induced by eliminating vertices in ``order``."""
    order = list(order)
    if sorted(order) != g.nodes():
        raise GraphError("elimination order must list every vertex exactly once")
    pos = {v: i for i, v in enumerate(order)}
    fill = {v: set(g.neighbors(v)) for v in g}
    bags = {}
    parent = {}
    for i, v in enumerate(order):
        later = {w for w in fill[v] if pos[w] > i}
        bags[i] = frozenset(later | {v})
        for a in later:
            fill[a] |= later - {a}
        if later:
            parent[i] = min(pos[w] for w in later)
    roots = [i for i in bags if i not in parent]
    edges = [(i, p) for i, p in parent.items()]
    edges += [(roots[j], roots[j + 1]) for j in range(len(roots) - 1)]
    return TreeDecomposition(bags, tuple(sorted(edges)))


def min_degree_order(g: Graph) -> list[int]:
    fill = {v: set(g.neighbors(v)) for v in g}
    order = []
    while fill:
        v = min(fill, key=lambda x: (len(fill[x]), x))
        nb = fill.pop(v)
        for a in nb:
            fill[a] |= nb - {a}
            fill[a].discard(v)
        order.append(v)
    return order


def heuristic_decomposition(g: Graph) -> TreeDecomposition:
    """Valid (not necessarily optimal) decomposition from a min-degree elimination."""
    return decomposition_from_order(g, min_degree_order(g))


def treewidth_small(g: Graph, cap: int) -> TreeDecomposition | None:
    """Minimum-width decomposition if ``tw(g) <= cap``, else None (exact, n <= 25)."""
    if g.n > TREEWIDTH_GUARD:
        raise GraphError(f"exact treewidth limited to {TREEWIDTH_GUARD} vertices, got {g.n}")
    if cap < 0:
        return None
    labels = g.nodes()
    index = {v: i for i, v in enumerate(labels)}
    adj = [sum(1 << index[w] for w in g.neighbors(v)) for v in labels]
    result = treewidth_order(adj, min(cap, 254))
    if result is None:
        return None
    _, order = result
    return decomposition_from_order(g, [labels[i] for i in order])


def treewidth(g: Graph) -> int:
    if g.n == 0:
        return -1
    td = treewidth_small(g, g.n)
    assert td is not None
    return td.width
