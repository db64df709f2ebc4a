"""Approximation primitives: DFS-tree 2-approximation, reconnection, minimalization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    connected_components,
    is_connected,
    is_connected_vertex_cover,
    uncovered_edge,
)

PROVENANCES = ("savage", "small-case", "lifted")


@dataclass(frozen=True)
class ApproxCover:
    cover: frozenset[int]
    bound: Fraction
    provenance: str

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("approximation bound must be at least 1")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def size(self) -> int:
        return len(self.cover)


def dfs_tree(g: Graph, root: int) -> dict[int, int | None]:
    """Parent map of the depth-first search tree from ``root`` (neighbors in label order)."""
    parent: dict[int, int | None] = {root: None}
    stack = [(root, iter(sorted(g.neighbors(root))))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in parent:
                parent[w] = v
                stack.append((w, iter(sorted(g.neighbors(w)))))
                break
        else:
            stack.pop()
    return parent


def savage_2approx(g: Graph) -> ApproxCover:
    """Non-leaf vertices of a DFS tree rooted at the smallest label.

    A DFS tree has no cross edges, so its leaves form an independent set and
    the internal vertices cover every edge. The root counts as internal only
    when it is needed, i.e. when it has a neighbor outside the other internal
    vertices (otherwise dropping it keeps the cover connected).
    """
    if g.n == 0:
        return ApproxCover(frozenset(), Fraction(2), "savage")
    if not is_connected(g):
        raise GraphError("savage_2approx needs a connected graph")
    root = min(g.vertices)
    parent = dfs_tree(g, root)
    tree_deg = {v: 0 for v in g}
    for v, p in parent.items():
        if p is not None:
            tree_deg[v] += 1
            tree_deg[p] += 1
    inner = {v for v in g if tree_deg[v] >= 2}
    if g.neighbors(root) - inner:
        inner.add(root)
    cover = frozenset(inner)
    assert is_connected_vertex_cover(g, cover)
    return ApproxCover(cover, Fraction(2), "savage")


def reconnect(g: Graph, X: Iterable[int], trace: list | None = None) -> frozenset[int]:
    """Grow a vertex cover until it induces a connected subgraph.

    Each round adds the outside vertex touching the most components of
    ``g[X]`` (smallest label on ties), so every round merges at least two.
    ``trace`` (if given) receives the added vertices in order.
    """
    X = frozenset(X)
    bad = uncovered_edge(g, X)
    if bad is not None:
        raise GraphError(f"not a vertex cover: edge {bad} is uncovered")
    if not X:
        return X
    if not is_connected(g):
        raise GraphError("reconnect needs a connected graph")
    comps = connected_components(g, X)
    while len(comps) > 1:
        owner = {v: i for i, c in enumerate(comps) for v in c}
        best, best_count = None, 1
        for v in sorted(g.vertices - X):
            count = len({owner[w] for w in g.neighbors(v)})
            if count > best_count:
                best, best_count = v, count
        # V \ X is independent and g is connected, so some outsider bridges two components
        assert best is not None
        X = X | {best}
        if trace is not None:
            trace.append(best)
        comps = connected_components(g, X)
    return X


def minimalize(g: Graph, T: Iterable[int]) -> frozenset[int]:
    """Drop vertices (largest label first) while the set stays a connected vertex cover."""
    T = frozenset(T)
    if not is_connected_vertex_cover(g, T):
        raise GraphError("minimalize needs a connected vertex cover")
    changed = True
    while changed:
        changed = False
        for v in sorted(T, reverse=True):
            if is_connected_vertex_cover(g, T - {v}):
                T = T - {v}
                changed = True
    return T
