"""Undirected simple graphs with stable integer labels.

Graphs are immutable values. Every operation that synthesizes a vertex
(identification, pendants) draws its label from ``Graph.next_label``, a
counter that is always larger than any label the graph has ever carried, so
fresh labels never collide with input labels or with each other.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graphs or invalid arguments to graph operations."""


class Graph:
    __slots__ = ("_adj", "_next")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = (),
                 next_label: int | None = None):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_label(v)
            adj.setdefault(v, set())
        for u, v in edges:
            _check_label(u)
            _check_label(v)
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(adj[v]) for v in sorted(adj)}
        floor = max(self._adj, default=0) + 1
        self._next = floor if next_label is None else max(floor, next_label)

    @classmethod
    def _from_adj(cls, adj: dict[int, frozenset[int]], next_label: int) -> "Graph":
        g = cls.__new__(cls)
        g._adj = {v: adj[v] for v in sorted(adj)}
        g._next = max(next_label, max(g._adj, default=0) + 1)
        return g

    @property
    def next_label(self) -> int:
        """Smallest label guaranteed unused by this graph and its ancestors."""
        return self._next

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    def nodes(self) -> list[int]:
        return list(self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in self._adj.items() for v in sorted(nb) if u < v]

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self):
        return iter(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(tuple(self.edges())) ^ hash(tuple(self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_label(v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool):
        raise GraphError(f"vertex labels must be integers, got {v!r}")


def identify(g: Graph, X: Iterable[int], label: int | None = None) -> tuple[Graph, int]:
    """Merge ``X`` into one fresh vertex adjacent to every outside neighbor of ``X``.

    Edges with both endpoints in ``X`` disappear; parallel edges collapse.
    ``label`` pins the new vertex label (used when replaying transcripts) and
    must not be smaller than ``g.next_label``.
    """
    X = frozenset(X)
    if not X:
        raise GraphError("cannot identify an empty vertex set")
    missing = X - g.vertices
    if missing:
        raise GraphError(f"vertices {sorted(missing)} not in graph")
    x = g.next_label if label is None else label
    if x < g.next_label:
        raise GraphError(f"label {x} is not fresh (next free label is {g.next_label})")
    outside = set()
    for v in X:
        outside |= g.neighbors(v)
    outside -= X
    adj = {}
    for v, nb in g._adj.items():
        if v in X:
            continue
        if nb & X:
            nb = (nb - X) | {x}
        adj[v] = frozenset(nb)
    adj[x] = frozenset(outside)
    return Graph._from_adj(adj, x + 1), x


def add_pendant(g: Graph, u: int, label: int | None = None) -> tuple[Graph, int]:
    """Attach a new degree-one vertex to ``u``; returns the graph and the new label."""
    if u not in g:
        raise GraphError(f"unknown vertex {u}")
    p = g.next_label if label is None else label
    if p < g.next_label:
        raise GraphError(f"label {p} is not fresh (next free label is {g.next_label})")
    adj = dict(g._adj)
    adj[u] = adj[u] | {p}
    adj[p] = frozenset((u,))
    return Graph._from_adj(adj, p + 1), p


def induced_subgraph(g: Graph, A: Iterable[int]) -> Graph:
    A = frozenset(A)
    missing = A - g.vertices
    if missing:
        raise GraphError(f"vertices {sorted(missing)} not in graph")
    adj = {v: g._adj[v] & A for v in A}
    return Graph._from_adj(adj, g.next_label)


def remove_vertices(g: Graph, X: Iterable[int]) -> Graph:
    X = frozenset(X)
    return induced_subgraph(g, g.vertices - X)


def add_vertex(g: Graph, neighbors: Iterable[int], label: int | None = None) -> tuple[Graph, int]:
    """Add a fresh vertex adjacent to ``neighbors``."""
    neighbors = frozenset(neighbors)
    missing = neighbors - g.vertices
    if missing:
        raise GraphError(f"vertices {sorted(missing)} not in graph")
    x = g.next_label if label is None else label
    if x < g.next_label:
        raise GraphError(f"label {x} is not fresh (next free label is {g.next_label})")
    adj = dict(g._adj)
    for v in neighbors:
        adj[v] = adj[v] | {x}
    adj[x] = neighbors
    return Graph._from_adj(adj, x + 1), x


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Components of ``g`` (or of ``g[within]``), ordered by smallest label."""
    pool = g.vertices if within is None else frozenset(within)
    seen: set[int] = set()
    comps = []
    for s in sorted(pool):
        if s in seen:
            continue
        comp = {s}
        queue = deque((s,))
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w in pool and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    pool = g.vertices if within is None else frozenset(within)
    if not pool:
        return True
    return len(connected_components(g, pool)) == 1


def is_vertex_cover(g: Graph, T: Iterable[int]) -> bool:
    T = frozenset(T)
    return all(v in T or g.neighbors(v) <= T for v in g)


def uncovered_edge(g: Graph, T: Iterable[int]) -> tuple[int, int] | None:
    T = frozenset(T)
    for u, v in g.edges():
        if u not in T and v not in T:
            return u, v
    return None


def is_connected_vertex_cover(g: Graph, T: Iterable[int]) -> bool:
    """True iff ``T`` covers every edge and induces a connected subgraph.

    The empty set counts as a connected cover of an edgeless graph.
    """
    T = frozenset(T)
    if not T <= g.vertices:
        return False
    if not is_vertex_cover(g, T):
        return False
    if not T:
        return g.m == 0
    return is_connected(g, T)


def complement_components(g: Graph, within: Iterable[int]) -> list[frozenset[int]]:
    """Components of the complement of ``g[within]``."""
    pool = frozenset(within)
    remaining = set(pool)
    comps = []
    for s in sorted(pool):
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = {s}
        queue = deque((s,))
        while queue:
            v = queue.popleft()
            nonadj = [w for w in remaining if w not in g.neighbors(v)]
            for w in nonadj:
                remaining.discard(w)
                comp.add(w)
                queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_clique(g: Graph, A: Iterable[int]) -> bool:
    A = list(A)
    return all(A[j] in g.neighbors(A[i]) for i in range(len(A)) for j in range(i + 1, len(A)))


def relabel(g: Graph, mapping: dict[int, int]) -> Graph:
    return Graph((mapping[v] for v in g), ((mapping[u], mapping[v]) for u, v in g.edges()))
