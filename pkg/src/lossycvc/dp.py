"""Connected vertex cover by dynamic programming over a nice tree decomposition.

A table entry is keyed by ``(X, P, closed)``: ``X`` is the part of the bag
in the partial cover, ``P`` partitions ``X`` by the connected components of
the partial cover below the node, and ``closed`` records that one component
has already been completed (all of its vertices forgotten). A closed state
must stay closed with an empty ``X``: no further vertex may be selected.
"""

from __future__ import annotations

from typing import Iterable

from .decomposition import DecompositionError, NiceTreeDecomposition, nice_violation
from .graph import Graph
from .oracle import INFEASIBLE, CvcSolution

_EMPTY = frozenset()


def _better(table, key, size, cover):
    cur = table.get(key)
    if cur is None or (size, cover) < cur:
        table[key] = (size, cover)


def _merge_partitions(p1, p2):
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in list(p1) + list(p2):
        items = sorted(block)
        for v in items:
            parent.setdefault(v, v)
        for v in items[1:]:
            a, b = find(items[0]), find(v)
            if a != b:
                parent[b] = a
    groups: dict[int, set[int]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return frozenset(frozenset(g) for g in groups.values())


def cvc_treewidth_dp(g: Graph, ntd: NiceTreeDecomposition, required: Iterable[int] = (),
                     forbidden: Iterable[int] = (), max_omitted: int | None = None,
                     stats: dict | None = None) -> CvcSolution:
    """Exact minimum connected vertex cover of ``g`` respecting the constraints.

    ``max_omitted`` drops every state leaving more than that many bag vertices
    out of the cover; sound only when no optimal cover needs such a state
    (e.g. bags that are a clique plus one extra vertex, with bound 2).
    """
    required = frozenset(required)
    forbidden = frozenset(forbidden)
    problem = nice_violation(ntd)
    if problem:
        raise DecompositionError(problem)
    covered = set()
    for x in ntd.nodes:
        covered |= x.bag
    if covered != set(g.vertices):
        raise DecompositionError("decomposition does not cover the vertex set")
    tables: dict[int, dict] = {}
    peak = 0
    for t in ntd.postorder():
        node = ntd.nodes[t]
        if node.kind == "leaf":
            table = {(_EMPTY, _EMPTY, False): (0, ())}
        elif node.kind == "introduce":
            table = _introduce(g, node, tables.pop(node.children[0]), required, forbidden)
        elif node.kind == "forget":
            table = _forget(node, tables.pop(node.children[0]))
        else:
            table = _join(tables.pop(node.children[0]), tables.pop(node.children[1]))
        if max_omitted is not None:
            bag = node.bag
            table = {k: v for k, v in table.items() if len(bag) - len(k[0]) <= max_omitted}
        peak = max(peak, len(table))
        tables[t] = table
    if stats is not None:
        stats["peak_states"] = peak
    root = tables[ntd.root]
    best = None
    for key in ((_EMPTY, _EMPTY, True), (_EMPTY, _EMPTY, False)):
        if key in root and (best is None or root[key] < best):
            best = root[key]
    if best is None:
        return INFEASIBLE
    return CvcSolution(frozenset(best[1]))


def _introduce(g, node, child, required, forbidden):
    v = node.vertex
    nb = g.neighbors(v) & (node.bag - {v})
    table: dict = {}
    for (X, P, closed), (size, cover) in child.items():
        if v not in required and nb <= X:
            _better(table, (X, P, closed), size, cover)
        if v in forbidden or closed:
            continue
        touched = [b for b in P if b & nb]
        merged = frozenset({v}).union(*touched)
        P2 = (P - frozenset(touched)) | {merged}
        _better(table, (X | {v}, P2, False), size + 1, tuple(sorted(cover + (v,))))
    return table


def _forget(node, child):
    v = node.vertex
    table: dict = {}
    for (X, P, closed), (size, cover) in child.items():
        if v not in X:
            _better(table, (X, P, closed), size, cover)
            continue
        block = next(b for b in P if v in b)
        rest = block - {v}
        if rest:
            _better(table, (X - {v}, (P - {block}) | {rest}, False), size, cover)
        elif len(X) == 1:
            # the only component is finished; nothing may be selected later
            _better(table, (_EMPTY, _EMPTY, True), size, cover)
    return table


def _join(left, right):
    by_x: dict = {}
    for (X, P, closed), val in right.items():
        by_x.setdefault(X, []).append((P, closed, val))
    table: dict = {}
    for (X, P1, c1), (s1, cov1) in left.items():
        for P2, c2, (s2, cov2) in by_x.get(X, ()):
            if c1 and c2:
                continue
            P = _merge_partitions(P1, P2) if X else _EMPTY
            cover = tuple(sorted(set(cov1) | set(cov2)))
            _better(table, (X, P, c1 or c2), s1 + s2 - len(X), cover)
    return table
