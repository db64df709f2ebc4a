"""Exact connected vertex cover on graphs that are one vertex away from a class.

Every per-class solver answers the same *apex contract* for a component
``C`` whose apex neighbors are ``M``:

* ``apex_in=True``: the minimum ``Y`` covering all edges of ``C`` such that
  every connected component of ``C[Y]`` meets ``M`` (so ``Y`` plus the apex
  is connected through the apex). ``Y`` may be empty if ``C`` has no edges.
* ``apex_in=False``: the minimum connected vertex cover ``Y`` of ``C`` with
  ``M`` contained in ``Y`` (the apex stays out, so its edges need ``M``).
"""

from __future__ import annotations

from typing import Iterable

from .classes import (
    Cotree,
    build_clique_tree,
    classify_components,
    recognize_chordal,
    recognize_cograph,
    recognize_split,
)
from .decomposition import TreeDecomposition, heuristic_decomposition, to_nice
from .dp import cvc_treewidth_dp
from .graph import (
    Graph,
    GraphError,
    add_vertex,
    connected_components,
    induced_subgraph,
    is_connected_vertex_cover,
    remove_vertices,
)
from .oracle import INFEASIBLE, CvcSolution


def apex_contract_holds(component: Graph, M: Iterable[int], Y: Iterable[int], apex_in: bool) -> bool:
    M = frozenset(M)
    Y = frozenset(Y)
    if apex_in:
        if any(u not in Y and v not in Y for u, v in component.edges()):
            return False
        return all(c & M for c in connected_components(component, Y))
    return M <= Y and is_connected_vertex_cover(component, Y)


def _with_apex(component: Graph, M, td: TreeDecomposition, apex_in: bool, max_omitted=None):
    g1, apex = add_vertex(component, M)
    ntd = to_nice(td.with_vertex(apex))
    if apex_in:
        sol = cvc_treewidth_dp(g1, ntd, required={apex}, max_omitted=max_omitted)
    else:
        sol = cvc_treewidth_dp(g1, ntd, forbidden={apex}, max_omitted=max_omitted)
    if not sol.feasible:
        return INFEASIBLE
    return CvcSolution(sol.cover - {apex})


def cvc_chordal_apex(component: Graph, M: Iterable[int], apex_in: bool) -> CvcSolution:
    """Apex contract on a chordal component via its clique tree plus the apex in every bag."""
    M = frozenset(M)
    peo = recognize_chordal(component)
    if peo is None:
        raise GraphError("component is not chordal")
    if component.n == 0:
        return CvcSolution(frozenset())
    td = build_clique_tree(component, peo)
    # bags are a clique plus the apex, so any cover omits at most two bag vertices
    return _with_apex(component, M, td, apex_in, max_omitted=2)


def cvc_tw_apex(component: Graph, M: Iterable[int], apex_in: bool,
                td: TreeDecomposition | None = None) -> CvcSolution:
    """Apex contract through a tree decomposition of the component."""
    M = frozenset(M)
    if component.n == 0:
        return CvcSolution(frozenset())
    if td is None:
        td = heuristic_decomposition(component)
    return _with_apex(component, M, td, apex_in)


def cvc_split_apex(component: Graph, M: Iterable[int], apex_in: bool) -> CvcSolution:
    """Apex contract on a split component by enumerating O(|C|) clique choices.

    Any cover keeps all of the clique ``C`` or all but one vertex ``q``; the
    independent vertices next to ``q`` are then forced. The only further
    vertex that can help is a single independent vertex of ``M`` attached to
    the clique part (apex side); adding ``q`` back is the ``C`` case itself.
    """
    M = frozenset(M)
    part = recognize_split(component)
    if part is None:
        raise GraphError("component is not a split graph")
    C, I = part
    bases = [C] + [C - {q} for q in sorted(C)]
    best = INFEASIBLE
    for K in bases:
        forced = frozenset(i for i in I if component.neighbors(i) - K)
        Y = K | forced
        if not apex_in:
            Y |= M & I
            if not (M & C) <= K:
                continue
        candidates = [Y]
        if apex_in and K:
            extra = sorted(i for i in (I & M) - Y if component.neighbors(i) & K)
            candidates += [Y | {i} for i in extra[:1]]
        for cand in candidates:
            if apex_contract_holds(component, M, cand, apex_in):
                sol = CvcSolution(cand)
                if sol.key() < best.key():
                    best = sol
                break
    return best


_EMPTY = "empty"
_GOOD = "allgood"
_MIXED = "mixed"
_NONE = "none"
_CONN = "connected"
_DISC = "disconnected"


def _offer(table, status, cover):
    cur = table.get(status)
    key = (len(cover), tuple(sorted(cover)))
    if cur is None or key < (len(cur), tuple(sorted(cur))):
        table[status] = cover


def _union_in(a, b):
    if a == _EMPTY:
        return b
    if b == _EMPTY:
        return a
    if a == b == _GOOD:
        return _GOOD
    if a == b == _NONE:
        return _NONE
    return _MIXED


def cvc_cograph_apex(component: Graph, cotree: Cotree | None, M: Iterable[int], apex_in: bool) -> CvcSolution:
    """Apex contract on a cograph by dynamic programming over its cotree.

    Each node keeps, per status, the best vertex cover of the subtree graph.
    At a join of ``G1`` and ``G2`` every cover contains all of ``V1`` or all
    of ``V2``; with the other side's part nonempty the result is connected.
    """
    M = frozenset(M)
    if cotree is None:
        cotree = recognize_cograph(component)
        if cotree is None:
            raise GraphError("component is not a cograph")
    if sorted(cotree.leaves()) != component.nodes():
        raise GraphError("cotree does not match the component")

    def full_status(vs, connected):
        if apex_in:
            if connected:
                return _GOOD if vs & M else _NONE
            comps = connected_components(component, vs)
            flags = [bool(c & M) for c in comps]
            return _GOOD if all(flags) else (_NONE if not any(flags) else _MIXED)
        return _CONN if connected else _DISC

    def walk(t: Cotree):
        """Return (table, vertex set, is-connected) for the subtree graph."""
        if t.kind == "leaf":
            v = t.vertex
            table: dict = {}
            if apex_in:
                _offer(table, _EMPTY, frozenset())
                _offer(table, _GOOD if v in M else _NONE, frozenset((v,)))
            else:
                if v not in M:
                    _offer(table, _EMPTY, frozenset())
                _offer(table, _CONN, frozenset((v,)))
            return table, frozenset((v,)), True
        acc, vs, conn = walk(t.children[0])
        for child in t.children[1:]:
            tb, ws, cconn = walk(child)
            acc = _combine(t.kind, acc, vs, conn, tb, ws, cconn)
            vs = vs | ws
            conn = t.kind == "join"
        return acc, vs, conn

    def _combine(kind, ta, va, ca, tb, vb, cb):
        out: dict = {}
        if kind == "union":
            for sa, ya in ta.items():
                for sb, yb in tb.items():
                    if apex_in:
                        st = _union_in(sa, sb)
                    else:
                        st = sb if sa == _EMPTY else sa if sb == _EMPTY else _DISC
                    _offer(out, st, ya | yb)
            return out
        # join: all of one side plus a cover of the other side
        for full, fconn, other in ((va, ca, tb), (vb, cb, ta)):
            for so, yo in other.items():
                y = full | yo
                if so == _EMPTY:
                    st = full_status(full, fconn)
                elif apex_in:
                    st = _GOOD if y & M else _NONE
                else:
                    st = _CONN
                _offer(out, st, y)
        return out

    table, _, _ = walk(cotree)
    picks = [_EMPTY, _GOOD] if apex_in else [_EMPTY, _CONN]
    best = INFEASIBLE
    for st in picks:
        if st in table:
            sol = CvcSolution(table[st])
            if sol.key() < best.key():
                best = sol
    return best


def solve_apex_problem(component: Graph, M: Iterable[int], apex_in: bool, label: str) -> CvcSolution:
    if label == "split":
        return cvc_split_apex(component, M, apex_in)
    if label == "cograph":
        return cvc_cograph_apex(component, None, M, apex_in)
    if label == "chordal":
        return cvc_chordal_apex(component, M, apex_in)
    if label == "tw":
        return cvc_tw_apex(component, M, apex_in)
    raise GraphError(f"unsupported component class {label!r}")


def cvc_apex_compose(ghat: Graph, apex: int, labels: dict[frozenset[int], str] | None = None) -> CvcSolution:
    """Exact minimum connected vertex cover of a graph whose apex deletion splits into classed components."""
    if apex not in ghat:
        raise GraphError(f"apex {apex} not in graph")
    if ghat.m == 0:
        return CvcSolution(frozenset())
    rest = remove_vertices(ghat, {apex})
    comps = connected_components(rest)
    if labels is None:
        # the tree-decomposition solver handles any component, so no width cap
        labels = classify_components(ghat, {apex}, ghat.n)
    for c in comps:
        if labels.get(c, "none") == "none":
            raise GraphError(f"component {sorted(c)} has no supported class")
    N = ghat.neighbors(apex)
    subs = [(induced_subgraph(rest, c), c & N, labels[c]) for c in comps]

    candidates = []
    inside = frozenset((apex,))
    ok = True
    for comp, M, lab in subs:
        sol = solve_apex_problem(comp, M, True, lab)
        if not sol.feasible:
            ok = False
            break
        inside |= sol.cover
    if ok:
        candidates.append(CvcSolution(inside))
    if len(subs) == 1:
        comp, M, lab = subs[0]
        sol = solve_apex_problem(comp, M, False, lab)
        if sol.feasible:
            candidates.append(sol)
    candidates = [c for c in candidates if is_connected_vertex_cover(ghat, c.cover)]
    assert candidates, "connected graph with an edge must have a connected vertex cover"
    return min(candidates, key=CvcSolution.key)


def solve_in_class(g: Graph, label: str) -> CvcSolution:
    """Minimum connected vertex cover of a connected graph lying in one class."""
    return solve_apex_problem(g, frozenset(), False, label)
