"""Exhaustive ground truth for minimum connected vertex cover on small graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ._accel import cvc_search, is_cvc_mask
from .graph import Graph, GraphError

ORACLE_GUARD = 16


class GuardExceeded(GraphError):
    pass


@dataclass(frozen=True)
class CvcSolution:
    cover: frozenset[int]
    feasible: bool = True

    @property
    def size(self) -> int:
        return len(self.cover) if self.feasible else math.inf

    @property
    def value(self):
        """Objective value; infinity encodes an infeasible answer."""
        return len(self.cover) if self.feasible else math.inf

    def key(self):
        return (self.value, tuple(sorted(self.cover)))


INFEASIBLE = CvcSolution(frozenset(), feasible=False)


def forced_by_leaves(g: Graph, required=frozenset(), forbidden=frozenset()):
    """Leaves no minimum cover uses, and their supports which every cover needs.

    With at least two edges a leaf in a connected cover can always be traded
    away (its support must be present too), so minimum covers avoid leaves.
    Leaves pinned by ``required`` and supports pinned by ``forbidden`` are left alone.
    """
    if g.m < 2:
        return frozenset(), frozenset()
    leaves, supports = set(), set()
    for v in g:
        if g.degree(v) == 1:
            s = next(iter(g.neighbors(v)))
            if v in required or s in forbidden or g.degree(s) == 1:
                continue
            leaves.add(v)
            supports.add(s)
    return frozenset(leaves), frozenset(supports)


def cvc_oracle(g: Graph, required: Iterable[int] = (), forbidden: Iterable[int] = (),
               limit: int = ORACLE_GUARD) -> CvcSolution:
    """Exact minimum connected vertex cover by subset enumeration.

    Ties break to the lexicographically smallest sorted cover. ``limit`` caps
    the number of undetermined vertices (those not pinned by constraints or
    by the leaf rule).
    """
    required = frozenset(required)
    forbidden = frozenset(forbidden)
    if required & forbidden:
        raise GraphError("required and forbidden sets intersect")
    if not (required | forbidden) <= g.vertices:
        raise GraphError("constraint vertices missing from graph")
    leaves, supports = forced_by_leaves(g, required, forbidden)
    if supports & forbidden:
        return INFEASIBLE
    req = required | supports
    forb = forbidden | leaves
    labels = g.nodes()
    free = len(labels) - len(req | forb)
    if free > limit:
        raise GuardExceeded(f"oracle limited to {limit} free vertices, got {free}")
    if len(labels) > 64:
        raise GuardExceeded("oracle limited to 64 vertices")
    index = {v: i for i, v in enumerate(labels)}
    adj = [sum(1 << index[w] for w in g.neighbors(v)) for v in labels]
    mask = cvc_search(adj, _mask(req, index), _mask(forb, index))
    if mask < 0:
        return INFEASIBLE
    return CvcSolution(frozenset(labels[i] for i in range(len(labels)) if (mask >> i) & 1))


def _mask(vs, index):
    return sum(1 << index[v] for v in vs)


def opt(g: Graph, limit: int = ORACLE_GUARD) -> int:
    sol = cvc_oracle(g, limit=limit)
    if not sol.feasible:
        raise GraphError("graph has no connected vertex cover")
    return sol.size


def minimal_cvcs(g: Graph, limit: int = 18) -> list[frozenset[int]]:
    """Every inclusion-minimal connected vertex cover of ``g``.

    Supports of leaves are pinned and leaves excluded (valid for minimality
    whenever the graph has at least two edges).
    """
    labels = g.nodes()
    index = {v: i for i, v in enumerate(labels)}
    adj = [sum(1 << index[w] for w in g.neighbors(v)) for v in labels]
    leaves, supports = forced_by_leaves(g)
    req = _mask(supports, index)
    free = [index[v] for v in labels if v not in leaves and v not in supports]
    if len(free) > limit:
        raise GuardExceeded(f"enumeration limited to {limit} free vertices, got {len(free)}")
    covers: list[int] = []
    for size in range(len(free) + 1):
        for combo in combinations(free, size):
            t = req
            for i in combo:
                t |= 1 << i
            # enumeration is by size, so a smaller cover inside t was already found
            if any(c & t == c for c in covers):
                continue
            if is_cvc_mask(adj, t):
                covers.append(t)
    return [frozenset(labels[i] for i in range(len(labels)) if (t >> i) & 1) for t in covers]
