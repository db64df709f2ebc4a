"""Solution lifting: map a kernel cover back to the input graph and certify it."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .approx import minimalize, reconnect
from .graph import Graph, GraphError, is_connected_vertex_cover, uncovered_edge
from .instance import ModulatorInstance
from .kernel import (
    CaseTag,
    ContractClique,
    KernelOutput,
    PendantAdded,
    SuperVertexMerge,
    replay,
    rr1_eta,
)
from .oracle import ORACLE_GUARD, GuardExceeded, cvc_oracle


class LiftError(AssertionError):
    """The lifted set is not a connected vertex cover: a transcript or lifting bug."""


@dataclass
class Certificate:
    n: int
    cover: frozenset[int]
    bound: Fraction
    conservative_bound: Fraction | None = None
    opt: int | None = None
    ratio: Fraction | None = None
    reconnect_added: int = 0
    checks: list[tuple[str, bool]] = field(default_factory=list)
    stages: list[dict] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.cover)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def check(self, name: str, ok: bool) -> None:
        self.checks.append((name, bool(ok)))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "cover": sorted(self.cover),
            "bound": str(self.bound),
            "conservative_bound": None if self.conservative_bound is None else str(self.conservative_bound),
            "opt": self.opt,
            "ratio": None if self.ratio is None else str(self.ratio),
            "ratio_float": None if self.ratio is None else float(self.ratio),
            "reconnect_added": self.reconnect_added,
            "checks": {name: ok for name, ok in self.checks},
            "stages": self.stages,
            "passed": self.passed,
        }


def certify(graph: Graph, cover: Iterable[int], bound, limit: int = ORACLE_GUARD,
            cert: Certificate | None = None) -> Certificate:
    """Record validity and, when the oracle is affordable, the measured ratio against ``bound``."""
    cover = frozenset(cover)
    bound = Fraction(bound)
    if cert is None:
        cert = Certificate(graph.n, cover, bound)
    cert.check("connected-vertex-cover", is_connected_vertex_cover(graph, cover))
    if graph.n <= limit:
        try:
            best = cvc_oracle(graph, limit=limit)
        except GuardExceeded:
            best = None
        if best is not None and best.feasible:
            cert.opt = best.size
            if best.size:
                cert.ratio = Fraction(len(cover), best.size)
            elif not cover:
                cert.ratio = Fraction(1)
            cert.check("ratio-within-bound", len(cover) <= bound * best.size)
    return cert


def undo_clique_contractions(g1_cover: frozenset[int], events: list[ContractClique],
                             stages: list | None = None) -> frozenset[int]:
    """Re-expand contracted cliques, newest first: D = (D - {u_C, v_C}) | C."""
    D = frozenset(g1_cover)
    for ev in reversed(events):
        before = len(D)
        if ev.label in D or ev.pendant in D:
            D = (D - {ev.label, ev.pendant}) | set(ev.members)
        if stages is not None:
            stages.append({"event": "ContractClique", "label": ev.label, "before": before, "after": len(D)})
    return D


def lift(original: ModulatorInstance, kernel: KernelOutput, Q: Iterable[int], c=1) -> Certificate:
    """Lift a connected vertex cover ``Q`` of the kernel graph to the input graph.

    ``c`` is the approximation factor claimed for ``Q``; it only enters the
    certificate bound.
    """
    Q = frozenset(Q)
    c = Fraction(c)
    eps = kernel.epsilon
    if not is_connected_vertex_cover(kernel.graph, Q):
        bad = uncovered_edge(kernel.graph, Q)
        what = f"edge {bad} uncovered" if bad else "cover is disconnected"
        raise GraphError(f"Q is not a connected vertex cover of the kernel: {what}")
    tr = kernel.transcript
    tag: CaseTag = tr.case()
    g1 = replay(original.graph, tr, stop_at_case=True)
    stages: list[dict] = []
    added: list[int] = []
    if tag.case == "small-modulator":
        D = frozenset(tag.cover)
        bound = 1 + eps
    else:
        D = minimalize(kernel.graph, Q)
        after_case = tr.events[tr.events.index(tag):]
        for ev in reversed(after_case):
            if isinstance(ev, PendantAdded):
                D = D - {ev.label}
            elif isinstance(ev, SuperVertexMerge):
                if ev.label in D:
                    D = (D - {ev.label}) | set(ev.members)
            # TwinDropped, MarkRecord and the tag need no inverse action
        if D and not is_connected_vertex_cover(g1, D):
            if uncovered_edge(g1, D) is None:
                D = reconnect(g1, D, added)
        bound = c * (1 + eps)
    cliques = tr.of_type(ContractClique)
    D = undo_clique_contractions(D, cliques, stages)
    conservative = None
    if kernel.mode.kind == "chordal":
        eta = rr1_eta(eps)
        stage = max(bound, Fraction(eta - 1, eta - 2))
        conservative = max(c, 1 + eps) * (1 + eps)
        bound = stage
    if original.graph.m and not is_connected_vertex_cover(original.graph, D):
        bad = uncovered_edge(original.graph, D)
        raise LiftError(f"lifted set is not a connected vertex cover of the input ({bad or 'disconnected'})")
    return Certificate(original.graph.n, D, bound, conservative, reconnect_added=len(added), stages=stages)
