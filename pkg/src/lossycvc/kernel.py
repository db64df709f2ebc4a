"""Reduction side of the lossy kernel: case split, small-modulator solve, marking kernel, clique rule.

Every graph change is logged as an event so the kernel can be rebuilt from
the input graph (``replay``) and solutions can be mapped back (``lifting``).
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable

from .apex import cvc_apex_compose, solve_in_class
from .approx import ApproxCover, reconnect, savage_2approx
from .classes import Mode, maximal_cliques_chordal, mode_labels, parse_mode, recognize_chordal
from .graph import (
    Graph,
    GraphError,
    add_pendant,
    connected_components,
    identify,
    is_connected,
    is_connected_vertex_cover,
    remove_vertices,
)
from .instance import InstanceError, ModulatorInstance, validate_instance


def _ceil(x: Fraction) -> int:
    return math.ceil(Fraction(x))


# ---------------------------------------------------------------- events


@dataclass(frozen=True)
class IdentifySet:
    members: tuple[int, ...]
    label: int


@dataclass(frozen=True)
class ContractClique:
    members: tuple[int, ...]
    label: int
    pendant: int


@dataclass(frozen=True)
class SuperVertexMerge:
    vertex: int
    members: tuple[int, ...]  # the I-vertex plus its H-neighbors
    label: int


@dataclass(frozen=True)
class PendantAdded:
    host: int
    label: int


@dataclass(frozen=True)
class TwinDropped:
    kept: int
    dropped: tuple[int, ...]
    neighborhood: tuple[int, ...]


@dataclass(frozen=True)
class MarkRecord:
    H: tuple[int, ...]
    R: tuple[int, ...]
    I: tuple[int, ...]
    marked: tuple[int, ...]


@dataclass(frozen=True)
class CaseTag:
    case: str  # small-modulator | large-modulator
    kprime: int
    cover: tuple[int, ...] | None = None
    edge: tuple[int, int] | None = None


EVENT_TYPES = {
    cls.__name__: cls
    for cls in (IdentifySet, ContractClique, SuperVertexMerge, PendantAdded, TwinDropped, MarkRecord, CaseTag)
}


def event_to_dict(ev) -> dict:
    d = {"event": type(ev).__name__}
    d.update(asdict(ev))
    return d


def event_from_dict(d: dict):
    d = dict(d)
    cls = EVENT_TYPES.get(d.pop("event", None))
    if cls is None:
        raise ValueError(f"unknown transcript event in {d!r}")
    fields = {k: tuple(v) if isinstance(v, list) else v for k, v in d.items()}
    return cls(**fields)


@dataclass
class KernelTranscript:
    events: list = field(default_factory=list)

    def add(self, ev) -> None:
        self.events.append(ev)

    def extend(self, evs: Iterable) -> None:
        self.events.extend(evs)

    def case(self) -> CaseTag:
        tags = [e for e in self.events if isinstance(e, CaseTag)]
        if len(tags) != 1:
            raise ValueError(f"transcript must hold exactly one case tag, found {len(tags)}")
        return tags[0]

    def of_type(self, cls) -> list:
        return [e for e in self.events if isinstance(e, cls)]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(event_to_dict(e), sort_keys=True) + "\n" for e in self.events)

    @classmethod
    def from_jsonl(cls, text: str) -> "KernelTranscript":
        events = []
        for n, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            try:
                events.append(event_from_dict(json.loads(line)))
            except (ValueError, TypeError) as exc:
                raise ValueError(f"transcript line {n}: {exc}") from None
        return cls(events)


def replay(g: Graph, transcript: KernelTranscript, stop_at_case: bool = False) -> Graph:
    """Rebuild the kernel graph from the input graph by re-applying every event.

    With ``stop_at_case`` the graph just before the case split is returned
    (the input after the clique rule).
    """
    for ev in transcript.events:
        if isinstance(ev, ContractClique):
            g, _ = identify(g, ev.members, ev.label)
            g, _ = add_pendant(g, ev.label, ev.pendant)
        elif isinstance(ev, CaseTag):
            if stop_at_case:
                return g
            if ev.case == "small-modulator":
                a, b = ev.edge
                return Graph((a, b), [(a, b)], next_label=max(g.next_label, b + 1))
        elif isinstance(ev, SuperVertexMerge):
            g, _ = identify(g, ev.members, ev.label)
        elif isinstance(ev, TwinDropped):
            g = remove_vertices(g, ev.dropped)
        elif isinstance(ev, PendantAdded):
            g, _ = add_pendant(g, ev.host, ev.label)
        # IdentifySet and MarkRecord carry no graph change
    return g


@dataclass
class KernelOutput:
    graph: Graph
    modulator: frozenset[int]
    kprime: int
    transcript: KernelTranscript
    bound: int
    case: str
    epsilon: Fraction
    mode: Mode
    stats: dict = field(default_factory=dict)

    @property
    def stored_cover(self) -> frozenset[int] | None:
        tag = self.transcript.case()
        return frozenset(tag.cover) if tag.cover is not None else None


# ---------------------------------------------------------------- size bound


def size_bound(k: int, eps) -> int:
    """Explicit vertex bound for the marking kernel with parameter ``k``.

    With ``kp = ceil(6k/eps)`` and ``t = ceil(1/eps)``: high-degree vertices
    number at most kp, low-degree vertices with a low-degree neighbor at most
    kp**2, marked vertices at most (kp+1)*kp, contracted leftovers at most
    ceil(eps*kp), twin representatives at most ((1+eps)*kp + 2)**t, and one
    pendant per high-degree vertex adds kp more.
    """
    eps = Fraction(eps)
    kp = _ceil(6 * k / eps)
    t = _ceil(1 / eps)
    twins = _ceil(((1 + eps) * kp + 2) ** t)
    return kp + kp * kp + (kp + 1) * kp + _ceil(eps * kp) + twins + kp


TRIVIAL_BOUND = 2


# ---------------------------------------------------------------- small modulator


def _labels_or_raise(g: Graph, S, mode: Mode) -> dict:
    labels = mode_labels(g, S, mode)
    bad = [sorted(c) for c, lab in labels.items() if lab == "none"]
    if bad:
        raise GraphError(f"unsupported component class: component {bad[0]} fits no solver of mode {mode}")
    return labels


def small_modulator_solve(g: Graph, S: Iterable[int], eps, mode="unified(0)",
                          events: list | None = None) -> ApproxCover:
    """Cover of size at most OPT(g) + 2|S| via an exact solve of ``g`` with ``S`` identified."""
    S = frozenset(S)
    eps = Fraction(eps)
    mode = parse_mode(mode)
    if not is_connected(g):
        raise GraphError("graph disconnected")
    if g.m == 0:
        return ApproxCover(frozenset(), 1 + eps, "small-case")
    labels = _labels_or_raise(g, S, mode)
    if not S:
        (comp, lab), = labels.items()
        sol = solve_in_class(g, lab)
        return ApproxCover(sol.cover, 1 + eps, "small-case")
    ghat, u = identify(g, S)
    if events is not None:
        events.append(IdentifySet(tuple(sorted(S)), u))
    star = cvc_apex_compose(ghat, u, labels).cover
    X = (star - {u}) | S
    X = reconnect(g, X)
    assert is_connected_vertex_cover(g, X)
    return ApproxCover(X, 1 + eps, "small-case")


# ---------------------------------------------------------------- marking kernel


def lpr_kernel(g: Graph, S: Iterable[int], k: int, eps, L: frozenset[int] | None = None,
               mode="unified(0)") -> KernelOutput:
    """Marking, contraction and twin reduction for the large-modulator case."""
    S = frozenset(S)
    eps = Fraction(eps)
    if L is None:
        L = savage_2approx(g).cover
    if not 6 * len(S) > eps * len(L):
        raise GraphError("large-modulator precondition |S| > (eps/6)|L| does not hold")
    kp = _ceil(6 * k / eps)
    t = _ceil(1 / eps)
    tr = KernelTranscript()
    tr.add(CaseTag("large-modulator", kp))

    H = {v for v in g if g.degree(v) >= kp + 1}
    R = {v for v in g if v not in H and g.neighbors(v) - H}
    I = g.vertices - H - R
    h_initial = len(H)
    marked: set[int] = set()
    for h in sorted(H):
        nb = sorted(g.neighbors(h) & I)
        marked.update(nb[: kp + 1])
    tr.add(MarkRecord(tuple(sorted(H)), tuple(sorted(R)), tuple(sorted(I)), tuple(sorted(marked))))

    # contraction loop: merge an unmarked I-vertex seeing many H-components
    iterations = 0
    cur = g
    I_left = set(I)
    while True:
        comps = connected_components(cur, H)
        owner = {v: i for i, c in enumerate(comps) for v in c}
        pick = None
        for v in sorted(I_left - marked):
            if len({owner[h] for h in cur.neighbors(v)}) >= t:
                pick = v
                break
        if pick is None:
            break
        members = frozenset({pick}) | cur.neighbors(pick)
        cur, s = identify(cur, members)
        tr.add(SuperVertexMerge(pick, tuple(sorted(members)), s))
        H = (H - members) | {s}
        I_left.discard(pick)
        iterations += 1

    groups: dict[frozenset[int], list[int]] = {}
    for v in sorted(I_left - marked):
        groups.setdefault(cur.neighbors(v), []).append(v)
    dropped = set()
    twin_classes = 0
    for nb, vs in sorted(groups.items(), key=lambda kv: kv[1][0]):
        twin_classes += 1
        if len(vs) > 1:
            tr.add(TwinDropped(vs[0], tuple(vs[1:]), tuple(sorted(nb))))
            dropped.update(vs[1:])
    cur = remove_vertices(cur, dropped)
    for h in sorted(H):
        cur, p = add_pendant(cur, h)
        tr.add(PendantAdded(h, p))

    merges = tr.of_type(SuperVertexMerge)
    S_new = set(S & cur.vertices)
    for ev in merges:
        if S & set(ev.members):
            S_new.add(ev.label)
    S_new &= cur.vertices
    bound = size_bound(k, eps)
    stats = {
        "H": h_initial, "H_final": len(H), "R": len(R), "I": len(I), "marked": len(marked),
        "iterations": iterations, "threshold": t, "twin_classes": twin_classes,
        "dropped": len(dropped), "n_kernel": cur.n, "within_bound": cur.n <= bound,
    }
    return KernelOutput(cur, frozenset(S_new), kp, tr, bound, "large-modulator", eps, parse_mode(mode), stats)


# ---------------------------------------------------------------- clique rule


def rr1_eta(eps) -> int:
    return 2 + _ceil(1 / Fraction(eps))


def rr1_contract_cliques(g: Graph, S: Iterable[int], eps) -> tuple[Graph, KernelTranscript]:
    """Exhaustively contract cliques of ``eta`` vertices in ``g - S`` and hang a pendant on each.

    A clique is taken as the ``eta`` smallest labels of the first maximal
    clique (in label order) of size at least ``eta``; cliques are recomputed
    after every contraction.
    """
    S = frozenset(S)
    eta = rr1_eta(eps)
    tr = KernelTranscript()
    while True:
        rest = remove_vertices(g, S)
        peo = recognize_chordal(rest)
        if peo is None:
            raise GraphError("G - S is not chordal")
        big = [c for c in maximal_cliques_chordal(rest, peo) if len(c) >= eta]
        if not big:
            return g, tr
        C = tuple(sorted(big[0])[:eta])
        g, u = identify(g, C)
        g, p = add_pendant(g, u)
        tr.add(ContractClique(C, u, p))


# ---------------------------------------------------------------- pipeline


def kernelize(inst: ModulatorInstance, validate: bool = True) -> KernelOutput:
    """Full reduction: optional clique rule, then the small/large modulator case split."""
    if validate:
        validate_instance(inst)
    g, S, eps, mode = inst.graph, inst.modulator, inst.epsilon, inst.mode
    tr = KernelTranscript()
    stage_mode = mode
    if mode.kind == "chordal":
        g, pre = rr1_contract_cliques(g, S, eps)
        tr.extend(pre.events)
        stage_mode = Mode("tw", rr1_eta(eps) - 2)
    L = savage_2approx(g).cover
    if 6 * len(S) <= eps * len(L):
        solver_events: list = []
        cover = small_modulator_solve(g, S, eps, stage_mode, solver_events)
        a = max([g.next_label] + [ev.label + 1 for ev in solver_events])
        tr.add(CaseTag("small-modulator", 0, tuple(sorted(cover.cover)), (a, a + 1)))
        tr.extend(solver_events)
        kg = Graph((a, a + 1), [(a, a + 1)])
        stats = {"L": len(L), "n_kernel": 2, "within_bound": True}
        return KernelOutput(kg, frozenset(), 0, tr, TRIVIAL_BOUND, "small-modulator", eps, mode, stats)
    out = lpr_kernel(g, S, inst.k, eps, L, mode)
    tr.extend(out.transcript.events)
    out.transcript = tr
    out.stats["L"] = len(L)
    return out


__all__ = [
    "CaseTag", "ContractClique", "IdentifySet", "InstanceError", "KernelOutput", "KernelTranscript",
    "MarkRecord", "PendantAdded", "SuperVertexMerge", "TwinDropped", "kernelize", "lpr_kernel",
    "replay", "rr1_contract_cliques", "rr1_eta", "size_bound", "small_modulator_solve",
]
