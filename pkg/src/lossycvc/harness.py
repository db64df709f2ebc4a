"""Batch property checks against the exhaustive oracle, one per acceptance criterion."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .apex import (
    apex_contract_holds,
    cvc_chordal_apex,
    cvc_cograph_apex,
    cvc_split_apex,
    cvc_tw_apex,
)
from .approx import savage_2approx
from .classes import (
    build_clique_tree,
    maximal_cliques_chordal,
    recognize_chordal,
    recognize_cograph,
    recognize_split,
)
from .decomposition import verify_tree_decomposition
from .generate import GenSpec, build_component, gen_instance
from .graph import (
    Graph,
    add_vertex,
    connected_components,
    identify,
    induced_subgraph,
    is_connected_vertex_cover,
    remove_vertices,
)
from .kernel import (
    ContractClique,
    SuperVertexMerge,
    kernelize,
    lpr_kernel,
    rr1_contract_cliques,
    rr1_eta,
)
from .lifting import certify, lift, undo_clique_contractions
from .oracle import cvc_oracle, minimal_cvcs

EPSILONS = (Fraction(1, 4), Fraction(1, 2), Fraction(1))
PADDINGS = (Fraction(1), Fraction(3, 2), Fraction(2))
KERNEL_ORACLE_LIMIT = 24


@dataclass
class PropertyResult:
    name: str
    trials: int = 0
    failures: int = 0
    max_ratio: Fraction | None = None
    bound: str = ""
    notes: list[str] = field(default_factory=list)
    examples: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.trials > 0

    def record(self, ok: bool, detail: str = "") -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < 5:
                self.examples.append(detail)

    def ratio(self, r) -> None:
        if r is not None and (self.max_ratio is None or r > self.max_ratio):
            self.max_ratio = Fraction(r)

    def line(self) -> str:
        mr = "-" if self.max_ratio is None else f"{float(self.max_ratio):.4f}"
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: trials={self.trials} failures={self.failures} max_ratio={mr} bound={self.bound}"

    def to_dict(self) -> dict:
        return {
            "name": self.name, "trials": self.trials, "failures": self.failures,
            "max_ratio": None if self.max_ratio is None else float(self.max_ratio),
            "bound": self.bound, "notes": self.notes, "examples": self.examples,
            "seconds": round(self.seconds, 3), "ok": self.ok,
        }


# ---------------------------------------------------------------- helpers


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph(range(n), edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def class_component(rng: random.Random, cls: str, n: int, eta: int = 2) -> Graph:
    vs = list(range(n))
    return Graph(vs, build_component(rng, cls, vs, eta))


def pad_cover(g: Graph, cover, c, opt: int, rng: random.Random | None = None) -> frozenset[int]:
    """Grow ``cover`` with neighbors of the cover up to ``floor(c * opt)`` vertices.

    Added vertices touch the current cover, so the result stays connected.
    """
    target = int(Fraction(c) * opt)
    T = set(cover)
    while len(T) < target:
        frontier = sorted({w for v in T for w in g.neighbors(v)} - T)
        if not frontier:
            break
        T.add(rng.choice(frontier) if rng else frontier[0])
    return frozenset(T)


def _oracle_opt(g: Graph, limit: int = 16) -> int:
    return cvc_oracle(g, limit=limit).size


def _random_spec(rng: random.Random, mode: str, max_n: int = 14, eps=None, k_range=(0, 3)) -> GenSpec:
    """Random generator spec whose instance fits ``mode`` and has at most ``max_n`` vertices."""
    kinds = {
        "tw": ["tree", "tw"],
        "chordal": ["chordal", "split", "tree", "chordal"],
        "split-cograph": ["split", "cograph"],
        "unified": ["tree", "chordal", "split", "cograph", "tw"],
    }[mode]
    while True:
        k = rng.randint(*k_range)
        parts = rng.randint(1, 3) if k else 1
        budget = max_n - k
        if budget < parts:
            continue
        sizes = [rng.randint(1, max(1, budget // parts)) for _ in range(parts)]
        comps = [(rng.choice(kinds), s) for s in sizes]
        eta = rng.randint(1, 3)
        mode_text = {"tw": f"tw({eta})", "unified": f"unified({eta})"}.get(mode, mode)
        return GenSpec(comps, k=k, density=rng.uniform(0.1, 0.9), seed=rng.randrange(1 << 30),
                       eta=eta, epsilon=eps if eps is not None else rng.choice(EPSILONS), mode=mode_text)


# ---------------------------------------------------------------- criterion 1


def check_class_solvers(trials: int = 300, seed: int = 0) -> dict[str, PropertyResult]:
    """Each class solver versus the oracle on a component plus an apex (at most 14 vertices)."""
    rng = random.Random(seed)
    out = {}
    solvers = {
        "split": lambda comp, M, a: cvc_split_apex(comp, M, a),
        "chordal": lambda comp, M, a: cvc_chordal_apex(comp, M, a),
        "cograph": lambda comp, M, a: cvc_cograph_apex(comp, None, M, a),
        "tw": lambda comp, M, a: cvc_tw_apex(comp, M, a),
    }
    for cls, solve in solvers.items():
        res = PropertyResult(f"class-solver[{cls}]", bound="exact")
        t0 = time.perf_counter()
        for _ in range(trials):
            n = rng.randint(1, 13)
            gen_cls = {"tw": "tw", "split": "split", "cograph": "cograph", "chordal": "chordal"}[cls]
            comp = class_component(rng, gen_cls, n, eta=rng.randint(1, 3))
            M = frozenset(v for v in comp if rng.random() < rng.uniform(0.1, 0.7))
            apex_in = rng.random() < 0.5
            g1, a = add_vertex(comp, M)
            ref = cvc_oracle(g1, required={a}) if apex_in else cvc_oracle(g1, forbidden={a})
            want = ref.size - 1 if (apex_in and ref.feasible) else ref.size
            got = solve(comp, M, apex_in)
            ok = got.size == want and (not got.feasible or apex_contract_holds(comp, M, got.cover, apex_in))
            if ok and cls == "chordal":
                # the two-omission pruning must not lose an optimum
                td = build_clique_tree(comp, recognize_chordal(comp))
                ok = cvc_tw_apex(comp, M, apex_in, td).size == got.size
            res.record(ok, f"n={n} M={sorted(M)} apex_in={apex_in} edges={comp.edges()} got={got.size} want={want}")
        res.seconds = time.perf_counter() - t0
        out[cls] = res
    return out


# ---------------------------------------------------------------- criterion 2


def check_savage(trials: int = 300, seed: int = 0) -> PropertyResult:
    rng = random.Random(seed)
    res = PropertyResult("savage-2-approx", bound="2")
    t0 = time.perf_counter()
    for _ in range(trials):
        g = random_connected_graph(rng, rng.randint(1, 14), rng.uniform(0, 0.5))
        s = savage_2approx(g)
        opt = _oracle_opt(g)
        ok = is_connected_vertex_cover(g, s.cover) and len(s.cover) <= 2 * opt
        if opt:
            res.ratio(Fraction(len(s.cover), opt))
        res.record(ok, f"edges={g.edges()} savage={len(s.cover)} opt={opt}")
    res.seconds = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------- criterion 3


def check_identification(trials: int = 200, seed: int = 0) -> PropertyResult:
    rng = random.Random(seed)
    res = PropertyResult("identify-monotone", bound="OPT(G/X) <= OPT(G)")
    t0 = time.perf_counter()
    for _ in range(trials):
        n = rng.randint(1, 14)
        g = random_connected_graph(rng, n, rng.uniform(0, 0.5))
        X = frozenset(rng.sample(range(n), rng.randint(1, n)))
        h, _ = identify(g, X)
        a, b = _oracle_opt(h), _oracle_opt(g)
        res.record(a <= b, f"edges={g.edges()} X={sorted(X)} opt'={a} opt={b}")
    res.seconds = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------- criterion 4


def check_small_branch(trials: int = 200, seed: int = 0, max_attempts: int = 50000) -> PropertyResult:
    """Small-modulator branch: cover <= (1+eps) OPT and <= OPT + 2|S|."""
    from .kernel import small_modulator_solve

    rng = random.Random(seed)
    res = PropertyResult("small-branch-bound", bound="min((1+eps)OPT, OPT+2|S|)")
    t0 = time.perf_counter()
    per_eps = {e: 0 for e in EPSILONS}
    with_s = 0
    attempts = 0
    while res.trials < trials and attempts < max_attempts:
        attempts += 1
        eps = EPSILONS[attempts % len(EPSILONS)]
        mode = rng.choice(["tw", "chordal", "split-cograph", "unified"])
        # a nonempty modulator fires the small branch only with a large approximate cover
        spec = _random_spec(rng, mode, eps=eps, k_range=(0, 0) if eps < 1 and rng.random() < 0.7 else (0, 2))
        if spec.k:
            spec.density = rng.uniform(0.05, 0.3)
        try:
            inst = gen_instance(spec)
        except ValueError:
            continue
        g, S = inst.graph, inst.modulator
        if g.n > 14:
            continue
        L = savage_2approx(g).cover
        if not 6 * len(S) <= eps * len(L):
            continue
        cov = small_modulator_solve(g, S, eps, inst.mode)
        opt = _oracle_opt(g)
        ok = is_connected_vertex_cover(g, cov.cover)
        ok = ok and len(cov.cover) <= (1 + eps) * opt and len(cov.cover) <= opt + 2 * len(S)
        if opt:
            res.ratio(Fraction(len(cov.cover), opt))
        per_eps[eps] += 1
        with_s += bool(S)
        res.record(ok, f"mode={inst.mode} eps={eps} S={sorted(S)} edges={g.edges()} got={len(cov.cover)} opt={opt}")
    res.notes.append("trials per eps: " + ", ".join(f"{e}: {c}" for e, c in per_eps.items()))
    res.notes.append(f"trials with nonempty S: {with_s}")
    res.seconds = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------- criterion 5


def _hub_instance(rng: random.Random, eps: Fraction):
    """A graph with one or two near-universal vertices, so the marking kernel has work to do."""
    # a degree above ceil(6/eps) needs n = 14 and a universal hub at eps = 1/2
    tight = eps < 1
    n = 14 if tight else rng.randint(9, 14)
    hubs = rng.randint(1, 2)
    edges = set()
    for h in range(hubs):
        p = 1.0 if tight or rng.random() < 0.6 else 0.85
        for v in range(hubs, n):
            if rng.random() < p:
                edges.add((h, v))
    for v in range(hubs, n):
        for w in range(v + 1, n):
            if rng.random() < 0.08:
                edges.add((v, w))
    if hubs == 2 and rng.random() < 0.5:
        edges.add((0, 1))
    g = Graph(range(n), edges)
    if len(connected_components(g)) != 1:
        g = Graph(range(n), edges | {(0, v) for v in range(1, n)})
    k = 1 if tight or rng.random() < 0.8 else 2
    S = frozenset(rng.sample(range(n), k))
    return g, S


def expand_super_vertices(Q, merges) -> frozenset[int]:
    D = frozenset(Q)
    for ev in reversed(merges):
        if ev.label in D:
            D = (D - {ev.label}) | set(ev.members)
    return D


def check_marking_kernel(trials: int = 100, seed: int = 0, max_attempts: int = 20000) -> dict[str, PropertyResult]:
    """OPT(G') <= (1+eps) OPT(G); minimal covers of G' expand to covers of G; loop count <= eps|H|.

    The loop-count bound is asserted for eps < 1 (the accuracy range of the
    scheme) on at least ``trials`` runs; runs at eps = 1 are tallied
    separately as information.
    """
    rng = random.Random(seed)
    opt_res = PropertyResult("marking-kernel-opt", bound="(1+eps)")
    lift_res = PropertyResult("marking-kernel-minimal-lift", bound="every minimal CVC lifts")
    loop_res = PropertyResult("marking-kernel-loop-count", bound="eps*|H| (eps<1)")
    loop_eps1 = PropertyResult("marking-kernel-loop-count[eps=1, info]", bound="eps*|H|")
    size_res = PropertyResult("kernel-size-bound[marking]", bound="B(k,eps)")
    t0 = time.perf_counter()
    attempts = 0
    nontrivial = 0
    while (opt_res.trials < trials or loop_res.trials < trials) and attempts < max_attempts:
        attempts += 1
        eps = EPSILONS[attempts % len(EPSILONS)]
        if rng.random() < 0.5:
            eps = rng.choice((Fraction(1, 2), Fraction(1)))
            g, S = _hub_instance(rng, eps)
        else:
            spec = _random_spec(rng, rng.choice(["tw", "split-cograph", "unified"]), eps=eps, k_range=(1, 3))
            try:
                inst = gen_instance(spec)
            except ValueError:
                continue
            g, S = inst.graph, inst.modulator
        if g.n > 14:
            continue
        L = savage_2approx(g).cover
        if not 6 * len(S) > eps * len(L):
            continue
        out = lpr_kernel(g, S, len(S), eps, L)
        kg = out.graph
        merges = out.transcript.of_type(SuperVertexMerge)
        if out.stats["H"]:
            nontrivial += 1
        opt_g = _oracle_opt(g)
        opt_k = cvc_oracle(kg, limit=KERNEL_ORACLE_LIMIT).size
        if opt_g:
            opt_res.ratio(Fraction(opt_k, opt_g))
        desc = f"eps={eps} S={sorted(S)} edges={g.edges()}"
        opt_res.record(opt_k <= (1 + eps) * opt_g, f"{desc} opt'={opt_k} opt={opt_g}")
        bad = None
        for T in minimal_cvcs(kg):
            pend = {ev.label for ev in out.transcript.events if type(ev).__name__ == "PendantAdded"}
            D = expand_super_vertices(T - pend, merges)
            if g.m and not is_connected_vertex_cover(g, D):
                bad = sorted(T)
                break
        lift_res.record(bad is None, f"{desc} minimal cover {bad} does not lift")
        target = loop_res if eps < 1 else loop_eps1
        target.record(out.stats["iterations"] <= eps * out.stats["H"],
                      f"{desc} iterations={out.stats['iterations']} |H|={out.stats['H']}")
        size_res.record(kg.n <= out.bound, f"{desc} n'={kg.n} B={out.bound}")
    opt_res.notes.append(f"runs with nonempty H: {nontrivial}")
    dt = time.perf_counter() - t0
    for r in (opt_res, lift_res, loop_res, loop_eps1, size_res):
        r.seconds = dt
    return {"opt": opt_res, "lift": lift_res, "loop": loop_res, "loop_eps1": loop_eps1, "size": size_res}


def loop_count_stress(seed: int = 0, trials: int = 50) -> PropertyResult:
    """Loop count on larger graphs (no oracle): several hubs at eps = 1/2, chained by shared neighbors."""
    rng = random.Random(seed)
    res = PropertyResult("marking-kernel-loop-count[stress, info]", bound="eps*|H|")
    eps = Fraction(1, 2)
    for _ in range(trials):
        hubs = rng.randint(2, 5)
        leaves = 40
        edges = set()
        for h in range(hubs):
            for j in range(14):
                edges.add((h, hubs + h * 14 + j))
        base = hubs + hubs * 14
        for j in range(leaves):
            a, b = rng.sample(range(hubs), 2)
            edges |= {(a, base + j), (b, base + j)}
        g = Graph(range(base + leaves), edges)
        S = frozenset(range(hubs))
        out = lpr_kernel(g, S, 1, eps)
        res.record(out.stats["iterations"] <= eps * out.stats["H"],
                   f"hubs={hubs} iterations={out.stats['iterations']} |H|={out.stats['H']}")
    return res


# ---------------------------------------------------------------- criterion 6


def check_clique_rule(trials: int = 100, seed: int = 0, max_attempts: int = 20000) -> dict[str, PropertyResult]:
    rng = random.Random(seed)
    struct = PropertyResult("clique-rule-structure", bound="clique <= eta-1, width <= eta-2")
    event = PropertyResult("clique-rule-event-bound", bound="|D| <= |D'| + eta - 1")
    stage = PropertyResult("clique-rule-stage-ratio", bound="max{c, (eta-1)/(eta-2)}")
    optgap = PropertyResult("clique-rule-opt-gap", bound="OPT >= OPT' + sum(|C|-2)")
    t0 = time.perf_counter()
    attempts = 0
    fired = 0
    while struct.trials < trials and attempts < max_attempts:
        attempts += 1
        eps = EPSILONS[attempts % len(EPSILONS)]
        spec = _random_spec(rng, "chordal", eps=eps, k_range=(0, 2))
        # favour large cliques
        spec.components = [(rng.choice(["split", "chordal"]), n) for _, n in spec.components]
        try:
            inst = gen_instance(spec)
        except ValueError:
            continue
        g, S = inst.graph, inst.modulator
        if g.n > 14:
            continue
        eta = rr1_eta(eps)
        g1, tr = rr1_contract_cliques(g, S, eps)
        events = tr.of_type(ContractClique)
        fired += bool(events)
        rest = remove_vertices(g1, S)
        peo = recognize_chordal(rest)
        cliques = maximal_cliques_chordal(rest, peo) if peo is not None else []
        width_ok = peo is not None and rest.n == 0 or (
            peo is not None and build_clique_tree(rest, peo).width <= eta - 2)
        desc = f"eps={eps} S={sorted(S)} edges={g.edges()}"
        struct.record(peo is not None and all(len(c) <= eta - 1 for c in cliques) and width_ok, desc)
        opt_g = _oracle_opt(g)
        opt_1 = _oracle_opt(g1, limit=KERNEL_ORACLE_LIMIT)
        optgap.record(opt_g >= opt_1 + sum(len(e.members) - 2 for e in events), f"{desc} opt={opt_g} opt'={opt_1}")
        base = cvc_oracle(g1, limit=KERNEL_ORACLE_LIMIT).cover
        for c in PADDINGS:
            D1 = pad_cover(g1, base, c, opt_1, rng)
            ok = True
            D = D1
            for ev in reversed(events):
                nxt = undo_clique_contractions(D, [ev])
                ok = ok and len(nxt) <= len(D) + eta - 1
                D = nxt
            event.record(ok, f"{desc} c={c}")
            valid = is_connected_vertex_cover(g, D) or g.m == 0
            kernel_ratio = Fraction(len(D1), opt_1) if opt_1 else Fraction(1)
            limit = max(kernel_ratio, Fraction(eta - 1, eta - 2))
            r = Fraction(len(D), opt_g) if opt_g else Fraction(1)
            stage.ratio(r)
            stage.record(valid and r <= limit, f"{desc} c={c} |D|={len(D)} opt={opt_g} limit={limit}")
    struct.notes.append(f"instances with at least one contraction: {fired}")
    dt = time.perf_counter() - t0
    for r in (struct, event, stage, optgap):
        r.seconds = dt
    return {"structure": struct, "event": event, "stage": stage, "optgap": optgap}


# ---------------------------------------------------------------- criterion 7


def check_end_to_end(trials: int = 200, seed: int = 0, modes=("tw", "chordal", "split-cograph", "unified"),
                     max_n: int = 14) -> dict[str, PropertyResult]:
    rng = random.Random(seed)
    out = {}
    size_res = PropertyResult("kernel-size-bound[pipeline]", bound="B(k,eps)")
    for mode in modes:
        res = PropertyResult(f"end-to-end[{mode}]", bound="c(1+eps)")
        t0 = time.perf_counter()
        cases = {"small-modulator": 0, "large-modulator": 0}
        i = 0
        while res.trials < trials * len(PADDINGS):
            eps = EPSILONS[i % len(EPSILONS)]
            i += 1
            spec = _random_spec(rng, mode, max_n=max_n, eps=eps, k_range=(0, 3))
            try:
                inst = gen_instance(spec)
            except ValueError:
                continue
            if inst.graph.n > max_n:
                continue
            ko = kernelize(inst)
            cases[ko.case] += 1
            if ko.case == "large-modulator":
                size_res.record(ko.graph.n <= ko.bound, f"mode={mode} n'={ko.graph.n} B={ko.bound}")
            kopt = cvc_oracle(ko.graph, limit=KERNEL_ORACLE_LIMIT)
            opt = _oracle_opt(inst.graph)
            for c in PADDINGS:
                Q = pad_cover(ko.graph, kopt.cover, c, kopt.size, rng)
                cert = lift(inst, ko, Q, c)
                certify(inst.graph, cert.cover, c * (1 + eps), cert=cert)
                r = Fraction(len(cert.cover), opt) if opt else Fraction(1)
                res.ratio(r / c)
                res.record(cert.passed, f"mode={inst.mode} eps={eps} c={c} ratio={r} seed={spec.seed}")
        res.notes.append(f"instances={i}, cases={cases}; max_ratio is measured ratio divided by c")
        res.seconds = time.perf_counter() - t0
        out[mode] = res
    out["size"] = size_res
    return out


def check_size_bound_large(trials: int = 60, seed: int = 0) -> PropertyResult:
    """Kernel size versus B(k, eps) on larger generated instances (no oracle)."""
    rng = random.Random(seed)
    res = PropertyResult("kernel-size-bound[large-n]", bound="B(k,eps)")
    t0 = time.perf_counter()
    while res.trials < trials:
        eps = rng.choice(EPSILONS)
        mode = rng.choice(["tw", "chordal", "split-cograph", "unified"])
        spec = _random_spec(rng, mode, max_n=60, eps=eps, k_range=(1, 6))
        try:
            inst = gen_instance(spec)
        except ValueError:
            continue
        ko = kernelize(inst)
        if ko.case != "large-modulator":
            continue
        res.record(ko.graph.n <= ko.bound, f"n={inst.graph.n} k={inst.k} eps={eps} n'={ko.graph.n} B={ko.bound}")
    res.seconds = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------- criterion 9


def brute_is_chordal(g: Graph) -> bool:
    vs = g.nodes()
    for r in range(4, len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            h = induced_subgraph(g, sub)
            if all(h.degree(v) == 2 for v in h) and len(connected_components(h)) == 1:
                return False
    return True


def brute_is_cograph(g: Graph) -> bool:
    for sub in itertools.combinations(g.nodes(), 4):
        h = induced_subgraph(g, sub)
        if h.m == 3 and sorted(h.degree(v) for v in h) == [1, 1, 2, 2]:
            return False
    return True


def brute_is_split(g: Graph) -> bool:
    vs = g.nodes()
    for r in range(len(vs) + 1):
        for C in itertools.combinations(vs, r):
            C = set(C)
            I = [v for v in vs if v not in C]
            if all(g.has_edge(a, b) for a, b in itertools.combinations(sorted(C), 2)) and \
                    not any(g.has_edge(a, b) for a, b in itertools.combinations(I, 2)):
                return True
    return False


def brute_maximal_cliques(g: Graph) -> set[frozenset[int]]:
    vs = g.nodes()
    cliques = []
    for r in range(1, len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                cliques.append(frozenset(sub))
    return {c for c in cliques if not any(c < d for d in cliques)}


def check_recognition(trials: int = 500, seed: int = 0) -> PropertyResult:
    rng = random.Random(seed)
    res = PropertyResult("recognition-conformance", bound="exact")
    t0 = time.perf_counter()
    for _ in range(trials):
        n = rng.randint(1, 9)
        pick = rng.random()
        if pick < 0.4:
            g = random_graph(rng, n, rng.uniform(0, 1))
        else:
            g = class_component(rng, rng.choice(["chordal", "cograph", "split", "tw"]), n, rng.randint(1, 3))
            # perturb one edge now and then
            if rng.random() < 0.3 and n >= 2:
                a, b = rng.sample(range(n), 2)
                es = set(g.edges()) ^ {(min(a, b), max(a, b))}
                g = Graph(range(n), es)
        peo = recognize_chordal(g)
        cot = recognize_cograph(g)
        ok = (peo is not None) == brute_is_chordal(g)
        ok = ok and (cot is not None) == brute_is_cograph(g)
        ok = ok and (recognize_split(g) is not None) == brute_is_split(g)
        if ok and peo is not None and g.n:
            td = build_clique_tree(g, peo)
            ok = set(td.bags.values()) == brute_maximal_cliques(g) and verify_tree_decomposition(g, td)
        if ok and cot is not None:
            ok = cot.to_graph() == g and cot.is_canonical()
        res.record(ok, f"edges={g.edges()} n={n}")
    res.seconds = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------- monotonicity (recorded only)


def record_size_monotonicity(trials: int = 30, seed: int = 0) -> PropertyResult:
    rng = random.Random(seed)
    res = PropertyResult("kernel-size-vs-1/eps[info]", bound="nondecreasing (not asserted)")
    while res.trials < trials:
        spec = _random_spec(rng, rng.choice(["tw", "unified"]), max_n=40, k_range=(1, 4))
        try:
            base = gen_instance(spec)
        except ValueError:
            continue
        sizes = []
        for eps in (Fraction(1), Fraction(1, 2), Fraction(1, 4)):
            inst = type(base)(base.graph, base.modulator, eps, base.mode)
            sizes.append(kernelize(inst, validate=False).graph.n)
        res.record(sizes == sorted(sizes), f"sizes={sizes}")
    return res


# ---------------------------------------------------------------- suite


def run_suite(trials: int = 200, seed: int = 42, only: set[str] | None = None) -> list[PropertyResult]:
    """Run every property at ``trials`` scale (criteria needing more use their stated minimum)."""
    results: list[PropertyResult] = []

    def want(key):
        return only is None or key in only

    if want("class-solvers"):
        results += check_class_solvers(max(trials, 300), seed).values()
    if want("savage"):
        results.append(check_savage(max(trials, 300), seed))
    if want("identify"):
        results.append(check_identification(max(trials, 200), seed))
    if want("small-branch"):
        results.append(check_small_branch(max(trials, 200), seed))
    if want("marking"):
        results += check_marking_kernel(max(trials // 2, 100), seed).values()
        results.append(loop_count_stress(seed))
    if want("clique-rule"):
        results += check_clique_rule(max(trials // 2, 100), seed).values()
    if want("end-to-end"):
        results += check_end_to_end(max(trials, 200), seed).values()
    if want("size"):
        results.append(check_size_bound_large(60, seed))
    if want("recognition"):
        results.append(check_recognition(max(trials, 500), seed))
    if want("monotonicity"):
        results.append(record_size_monotonicity(30, seed))
    return results


def format_report(results: list[PropertyResult]) -> str:
    header = f"{'property':48} {'trials':>7} {'fail':>5} {'max ratio':>10}  bound"
    rows = [header, "-" * len(header)]
    for r in results:
        mr = "-" if r.max_ratio is None else f"{float(r.max_ratio):.4f}"
        rows.append(f"{r.name:48} {r.trials:7d} {r.failures:5d} {mr:>10}  {r.bound}")
    return "\n".join(rows) + "\n"
