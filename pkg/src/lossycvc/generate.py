"""Seeded random instances with planted class structure after deleting a modulator."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .classes import Mode
from .graph import Graph, GraphError, connected_components
from .instance import InstanceError, ModulatorInstance, validate_instance

CLASSES = ("tree", "chordal", "split", "cograph", "tw")


@dataclass
class GenSpec:
    components: list[tuple[str, int]]
    k: int = 0
    density: float = 0.3
    seed: int = 0
    eta: int = 2
    epsilon: Fraction = Fraction(1, 2)
    mode: str | None = None

    def __post_init__(self):
        self.components = [(str(c), int(n)) for c, n in self.components]
        for cls, n in self.components:
            if cls not in CLASSES:
                raise InstanceError(f"unknown component class {cls!r}")
            if n < 1:
                raise InstanceError("component sizes must be positive")
        if self.k < 0:
            raise InstanceError("k must be non-negative")
        if not self.components and self.k == 0:
            raise InstanceError("spec describes an empty graph")
        if self.k == 0 and len(self.components) > 1:
            raise InstanceError("several components cannot be connected without modulator vertices")

    @classmethod
    def from_dict(cls, d: dict) -> "GenSpec":
        d = dict(d)
        if "epsilon" in d:
            d["epsilon"] = Fraction(d["epsilon"])
        d["components"] = [tuple(c) for c in d.get("components", [])]
        return cls(**d)

    def to_dict(self) -> dict:
        return {
            "components": [list(c) for c in self.components], "k": self.k, "density": self.density,
            "seed": self.seed, "eta": self.eta, "epsilon": str(self.epsilon), "mode": self.mode,
        }

    def default_mode(self) -> Mode:
        kinds = {c for c, _ in self.components}
        if kinds <= {"split", "cograph"}:
            return Mode("split-cograph")
        if kinds <= {"tree", "chordal", "split"}:
            return Mode("chordal")
        if kinds <= {"tree", "tw"}:
            return Mode("tw", max(self.eta, 1))
        return Mode("unified", max(self.eta, 1))


def random_tree(rng: random.Random, vs: list[int]) -> list[tuple[int, int]]:
    return [(vs[i], vs[rng.randrange(i)]) for i in range(1, len(vs))]


def random_chordal(rng: random.Random, vs: list[int]) -> list[tuple[int, int]]:
    """Each new vertex attaches to a nonempty subset of an earlier clique, so it is simplicial."""
    cliques = [[vs[0]]]
    edges = []
    for v in vs[1:]:
        base = rng.choice(cliques)
        part = [u for u in base if rng.random() < 0.6] or [rng.choice(base)]
        edges += [(u, v) for u in part]
        cliques.append(part + [v])
    return edges


def random_split(rng: random.Random, vs: list[int]) -> list[tuple[int, int]]:
    c = rng.randint(1, len(vs))
    C, I = vs[:c], vs[c:]
    edges = [(C[i], C[j]) for i in range(len(C)) for j in range(i + 1, len(C))]
    for v in I:
        part = [u for u in C if rng.random() < 0.5] or [rng.choice(C)]
        edges += [(u, v) for u in part]
    return edges


def random_cograph(rng: random.Random, vs: list[int]) -> list[tuple[int, int]]:
    """Evaluate a random cotree whose root is a join (so the result is connected)."""
    edges: list[tuple[int, int]] = []

    def build(part: list[int], kind: str) -> None:
        if len(part) == 1:
            return
        r = rng.randint(2, min(4, len(part)))
        cuts = sorted(rng.sample(range(1, len(part)), r - 1))
        pieces = [part[a:b] for a, b in zip([0] + cuts, cuts + [len(part)])]
        if kind == "join":
            for i in range(len(pieces)):
                for j in range(i + 1, len(pieces)):
                    edges.extend((a, b) for a in pieces[i] for b in pieces[j])
        nxt = "union" if kind == "join" else "join"
        for p in pieces:
            build(p, nxt)

    build(list(vs), "join")
    return edges


def random_partial_ktree(rng: random.Random, vs: list[int], eta: int) -> list[tuple[int, int]]:
    """Connected spanning subgraph of a random eta-tree (treewidth at most eta)."""
    eta = max(1, eta)
    base = vs[: eta + 1]
    full = [(base[i], base[j]) for i in range(len(base)) for j in range(i + 1, len(base))]
    bags = [list(base)]
    for v in vs[eta + 1:]:
        bag = rng.choice(bags)
        drop = rng.randrange(len(bag))
        sub = bag[:drop] + bag[drop + 1:]
        full += [(u, v) for u in sub]
        bags.append(sub + [v])
    kept = [e for e in full if rng.random() < 0.7]
    # add back tree edges until connected
    parent = {v: v for v in vs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in kept:
        parent[find(a)] = find(b)
    for a, b in full:
        if find(a) != find(b):
            parent[find(a)] = find(b)
            kept.append((a, b))
    return kept


def build_component(rng: random.Random, cls: str, vs: list[int], eta: int) -> list[tuple[int, int]]:
    if cls == "tree":
        return random_tree(rng, vs)
    if cls == "chordal":
        return random_chordal(rng, vs)
    if cls == "split":
        return random_split(rng, vs)
    if cls == "cograph":
        return random_cograph(rng, vs)
    return random_partial_ktree(rng, vs, eta)


def gen_instance(spec: GenSpec, validate: bool = True) -> ModulatorInstance:
    """Build the instance described by ``spec``; labels are 1..n, shuffled under the seed."""
    rng = random.Random(spec.seed)
    nxt = 0
    comps: list[list[int]] = []
    edges: list[tuple[int, int]] = []
    for cls, size in spec.components:
        vs = list(range(nxt, nxt + size))
        nxt += size
        edges += build_component(rng, cls, vs, spec.eta)
        comps.append(vs)
    mod = list(range(nxt, nxt + spec.k))
    nxt += spec.k
    body = [v for c in comps for v in c]
    for s in mod:
        hits = [v for v in body if rng.random() < spec.density]
        if body and not hits:
            hits = [rng.choice(body)]
        edges += [(s, v) for v in hits]
    for i, s in enumerate(mod):
        for t in mod[i + 1:]:
            if rng.random() < spec.density:
                edges.append((s, t))
    for c in comps:
        if mod and not any(a in c and b in mod or b in c and a in mod for a, b in edges):
            edges.append((rng.choice(mod), rng.choice(c)))
    g = Graph(range(nxt), edges)
    parts = connected_components(g)
    while len(parts) > 1:
        # join the first piece to another one through a modulator vertex
        a = parts[0]
        b = parts[1]
        sa = sorted(a & set(mod))
        sb = sorted(b & set(mod))
        if sa:
            u, v = rng.choice(sa), rng.choice(sorted(b))
        elif sb:
            u, v = rng.choice(sb), rng.choice(sorted(a))
        else:
            raise GraphError("cannot connect the components without modulator vertices")
        edges.append((u, v))
        g = Graph(range(nxt), edges)
        parts = connected_components(g)
    perm = list(range(1, nxt + 1))
    rng.shuffle(perm)
    relabel = dict(zip(range(nxt), perm))
    g = Graph(sorted(perm), sorted(tuple(sorted((relabel[a], relabel[b]))) for a, b in set(
        tuple(sorted(e)) for e in edges)))
    mode = spec.mode if spec.mode is not None else spec.default_mode()
    inst = ModulatorInstance(g, frozenset(relabel[s] for s in mod), spec.epsilon, mode)
    return validate_instance(inst) if validate else inst
