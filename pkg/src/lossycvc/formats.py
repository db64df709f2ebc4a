"""Readers and writers for graphs, instances, decompositions, kernels and certificates.

Edge-list text::

    c optional comment
    p edge <n> <m>
    v <label>        (optional; when present the vertex set is exactly these labels)
    e <u> <v>

Without ``v`` lines the vertices are ``1..n``. The structured format is a JSON
object with ``n``, ``edges``, ``modulator``, ``k``, ``epsilon`` ("num/den"),
``mode`` and optionally ``vertices`` and ``target``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable

from .decomposition import TreeDecomposition
from .graph import Graph, GraphError
from .instance import InstanceError, ModulatorInstance, parse_epsilon, validate_instance
from .kernel import KernelOutput, KernelTranscript
from .classes import parse_mode


class ParseError(ValueError):
    """Malformed input text; the message carries the line number."""


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


def _check_edges(edges: list[tuple[int, int]], where: str = "") -> None:
    seen = set()
    for u, v in edges:
        if u == v:
            raise ParseError(f"{where}self-loop on vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"{where}duplicate edge {key}")
        seen.add(key)


def parse_edge_list(text: str) -> Graph:
    header = None
    declared: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: second header line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: header must be 'p edge <n> <m>'")
            header = (_int(parts[2], lineno), _int(parts[3], lineno))
        elif tag == "e":
            if header is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: edge line must be 'e <u> <v>'")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if u == v:
                raise ParseError(f"line {lineno}: self-loop on vertex {u}")
            edges.append((u, v))
        elif tag == "v":
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: vertex line must be 'v <label>'")
            declared.append(_int(parts[1], lineno))
        else:
            raise ParseError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise ParseError("missing 'p edge <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    _check_edges(edges)
    if declared:
        if len(declared) != n or len(set(declared)) != n:
            raise ParseError(f"header announces {n} vertices, found {len(set(declared))} distinct 'v' lines")
        vertices = declared
    else:
        vertices = list(range(1, n + 1))
    vset = set(vertices)
    for u, v in edges:
        if u not in vset or v not in vset:
            raise ParseError(f"edge ({u}, {v}) uses a vertex outside the vertex set")
    return Graph(vertices, edges)


def write_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    if g.nodes() != list(range(1, g.n + 1)):
        lines += [f"v {v}" for v in g.nodes()]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_label_list(text: str) -> frozenset[int]:
    """One label per line (blank lines and 'c' comments skipped)."""
    out = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("c"):
            continue
        out.add(_int(s, lineno))
    return frozenset(out)


def write_label_list(vs: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in sorted(vs))


def _looks_structured(text: str) -> bool:
    return text.lstrip().startswith("{")


def read_graph(text: str) -> Graph:
    if _looks_structured(text):
        return _graph_from_doc(_load_json(text))
    return parse_edge_list(text)


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("structured document must be a JSON object")
    return doc


def _graph_from_doc(doc: dict) -> Graph:
    if "edges" not in doc:
        raise ParseError("structured document lacks 'edges'")
    try:
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (TypeError, ValueError):
        raise ParseError("'edges' must be a list of integer pairs") from None
    _check_edges(edges)
    if "vertices" in doc:
        vertices = [int(v) for v in doc["vertices"]]
    elif "n" in doc:
        vertices = list(range(1, int(doc["n"]) + 1))
    else:
        raise ParseError("structured document needs 'n' or 'vertices'")
    if "n" in doc and int(doc["n"]) != len(set(vertices)):
        raise ParseError(f"'n' = {doc['n']} disagrees with {len(set(vertices))} listed vertices")
    vset = set(vertices)
    for u, v in edges:
        if u not in vset or v not in vset:
            raise ParseError(f"edge ({u}, {v}) uses a vertex outside the vertex set")
    return Graph(vertices, edges)


def graph_to_doc(g: Graph) -> dict:
    doc = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.nodes() != list(range(1, g.n + 1)):
        doc["vertices"] = g.nodes()
    return doc


def read_instance(text: str, fmt: str | None = None, modulator: Iterable[int] | None = None,
                  epsilon=None, mode=None, validate: bool = True) -> ModulatorInstance:
    """Parse an instance; edge-list input takes modulator, epsilon and mode from the arguments.

    Arguments given explicitly override fields of a structured document.
    """
    if fmt is None:
        fmt = "structured" if _looks_structured(text) else "edge-list"
    if fmt == "structured":
        doc = _load_json(text)
        g = _graph_from_doc(doc)
        S = frozenset(int(v) for v in doc.get("modulator", [])) if modulator is None else frozenset(modulator)
        eps = doc.get("epsilon", "1/2") if epsilon is None else epsilon
        md = doc.get("mode", "unified(2)") if mode is None else mode
        target = doc.get("target")
        k = doc.get("k", len(S))
        if modulator is not None:
            k = len(S)
    elif fmt == "edge-list":
        g = parse_edge_list(text)
        S = frozenset(modulator or ())
        eps = "1/2" if epsilon is None else epsilon
        md = "unified(2)" if mode is None else mode
        target, k = None, len(S)
    else:
        raise ParseError(f"unknown format {fmt!r}")
    try:
        inst = ModulatorInstance(g, S, parse_epsilon(eps), parse_mode(md), target, int(k))
    except ValueError as exc:
        raise InstanceError(str(exc)) from None
    return validate_instance(inst) if validate else inst


def instance_to_doc(inst: ModulatorInstance) -> dict:
    doc = graph_to_doc(inst.graph)
    doc.update({
        "modulator": sorted(inst.modulator),
        "k": inst.k,
        "epsilon": f"{inst.epsilon.numerator}/{inst.epsilon.denominator}",
        "mode": str(inst.mode),
    })
    if inst.target is not None:
        doc["target"] = inst.target
    return doc


def write_instance(inst: ModulatorInstance, fmt: str = "structured") -> str:
    if fmt == "structured":
        return json.dumps(instance_to_doc(inst), sort_keys=True) + "\n"
    if fmt == "edge-list":
        notes = [f"modulator {' '.join(map(str, sorted(inst.modulator)))}",
                 f"epsilon {inst.epsilon}", f"mode {inst.mode}"]
        return write_edge_list(inst.graph, notes)
    raise ParseError(f"unknown format {fmt!r}")


def read_decomposition(text: str) -> TreeDecomposition:
    """Bags and tree edges in the ``s td`` style: ``b <id> <vertices...>`` and ``<id> <id>`` lines."""
    bags: dict[int, frozenset[int]] = {}
    edges = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "s":
            if len(parts) != 5 or parts[1] != "td":
                raise ParseError(f"line {lineno}: header must be 's td <bags> <width+1> <n>'")
            header = [_int(p, lineno) for p in parts[2:]]
        elif parts[0] == "b":
            if len(parts) < 2:
                raise ParseError(f"line {lineno}: bag line needs an id")
            bid = _int(parts[1], lineno)
            if bid in bags:
                raise ParseError(f"line {lineno}: bag {bid} defined twice")
            bags[bid] = frozenset(_int(p, lineno) for p in parts[2:])
        elif len(parts) == 2:
            edges.append((_int(parts[0], lineno), _int(parts[1], lineno)))
        else:
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")
    if header is not None and header[0] != len(bags):
        raise ParseError(f"header announces {header[0]} bags, found {len(bags)}")
    return TreeDecomposition(bags, tuple(edges))


def write_decomposition(td: TreeDecomposition, n: int) -> str:
    lines = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for bid in sorted(td.bags):
        lines.append(" ".join(["b", str(bid)] + [str(v) for v in sorted(td.bags[bid])]))
    lines += [f"{a} {b}" for a, b in td.edges]
    return "\n".join(lines) + "\n"


def kernel_to_doc(k: KernelOutput) -> dict:
    return {
        "graph": write_edge_list(k.graph),
        "modulator": sorted(k.modulator),
        "kprime": k.kprime,
        "epsilon": f"{k.epsilon.numerator}/{k.epsilon.denominator}",
        "mode": str(k.mode),
        "case": k.case,
        "bound": k.bound,
        "stats": k.stats,
        "transcript": k.transcript.to_jsonl(),
    }


def write_kernel(k: KernelOutput) -> str:
    return json.dumps(kernel_to_doc(k), sort_keys=True, indent=1) + "\n"


def read_kernel(text: str, transcript_text: str | None = None) -> KernelOutput:
    doc = _load_json(text)
    try:
        tr_text = transcript_text if transcript_text is not None else doc["transcript"]
        return KernelOutput(
            graph=parse_edge_list(doc["graph"]),
            modulator=frozenset(doc["modulator"]),
            kprime=int(doc["kprime"]),
            transcript=KernelTranscript.from_jsonl(tr_text),
            bound=int(doc["bound"]),
            case=doc["case"],
            epsilon=Fraction(doc["epsilon"]),
            mode=parse_mode(doc["mode"]),
            stats=dict(doc.get("stats", {})),
        )
    except KeyError as exc:
        raise ParseError(f"kernel document lacks field {exc}") from None


def write_certificate(cert) -> str:
    return json.dumps(cert.to_dict(), sort_keys=True, indent=1) + "\n"


__all__ = [
    "GraphError", "InstanceError", "ParseError", "graph_to_doc", "instance_to_doc", "kernel_to_doc",
    "parse_edge_list", "parse_label_list", "read_decomposition", "read_graph", "read_instance",
    "read_kernel", "write_certificate", "write_decomposition", "write_edge_list", "write_instance",
    "write_kernel", "write_label_list",
]
