"""Command-line front end.

Exit status: 0 on success, 1 on invalid input or a failed check, 2 when an
internal consistency assertion trips (for example a lifted set that is not
a connected vertex cover).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .decomposition import to_nice
from .dp import cvc_treewidth_dp
from .formats import (
    ParseError,
    read_decomposition,
    read_graph,
    read_instance,
    read_kernel,
    parse_label_list,
    write_certificate,
    write_instance,
    write_kernel,
    write_label_list,
)
from .generate import GenSpec, gen_instance
from .graph import GraphError, is_connected_vertex_cover, uncovered_edge
from .instance import InstanceError
from .kernel import kernelize
from .lifting import certify, lift
from .oracle import ORACLE_GUARD, cvc_oracle
from .decomposition import heuristic_decomposition


class CheckFailed(Exception):
    """A requested verification did not hold (exit status 1)."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _labels(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"bad vertex list {text!r}") from None


def _load_instance(args):
    modulator = parse_label_list(_read(args.modulator)) if getattr(args, "modulator", None) else None
    return read_instance(_read(args.input), getattr(args, "format", None), modulator,
                         getattr(args, "eps", None), getattr(args, "mode", None))


def cmd_kernelize(args) -> int:
    inst = _load_instance(args)
    out = kernelize(inst)
    doc = write_kernel(out)
    if args.out_transcript:
        Path(args.out_transcript).write_text(out.transcript.to_jsonl())
    _emit(doc, args.out_kernel)
    print(f"case={out.case} kernel_n={out.graph.n} kernel_m={out.graph.m} bound={out.bound}", file=sys.stderr)
    return 0


def _graph_from_any(text: str):
    """A plain graph, an instance document, or a kernel document (its kernel graph)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        if isinstance(doc, dict) and "transcript" in doc:
            return read_kernel(text).graph
    return read_graph(text)


def cmd_solve(args) -> int:
    g = _graph_from_any(_read(args.input))
    req, forb = _labels(args.require), _labels(args.forbid)
    if args.method == "oracle":
        if g.n > args.oracle_limit:
            raise CheckFailed(f"oracle guard: graph has {g.n} vertices, limit is {args.oracle_limit} "
                              "(raise it with --oracle-limit)")
        sol = cvc_oracle(g, req, forb, limit=args.oracle_limit)
    else:
        if g.n <= args.oracle_limit:
            sol = cvc_oracle(g, req, forb, limit=args.oracle_limit)
        else:
            td = read_decomposition(_read(args.decomposition)) if args.decomposition else heuristic_decomposition(g)
            sol = cvc_treewidth_dp(g, to_nice(td, g), req, forb)
    if not sol.feasible:
        raise CheckFailed("no connected vertex cover satisfies the constraints")
    _emit(f"c size {sol.size}\n" + write_label_list(sol.cover), args.out)
    return 0


def cmd_lift(args) -> int:
    inst = _load_instance(args)
    transcript = _read(args.transcript) if args.transcript else None
    kern = read_kernel(_read(args.kernel), transcript)
    Q = parse_label_list(_read(args.solution))
    cert = lift(inst, kern, Q, Fraction(args.c))
    if not args.no_oracle:
        certify(inst.graph, cert.cover, cert.bound, limit=args.oracle_limit, cert=cert)
    _emit(write_certificate(cert), args.out)
    if args.out_cover:
        Path(args.out_cover).write_text(write_label_list(cert.cover))
    return 0 if cert.passed else 1


def cmd_verify(args) -> int:
    g = _graph_from_any(_read(args.input))
    cover = parse_label_list(_read(args.cover))
    stray = cover - g.vertices
    if stray:
        raise CheckFailed(f"cover names vertices not in the graph: {sorted(stray)}")
    if not is_connected_vertex_cover(g, cover):
        bad = uncovered_edge(g, cover)
        if bad is not None:
            raise CheckFailed(f"not a vertex cover: edge {bad[0]} {bad[1]} is uncovered")
        raise CheckFailed("not connected: the cover induces a disconnected subgraph")
    bound = Fraction(args.bound) if args.bound else None
    limit = args.oracle_limit if bound is not None else -1
    cert = certify(g, cover, bound if bound is not None else 1, limit=limit)
    doc = cert.to_dict()
    if bound is None:
        doc["bound"] = None
    _emit(json.dumps(doc, sort_keys=True, indent=1) + "\n", args.out)
    if bound is not None and not cert.passed:
        raise CheckFailed(f"ratio {cert.ratio} exceeds bound {bound}")
    return 0


def cmd_gen(args) -> int:
    if args.spec:
        text = args.spec if args.spec.lstrip().startswith("{") else _read(args.spec)
        spec = GenSpec.from_dict(json.loads(text))
    else:
        spec = GenSpec([(args.cls, args.size)] * args.components, k=args.k, density=args.density,
                       eta=args.eta)
    if args.seed is not None:
        spec.seed = args.seed
    if args.eps:
        spec.epsilon = Fraction(args.eps)
    if args.mode:
        spec.mode = args.mode
    inst = gen_instance(spec)
    _emit(write_instance(inst, args.format), args.out)
    return 0


def cmd_bench(args) -> int:
    if args.suite == "oracle":
        from .bench import compare_backends, format_rows

        rows = compare_backends(args.trials, args.seed)
        sys.stdout.write(format_rows(rows))
        if args.report:
            Path(args.report).write_text(json.dumps(rows, indent=1) + "\n")
        return 0 if all(r["agree"] in (True, None) for r in rows) else 1
    from .harness import format_report, run_suite

    only = set(args.only.split(",")) if args.only else None
    results = run_suite(args.trials, args.seed, only)
    sys.stdout.write(format_report(results))
    if args.report:
        Path(args.report).write_text(json.dumps([r.to_dict() for r in results], indent=1) + "\n")
    hard = [r for r in results if "info" not in r.name]
    return 0 if all(r.ok for r in hard) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lossycvc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def instance_flags(sp, modulator_required=False):
        sp.add_argument("--in", dest="input", required=True, help="instance file (edge list or JSON), '-' for stdin")
        sp.add_argument("--format", choices=["edge-list", "structured"])
        sp.add_argument("--modulator", help="file with one modulator label per line")
        sp.add_argument("--eps", help="accuracy as num/den, e.g. 1/2")
        sp.add_argument("--mode", help="tw(N), chordal, split-cograph or unified(N)")

    k = sub.add_parser("kernelize", help="reduce an instance to a lossy kernel")
    instance_flags(k)
    k.add_argument("--out-kernel", help="kernel document (default stdout)")
    k.add_argument("--out-transcript", help="also write the transcript (one event per line)")
    k.set_defaults(func=cmd_kernelize)

    s = sub.add_parser("solve", help="exact minimum connected vertex cover")
    s.add_argument("--in", dest="input", required=True, help="graph, instance or kernel document")
    s.add_argument("--method", choices=["oracle", "auto"], default="auto")
    s.add_argument("--require", help="comma separated vertices forced into the cover")
    s.add_argument("--forbid", help="comma separated vertices kept out of the cover")
    s.add_argument("--decomposition", help="tree decomposition ('s td' format) for the auto method")
    s.add_argument("--oracle-limit", type=int, default=ORACLE_GUARD)
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    li = sub.add_parser("lift", help="lift a kernel solution and certify it")
    instance_flags(li)
    li.add_argument("--kernel", required=True)
    li.add_argument("--transcript", help="transcript file overriding the one inside the kernel document")
    li.add_argument("--solution", required=True, help="kernel cover, one label per line")
    li.add_argument("--c", default="1", help="claimed approximation factor of the kernel solution")
    li.add_argument("--oracle-limit", type=int, default=ORACLE_GUARD)
    li.add_argument("--no-oracle", action="store_true")
    li.add_argument("--out", help="certificate document (default stdout)")
    li.add_argument("--out-cover", help="also write the lifted cover")
    li.set_defaults(func=cmd_lift)

    v = sub.add_parser("verify", help="check a connected vertex cover, optionally against a ratio bound")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--cover", required=True)
    v.add_argument("--bound", help="ratio bound checked with the oracle, num/den")
    v.add_argument("--oracle-limit", type=int, default=ORACLE_GUARD)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    gsp = sub.add_parser("gen", help="generate a random instance")
    gsp.add_argument("--spec", help="GenSpec as JSON text or a JSON file")
    gsp.add_argument("--class", dest="cls", default="chordal", choices=["tree", "chordal", "split", "cograph", "tw"])
    gsp.add_argument("--size", type=int, default=5)
    gsp.add_argument("--components", type=int, default=1)
    gsp.add_argument("--k", type=int, default=1)
    gsp.add_argument("--density", type=float, default=0.3)
    gsp.add_argument("--eta", type=int, default=2)
    gsp.add_argument("--eps")
    gsp.add_argument("--mode")
    gsp.add_argument("--seed", type=int)
    gsp.add_argument("--format", choices=["structured", "edge-list"], default="structured")
    gsp.add_argument("--out")
    gsp.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="property suite or backend timing")
    b.add_argument("--suite", choices=["acceptance", "oracle"], default="acceptance")
    b.add_argument("--trials", type=int, default=200)
    b.add_argument("--seed", type=int, default=42)
    b.add_argument("--only", help="comma separated subset of suite sections")
    b.add_argument("--report", help="machine-readable JSON report")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    except (CheckFailed, ParseError, InstanceError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
