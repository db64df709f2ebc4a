"""Timing of the compiled kernels against their pure-Python counterparts."""

from __future__ import annotations

import random
import time

from . import _pycore

try:
    from . import _core
except ImportError:  # extension not built
    _core = None


def _random_masks(rng: random.Random, n: int, p: float) -> list[int]:
    adj = [0] * n
    for i in range(1, n):
        j = rng.randrange(i)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _time(fn, cases) -> tuple[float, list]:
    t0 = time.perf_counter()
    out = [fn(*c) for c in cases]
    return time.perf_counter() - t0, out


def compare_backends(trials: int = 20, seed: int = 0, n_search: int = 14, n_tw: int = 14) -> list[dict]:
    """Time both backends on identical inputs and confirm they agree.

    Returns one row per kernel with the seconds for each backend and the speedup.
    """
    rng = random.Random(seed)
    search_cases = [(_random_masks(rng, n_search, 0.25), 0, 0) for _ in range(trials)]
    tw_cases = [(_random_masks(rng, n_tw, 0.3), n_tw) for _ in range(trials)]
    rows = []
    for name, cases in (("cvc_search", search_cases), ("treewidth_order", tw_cases)):
        py_s, py_out = _time(getattr(_pycore, name), cases)
        row = {"kernel": name, "cases": len(cases), "python_s": py_s, "compiled_s": None,
               "speedup": None, "agree": None}
        if _core is not None:
            c_s, c_out = _time(getattr(_core, name), cases)
            if name == "treewidth_order":
                agree = [a[0] for a in py_out] == [b[0] for b in c_out]
            else:
                agree = py_out == c_out
            row.update(compiled_s=c_s, speedup=py_s / c_s if c_s else None, agree=agree)
        rows.append(row)
    return rows


def format_rows(rows: list[dict]) -> str:
    lines = [f"{'kernel':18} {'cases':>5} {'python s':>10} {'compiled s':>11} {'speedup':>8}  agree"]
    for r in rows:
        cs = "-" if r["compiled_s"] is None else f"{r['compiled_s']:.4f}"
        sp = "-" if r["speedup"] is None else f"{r['speedup']:.1f}x"
        lines.append(f"{r['kernel']:18} {r['cases']:5d} {r['python_s']:10.4f} {cs:>11} {sp:>8}  {r['agree']}")
    return "\n".join(lines) + "\n"
