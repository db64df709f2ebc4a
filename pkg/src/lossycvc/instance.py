"""Problem instances: a graph, a deletion set into a target class, and an accuracy parameter."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classes import Mode, mode_labels, parse_mode
from .graph import Graph, is_connected


class InstanceError(ValueError):
    """An instance violates one of its invariants (the message names which)."""


def parse_epsilon(value) -> Fraction:
    """Accept ``"num/den"``, an int, or a Fraction; floats are refused to keep thresholds exact."""
    if isinstance(value, float):
        raise InstanceError("epsilon must be rational (use 'num/den'), not a float")
    try:
        eps = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceError(f"bad epsilon {value!r}: {exc}") from None
    if not 0 < eps <= 1:
        raise InstanceError(f"epsilon must lie in (0, 1], got {eps}")
    return eps


@dataclass(frozen=True)
class ModulatorInstance:
    graph: Graph
    modulator: frozenset[int]
    epsilon: Fraction
    mode: Mode
    target: int | None = None
    k: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "modulator", frozenset(self.modulator))
        object.__setattr__(self, "mode", parse_mode(self.mode))
        object.__setattr__(self, "epsilon", parse_epsilon(self.epsilon))
        if self.k == -1:
            object.__setattr__(self, "k", len(self.modulator))


def instance_violation(inst: ModulatorInstance, check_mode: bool = True) -> str | None:
    """First broken invariant of ``inst`` as a message, or None."""
    g = inst.graph
    absent = inst.modulator - g.vertices
    if absent:
        return f"modulator vertex absent: {sorted(absent)}"
    if inst.k != len(inst.modulator):
        return f"k = {inst.k} does not match modulator size {len(inst.modulator)}"
    if inst.target is not None and inst.target < 0:
        return "target must be non-negative"
    if g.n == 0:
        return "graph is empty"
    if not is_connected(g):
        return "graph disconnected"
    if check_mode:
        labels = mode_labels(g, inst.modulator, inst.mode)
        bad = [sorted(c) for c, lab in labels.items() if lab == "none"]
        if bad:
            return f"component {bad[0]} of G - S is outside the class for mode {inst.mode}"
    return None


def validate_instance(inst: ModulatorInstance, check_mode: bool = True) -> ModulatorInstance:
    problem = instance_violation(inst, check_mode)
    if problem:
        raise InstanceError(problem)
    return inst
