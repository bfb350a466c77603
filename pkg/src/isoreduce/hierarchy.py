"""Core-periphery hierarchies by sequential isospectral reduction.

A selection rule maps a matrix to the set of nodes worth keeping; reducing
over that set repeatedly peels the network down to a core. Nodes removed at
the same step share one peripheral level; the level removed first sits at
the bottom of the hierarchy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import isored
from .netmat import RfMatrix

__all__ = [
    "SelectionRule",
    "TraceStep",
    "HierarchyResult",
    "row_degree",
    "min_degree_rule",
    "sequential_reduce",
    "restrict_hierarchy",
    "RULES",
]

SelectionRule = Callable[[RfMatrix], frozenset]


def row_degree(m: RfMatrix, node: str) -> int:
    """Count of nonzero entries in the node's row, self-loop included once.

    Edge existence is the exact is-zero test on the rational function,
    never a numeric threshold.
    """
    return sum(1 for v in m.row(node) if not v.is_zero)


def min_degree_rule(m: RfMatrix) -> frozenset:
    """Keep every node whose degree strictly exceeds the minimum degree.

    Returns the empty set when all degrees are equal, which is the
    termination signal for the sequential reduction.
    """
    if not len(m):
        raise ValueError("rule requires a nonempty matrix")
    degrees = {lab: row_degree(m, lab) for lab in m.labels}
    lowest = min(degrees.values())
    return frozenset(lab for lab, d in degrees.items() if d > lowest)


RULES: dict[str, SelectionRule] = {"min-degree": min_degree_rule}


@dataclass(frozen=True)
class TraceStep:
    """Degree table of one stage; removed lists the nodes the next reduction
    drops (empty on the final stage)."""

    step: int
    degrees: dict[str, int]
    removed: tuple[str, ...]


@dataclass(frozen=True)
class HierarchyResult:
    """Core plus peripheral levels.

    levels[0] is the level removed last before the core froze; levels[-1]
    was removed first. Core and levels partition the original label set.
    """

    core: tuple[str, ...]
    levels: tuple[tuple[str, ...], ...]
    trace: tuple[TraceStep, ...]
    step_count: int

    @property
    def all_labels(self) -> tuple[str, ...]:
        out = list(self.core)
        for level in self.levels:
            out.extend(level)
        return tuple(out)

    def to_json_dict(self) -> dict:
        n = len(self.levels)
        return {
            "core": list(self.core),
            "levels": [
                {"rank": n - i, "members": list(members)}
                for i, members in enumerate(reversed(self.levels))
            ],
            "trace": [
                {"step": t.step, "degrees": dict(t.degrees), "removed": list(t.removed)}
                for t in self.trace
            ],
        }


def sequential_reduce(m: RfMatrix, rule: SelectionRule = min_degree_rule) -> HierarchyResult:
    """Reduce m under the rule until the rule keeps nothing or everything.

    Each round evaluates the rule, records the degree table, removes the
    complement by isospectral reduction, and repeats on the smaller matrix.
    Terminates in at most len(m) steps since every round strictly shrinks
    the label set.
    """
    if not len(m):
        raise ValueError("cannot reduce an empty matrix")
    current = m
    trace: list[TraceStep] = []
    removals: list[tuple[str, ...]] = []
    step = 0
    while True:
        degrees = {lab: row_degree(current, lab) for lab in current.labels}
        keep = frozenset(rule(current))
        if not keep <= set(current.labels):
            raise ValueError("selection rule returned labels outside the matrix")
        if not keep or keep == set(current.labels):
            trace.append(TraceStep(step, degrees, ()))
            break
        removed = tuple(lab for lab in current.labels if lab not in keep)
        trace.append(TraceStep(step, degrees, removed))
        current = isored.reduce(current, keep).reduced
        removals.append(removed)
        step += 1
    result = HierarchyResult(
        core=current.labels,
        levels=tuple(reversed(removals)),
        trace=tuple(trace),
        step_count=len(removals),
    )
    # core and levels must partition the input labels
    assert sorted(result.all_labels) == sorted(m.labels)
    return result


def restrict_hierarchy(h: HierarchyResult, subset: Iterable[str]) -> HierarchyResult:
    """Intersect the core and every level with subset, dropping empty levels.

    Relative level order is preserved, and nodes that shared a level still
    do. The trace is filtered to the surviving labels.
    """
    keep = set(subset)
    if not keep:
        raise ValueError("restriction subset must not be empty")
    core = tuple(lab for lab in h.core if lab in keep)
    levels = tuple(
        filtered
        for level in h.levels
        if (filtered := tuple(lab for lab in level if lab in keep))
    )
    trace = tuple(
        TraceStep(
            t.step,
            {lab: d for lab, d in t.degrees.items() if lab in keep},
            tuple(lab for lab in t.removed if lab in keep),
        )
        for t in h.trace
    )
    return HierarchyResult(core=core, levels=levels, trace=trace, step_count=h.step_count)
