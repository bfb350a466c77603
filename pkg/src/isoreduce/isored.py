"""Isospectral reduction of a labeled matrix over the rational-function field.

Reducing M over a kept node set S removes the complement S̄ while folding its
influence into the surviving entries:

    reduced = M_SS - M_SS̄ (M_S̄S̄ - x I)^(-1) M_S̄S

computed exactly, so the eigenvalue equation of the smaller matrix retains
the spectrum of the original (outside the spectrum of the removed block).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactnum import RatFun, ratfun_to_str
from .netmat import RfMatrix

__all__ = ["SingularMatrixError", "ReductionResult", "invert_over_field", "reduce", "reduce_sequence"]


class SingularMatrixError(ArithmeticError):
    """The matrix is singular over the rational-function field."""


def invert_over_field(block: Sequence[Sequence[RatFun]]) -> list[list[RatFun]]:
    """Exact inverse by Gauss-Jordan elimination over the function field.

    The pivot is the first row with a nonzero entry in the column; the field
    is exact, so pivot choice only affects intermediate expression size.
    Raises SingularMatrixError when no pivot exists.
    """
    n = len(block)
    if any(len(row) != n for row in block):
        raise ValueError("matrix must be square")
    a = [list(row) for row in block]
    inv = [[RatFun.ONE if i == j else RatFun.ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not a[r][col].is_zero), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular over the function field")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
        p = a[col][col]
        if p != RatFun.ONE:
            a[col] = [v / p for v in a[col]]
            inv[col] = [v / p for v in inv[col]]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f.is_zero:
                continue
            a[r] = [v - f * w for v, w in zip(a[r], a[col])]
            inv[r] = [v - f * w for v, w in zip(inv[r], inv[col])]
    return inv


def _matmul(a: Sequence[Sequence[RatFun]], b: Sequence[Sequence[RatFun]]) -> list[list[RatFun]]:
    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    out = []
    for i in range(rows):
        arow = a[i]
        row = []
        for j in range(cols):
            acc = RatFun.ZERO
            for k in range(inner):
                v = arow[k]
                if not v.is_zero and not b[k][j].is_zero:
                    acc = acc + v * b[k][j]
            row.append(acc)
        out.append(row)
    return out


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of one reduction: the surviving matrix, the removed nodes, and
    the shifted removed block (M_S̄S̄ - x I), kept for verification."""

    reduced: RfMatrix
    removed: tuple[str, ...]
    shifted_block: tuple[tuple[RatFun, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "labels": list(self.reduced.labels),
            "entries": [[ratfun_to_str(v) for v in row] for row in self.reduced.entries],
            "removed": list(self.removed),
        }


def reduce(m: RfMatrix, s: Iterable[str]) -> ReductionResult:
    """Reduce m over the kept node set s, exactly.

    s must be a nonempty subset of m's labels; kept labels retain m's label
    order. With s equal to all labels the matrix is returned unchanged.
    """
    wanted = set(s)
    if not wanted:
        raise ValueError("the kept node set must not be empty")
    for lab in wanted:
        m.index(lab)
    kept = [lab for lab in m.labels if lab in wanted]
    removed = [lab for lab in m.labels if lab not in wanted]
    if not removed:
        return ReductionResult(m, (), ())

    ki = [m.index(lab) for lab in kept]
    ri = [m.index(lab) for lab in removed]
    e = m.entries
    m_ss = [[e[a][b] for b in ki] for a in ki]
    m_sr = [[e[a][b] for b in ri] for a in ki]
    m_rs = [[e[a][b] for b in ki] for a in ri]
    x = RatFun.X
    shifted = [
        [e[a][b] - x if a == b else e[a][b] for b in ri]
        for a in ri
    ]
    inv = invert_over_field(shifted)
    correction = _matmul(_matmul(m_sr, inv), m_rs)
    grid = [
        [m_ss[i][j] - correction[i][j] for j in range(len(ki))]
        for i in range(len(ki))
    ]
    return ReductionResult(
        RfMatrix(kept, grid),
        tuple(removed),
        tuple(tuple(row) for row in shifted),
    )


def reduce_sequence(m: RfMatrix, keep_sets: Sequence[Iterable[str]]) -> list[ReductionResult]:
    """Apply reduce repeatedly, each keep set against the previous result.

    Returns one result per keep set; the unreduced input plays the role of
    stage zero and is not repeated in the output.
    """
    results: list[ReductionResult] = []
    current = m
    for keep in keep_sets:
        step = reduce(current, keep)
        results.append(step)
        current = step.reduced
    return results
