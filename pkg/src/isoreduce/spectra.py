"""Numeric certification that a reduction preserved the spectrum.

Every eigenvalue of the original matrix that is not an eigenvalue of the
removed block must be a root of det(reduced(x) - x I). The check evaluates
that determinant at each computed eigenvalue and normalizes it into a
root-distance scale, so a residual near machine precision certifies the
root and a residual of order one refutes it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import isored
from .exactnum import Polynomial, RatFun
from .netmat import RfMatrix

__all__ = ["ConvergenceError", "EigenCheck", "SpectrumReport", "sym_eigenvalues", "eval_det", "verify_spectrum"]

_DEFAULT_SWEEP_CAP = 100


class ConvergenceError(RuntimeError):
    """The Jacobi sweep cap was hit before the off-diagonal norm dropped."""


def sym_eigenvalues(
    matrix: Sequence[Sequence[float]],
    tol: float = 1e-10,
    sweep_cap: int = _DEFAULT_SWEEP_CAP,
) -> list[float]:
    """All eigenvalues of a real symmetric matrix, ascending.

    Cyclic Jacobi rotations run until the off-diagonal Frobenius norm falls
    below tol, which bounds each eigenvalue's error by tol. The input must
    be symmetric within tol.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    a = [[float(v) for v in row] for row in matrix]
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > tol:
                raise ValueError(f"matrix is not symmetric at ({i}, {j})")
            mean = 0.5 * (a[i][j] + a[j][i])
            a[i][j] = a[j][i] = mean
    if n <= 1:
        return [a[0][0]] if n else []

    skip = tol / (10.0 * n)
    for _ in range(sweep_cap):
        off = math.sqrt(2.0 * sum(a[i][j] ** 2 for i in range(n) for j in range(i + 1, n)))
        if off <= tol:
            return sorted(a[i][i] for i in range(n))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p][:]
                rq = a[q][:]
                for k in range(n):
                    a[p][k] = c * rp[k] - s * rq[k]
                    a[q][k] = s * rp[k] + c * rq[k]
                for k in range(n):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                a[p][q] = a[q][p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge within {sweep_cap} sweeps")


def _lu_det(a: list[list[float]]) -> float:
    """Determinant by LU factorization with partial pivoting; 0.0 if singular."""
    n = len(a)
    det = 1.0
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0.0:
            return 0.0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        piv = a[col][col]
        det *= piv
        for r in range(col + 1, n):
            f = a[r][col] / piv
            if f:
                for c in range(col + 1, n):
                    a[r][c] -= f * a[col][c]
    return det


def eval_det(grid: Sequence[Sequence[RatFun]], x: float, pole_tol: float = 1e-12) -> float:
    """Determinant of the grid evaluated entrywise at x.

    Pole errors from entry evaluation propagate; a numerically singular
    factorization returns 0.0 (which is exactly the signal sought).
    """
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("matrix must be square")
    vals = [[v(x, pole_tol=pole_tol) for v in row] for row in grid]
    return _lu_det(vals)


@dataclass(frozen=True)
class EigenCheck:
    eigenvalue: float
    excluded: bool
    residual: float


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues_full: tuple[float, ...]
    eigenvalues_removed_block: tuple[float, ...]
    checks: tuple[EigenCheck, ...]
    tolerance: float
    exclusion_gap: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "eigenvalues_full": list(self.eigenvalues_full),
            "eigenvalues_removed_block": list(self.eigenvalues_removed_block),
            "tolerance": self.tolerance,
            "exclusion_gap": self.exclusion_gap,
            "passed": self.passed,
            "checks": [
                {
                    "eigenvalue": c.eigenvalue,
                    "excluded": c.excluded,
                    "residual": None if math.isnan(c.residual) else c.residual,
                }
                for c in self.checks
            ],
        }


def _float_matrix(m: RfMatrix) -> list[list[float]]:
    if not m.is_constant():
        raise ValueError("spectrum verification requires a constant (x-free) matrix")
    return [[float(v.as_fraction()) for v in row] for row in m.entries]


_EIG_TOL = 1e-12


def verify_spectrum(
    m: RfMatrix,
    s: Iterable[str],
    tol: float = 1e-6,
    exclusion_gap: float = 1e-6,
) -> SpectrumReport:
    """Certify that reducing m over s preserves the spectrum.

    Eigenvalues of m that fall within exclusion_gap of the removed block's
    spectrum sit on poles of the reduced entries and are excluded from the
    check; there the residual is meaningless and recorded as NaN.

    For each remaining eigenvalue e the residual is

        |det(reduced(e) - e I)| * prod(distinct denominators at e)
                                / prod(|e' - e| over far eigenvalues e')

    which clears the reduced determinant's poles and divides out the
    characteristic polynomial's slope, leaving the distance from e to the
    nearest actual determinant root. Near-zero certifies; order one refutes.
    """
    wanted = set(s)
    if not wanted:
        raise ValueError("the kept node set must not be empty")
    if wanted >= set(m.labels):
        raise ValueError("verification requires a proper subset of the labels")
    full = _float_matrix(m)
    if not m.is_symmetric():
        raise ValueError("spectrum verification requires a symmetric matrix")

    removed = [lab for lab in m.labels if lab not in wanted]
    ri = [m.index(lab) for lab in removed]
    block = [[full[a][b] for b in ri] for a in ri]

    eig_full = sym_eigenvalues(full, tol=_EIG_TOL)
    eig_removed = sym_eigenvalues(block, tol=_EIG_TOL)

    reduced = isored.reduce(m, wanted).reduced
    dens: list[Polynomial] = []
    for row in reduced.entries:
        for v in row:
            if v.den.degree > 0 and v.den not in dens:
                dens.append(v.den)

    n = len(reduced)
    checks: list[EigenCheck] = []
    passed = True
    for lam in eig_full:
        if eig_removed and min(abs(lam - mu) for mu in eig_removed) < exclusion_gap:
            checks.append(EigenCheck(lam, True, math.nan))
            continue
        vals = [
            [reduced.entries[i][j](lam, pole_tol=0.0) for j in range(n)]
            for i in range(n)
        ]
        for i in range(n):
            vals[i][i] -= lam
        det = abs(_lu_det(vals))
        den_scale = 1.0
        for d in dens:
            den_scale *= abs(d(lam))
        gap_scale = 1.0
        for other in eig_full:
            diff = abs(other - lam)
            if diff > exclusion_gap:
                gap_scale *= diff
        residual = det * den_scale / gap_scale
        if not residual < tol:
            passed = False
        checks.append(EigenCheck(lam, False, residual))

    return SpectrumReport(
        eigenvalues_full=tuple(eig_full),
        eigenvalues_removed_block=tuple(eig_removed),
        checks=tuple(checks),
        tolerance=tol,
        exclusion_gap=exclusion_gap,
        passed=passed,
    )
