"""Exact two-phase simplex over the rationals (Bland's rule).

Solves ``min c.x  s.t.  A x = b, x >= 0`` with ``fractions.Fraction``
arithmetic, so the answer is exact and cycling cannot occur.
"""
from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list = None
    value: Fraction = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list of dense Fraction lists
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r, c):
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            prow[:] = [v / p for v in prow]
            self.rhs[r] /= p
        nz = [(j, v) for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f:
                for j, v in nz:
                    row[j] -= f * v
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost):
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j, v in enumerate(row):
                    if v:
                        red[j] -= cb * v
        return red

    def run(self, cost, allowed):
        """Minimize ``cost`` over the current basis; columns outside ``allowed`` never enter."""
        while True:
            red = self.reduced_costs(cost)
            entering = next((j for j in allowed if red[j] < 0), None)
            if entering is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], entering)

    def solution(self, n):
        x = [Fraction(0)] * n
        for i, b in enumerate(self.basis):
            if b < n:
                x[b] = self.rhs[i]
        return x


def linprog(c, A, b):
    """Minimize ``c.x`` subject to ``A x = b``, ``x >= 0``; all inputs exact."""
    m = len(A)
    n = len(c)
    rows = []
    rhs = []
    for row, bi in zip(A, b):
        row = [Fraction(v) for v in row]
        bi = Fraction(bi)
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        rows.append(row + [Fraction(0)] * m)
        rhs.append(bi)
    for i in range(m):
        rows[i][n + i] = Fraction(1)
    tab = _Tableau(rows, rhs, [n + i for i in range(m)])

    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    tab.run(phase1, range(n + m))
    if sum(tab.rhs[i] for i, bcol in enumerate(tab.basis) if bcol >= n) != 0:
        return LPResult(INFEASIBLE)

    # drive remaining (zero-valued) artificials out of the basis
    keep = []
    for i, bcol in enumerate(tab.basis):
        if bcol < n:
            keep.append(i)
            continue
        col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
        if col is None:
            continue  # redundant equation
        tab.pivot(i, col)
        keep.append(i)
    tab.rows = [tab.rows[i][:n] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]

    cost = [Fraction(v) for v in c]
    status = tab.run(cost, range(n))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = tab.solution(n)
    return LPResult(OPTIMAL, x, sum(ci * xi for ci, xi in zip(cost, x)))


def feasible_point(A, b):
    """Some ``x >= 0`` with ``A x = b``, or None."""
    res = linprog([0] * (len(A[0]) if A else 0), A, b)
    return res.x if res.status == OPTIMAL else None
