"""Exact Gaussian elimination over the rationals on sparse rows.

Rows are ``{column: value}`` dicts; absent columns are zero.
"""
from fractions import Fraction


class Inconsistent(ArithmeticError):
    pass


def _axpy(target, coeff, row):
    """target -= coeff * row, in place, dropping zeros."""
    for col, val in row.items():
        new = target.get(col, 0) - coeff * val
        if new:
            target[col] = new
        else:
            target.pop(col, None)


class Echelon:
    """Incremental row echelon form with optional right-hand side and row tracking."""

    def __init__(self, track=False):
        self.pivots = []  # (pivot column, normalized row, rhs, combination)
        self.pivot_cols = set()
        self.track = track

    def reduce(self, row, rhs=Fraction(0), combo=None):
        row = {c: Fraction(v) for c, v in row.items() if v}
        rhs = Fraction(rhs)
        combo = dict(combo) if combo is not None else None
        for col, prow, prhs, pcombo in self.pivots:
            coeff = row.get(col)
            if coeff:
                _axpy(row, coeff, prow)
                rhs -= coeff * prhs
                if combo is not None:
                    _axpy(combo, coeff, pcombo)
        return row, rhs, combo

    def add(self, row, rhs=0, label=None):
        """Insert a row; returns None if independent, else the reduced residue.

        The residue is ``(rhs, combination)``: a nonzero rhs means the system
        is inconsistent; the combination (when tracking) expresses the zero
        row in terms of the inserted row labels.
        """
        combo = {label: Fraction(1)} if self.track else None
        row, rhs, combo = self.reduce(row, rhs, combo)
        if not row:
            return rhs, combo
        col = min(row)
        scale = row[col]
        row = {c: v / scale for c, v in row.items()}
        rhs = rhs / scale
        if combo is not None:
            combo = {c: v / scale for c, v in combo.items()}
        self.pivots.append((col, row, rhs, combo))
        self.pivot_cols.add(col)
        return None

    @property
    def rank(self):
        return len(self.pivots)

    def back_substitute(self):
        """A solution with every non-pivot column set to zero."""
        x = {}
        for col, row, rhs, _ in reversed(self.pivots):
            val = rhs - sum(v * x.get(c, 0) for c, v in row.items() if c != col)
            if val:
                x[col] = val
        return x


def rank(rows):
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def dependency(rows):
    """Coefficients ``d`` (row index -> value, not all zero) with sum d_i rows_i = 0, or None."""
    ech = Echelon(track=True)
    for i, r in enumerate(rows):
        residue = ech.add(r, label=i)
        if residue is not None:
            return {k: v for k, v in residue[1].items() if v}
    return None


def solve(rows, rhs):
    """A solution of ``rows x = rhs`` supported on pivot columns.

    Raises :class:`Inconsistent` when there is none.
    """
    ech = Echelon()
    for r, b in zip(rows, rhs):
        residue = ech.add(r, b)
        if residue is not None and residue[0] != 0:
            raise Inconsistent("system has no solution")
    return ech.back_substitute()


def left_kernel(rows):
    """A basis of ``{y : sum_i y_i rows_i = 0}`` as sparse dicts over row indices."""
    ech = Echelon(track=True)
    basis = []
    for i, r in enumerate(rows):
        residue = ech.add(r, label=i)
        if residue is not None:
            basis.append({k: v for k, v in residue[1].items() if v})
    return basis


def mat_vec(rows, x):
    return [sum(v * x.get(c, 0) for c, v in row.items()) for row in rows]
