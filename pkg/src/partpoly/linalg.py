"""Exact row reduction over the rationals.

Matrices are plain lists of rows; entries may be ints or Fractions and are
converted to Fractions on entry. Pivoting always takes the earliest nonzero
row in the current column, so results are deterministic.
"""
from fractions import Fraction


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows and
    ``pivots[i]`` is the pivot column of ``R[i]``.
    """
    m = _as_fraction_rows(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def solve(a, b):
    """Solve ``a x = b``; return one solution (free variables set to 0) or None."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    r, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(r, pivots):
        x[c] = row[ncols]
    return x


def nullspace(rows, ncols):
    """Basis of ``{x : rows @ x = 0}`` as a list of vectors."""
    r, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(r, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


class RowSpace:
    """Row space of a fixed matrix with a cached echelon basis for membership tests."""

    def __init__(self, rows, ncols):
        self.ncols = ncols
        self.basis, self.pivots = rref(rows, ncols) if rows else ([], [])

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, v):
        """Remainder of ``v`` after eliminating against the echelon basis."""
        w = [Fraction(x) for x in v]
        for row, c in zip(self.basis, self.pivots):
            if w[c] != 0:
                f = w[c]
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def contains(self, v):
        return not any(self.reduce(v))
