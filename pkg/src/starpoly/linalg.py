"""Exact linear algebra over the scalar field: reduced row echelon form on
sparse rows, null spaces, and linear solves.  Pivoting is deterministic:
columns are processed in the order given, rows by first usable pivot, so
reduced bases are canonical for a fixed column order.
"""

from __future__ import annotations

__all__ = ["SparseReducer", "nullspace", "solve", "rank_dense"]


class SparseReducer:
    """Incremental reduced echelon basis of sparse row vectors.

    Rows are dicts column -> nonzero scalar.  `column_key` orders columns;
    the pivot of a row is its minimal column under that order.  After every
    insertion the stored rows stay fully reduced against one another with
    pivot entries equal to one, so `basis()` is canonical.
    """

    def __init__(self, column_key=None):
        self.column_key = column_key if column_key is not None else lambda c: c
        self.pivots = {}  # pivot column -> reduced row

    def _pivot_col(self, row):
        return min(row, key=self.column_key)

    def reduce(self, row):
        """Reduce a row against the basis; returns the (unnormalised)
        remainder as a dict, possibly empty."""
        row = dict(row)
        while row:
            col = self._pivot_col(row)
            base = self.pivots.get(col)
            if base is None:
                return row
            c = row[col]
            for bc, bv in base.items():
                v = row.get(bc)
                nv = (v - c * bv) if v is not None else -c * bv
                if nv:
                    row[bc] = nv
                else:
                    row.pop(bc, None)
        return row

    def add(self, row):
        """Insert a row; returns True if it enlarged the span."""
        rem = self.reduce(row)
        if not rem:
            return False
        col = self._pivot_col(rem)
        lead = rem[col]
        newrow = {c: v / lead for c, v in rem.items()}
        # clear the new pivot column from existing rows
        for pcol, prow in self.pivots.items():
            v = prow.get(col)
            if v is not None:
                for c, nv in newrow.items():
                    w = prow.get(c)
                    w = (w - v * nv) if w is not None else -v * nv
                    if w:
                        prow[c] = w
                    else:
                        prow.pop(c, None)
        self.pivots[col] = newrow
        return True

    def contains(self, row):
        return not self.reduce(row)

    def rank(self):
        return len(self.pivots)

    def basis(self):
        """Canonical reduced rows, sorted by pivot column order."""
        return [self.pivots[c] for c in sorted(self.pivots, key=self.column_key)]


def nullspace(rows, ncols, zero, one):
    """Basis of the right null space of a dense matrix (list of row lists).

    Returns a list of length-ncols vectors; deterministic: free columns in
    increasing index order, each normalised with a one in its free slot.
    """
    mat = [list(r) for r in rows]
    nrows = len(mat)
    piv_of_col = [None] * ncols
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        lead = mat[r][c]
        mat[r] = [v / lead for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        piv_of_col[c] = r
        r += 1
        if r == nrows:
            break
    basis = []
    for c in range(ncols):
        if piv_of_col[c] is not None:
            continue
        vec = [zero] * ncols
        vec[c] = one
        for c2 in range(ncols):
            pr = piv_of_col[c2]
            if pr is not None:
                vec[c2] = -mat[pr][c]
        basis.append(vec)
    return basis


def solve(rows, rhs, ncols, zero):
    """One solution x of the dense system rows * x = rhs, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    nrows = len(aug)
    piv_of_col = [None] * ncols
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if aug[i][c]:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        lead = aug[r][c]
        aug[r] = [v / lead for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        piv_of_col[c] = r
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols]:
            return None
    x = [zero] * ncols
    for c in range(ncols):
        if piv_of_col[c] is not None:
            x[c] = aug[piv_of_col[c]][ncols]
    return x


def rank_dense(rows):
    """Rank of a dense matrix over the scalar field."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        lead = mat[r][c]
        for i in range(r + 1, len(mat)):
            if mat[i][c]:
                f = mat[i][c] / lead
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r
