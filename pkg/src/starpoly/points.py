"""Point-module machinery: multilinearized relation matrices, the minor
identities det A_k = +-k X0^n Y_k, successor computation by exact null
spaces, and rational-normal-curve sample points built from the graded-map
generator table of factor algebras.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deformation import relations
from .linalg import nullspace
from .localization import zeta_generator_table
from .polyring import AlgebraCtx, Poly

__all__ = [
    "RelationMatrix", "rel_matrix", "minor_identity_check", "next_point",
    "normalize_point", "curve_point", "verify_point_module", "curve_parameter",
]


@dataclass
class RelationMatrix:
    """Rows of degree-1 polynomials in the first-factor coordinates; a
    truncated point module is a pair (p, q) with  M(p) q = 0."""

    ctx: object
    roster_tag: str  # "R" or "T"
    rows: list       # each row: list of Poly (length = number of columns)

    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def evaluate(self, point):
        """Scalar matrix M(p)."""
        point = [self.ctx.scalar(c) for c in point]
        return [[entry.evaluate(point) for entry in row] for row in self.rows]


def rel_matrix(ctx, roster="R"):
    """Multilinearization of the quadratic relations.

    For the R roster the rows come from the relation tensors; for the T
    roster (n >= 2) the four relation families of the X0, X1, Y2..Yn
    subring are written out directly."""
    if roster == "R":
        rows = []
        for rel in relations(ctx):
            row = [ctx.zero_poly() for _ in range(ctx.n + 1)]
            for (u, v), c in rel.tensor.items():
                row[v] = row[v] + ctx.gen(u).scaled(c)
            rows.append(row)
        return RelationMatrix(ctx, "R", rows)
    if roster != "T":
        raise ValueError("roster must be 'R' or 'T'")
    if ctx.n < 2:
        raise ValueError("the T roster needs n >= 2")
    t = ctx.t
    ncols = len(t)

    def var(name):
        return ctx.var(name, t)

    def zrow():
        return [ctx.zero_poly(t) for _ in range(ncols)]

    a = ctx.a
    rows = []
    # X1 X0 - X0 X1 - a X0^2
    row = zrow()
    row[0] = var("X1") - var("X0").scaled(a)
    row[1] = -var("X0")
    rows.append(row)
    for k in range(2, ctx.n + 1):
        col = t.index("Y%d" % k)
        # X1 Y_k - Y_k X1 - (a+k) X0 Y_k
        row = zrow()
        row[1] = -var("Y%d" % k)
        row[col] = var("X1") - var("X0").scaled(ctx.e_value(1, k))
        rows.append(row)
    for k in range(2, ctx.n + 1):
        col = t.index("Y%d" % k)
        # X0 Y_k - Y_k X0
        row = zrow()
        row[0] = -var("Y%d" % k)
        row[col] = var("X0")
        rows.append(row)
    for j in range(2, ctx.n + 1):
        for k in range(j + 1, ctx.n + 1):
            # Y_k Y_j - Y_j Y_k
            row = zrow()
            row[t.index("Y%d" % j)] = var("Y%d" % k)
            row[t.index("Y%d" % k)] = -var("Y%d" % j)
            rows.append(row)
    return RelationMatrix(ctx, "T", rows)


def _det(ctx, rows):
    """Determinant of a square Poly matrix by column expansion with
    memoization on (row index, frozenset of free columns)."""
    size = len(rows)
    memo = {}

    def rec(r, cols):
        if r == size:
            return ctx.const(1, rows[0][0].roster)
        key = (r, cols)
        got = memo.get(key)
        if got is not None:
            return got
        total = ctx.zero_poly(rows[0][0].roster)
        sign = 1
        for idx, c in enumerate(cols):
            entry = rows[r][c]
            if entry:
                sub = rec(r + 1, cols[:idx] + cols[idx + 1:])
                term = entry * sub
                total = total + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = total
        return total

    return rec(0, tuple(range(size)))


def minor_identity_check(ctx, k):
    """det of the square minor on the rows (X1 X0 row, the X1 Y_k row, and
    all X0 Y_j rows) equals +- k X0^n Y_k as a polynomial identity."""
    if not 2 <= k <= ctx.n:
        raise ValueError("need 2 <= k <= n")
    mat = rel_matrix(ctx, "T")
    n = ctx.n
    # rows: 0 is the X1 X0 row, k-1 is the X1 Y_k row, n+j-2 is the X0 Y_j row
    rows = [mat.rows[0], mat.rows[k - 1]] + [mat.rows[n + j - 2]
                                             for j in range(2, n + 1)]
    det = _det(ctx, rows)
    t = ctx.t
    exps = [0] * len(t)
    exps[0] = n
    exps[t.index("Y%d" % k)] = 1
    target = ctx.monomial(t, tuple(exps), k)
    return det == target or det == -target


def normalize_point(ctx, coords):
    """Projective normalization: first nonzero coordinate scaled to one."""
    coords = [ctx.scalar(c) for c in coords]
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    return [c / lead for c in coords]


def next_point(ctx, p, matrix=None):
    """Null-space basis of M(p): the candidate successors of p.  A point
    of the point scheme has exactly one; generic points have none."""
    matrix = matrix if matrix is not None else rel_matrix(ctx, "R")
    rows = matrix.evaluate(p)
    basis = nullspace(rows, matrix.ncols(), ctx.zero, ctx.one)
    if len(basis) == 1:
        return [normalize_point(ctx, basis[0])]
    return [vec for vec in basis]


def verify_point_module(ctx, p, depth=4, matrix=None):
    """Iterate the successor map from p; True iff every step up to `depth`
    has a unique successor."""
    matrix = matrix if matrix is not None else rel_matrix(ctx, "R")
    cur = normalize_point(ctx, p)
    for _ in range(depth):
        rows = matrix.evaluate(cur)
        basis = nullspace(rows, matrix.ncols(), ctx.zero, ctx.one)
        if len(basis) != 1:
            return False
        cur = normalize_point(ctx, basis[0])
    return True


def curve_point(ctx, k, u0):
    """A sample point of the degree-k rational normal curve: zeros in the
    first n-k slots, then [f_0(u0) : ... : f_k(u0)] from the generator
    table of the degree-k factor algebra (parameter a + n - k); u0 = None
    gives the common point at infinity [0 : ... : 0 : 1]."""
    if not 1 <= k <= ctx.n:
        raise ValueError("need 1 <= k <= n")
    if ctx.symbolic:
        raise ValueError("curve points need a specialized parameter")
    if u0 is None:
        coords = [ctx.zero] * ctx.n + [ctx.one]
        return coords
    sub = AlgebraCtx(k, ctx.a + (ctx.n - k)) if k != ctx.n else ctx
    table = zeta_generator_table(sub)
    u0 = ctx.scalar(u0)
    vals = []
    for im in table:
        total = ctx.zero
        for i, c in enumerate(im.coeffs):
            total = total + c * u0 ** i
        vals.append(total)
    return [ctx.zero] * (ctx.n - k) + vals


def curve_parameter(ctx, k, p):
    """Recover u with curve_point(k, u) projectively equal to p, or None.
    Uses f_0 = 1 and f_1 = u, then verifies every coordinate."""
    p = [ctx.scalar(c) for c in p]
    if any(p[i] for i in range(ctx.n - k)):
        return None
    tail = p[ctx.n - k:]
    if not tail[0]:
        # only the point at infinity lies off the f_0 != 0 chart
        if all(not c for c in tail[:-1]) and tail[-1]:
            return "infinity"
        return None
    u0 = tail[1] / tail[0]
    ref = curve_point(ctx, k, u0)
    scale = tail[0]
    if all(ref[ctx.n - k + i] * scale == tail[i] for i in range(k + 1)):
        return u0
    return None
