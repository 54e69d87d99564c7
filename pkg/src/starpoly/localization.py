"""Localization at X0: the Delta-constants Y_j, the left-coefficient Ore
normal form over B = k[X0^{+-1}, Y2..Yn], skew multiplication z*b = b*z +
X0*Gamma_a(b), and the graded map sending X0 -> t, X1 -> u t, Y_k -> 0 into
k(u)[t; sigma] with sigma(u) = u - a.

An element of the localized ring is written uniquely as
sum_m  b_m * X1^{*m}   (star powers of X1, left coefficients b_m in B);
OrePoly stores the list (b_0, ..., b_M).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .deformation import commutator, star
from .polyring import Poly, RosterError, delta_pows, gamma
from .scalars import binom_scalar

__all__ = [
    "y_element", "OrePoly", "to_ore_normal_form", "from_ore", "ore_mul",
    "ore_commutator", "t_relations_check", "ZetaImage", "zeta",
    "zeta_generator_table", "lie_bracket_check", "skewfield_generator_check",
]


def y_element(ctx, j):
    """The Delta-constant Y_j = sum_p (-X1)^p / (p! X0^p) X_{j-p}, a Laurent
    element of the X roster with e(Y_j) = a + j."""
    if j < 1 or j > ctx.n:
        raise ValueError("y_element needs 1 <= j <= n")
    out = Poly(ctx.xl, ctx)
    for p in range(j + 1):
        exps = [0] * (ctx.n + 1)
        exps[1] += p
        exps[0] -= p
        exps[j - p] += 1
        c = ctx.scalar((-1) ** p) / math.factorial(p)
        m = tuple(exps)
        out.terms[m] = out.terms.get(m, ctx.zero) + c
    out.terms = {m: c for m, c in out.terms.items() if c}
    return out


def _pi_map(ctx, f, laurent_y=True):
    """The slice projection onto ker Delta: kills monomials containing X1
    and renames X_j to Y_j (j >= 2) into the B roster."""
    roster = ctx.bl if laurent_y else ctx.b
    out = Poly(roster, ctx)
    for m, c in f.terms.items():
        if m[1] != 0:
            continue
        if any(m[j] < 0 for j in range(2, len(m))):
            raise RosterError("pi map needs nonnegative X_j exponents, j >= 2")
        out.terms[(m[0],) + m[2:]] = c
    return out


def _x1_star_pows(ctx, upto):
    """[value of X1^{*m} for m = 0..upto] as X-Laurent polynomials."""
    cache = ctx._xpow_star_cache
    if cache is None:
        cache = [ctx.const(1, ctx.xl)]
        ctx._xpow_star_cache = cache
    x1 = ctx.var("X1", ctx.xl)
    while len(cache) <= upto:
        prev = cache[-1]
        cache.append(x1 * prev + ctx.var("X0", ctx.xl) * gamma(ctx, prev))
    return cache[:upto + 1]


def _b_coordinates(ctx, f):
    """Coefficients c_i of f = sum_i c_i X1^i with c_i in B-Laurent:
    c_i = pi(Delta^i f) X0^{-i} / i!."""
    coords = []
    for i, dk in enumerate(delta_pows(ctx, f)):
        c = _pi_map(ctx, dk)
        if c:
            shift = [0] * len(c.roster)
            shift[0] = -i
            c = c.mul_mono(tuple(shift), ctx.scalar(1) / math.factorial(i))
        coords.append(c)
    return coords


@dataclass
class OrePoly:
    """Element sum_m coeffs[m] * X1^{*m} with coeffs in the B-Laurent roster."""

    ctx: object
    coeffs: list

    def normalized(self):
        c = list(self.coeffs)
        while c and c[-1].is_zero():
            c.pop()
        return OrePoly(self.ctx, c)

    def is_zero(self):
        return all(p.is_zero() for p in self.coeffs)

    def z_degree(self):
        return len(self.normalized().coeffs) - 1

    def __eq__(self, other):
        a = self.normalized().coeffs
        b = other.normalized().coeffs
        return len(a) == len(b) and all(p == q for p, q in zip(a, b))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        ctx = self.ctx
        out = []
        for m in range(n):
            p = self.coeffs[m] if m < len(self.coeffs) else ctx.zero_poly(ctx.bl)
            q = other.coeffs[m] if m < len(other.coeffs) else ctx.zero_poly(ctx.bl)
            out.append(p + q)
        return OrePoly(ctx, out).normalized()

    def __sub__(self, other):
        return self + OrePoly(other.ctx, [(-p) for p in other.coeffs])

    def __str__(self):
        parts = []
        for m, p in enumerate(self.coeffs):
            if p.is_zero():
                continue
            if m == 0:
                parts.append("(%s)" % p)
            elif m == 1:
                parts.append("(%s)*z" % p)
            else:
                parts.append("(%s)*z^%d" % (p, m))
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def to_ore_normal_form(ctx, f):
    """Left-B normal form of an X-roster element (Laurent in X0 allowed)."""
    if f.roster not in (ctx.x, ctx.xl):
        raise RosterError("normal form expects the X roster")
    coords = _b_coordinates(ctx, f)
    if not coords:
        return OrePoly(ctx, [])
    M = len(coords) - 1
    pow_vals = _x1_star_pows(ctx, M)
    pow_coords = [_b_coordinates(ctx, p) for p in pow_vals]
    bs = [ctx.zero_poly(ctx.bl) for _ in range(M + 1)]
    for m in range(M, -1, -1):
        b = coords[m]
        bs[m] = b
        if b.is_zero():
            continue
        for i in range(m + 1):
            pmi = pow_coords[m][i] if i < len(pow_coords[m]) else None
            if pmi is not None and pmi:
                coords[i] = coords[i] - b * pmi
    assert all(c.is_zero() for c in coords), "normal-form peeling left residue"
    return OrePoly(ctx, bs).normalized()


def from_ore(ctx, op):
    """Inverse of the normal form: expand Y_j via y_element and resum
    sum b_m * X1^{*m} as an X-Laurent element."""
    images = {"X0": ctx.var("X0", ctx.xl)}
    for j in range(2, ctx.n + 1):
        images["Y%d" % j] = y_element(ctx, j)
    out = ctx.zero_poly(ctx.xl)
    if not op.coeffs:
        return out
    pows = _x1_star_pows(ctx, len(op.coeffs) - 1)
    for m, b in enumerate(op.coeffs):
        if b.is_zero():
            continue
        out = out + b.subs(images) * pows[m]
    return out


def _delta_b(ctx, b):
    """The Ore derivation X0 * Gamma_a on B-Laurent elements."""
    g = gamma(ctx, b)
    shift = [0] * len(b.roster)
    shift[0] = 1
    return g.mul_mono(tuple(shift))


def ore_mul(ctx, p, q):
    """Product in B[z; delta]: z^m * b = sum_t C(m, t) delta^t(b) z^{m-t}."""
    ctx_zero = ctx.zero_poly(ctx.bl)
    out = [ctx_zero] * max(len(p.coeffs) + len(q.coeffs) - 1, 0)
    for m, bm in enumerate(p.coeffs):
        if bm.is_zero():
            continue
        for k, ck in enumerate(q.coeffs):
            if ck.is_zero():
                continue
            dt = ck
            for t in range(m + 1):
                if dt.is_zero():
                    break
                term = bm * dt.scaled(math.comb(m, t))
                idx = m + k - t
                out[idx] = out[idx] + term
                dt = _delta_b(ctx, dt)
    return OrePoly(ctx, out).normalized()


def ore_commutator(ctx, p, q):
    return ore_mul(ctx, p, q) - ore_mul(ctx, q, p)


def t_relations_check(ctx, verbose=False):
    """All quadratic relations of the subring generated by X0, X1, Y2..Yn
    vanish under star, with the Y's expanded as Laurent elements:
    [X1, X0] = a X0*X0, [X1, Y_k] = (a+k) X0*Y_k, [X0, Y_k] = 0,
    [Y_j, Y_k] = 0."""
    x0 = ctx.var("X0", ctx.xl)
    x1 = ctx.var("X1", ctx.xl)
    ys = {j: y_element(ctx, j) for j in range(2, ctx.n + 1)}
    checks = []
    checks.append(commutator(ctx, x1, x0) - star(ctx, x0, x0).scaled(ctx.a))
    for k in range(2, ctx.n + 1):
        zk = ctx.e_value(1, k)
        checks.append(commutator(ctx, x1, ys[k]) - star(ctx, x0, ys[k]).scaled(zk))
        checks.append(commutator(ctx, x0, ys[k]))
    for j in range(2, ctx.n + 1):
        for k in range(j + 1, ctx.n + 1):
            checks.append(commutator(ctx, ys[k], ys[j]))
    return all(c.is_zero() for c in checks)


# ---------------------------------------------------------------------------
# the graded map into k(u)[t; sigma]
# ---------------------------------------------------------------------------

@dataclass
class ZetaImage:
    """f(u) * t^tpow in k(u)[t; sigma] with sigma(u) = u - a; coeffs are the
    coefficients of f, lowest degree first, over the scalar field."""

    ctx: object
    coeffs: tuple
    tpow: int

    @property
    def shift(self):
        return self.ctx.a

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero image")
        return self.coeffs[-1]

    def __eq__(self, other):
        if self.is_zero() and other.is_zero():
            return True
        return self.tpow == other.tpow and self.coeffs == other.coeffs

    def __mul__(self, other):
        """(f t^p)(g t^q) = f * sigma^p(g) t^{p+q}."""
        ctx = self.ctx
        g = _ushift(ctx, other.coeffs, self.tpow)
        prod = _umul(ctx, self.coeffs, g)
        if not prod:
            return ZetaImage(ctx, (), 0)
        return ZetaImage(ctx, prod, self.tpow + other.tpow)

    def __str__(self):
        if self.is_zero():
            return "0"
        from .polyring import _is_negative
        from .scalars import coeff_str
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            neg = _is_negative(c)
            if neg:
                c = -c
            mono = "" if d == 0 else ("u" if d == 1 else "u^%d" % d)
            body = coeff_str(c) if not mono else (
                mono if c == 1 else "%s*%s" % (coeff_str(c), mono))
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        f = "".join(parts)
        if self.tpow == 0:
            return f
        tpart = "t" if self.tpow == 1 else "t^%d" % self.tpow
        return "(%s)*%s" % (f, tpart)

    __repr__ = __str__


def _utrim(coeffs):
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _umul(ctx, f, g):
    if not f or not g:
        return ()
    out = [ctx.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    return _utrim(out)


def _ushift(ctx, f, s):
    """f(u - s*a): conjugation of a u-polynomial by t^s."""
    if s == 0 or not f:
        return _utrim(f)
    c = -ctx.a * s
    out = [ctx.zero] * len(f)
    for k in range(len(f) - 1, -1, -1):
        # Horner: out = out * (u + c) + f[k]
        prev = list(out)
        for i in range(len(f) - 1, 0, -1):
            out[i] = prev[i - 1] + prev[i] * c
        out[0] = prev[0] * c + f[k]
    return _utrim(out)


def _falling(ctx, m):
    """u (u - a) ... (u - (m-1) a) as a u-polynomial, cached."""
    cache = ctx._falling_cache
    got = cache.get(m)
    if got is not None:
        return got
    if m == 0:
        out = (ctx.one,)
    else:
        prev = _falling(ctx, m - 1)
        c = -ctx.a * (m - 1)
        shifted = [ctx.zero] + list(prev)
        for i, v in enumerate(prev):
            shifted[i] = shifted[i] + v * c
        out = _utrim(shifted)
    cache[m] = out
    return out


def zeta(ctx, f):
    """Image of a d-homogeneous X-roster element under X0 -> t, X1 -> u t,
    Y_k -> 0, computed through the Ore normal form."""
    degs = {sum(m) for m in f.terms}
    if len(degs) > 1:
        raise ValueError("zeta requires a d-homogeneous element")
    if not degs:
        return ZetaImage(ctx, (), 0)
    d = degs.pop()
    nf = to_ore_normal_form(ctx, f)
    total = ()
    for m, b in enumerate(nf.coeffs):
        for mono, c in b.terms.items():
            if any(mono[i] for i in range(1, len(mono))):
                continue  # Y_k -> 0
            s = mono[0]
            assert s + m == d, "graded image degree mismatch"
            part = _ushift(ctx, _falling(ctx, m), s)
            part = tuple(v * c for v in part)
            if not total:
                total = part
            else:
                n = max(len(total), len(part))
                total = _utrim([
                    (total[i] if i < len(total) else ctx.zero)
                    + (part[i] if i < len(part) else ctx.zero)
                    for i in range(n)])
    return ZetaImage(ctx, _utrim(total), d if total else 0)


def zeta_generator_table(ctx):
    """[zeta(X_0), ..., zeta(X_n)], each of the form f_k(u) t with
    deg f_k = k and leading coefficient 1/k!."""
    return [zeta(ctx, ctx.var("X%d" % k, ctx.xl)) for k in range(ctx.n + 1)]


# ---------------------------------------------------------------------------
# Lie-algebra and skewfield generator checks
# ---------------------------------------------------------------------------

def lie_bracket_check(ctx):
    """With X = X0^{-1} X1: [X, Y_i] = (a+i) Y_i and [Y_i, Y_j] = 0 in the
    localized ring."""
    exps = [0] * (ctx.n + 1)
    exps[0] = -1
    exps[1] = 1
    X = ctx.monomial(ctx.xl, tuple(exps))
    ys = {i: y_element(ctx, i) for i in range(2, ctx.n + 1)}
    for i, yi in ys.items():
        if commutator(ctx, X, yi) != yi.scaled(ctx.e_value(1, i)):
            return False
    for i, yi in ys.items():
        for j, yj in ys.items():
            if i < j and commutator(ctx, yi, yj):
                return False
    return True


def skewfield_generator_check(ctx):
    """In the B-Laurent Ore picture, with X1' = X1 X0^{-1}, s = X0 and
    t = Y2 X0^{-1} (n = 2) or t = Y3 Y2^{-1} (n > 2):
    [X1', s] = a s and [X1', t] = eps t with eps = 2 (n = 2), 1 (n > 2)."""
    if ctx.n < 2:
        raise ValueError("skewfield generators need n >= 2")
    width = len(ctx.bl)
    zero = ctx.zero_poly(ctx.bl)

    def bmono(**exps):
        e = [0] * width
        for name, v in exps.items():
            e[ctx.bl.index(name)] = v
        return ctx.monomial(ctx.bl, tuple(e))

    x1p = OrePoly(ctx, [zero, bmono(X0=-1)])
    s = OrePoly(ctx, [bmono(X0=1)])
    if ctx.n == 2:
        t = OrePoly(ctx, [bmono(X0=-1, Y2=1)])
        eps = 2
    else:
        t = OrePoly(ctx, [bmono(Y3=1, Y2=-1)])
        eps = 1
    ok_s = ore_commutator(ctx, x1p, s) == OrePoly(
        ctx, [p.scaled(ctx.a) for p in s.coeffs])
    ok_t = ore_commutator(ctx, x1p, t) == OrePoly(
        ctx, [p.scaled(eps) for p in t.coeffs])
    return ok_s and ok_t
