"""Sparse Laurent-capable polynomials over the exact scalar field, with the
degree grading d, the weight grading eps, the Gamma_a eigenvalue e = d*a + eps,
and the two derivations Delta (downward) and Gamma_a (weighted Euler).

Three variable rosters are used:

* the X roster X0..Xn (X0 optionally invertible), carrying Delta;
* the B roster X0, Y2..Yn (X0 invertible, optionally all Y invertible),
  on which Delta is zero;
* the T roster X0, X1, Y2..Yn used by the point-module matrices.

A monomial is an exponent tuple over the roster; a Poly is a dict from
monomials to nonzero scalars.  Canonical term order is graded lexicographic
(total degree first, then the exponent tuple), printed highest first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import RAT, A, RatFunc, binom_scalar, coeff_str, rat

MAX_DEGREE = 10 ** 6


class RosterError(ValueError):
    """A polynomial was used with variables outside its declared roster."""


@dataclass(frozen=True)
class Roster:
    """Variable roster: names, eps weights, invertible set, Delta images."""

    names: tuple
    weights: tuple
    invertible: frozenset
    delta_to: tuple  # index of Delta image per variable, or None

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise RosterError("variable %s not in roster %s" % (name, self.names))

    def __len__(self):
        return len(self.names)


def x_roster(n, laurent=False):
    names = tuple("X%d" % i for i in range(n + 1))
    weights = tuple(range(n + 1))
    inv = frozenset({0}) if laurent else frozenset()
    delta_to = (None,) + tuple(range(n))
    return Roster(names, weights, inv, delta_to)


def b_roster(n, laurent_y=False):
    names = ("X0",) + tuple("Y%d" % j for j in range(2, n + 1))
    weights = (0,) + tuple(range(2, n + 1))
    inv = frozenset(range(n)) if laurent_y else frozenset({0})
    delta_to = (None,) * n
    return Roster(names, weights, inv, delta_to)


def t_roster(n):
    names = ("X0", "X1") + tuple("Y%d" % j for j in range(2, n + 1))
    weights = (0, 1) + tuple(range(2, n + 1))
    delta_to = (None, 0) + (None,) * (n - 1)
    return Roster(names, weights, frozenset(), delta_to)


class AlgebraCtx:
    """The pair (n, a): variable rosters, scalar mode, and per-instance
    caches for Gamma_a binomial eigen-scalars and star products."""

    def __init__(self, n, a="symbolic"):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        if isinstance(a, str) and a == "symbolic":
            self.symbolic = True
            self.a = A
        elif isinstance(a, RatFunc):
            # a shifted value of the formal parameter, e.g. a+1 for quotients
            self.symbolic = True
            self.a = a
        else:
            self.symbolic = False
            self.a = rat(a) if not isinstance(a, type(RAT(1))) else a
        self.x = x_roster(n)
        self.xl = x_roster(n, laurent=True)
        self.b = b_roster(n)
        self.bl = b_roster(n, laurent_y=True)
        self.t = t_roster(n)
        self._e_cache = {}
        self._binom_e_cache = {}
        self._star_mono_cache = {}
        self._delta_pow_cache = {}
        self._xpow_star_cache = None
        self._falling_cache = {}

    def __repr__(self):
        return "AlgebraCtx(n=%d, a=%s)" % (self.n, "a" if self.symbolic else self.a)

    # -- scalars -------------------------------------------------------------

    def scalar(self, x):
        """Coerce a rational (or int, or 'p/q' string) into the coefficient field."""
        q = rat(x) if not isinstance(x, (RatFunc, type(RAT(1)))) else x
        if self.symbolic and not isinstance(q, RatFunc):
            return RatFunc.from_rat(q)
        return q

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def e_value(self, d, eps):
        """Gamma_a eigenvalue of any monomial with degree d and weight eps."""
        key = (d, eps)
        v = self._e_cache.get(key)
        if v is None:
            v = self.a * d + eps
            self._e_cache[key] = v
        return v

    def binom_e(self, d, eps, k):
        """binom(d*a + eps, k), cached."""
        key = (d, eps, k)
        v = self._binom_e_cache.get(key)
        if v is None:
            v = binom_scalar(self.e_value(d, eps), k)
            self._binom_e_cache[key] = v
        return v

    # -- polynomial constructors ----------------------------------------------

    def poly(self, roster, terms=None):
        p = Poly(roster, self)
        if terms:
            for m, c in terms.items():
                c = self.scalar(c)
                if c:
                    p.terms[m] = c
        return p

    def zero_poly(self, roster=None):
        return Poly(roster if roster is not None else self.x, self)

    def const(self, c, roster=None):
        roster = roster if roster is not None else self.x
        return self.poly(roster, {(0,) * len(roster): c})

    def var(self, name, roster=None, power=1):
        roster = roster if roster is not None else self.x
        i = roster.index(name)
        exps = [0] * len(roster)
        exps[i] = power
        if power < 0 and i not in roster.invertible:
            raise RosterError("variable %s is not invertible" % name)
        return self.poly(roster, {tuple(exps): 1})

    def gen(self, i, roster=None):
        """The generator X_i."""
        return self.var("X%d" % i, roster)

    def monomial(self, roster, exps, c=1):
        exps = tuple(exps)
        for i, e in enumerate(exps):
            if e < 0 and i not in roster.invertible:
                raise RosterError(
                    "negative exponent on non-invertible %s" % roster.names[i])
        return self.poly(roster, {exps: c})


class Poly:
    """Sparse polynomial over a roster; terms maps exponent tuples to
    nonzero scalars.  Treat instances as immutable."""

    __slots__ = ("roster", "ctx", "terms")

    def __init__(self, roster, ctx):
        self.roster = roster
        self.ctx = ctx
        self.terms = {}

    # -- basic queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Maximal total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def eps_degree(self):
        if not self.terms:
            return -1
        w = self.roster.weights
        return max(sum(e * w[i] for i, e in enumerate(m)) for m in self.terms)

    def mono_d(self, m):
        return sum(m)

    def mono_eps(self, m):
        w = self.roster.weights
        return sum(e * w[i] for i, e in enumerate(m))

    def is_d_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_eps_homogeneous(self):
        return len({self.mono_eps(m) for m in self.terms}) <= 1

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.ctx.zero)

    def constant_coeff(self):
        return self.terms.get((0,) * len(self.roster), self.ctx.zero)

    # -- arithmetic -------------------------------------------------------------

    def _check_same(self, other):
        if self.roster is not other.roster and self.roster != other.roster:
            raise RosterError("mixed rosters: %s vs %s"
                              % (self.roster.names, other.roster.names))

    def __add__(self, other):
        if not isinstance(other, Poly):
            return self + self.ctx.const(other, self.roster)
        self._check_same(other)
        out = Poly(self.roster, self.ctx)
        out.terms = dict(self.terms)
        t = out.terms
        for m, c in other.terms.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = s + c
                if s:
                    t[m] = s
                else:
                    del t[m]
        return out

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        out = Poly(self.roster, self.ctx)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return self - self.ctx.const(other, self.roster)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scaled(self, c):
        c = self.ctx.scalar(c)
        if not c:
            return Poly(self.roster, self.ctx)
        out = Poly(self.roster, self.ctx)
        out.terms = {m: v * c for m, v in self.terms.items()}
        return out

    def mul_mono(self, exps, c=1):
        """Multiply by c * X^exps (exponentwise shift)."""
        c = self.ctx.scalar(c)
        out = Poly(self.roster, self.ctx)
        if not c:
            return out
        inv = self.roster.invertible
        t = out.terms
        for m, v in self.terms.items():
            nm = tuple(a + b for a, b in zip(m, exps))
            for i, e in enumerate(nm):
                if e < 0 and i not in inv:
                    raise RosterError("negative exponent on non-invertible %s"
                                      % self.roster.names[i])
            t[nm] = v * c
        return out

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scaled(other)
        self._check_same(other)
        if self.degree() + other.degree() > MAX_DEGREE:
            raise OverflowError("degree beyond the desk-scale limit 10^6")
        out = Poly(self.roster, self.ctx)
        t = out.terms
        inv = self.roster.invertible
        names = self.roster.names
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                nm = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                s = t.get(nm)
                if s is None:
                    if c:
                        t[nm] = c
                else:
                    s = s + c
                    if s:
                        t[nm] = s
                    else:
                        del t[nm]
        for nm in t:
            for i, e in enumerate(nm):
                if e < 0 and i not in inv:
                    raise RosterError("negative exponent on non-invertible %s"
                                      % names[i])
        return out

    def __rmul__(self, other):
        return self.scaled(other)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = self.ctx.const(1, self.roster)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return not self.terms
            other = self.ctx.const(other, self.roster)
        return self.roster == other.roster and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    # -- structure ---------------------------------------------------------------

    def d_components(self):
        """Map total degree -> homogeneous part."""
        out = {}
        for m, c in self.terms.items():
            d = sum(m)
            p = out.get(d)
            if p is None:
                p = Poly(self.roster, self.ctx)
                out[d] = p
            p.terms[m] = c
        return out

    def eps_leading(self):
        """Top weight-homogeneous component (the associated-graded symbol)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading part")
        top = self.eps_degree()
        out = Poly(self.roster, self.ctx)
        for m, c in self.terms.items():
            if self.mono_eps(m) == top:
                out.terms[m] = c
        return out

    def subs(self, images):
        """Substitute images[name] (a Poly) for each named variable; variables
        not listed map to themselves in the target roster."""
        target = None
        for p in images.values():
            target = p.roster
            break
        if target is None:
            raise ValueError("empty substitution")
        ctx = self.ctx
        out = Poly(target, ctx)
        pow_cache = {}

        def var_power(name, e):
            key = (name, e)
            v = pow_cache.get(key)
            if v is not None:
                return v
            if name in images:
                base = images[name]
            else:
                base = ctx.var(name, target)
            if e >= 0:
                v = base ** e
            else:
                if len(base.terms) == 1:
                    ((m, c),) = base.terms.items()
                    inv_m = tuple(-x for x in m)
                    v = ctx.monomial(target, inv_m, 1 / c) ** (-e)
                else:
                    raise ValueError("cannot invert a non-monomial image")
            pow_cache[key] = v
            return v

        for m, c in self.terms.items():
            part = ctx.const(c, target)
            for i, e in enumerate(m):
                if e:
                    part = part * var_power(self.roster.names[i], e)
            out = out + part
        return out

    def evaluate(self, point):
        """Evaluate at a full scalar vector (one value per roster variable)."""
        total = self.ctx.zero
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v = v * point[i] ** e
            total = total + v
        return total

    def monomial_content(self):
        """Componentwise min of exponents: the largest monomial dividing
        every term (Laurent variables may contribute negative entries)."""
        if not self.terms:
            return (0,) * len(self.roster)
        mins = None
        for m in self.terms:
            mins = m if mins is None else tuple(min(a, b) for a, b in zip(mins, m))
        return mins

    # -- canonical form -------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0]),
                      reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        from .scalars import scalar_str
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                n if e == 1 else "%s^%d" % (n, e)
                for n, e in zip(self.roster.names, m) if e != 0)
            neg = _is_negative(c)
            if neg:
                c = -c
            if not mono:
                body = _const_str(c)
            elif c == 1:
                body = mono
            else:
                body = "%s*%s" % (coeff_str(c), mono)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(" - " + body if neg else " + " + body)
        return "".join(parts)

    __repr__ = __str__


def _is_negative(c):
    if isinstance(c, RatFunc):
        return c.q < 0
    return c < 0


def _const_str(c):
    from .scalars import scalar_str
    text = scalar_str(c)
    if isinstance(c, RatFunc):
        nterms = sum(1 for v in c.num if v)
        if c.den != (1,) or nterms > 1:
            return "(%s)" % text
    return text


# ---------------------------------------------------------------------------
# gradings and derivations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradingValue:
    d: int
    eps: int
    e: object  # scalar d*a + eps


def gradings(ctx, m, roster=None):
    """Grading triple of a monomial exponent tuple (or 1-term Poly)."""
    if isinstance(m, Poly):
        if len(m.terms) != 1:
            raise ValueError("gradings of a non-monomial")
        roster = m.roster
        (m,) = m.terms
    roster = roster if roster is not None else ctx.x
    d = sum(m)
    eps = sum(e * w for e, w in zip(m, roster.weights))
    return GradingValue(d, eps, ctx.e_value(d, eps))


def delta(ctx, f):
    """Downward derivation: Delta(X_i) = X_{i-1}, Delta(X_0) = 0, extended
    by Leibniz; zero on the Y variables."""
    out = Poly(f.roster, f.ctx)
    dt = f.roster.delta_to
    t = out.terms
    for m, c in f.terms.items():
        for i, e in enumerate(m):
            if e and dt[i] is not None:
                j = dt[i]
                nm = list(m)
                nm[i] -= 1
                nm[j] += 1
                nm = tuple(nm)
                v = c * e
                s = t.get(nm)
                if s is None:
                    t[nm] = v
                else:
                    s = s + v
                    if s:
                        t[nm] = s
                    else:
                        del t[nm]
    return out


def gamma(ctx, f):
    """Weighted Euler operator Gamma_a: scales each monomial by its
    eigenvalue d*a + eps."""
    out = Poly(f.roster, f.ctx)
    w = f.roster.weights
    for m, c in f.terms.items():
        d = sum(m)
        eps = sum(e * wi for e, wi in zip(m, w))
        v = c * ctx.e_value(d, eps)
        if v:
            out.terms[m] = v
    return out


def binom_gamma(ctx, k, f):
    """binom(Gamma_a, k) applied monomial-wise."""
    out = Poly(f.roster, f.ctx)
    w = f.roster.weights
    for m, c in f.terms.items():
        d = sum(m)
        eps = sum(e * wi for e, wi in zip(m, w))
        v = c * ctx.binom_e(d, eps, k)
        if v:
            out.terms[m] = v
    return out


def delta_pows(ctx, f, limit=None):
    """[f, Delta f, Delta^2 f, ...] until zero (or up to limit entries)."""
    out = [f]
    cur = f
    while cur.terms and (limit is None or len(out) < limit):
        cur = delta(ctx, cur)
        if cur.terms:
            out.append(cur)
    return out


def monomials_of_degree(roster, d, ctx=None):
    """All exponent tuples of total degree d (nonnegative exponents)."""
    k = len(roster)

    def rec(i, rem):
        if i == k - 1:
            yield (rem,)
            return
        for e in range(rem + 1):
            for rest in rec(i + 1, rem - e):
                yield (e,) + rest
    yield from rec(0, d)
