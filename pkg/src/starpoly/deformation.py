"""The star product, the Poisson bracket, the quadratic relation family,
associated-graded extraction, normality and centrality tests, and
bounded-degree two-sided/Poisson ideal witnesses.

The star product is the finite sum  f * g = sum_k Delta^k(f) binom(Gamma_a, k)(g);
it terminates because Delta is locally nilpotent.  The bracket is
{f, g} = Delta(f) Gamma_a(g) - Gamma_a(f) Delta(g).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import SparseReducer, rank_dense, solve
from .polyring import (Poly, RosterError, binom_gamma, delta, delta_pows,
                       gamma, monomials_of_degree)
from .scalars import binom_scalar

__all__ = [
    "star", "star_mono", "bracket", "commutator", "unstar",
    "Relation", "relations", "relation_tensor_rank",
    "assoc_graded_leading", "is_normal", "is_central",
    "IdealWitness", "ideal_basis", "quotient_x0",
    "pbw_value", "expand_pbw", "star_word_value", "mono_key",
]


def mono_key(m):
    """Canonical descending order key: highest (degree, exponents) first."""
    return (-sum(m), tuple(-e for e in m))


# ---------------------------------------------------------------------------
# star product and bracket
# ---------------------------------------------------------------------------

def _delta_pows_mono(ctx, roster, m):
    cache = ctx._delta_pow_cache
    key = (roster, m)
    dks = cache.get(key)
    if dks is None:
        dks = delta_pows(ctx, ctx.monomial(roster, m))
        cache[key] = dks
    return dks


def star_mono(ctx, roster, mf, mg):
    """Star product of two monomials (exponent tuples), cached on ctx."""
    cache = ctx._star_mono_cache
    key = (roster, mf, mg)
    out = cache.get(key)
    if out is not None:
        return out
    dg = sum(mg)
    epsg = sum(e * w for e, w in zip(mg, roster.weights))
    out = Poly(roster, ctx)
    t = out.terms
    for k, dk in enumerate(_delta_pows_mono(ctx, roster, mf)):
        b = ctx.binom_e(dg, epsg, k)
        if not b:
            continue
        for m, c in dk.terms.items():
            nm = tuple(x + y for x, y in zip(m, mg))
            v = c * b
            s = t.get(nm)
            if s is None:
                t[nm] = v
            else:
                s = s + v
                if s:
                    t[nm] = s
                else:
                    del t[nm]
    cache[key] = out
    return out


def star(ctx, f, g):
    """Exact star product; bilinear extension of the cached monomial case."""
    if f.roster != g.roster:
        raise RosterError("star operands live on different rosters")
    roster = f.roster
    out = Poly(roster, ctx)
    t = out.terms
    for mf, cf in f.terms.items():
        for mg, cg in g.terms.items():
            c = cf * cg
            for m, v in star_mono(ctx, roster, mf, mg).terms.items():
                w = v * c
                s = t.get(m)
                if s is None:
                    t[m] = w
                else:
                    s = s + w
                    if s:
                        t[m] = s
                    else:
                        del t[m]
    return out


def star_many(ctx, *polys):
    out = polys[0]
    for p in polys[1:]:
        out = star(ctx, out, p)
    return out


def bracket(ctx, f, g):
    """Poisson bracket Delta(f) Gamma_a(g) - Gamma_a(f) Delta(g)."""
    return delta(ctx, f) * gamma(ctx, g) - gamma(ctx, f) * delta(ctx, g)


def commutator(ctx, f, g):
    """Star commutator f*g - g*f."""
    return star(ctx, f, g) - star(ctx, g, f)


def assoc_graded_leading(ctx, f):
    """Top weight-homogeneous component: the symbol in the associated
    graded algebra."""
    if f.is_zero():
        raise ValueError("zero element has no associated-graded symbol")
    return f.eps_leading()


def unstar(ctx, f, g):
    """Express the commutative product f*g as a combination of star
    products with g fixed on the right.

    f must lie in the degree-<=1 span.  If Delta(f) = 0 the single pair
    (1, f) works for any g; otherwise g must be a Gamma_a eigenvector.
    Returns a list of (scalar, poly) pairs with  sum c * (p star g) = f g.
    """
    if f.degree() > 1:
        raise ValueError("unstar requires f in the degree-1 span")
    df = delta(ctx, f)
    if df.is_zero():
        pairs = [(ctx.one, f)]
    else:
        evals = {(sum(m), g.mono_eps(m)) for m in g.terms}
        es = {ctx.e_value(d, eps) for d, eps in evals}
        if len(es) > 1:
            raise ValueError("unstar with Delta(f) != 0 needs an e-homogeneous g")
        e = es.pop() if es else ctx.zero
        pairs = []
        for ell, dk in enumerate(delta_pows(ctx, f)):
            c = binom_scalar(-e, ell)
            if c:
                pairs.append((c, dk))
    check = Poly(f.roster, ctx)
    for c, p in pairs:
        check = check + star(ctx, p, g).scaled(c)
    assert check == f * g, "unstar decomposition failed to reproduce fg"
    return pairs


# ---------------------------------------------------------------------------
# the quadratic relations
# ---------------------------------------------------------------------------

@dataclass
class Relation:
    """The relation for the pair i < j:  X_i*X_j - X_j*X_i  equals
    sum_k c_right[k] X_{j-k}*X_i - sum_l c_left[l] X_{i-l}*X_j  (orders as
    written, star products).  `tensor` is the full free-quadratic form,
    mapping ordered generator pairs (u, v) to scalars."""

    i: int
    j: int
    rhs_terms: list  # list of (scalar, u, v) meaning c * X_u star X_v
    tensor: dict = field(default_factory=dict)

    def lhs_value(self, ctx):
        Xi, Xj = ctx.gen(self.i), ctx.gen(self.j)
        return commutator(ctx, Xi, Xj)

    def rhs_value(self, ctx):
        out = ctx.zero_poly()
        for c, u, v in self.rhs_terms:
            out = out + star(ctx, ctx.gen(u), ctx.gen(v)).scaled(c)
        return out

    def defect(self, ctx):
        return self.lhs_value(ctx) - self.rhs_value(ctx)


def relations(ctx):
    """All binom(n+1, 2) quadratic relations, each verified to hold
    identically under star (an internal failure aborts)."""
    n = ctx.n
    rels = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            zi = ctx.e_value(1, i)
            zj = ctx.e_value(1, j)
            rhs = []
            tensor = {(i, j): ctx.one, (j, i): -ctx.one}
            for k in range(1, j + 1):
                c = binom_scalar(-zi, k)
                if c:
                    rhs.append((c, j - k, i))
                    tensor[(j - k, i)] = tensor.get((j - k, i), ctx.zero) - c
            for ell in range(1, i + 1):
                c = binom_scalar(-zj, ell)
                if c:
                    rhs.append((-c, i - ell, j))
                    tensor[(i - ell, j)] = tensor.get((i - ell, j), ctx.zero) + c
            tensor = {uv: c for uv, c in tensor.items() if c}
            rel = Relation(i, j, rhs, tensor)
            if rel.defect(ctx):
                raise AssertionError(
                    "relation (%d,%d) does not vanish under star" % (i, j))
            rels.append(rel)
    return rels


def relation_tensor_rank(ctx, rels):
    """Rank of the relation set inside the free quadratic space R1 x R1."""
    n = ctx.n
    cols = [(u, v) for u in range(n + 1) for v in range(n + 1)]
    col_index = {uv: k for k, uv in enumerate(cols)}
    rows = []
    for rel in rels:
        row = [ctx.zero] * len(cols)
        for uv, c in rel.tensor.items():
            row[col_index[uv]] = c
        rows.append(row)
    return rank_dense(rows)


# ---------------------------------------------------------------------------
# normality and centrality
# ---------------------------------------------------------------------------

def _require_pnn_hypothesis(ctx):
    if ctx.n == 1 and not ctx.a:
        raise ValueError(
            "the eigenvector criterion requires n >= 2, or n = 1 with a != 0")


def _eigenvalue_of(ctx, N, img):
    """Scalar u with img = u*N, or None."""
    if img.is_zero():
        return ctx.zero
    for m, c in N.terms.items():
        v = img.terms.get(m)
        if v is None:
            return None
        u = v / c
        return u if img == N.scaled(u) else None
    return None


def is_normal(ctx, N, via="criterion", D=2):
    """Normality test.  Criterion mode uses Delta(N) = 0 and
    Gamma_a(N) = u N (requires the stated hypothesis on (n, a)) and returns
    (flag, u).  Direct mode solves X_i * N = N * L_i with L_i in the
    degree-1 span for every generator and checks the span equality
    N * R_{<=D} = R_{<=D} * N; it returns (flag, {i: L_i})."""
    if N.is_zero():
        raise ValueError("normality of the zero element")
    if via == "criterion":
        _require_pnn_hypothesis(ctx)
        if delta(ctx, N):
            return False, None
        u = _eigenvalue_of(ctx, N, gamma(ctx, N))
        return (u is not None), u
    if via != "direct":
        raise ValueError("via must be 'criterion' or 'direct'")
    n = ctx.n
    right = [star(ctx, N, ctx.gen(j)) for j in range(n + 1)]
    monos = sorted({m for p in right for m in p.terms}, key=mono_key)
    index = {m: k for k, m in enumerate(monos)}
    lam = []
    for i in range(n + 1):
        lhs = star(ctx, ctx.gen(i), N)
        if any(m not in index for m in lhs.terms):
            return False, None
        rows = [[p.terms.get(m, ctx.zero) for p in right] for m in monos]
        rhs = [lhs.terms.get(m, ctx.zero) for m in monos]
        sol = solve(rows, rhs, n + 1, ctx.zero)
        if sol is None:
            return False, None
        lam.append(sol)
    if rank_dense(lam) < n + 1:
        return False, None
    witness = {}
    for i, sol in enumerate(lam):
        L = ctx.zero_poly()
        for j, c in enumerate(sol):
            L = L + ctx.gen(j).scaled(c)
        witness[i] = L
    for d in range(1, D + 1):
        left = SparseReducer(mono_key)
        for m in monomials_of_degree(ctx.x, d):
            left.add(star(ctx, ctx.monomial(ctx.x, m), N).terms)
        rightr = SparseReducer(mono_key)
        for m in monomials_of_degree(ctx.x, d):
            rightr.add(star(ctx, N, ctx.monomial(ctx.x, m)).terms)
        if left.rank() != rightr.rank():
            return False, None
        for row in rightr.basis():
            if not left.contains(row):
                return False, None
    return True, witness


def is_central(ctx, N, mode="star", via="criterion"):
    """Centrality test.  Criterion mode checks Delta(N) = Gamma_a(N) = 0
    under the (n, a) hypothesis; direct mode checks vanishing of all
    generator commutators (star) or generator brackets (poisson)."""
    if via == "criterion":
        _require_pnn_hypothesis(ctx)
        return delta(ctx, N).is_zero() and gamma(ctx, N).is_zero()
    if via != "direct":
        raise ValueError("via must be 'criterion' or 'direct'")
    for i in range(ctx.n + 1):
        g = ctx.gen(i)
        if mode == "star":
            if commutator(ctx, N, g):
                return False
        elif mode == "poisson":
            if bracket(ctx, N, g):
                return False
        else:
            raise ValueError("mode must be 'star' or 'poisson'")
    return True


# ---------------------------------------------------------------------------
# bounded-degree ideal witnesses
# ---------------------------------------------------------------------------

@dataclass
class IdealWitness:
    gens: list
    D: int
    mode: str
    basis: list  # canonical reduced Polys, pivot order descending

    def dimension(self):
        return len(self.basis)

    def contains(self, p):
        red = SparseReducer(mono_key)
        for q in self.basis:
            red.add(q.terms)
        return red.contains(p.terms)


def ideal_basis(ctx, gens, D=6, mode="star"):
    """Exact basis of the degree-<=D span of the two-sided star ideal
    (closure under left/right star multiplication by the generators X_i)
    or of the Poisson ideal (closure under multiplication and bracketing
    with the X_i).  Deterministic: canonical monomial pivot order."""
    if mode not in ("star", "poisson"):
        raise ValueError("mode must be 'star' or 'poisson'")
    gens = list(gens)
    for g in gens:
        if g.degree() > D:
            raise ValueError("truncation degree D too small for a generator")
    red = SparseReducer(mono_key)
    queue = []
    for g in gens:
        if g and red.add(g.terms):
            queue.append(g)
    xs = [ctx.gen(i, gens[0].roster if gens else None) for i in range(ctx.n + 1)] \
        if gens else []
    while queue:
        p = queue.pop()
        if p.degree() + 1 > D:
            continue
        for x in xs:
            if mode == "star":
                products = (star(ctx, x, p), star(ctx, p, x))
            else:
                products = (p * x, bracket(ctx, x, p))
            for q in products:
                if q and red.add(q.terms):
                    queue.append(q)
    basis = []
    for row in red.basis():
        p = Poly(gens[0].roster if gens else ctx.x, ctx)
        p.terms = dict(row)
        basis.append(p)
    return IdealWitness(gens, D, mode, basis)


def poisson_closed(ctx, gens, D=8):
    """True iff the commutative ideal span of gens at degree <= D is already
    closed under bracketing with the generators of the polynomial ring."""
    comm = ideal_com_span(ctx, gens, D)
    red = SparseReducer(mono_key)
    for p in comm:
        red.add(p.terms)
    for p in comm:
        if p.degree() + 1 > D:
            continue
        for i in range(ctx.n + 1):
            q = bracket(ctx, ctx.gen(i), p)
            if q and not red.contains(q.terms):
                return False
    return True


def ideal_com_span(ctx, gens, D):
    """Basis of the degree-<=D span of the commutative ideal of gens."""
    red = SparseReducer(mono_key)
    out = []
    queue = []
    for g in gens:
        if g and red.add(g.terms):
            queue.append(g)
            out.append(g)
    while queue:
        p = queue.pop()
        if p.degree() + 1 > D:
            continue
        for i in range(ctx.n + 1):
            q = p * ctx.gen(i, p.roster)
            if q and red.add(q.terms):
                queue.append(q)
                out.append(q)
    basis = []
    for row in red.basis():
        p = Poly(gens[0].roster if gens else ctx.x, ctx)
        p.terms = dict(row)
        basis.append(p)
    return basis


def quotient_x0(ctx, ctx_quot, f):
    """Image of f under X0 -> 0, X_i -> X_{i-1}: the factor map onto the
    (n-1, a+1) algebra."""
    out = Poly(ctx_quot.x, ctx_quot)
    for m, c in f.terms.items():
        if m[0] == 0:
            out.terms[m[1:]] = c
    return out


# ---------------------------------------------------------------------------
# star words and the PBW-style expansion
# ---------------------------------------------------------------------------

def star_word_value(ctx, word):
    """Value of X_{w0} * X_{w1} * ... as an element of the commutative
    carrier space, cached on suffixes."""
    cache = ctx.__dict__.setdefault("_word_cache", {})
    word = tuple(word)
    v = cache.get(word)
    if v is not None:
        return v
    if not word:
        v = ctx.const(1)
    else:
        v = star(ctx, ctx.gen(word[0]), star_word_value(ctx, word[1:]))
    cache[word] = v
    return v


def pbw_value(ctx, exps):
    """Value of the ordered star monomial X0^{*e0} * ... * Xn^{*en}."""
    word = []
    for i, e in enumerate(exps):
        word.extend([i] * e)
    return star_word_value(ctx, tuple(word))


def expand_pbw(ctx, f):
    """Coordinates of f in the ordered star-monomial basis: a dict mapping
    exponent tuples E to scalars with  f = sum c_E X^{*E}.  Peels the top
    weight term; each ordered star monomial has symbol exactly X^E."""
    rem = f
    out = {}
    guard = 0
    while rem:
        guard += 1
        if guard > 10000:
            raise RuntimeError("PBW expansion failed to terminate")
        m, c = max(rem.terms.items(),
                   key=lambda mc: (rem.mono_eps(mc[0]), mc[0]))
        out[m] = out.get(m, ctx.zero) + c
        rem = rem - pbw_value(ctx, m).scaled(c)
    return {m: c for m, c in out.items() if c}
