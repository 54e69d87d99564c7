"""Poisson centre of the localized algebra for rational a, the n = 2
spectrum catalogue, graded-prime inventories (with the n = 3 sextic
pencil), and fraction-field invariants.

Conventions: a = p/q with gcd(p, q) = 1 and p < 0 (so q < 0 when a > 0).
Then d_i = gcd(p, i) > 0, u_i = (p + i q)/d_i, v_i = -p/d_i > 0, and
Y_i' = X0^{u_i} Y_i^{v_i} has Gamma_a eigenvalue zero.  Every produced
monomial is re-verified against the eigenvalue-zero equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .deformation import ideal_com_span, mono_key, poisson_closed
from .linalg import SparseReducer
from .localization import y_element
from .polyring import AlgebraCtx, Poly, delta, gamma
from .scalars import RAT, rat

__all__ = [
    "CentreData", "centre_params", "centre_basis_S", "centre_relations",
    "centre_verify_members", "centre_free_module_check",
    "Stratum", "SpectrumCatalogue", "pspec_n2", "homeo_predicate",
    "graded_prime_inventory", "frac_invariants", "sextic_pencil",
    "x0_cleared_y", "catalogue_dot",
]


def _normalize_pq(a):
    """Write a = p/q with gcd = 1 and p < 0."""
    a = rat(a)
    if a == 0:
        raise ValueError("the centre parameters require a nonzero rational a")
    p = int(a.numerator)
    q = int(a.denominator)
    if p > 0:
        p, q = -p, -q
    return p, q


@dataclass
class CentreData:
    """Parameters and data of the Poisson centre of the localized algebra."""

    n: int
    a: object
    p: int
    q: int
    d: dict
    u: dict
    v: dict
    alpha: int | None
    y_primes: dict = field(default_factory=dict)  # i -> exponent tuple over bl
    S: list = field(default_factory=list)         # exponent tuples over bl
    S_names: list = field(default_factory=list)
    S_minimal: list = field(default_factory=list)  # (name, exps) generators
    relations: list = field(default_factory=list)

    def y_prime_poly(self, ctx, i):
        return ctx.monomial(ctx.bl, self.y_primes[i])

    def member_poly(self, ctx, exps):
        return ctx.monomial(ctx.bl, exps)


def _bl_exps(ctx, x0=0, **ys):
    e = [0] * len(ctx.bl)
    e[0] = x0
    for name, v in ys.items():
        e[ctx.bl.index(name)] = v
    return tuple(e)


def _e_weight_zero(p, q, s, s_rest):
    """Exact test  p*s + sum (p + i q) s_i = 0, i.e. eigenvalue zero."""
    tot = p * s
    for i, si in s_rest.items():
        tot += (p + i * q) * si
    return tot == 0


def centre_params(n, a):
    """The exact parameter set (p, q, d_i, u_i, v_i, and alpha for n = 3)."""
    if n < 2:
        raise ValueError("centre parameters need n >= 2")
    p, q = _normalize_pq(a)
    d, u, v = {}, {}, {}
    for i in range(2, n + 1):
        d[i] = math.gcd(-p, i)
        u[i] = (p + i * q) // d[i]
        v[i] = -p // d[i]
        assert math.gcd(u[i], v[i]) == 1
    alpha = None
    if n == 3:
        alpha = -p // (d[2] * d[3])
    data = CentreData(n, rat(a), p, q, d, u, v, alpha)
    ctx = AlgebraCtx(n, rat(a))
    for i in range(2, n + 1):
        exps = _bl_exps(ctx, x0=u[i], **{"Y%d" % i: v[i]})
        assert _e_weight_zero(p, q, u[i], {i: v[i]})
        data.y_primes[i] = exps
    return data


def centre_basis_S(n, a):
    """The free module basis S: monomials X0^s Y2^{s2}..Yn^{sn} with
    0 <= s_i < v_i and eigenvalue zero; for n = 3 its size equals alpha."""
    data = centre_params(n, a)
    ctx = AlgebraCtx(n, rat(a))
    p, q = data.p, data.q
    members = []
    ranges = [range(data.v[i]) for i in range(2, n + 1)]

    def rec(idx, chosen, weight):
        if idx == len(ranges):
            if weight % p == 0:
                s = -weight // p
                s_rest = {i + 2: c for i, c in enumerate(chosen)}
                assert _e_weight_zero(p, q, s, s_rest)
                members.append((tuple(chosen), s))
            return
        i = idx + 2
        for c in ranges[idx]:
            rec(idx + 1, chosen + [c], weight + data.u[i] * data.d[i] * c)

    rec(0, [], 0)
    members.sort()
    for chosen, s in members:
        data.S.append(_bl_exps(ctx, x0=s,
                               **{"Y%d" % (i + 2): c for i, c in enumerate(chosen)}))
    _name_members(data)
    if n == 3:
        assert len(data.S) == data.alpha, "basis size disagrees with alpha"
    return data


def _y_degree(exps):
    return sum(exps[1:])


def _express(vec, gens):
    """Write vec as a nonnegative combination of the generator vectors, or
    return None.  Recursion is on the total Y degree, which every
    generator lowers."""
    def rec(rem):
        if not any(rem):
            return {}
        for name, g in gens:
            if all(r >= x for r, x in zip(rem[1:], g[1:])):
                sub = rec(tuple(r - x for r, x in zip(rem, g)))
                if sub is not None:
                    sub = dict(sub)
                    sub[name] = sub.get(name, 0) + 1
                    return sub
        return None
    if any(v < 0 for v in vec[1:]):
        return None
    return rec(tuple(vec))


def _name_members(data):
    """Name the basis members: minimal monoid generators get fresh letters
    C, D, ...; the rest are named by their decomposition (e.g. C^2)."""
    minimal = []
    names = []
    letter = ord("C")
    for exps in data.S:
        if not any(exps):
            names.append("1")
            continue
        combo = _express(exps, minimal)
        if combo is None:
            name = chr(letter)
            letter += 1
            minimal.append((name, exps))
            names.append(name)
        else:
            names.append("*".join(
                n if e == 1 else "%s^%d" % (n, e)
                for n, e in sorted(combo.items())))
    data.S_names = names
    data.S_minimal = minimal


def centre_verify_members(data, check_delta=True):
    """Re-verify every named centre monomial: eigenvalue zero (always) and,
    via the Laurent expansion, Delta image zero."""
    ctx = AlgebraCtx(data.n, data.a)
    monos = list(data.y_primes.values()) + list(data.S)
    for exps in monos:
        d = sum(exps)
        eps = sum(e * w for e, w in zip(exps, ctx.bl.weights))
        if ctx.a * d + eps != 0:
            return False
        if check_delta:
            p = _expand_bl(ctx, exps)
            if delta(ctx, p) or gamma(ctx, p):
                return False
    return True


def _expand_bl(ctx, exps):
    """Expand a B-Laurent monomial with nonnegative Y exponents into the
    Laurent X roster."""
    out = ctx.monomial(ctx.xl, (exps[0],) + (0,) * ctx.n)
    for pos in range(1, len(exps)):
        if exps[pos] < 0:
            raise ValueError("cannot expand a negative Y power")
        if exps[pos]:
            out = out * y_element(ctx, pos + 1) ** exps[pos]
    return out


# ---------------------------------------------------------------------------
# binomial relations of the centre
# ---------------------------------------------------------------------------

def centre_relations(n, a, degree_bound=6):
    """Minimal binomial identities among the named centre generators
    {A = Y2', B = Y3'} union S, found by enumerating coincidences in the
    exponent lattice up to the degree bound and discarding any candidate
    already reachable by rewriting with the relations accepted so far.

    Returns (data, relations); each relation is a pair of exponent dicts
    name -> power with disjoint supports, verified as an exact equality of
    Laurent monomials."""
    if n not in (2, 3):
        raise ValueError("centre relations are implemented for n in {2, 3}")
    data = centre_basis_S(n, a)
    gens = []
    if n >= 2:
        gens.append(("A", data.y_primes[2]))
    if n >= 3:
        gens.append(("B", data.y_primes[3]))
    gens.extend(data.S_minimal)
    names = [g[0] for g in gens]
    vecs = [g[1] for g in gens]
    width = len(vecs[0]) if vecs else 0

    # enumerate all monomials in the generators of degree <= bound
    fibers = {}

    def enum(idx, deg_left, acc, vec):
        if idx == len(gens):
            fibers.setdefault(vec, []).append(tuple(acc))
            return
        enum(idx + 1, deg_left, acc + [0], vec)
        for e in range(1, deg_left + 1):
            nv = tuple(x + e * y for x, y in zip(vec, vecs[idx]))
            enum(idx + 1, deg_left - e, acc + [e], nv)

    enum(0, degree_bound, [], (0,) * width)

    candidates = []
    for vec, combos in fibers.items():
        if len(combos) < 2:
            continue
        for i in range(len(combos)):
            for j in range(i + 1, len(combos)):
                lhs, rhs = combos[i], combos[j]
                if any(x and y for x, y in zip(lhs, rhs)):
                    continue  # a shared generator on both sides
                candidates.append((max(sum(lhs), sum(rhs)),
                                   tuple(sorted((lhs, rhs), reverse=True)),
                                   vec))
    candidates.sort()

    accepted = []

    def connected(src, dst):
        """Can src be rewritten into dst with the accepted relations,
        staying in the nonnegative orthant?"""
        seen = {src}
        queue = [src]
        while queue:
            cur = queue.pop()
            if cur == dst:
                return True
            for l, r in accepted:
                for frm, to in ((l, r), (r, l)):
                    if all(c >= f for c, f in zip(cur, frm)):
                        nxt = tuple(c - f + t for c, f, t in zip(cur, frm, to))
                        if nxt not in seen:
                            seen.add(nxt)
                            queue.append(nxt)
        return False

    for _deg, (lhs, rhs), vec in candidates:
        if connected(lhs, rhs):
            continue
        check = tuple(sum(e * v for e, v in zip(lhs, col)) -
                      sum(e * v for e, v in zip(rhs, col))
                      for col in zip(*vecs))
        assert not any(check), "lattice bookkeeping broke"
        accepted.append((lhs, rhs))

    def as_dict(expvec):
        return {names[k]: e for k, e in enumerate(expvec) if e}

    def side_key(expvec):
        return (max(expvec), "".join(sorted(as_dict(expvec))))

    rels = []
    for lhs, rhs in accepted:
        if side_key(rhs) > side_key(lhs):
            lhs, rhs = rhs, lhs
        rels.append((as_dict(lhs), as_dict(rhs)))
    data.relations = rels
    return data, rels


def centre_free_module_check(data, e_bound=2):
    """The products s * (Y2')^{e2} (Y3')^{e3} over the basis S are pairwise
    distinct monomials (hence linearly independent) up to the bound."""
    seen = set()
    yps = list(data.y_primes.values())
    for s in data.S:
        def rec(idx, vec):
            if idx == len(yps):
                if vec in seen:
                    return False
                seen.add(vec)
                return True
            for e in range(e_bound + 1):
                nv = tuple(x + e * y for x, y in zip(vec, yps[idx]))
                if not rec(idx + 1, nv):
                    return False
            return True
        if not rec(0, s):
            return False
    return True


# ---------------------------------------------------------------------------
# the n = 2 spectrum catalogue
# ---------------------------------------------------------------------------

def x0_cleared_y(ctx, k):
    """X0^{k-1} Y_k as an honest polynomial in the X roster."""
    p = y_element(ctx, k)
    shift = [0] * (ctx.n + 1)
    shift[0] = k - 1
    p = p.mul_mono(tuple(shift))
    out = Poly(ctx.x, ctx)
    out.terms = dict(p.terms)
    return out


@dataclass
class Stratum:
    name: str
    gens: list            # list of Poly
    primitive: bool
    param: str | None = None       # family parameter name, if any
    param_part: object = None      # Poly multiplying the parameter (last gen)
    poisson_maximal: bool = False

    def instantiate(self, value=None):
        """Concrete generators; families get  base - value * part  in the
        last slot."""
        if self.param is None:
            return list(self.gens)
        if value is None:
            raise ValueError("family stratum needs a parameter value")
        gens = list(self.gens)
        ctx = gens[-1].ctx
        gens[-1] = gens[-1] - self.param_part.scaled(ctx.scalar(value))
        return gens

    def gen_strings(self):
        out = [str(g) for g in self.gens[:-1]] if self.gens else []
        if self.param is None:
            if self.gens:
                out.append(str(self.gens[-1]))
            return out
        part = str(self.param_part)
        tail = self.param if part == "1" else "%s*%s" % (self.param, part)
        out.append("%s - %s" % (self.gens[-1], tail))
        return out

    def label(self):
        return "<%s>" % ", ".join(self.gen_strings()) if self.gens else "<0>"


@dataclass
class SpectrumCatalogue:
    ctx: object
    strata: list
    edges: list  # (i, j) meaning strata[i] included in strata[j], verified

    def stratum(self, name):
        for s in self.strata:
            if s.name == name:
                return s
        raise KeyError(name)


def pspec_n2(a, lam_samples=(1,), mu_samples=(1,), D=8, validate=True):
    """The full Poisson spectrum catalogue for n = 2 at rational a not in
    {0, -1}: zero, <X0>, <X0 Y2>, the P_lambda family (branch decided by
    the sign of u2 - v2), <X0, X1>, and the maximal family."""
    a = rat(a)
    if a == 0 or a == -1:
        raise ValueError("the catalogue excludes a in {0, -1}")
    ctx = AlgebraCtx(2, a)
    data = centre_params(2, a)
    u2, v2 = data.u[2], data.v[2]
    X0, X1, X2 = ctx.gen(0), ctx.gen(1), ctx.gen(2)
    x0y2 = x0_cleared_y(ctx, 2)

    if u2 - v2 >= 0:
        # X0^{u2} Y2^{v2} - lambda, a polynomial since u2 >= v2
        base = X0 ** (u2 - v2) * x0y2 ** v2
        lam_part = ctx.const(1)
        maximal = u2 - v2 > 0
    else:
        base = x0y2 ** v2
        lam_part = X0 ** (v2 - u2)
        maximal = False

    strata = [
        Stratum("zero", [], primitive=False),
        Stratum("x0", [X0], primitive=True),
        Stratum("x0y2", [x0y2], primitive=True),
        Stratum("p_lambda", [base], primitive=True, param="lambda",
                param_part=lam_part, poisson_maximal=maximal),
        Stratum("x0x1", [X0, X1], primitive=False),
        Stratum("maximal", [X0, X1, X2], primitive=True, param="mu",
                param_part=ctx.const(1)),
    ]
    cat = SpectrumCatalogue(ctx, strata, [])
    names = [s.name for s in strata]

    def idx(n):
        return names.index(n)

    edges = [("zero", "x0"), ("zero", "x0y2"), ("zero", "p_lambda"),
             ("x0", "x0x1"), ("x0y2", "x0x1"), ("x0x1", "maximal")]
    if not maximal:
        edges.append(("p_lambda", "x0x1"))
    for src, dst in edges:
        if validate and not _inclusion_holds(ctx, cat.stratum(src),
                                             cat.stratum(dst), lam_samples,
                                             mu_samples, D):
            raise AssertionError("inclusion %s in %s failed" % (src, dst))
        cat.edges.append((idx(src), idx(dst)))
    if validate:
        for s in strata:
            samples = [None] if s.param is None else \
                (lam_samples if s.param == "lambda" else mu_samples)
            for val in samples:
                gens = s.instantiate(val)
                if gens and not poisson_closed(ctx, gens, D):
                    raise AssertionError("stratum %s not Poisson closed" % s.name)
    return cat


def _inclusion_holds(ctx, small, big, lam_samples, mu_samples, D):
    if not small.gens:
        return True

    def instances(s):
        if s.param is None:
            return [s.instantiate()]
        vals = lam_samples if s.param == "lambda" else mu_samples
        return [s.instantiate(v) for v in vals]

    for gs in instances(small):
        for gb in instances(big):
            degree = max(max(g.degree() for g in gs), D)
            span = SparseReducer(mono_key)
            for p in ideal_com_span(ctx, gb, degree):
                span.add(p.terms)
            if not all(span.contains(g.terms) for g in gs):
                return False
    return True


def homeo_predicate(a, b):
    """Exact sign test (a^2+a) / (b^2+b) > 0 for a, b rational, not 0, -1."""
    a, b = rat(a), rat(b)
    for x in (a, b):
        if x == 0 or x == -1:
            raise ValueError("excluded parameter value %s" % x)
    return ((a * a + a) > 0) == ((b * b + b) > 0)


# ---------------------------------------------------------------------------
# graded inventories and the sextic pencil
# ---------------------------------------------------------------------------

def sextic_pencil(ctx, alpha, beta):
    """alpha (X0 Y2)^3 + beta (X0^2 Y3)^2: the degree-6 pencil of
    eigenvector elements killed by Delta (n = 3)."""
    if ctx.n != 3:
        raise ValueError("the sextic pencil lives at n = 3")
    g2 = x0_cleared_y(ctx, 2)
    g3 = x0_cleared_y(ctx, 3)
    return (g2 ** 3).scaled(ctx.scalar(alpha)) + (g3 ** 2).scaled(ctx.scalar(beta))


@dataclass
class VerifiedIdeal:
    name: str
    gens: list
    primitive: bool
    poisson_closed: bool
    normal_data: dict  # generator index -> Gamma eigenvalue for ker-Delta gens


def graded_prime_inventory(n, a, D=8, pencil_samples=((1, 0), (0, 1), (1, 1))):
    """The d-graded Poisson prime inventory for n = 2 (five ideals) or n = 3
    (including the sextic pencil), every ideal verified to be Poisson closed
    at degree D and every ker-Delta generator verified to be a Gamma_a
    eigenvector."""
    a = rat(a)
    if n == 2:
        if a == 0 or a == -1:
            raise ValueError("inventory excludes a in {0, -1} for n = 2")
        ctx = AlgebraCtx(2, a)
        X = [ctx.gen(i) for i in range(3)]
        entries = [
            ("zero", [], False),
            ("x0", [X[0]], True),
            ("x0y2", [x0_cleared_y(ctx, 2)], True),
            ("x0x1", [X[0], X[1]], False),
            ("x0x1x2", [X[0], X[1], X[2]], True),
        ]
    elif n == 3:
        if a in (0, -1, -2):
            raise ValueError("inventory excludes a in {0, -1, -2} for n = 3")
        ctx = AlgebraCtx(3, a)
        X = [ctx.gen(i) for i in range(4)]
        g2 = x0_cleared_y(ctx, 2)
        g3 = x0_cleared_y(ctx, 3)
        entries = [
            ("zero", [], False),
            ("x0", [X[0]], False),
            ("x0y2", [g2], False),
            ("x0^2y3", [g3], False),
            ("x0x1", [X[0], X[1]], True),
            ("x0y2,x0^2y3", [g2, g3], True),
            ("x0x1x2", [X[0], X[1], X[2]], True),
            ("x0x1x2x3", [X[0], X[1], X[2], X[3]], True),
        ]
        for al, be in pencil_samples:
            entries.insert(4, ("sextic[%s:%s]" % (al, be),
                               [sextic_pencil(ctx, al, be)], False))
    else:
        raise ValueError("inventory is implemented for n in {2, 3}")

    out = []
    for name, gens, primitive in entries:
        closed = (not gens) or poisson_closed(ctx, gens, D)
        normal = {}
        for k, g in enumerate(gens):
            if delta(ctx, g).is_zero():
                gg = gamma(ctx, g)
                for m, c in g.terms.items():
                    normal[k] = gg.terms.get(m, ctx.zero) / c
                    break
                if gg != g.scaled(normal[k]):
                    raise AssertionError("generator is not an eigenvector")
        out.append(VerifiedIdeal(name, gens, primitive, closed, normal))
        if not closed:
            raise AssertionError("ideal %s is not Poisson closed" % name)
    return ctx, out


# ---------------------------------------------------------------------------
# fraction-field invariants
# ---------------------------------------------------------------------------

def frac_invariants(n, a=None):
    """Weight-zero Laurent monomials generating the fraction-field centre
    data: Z_0 = X0 Y_{n-1}^{-n} Y_n^{n-1}, Z_i = Y_i Y_{n-1}^{-(n-i)}
    Y_n^{n-i-1} for 2 <= i <= n-2, and for rational a = p/q additionally
    Z = X0^q Y2^p Y3^{-p}.  Each is checked to have eigenvalue zero."""
    if n < 3:
        raise ValueError("fraction-field invariants need n >= 3")
    ctx = AlgebraCtx(n, "symbolic" if a is None else rat(a))
    out = []

    def add(name, exps, ctx_check=ctx):
        mono = ctx_check.monomial(ctx_check.bl, exps)
        d = sum(exps)
        eps = sum(e * w for e, w in zip(exps, ctx_check.bl.weights))
        ok = (ctx_check.a * d + eps == 0)
        out.append((name, exps, mono, ok))

    for i in [0] + list(range(2, n - 1)):
        exps = [0] * len(ctx.bl)
        if i == 0:
            exps[0] = 1
        else:
            exps[ctx.bl.index("Y%d" % i)] = 1
        exps[ctx.bl.index("Y%d" % (n - 1))] -= n - i
        exps[ctx.bl.index("Y%d" % n)] += n - i - 1
        add("Z%d" % i, tuple(exps))

    if a is not None:
        p = int(rat(a).numerator)
        q = int(rat(a).denominator)
        exps = [0] * len(ctx.bl)
        exps[0] = q
        exps[ctx.bl.index("Y2")] = p
        exps[ctx.bl.index("Y3")] = -p
        add("Z", tuple(exps))
    return ctx, out


# ---------------------------------------------------------------------------
# DOT rendering
# ---------------------------------------------------------------------------

def catalogue_dot(cat):
    """Graphviz digraph of the catalogue: nodes are ideals (canonical
    generator strings), edges are the verified inclusions."""
    lines = ["digraph pspec {", "  rankdir=BT;"]
    for k, s in enumerate(cat.strata):
        lines.append('  n%d [label="%s"];' % (k, s.label()))
    for i, j in cat.edges:
        lines.append("  n%d -> n%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines)
