"""Command-line surface: an expression parser for exact polynomial input,
subcommands for products, brackets, relations, centres, spectra, points,
graded images, normal forms and the Nakayama data, plus batch verification
suites.  All output is exact; --json emits a stable schema and the exit
status is zero iff every requested check passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .deformation import bracket, relations, star
from .localization import to_ore_normal_form, zeta, zeta_generator_table
from .morphisms import cy_param, nakayama_c
from .points import curve_point, rel_matrix, verify_point_module
from .polyring import AlgebraCtx, Poly
from .scalars import RAT, rat, scalar_str
from .spectrum import (catalogue_dot, centre_relations, graded_prime_inventory,
                       pspec_n2)

__all__ = ["ParseError", "parse_poly", "main"]


class ParseError(ValueError):
    """Syntax error with a position annotation."""

    def __init__(self, pos, message):
        super().__init__("position %d: %s" % (pos, message))
        self.pos = pos


class _Lexer:
    def __init__(self, src):
        self.src = src
        self.pos = 0
        self.tokens = []
        self._scan()
        self.idx = 0

    def _scan(self):
        src, i = self.src, 0
        while i < len(src):
            ch = src[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(src) and src[j].isdigit():
                    j += 1
                if j < len(src) and src[j] == "/":
                    k = j + 1
                    if k < len(src) and src[k].isdigit():
                        while k < len(src) and src[k].isdigit():
                            k += 1
                        self.tokens.append(("num", src[i:k], i))
                        i = k
                        continue
                self.tokens.append(("num", src[i:j], i))
                i = j
                continue
            if ch in "XY" and i + 1 < len(src) and src[i + 1].isdigit():
                j = i + 1
                while j < len(src) and src[j].isdigit():
                    j += 1
                self.tokens.append(("var", src[i:j], i))
                i = j
                continue
            if ch == "a":
                self.tokens.append(("param", "a", i))
                i += 1
                continue
            if ch in "+-*^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(i, "unexpected character %r" % ch)
        self.tokens.append(("end", "", len(src)))

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(tok[2], "expected %s, found %r" % (kind, tok[1]))
        return tok


def parse_poly(ctx, src, roster=None):
    """Parse `expr := term (('+'|'-') term)*` with terms built from rational
    literals, the parameter a, roster variables, parenthesised
    subexpressions, and integer powers.  Negative exponents are admitted
    only on invertible variables; unknown variables are roster errors."""
    roster = roster if roster is not None else ctx.x
    lx = _Lexer(src)

    def parse_expr():
        neg = False
        if lx.peek()[0] == "-":
            lx.next()
            neg = True
        val = parse_term()
        if neg:
            val = -val
        while lx.peek()[0] in ("+", "-"):
            op = lx.next()[0]
            rhs = parse_term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def parse_term():
        val = parse_factor()
        while lx.peek()[0] == "*":
            lx.next()
            val = val * parse_factor()
        return val

    def parse_factor():
        base = parse_atom()
        if lx.peek()[0] == "^":
            lx.next()
            sign = 1
            if lx.peek()[0] == "-":
                lx.next()
                sign = -1
            tok = lx.expect("num")
            if "/" in tok[1]:
                raise ParseError(tok[2], "exponent must be an integer")
            e = sign * int(tok[1])
            if e < 0:
                if len(base.terms) != 1:
                    raise ParseError(tok[2],
                                     "negative power of a non-monomial")
                ((m, c),) = base.terms.items()
                for i, ei in enumerate(m):
                    if ei and i not in roster.invertible:
                        raise ParseError(
                            tok[2], "negative exponent on non-invertible %s"
                            % roster.names[i])
                inv = ctx.monomial(roster, tuple(-x for x in m), 1 / c)
                return inv ** (-e)
            return base ** e
        return base

    def parse_atom():
        tok = lx.next()
        kind, text, pos = tok
        if kind == "num":
            return ctx.const(rat(text), roster)
        if kind == "param":
            return ctx.const(ctx.a, roster)
        if kind == "var":
            if text not in roster.names:
                raise ParseError(pos, "variable %s not in roster %s"
                                 % (text, "/".join(roster.names)))
            return ctx.var(text, roster)
        if kind == "(":
            val = parse_expr()
            lx.expect(")")
            return val
        raise ParseError(pos, "expected a value, found %r" % text)

    val = parse_expr()
    tok = lx.peek()
    if tok[0] != "end":
        raise ParseError(tok[2], "trailing input %r" % tok[1])
    return val


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def _ctx_from_args(args, default_n=2):
    n = args.n if args.n is not None else default_n
    a = "symbolic" if args.a == "symbolic" else rat(args.a)
    return AlgebraCtx(n, a)


def _a_str(ctx):
    return "symbolic" if ctx.symbolic else str(ctx.a)


def _report(args, ctx, command, result, checks):
    """Emit text or JSON; return the exit status."""
    ok = all(c["pass"] for c in checks)
    if args.json:
        payload = {
            "ctx": {"n": ctx.n if ctx else None, "a": _a_str(ctx) if ctx else None},
            "command": command,
            "result": result,
            "checks": checks,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for key, val in result.items():
            if isinstance(val, list):
                print("%s:" % key)
                for item in val:
                    print("  %s" % item)
            else:
                print("%s: %s" % (key, val))
        for c in checks:
            print("[%s] %s%s" % ("pass" if c["pass"] else "FAIL", c["name"],
                                 (": " + c["detail"]) if c["detail"] else ""))
    return 0 if ok else 1


def _check(name, passed, detail=""):
    return {"name": name, "pass": bool(passed), "detail": detail}


def cmd_mul(args):
    ctx = _ctx_from_args(args)
    f = parse_poly(ctx, args.operands[0], ctx.xl if args.laurent else ctx.x)
    g = parse_poly(ctx, args.operands[1], ctx.xl if args.laurent else ctx.x)
    value = star(ctx, f, g)
    rt = parse_poly(ctx, str(value), ctx.xl if args.laurent else ctx.x) == value
    return _report(args, ctx, "mul", {"value": str(value)},
                   [_check("print-parse round trip", rt)])


def cmd_bracket(args):
    ctx = _ctx_from_args(args)
    f = parse_poly(ctx, args.operands[0], ctx.xl if args.laurent else ctx.x)
    g = parse_poly(ctx, args.operands[1], ctx.xl if args.laurent else ctx.x)
    value = bracket(ctx, f, g)
    rt = parse_poly(ctx, str(value), ctx.xl if args.laurent else ctx.x) == value
    return _report(args, ctx, "bracket", {"value": str(value)},
                   [_check("print-parse round trip", rt)])


def cmd_relations(args):
    ctx = _ctx_from_args(args)
    rels = relations(ctx)
    rows = []
    checks = []
    for r in rels:
        lhs = r.lhs_value(ctx)
        rows.append({"i": r.i, "j": r.j, "commutator": str(lhs)})
        checks.append(_check("relation (%d,%d) vanishes" % (r.i, r.j),
                             r.defect(ctx).is_zero()))
    return _report(args, ctx, "relations",
                   {"count": len(rels), "relations": rows}, checks)


def cmd_verify(args):
    ctx = None
    suites = verify_mod.SUITES
    name = args.suite
    if name not in suites:
        print("unknown suite %r; available: %s"
              % (name, ", ".join(sorted(suites))), file=sys.stderr)
        return 2
    results = suites[name](n=args.n, a=args.a, degree=args.degree,
                           seed=args.seed)
    checks = [_check(c.name, c.passed, c.detail) for c in results]
    dummy = AlgebraCtx(args.n or 2, "symbolic" if args.a == "symbolic"
                       else rat(args.a))
    return _report(args, dummy, "verify %s" % name, {}, checks)


def cmd_centre(args):
    if args.a == "symbolic":
        print("centre needs a rational a", file=sys.stderr)
        return 2
    n = args.n if args.n is not None else 3
    a = rat(args.a)
    ctx = AlgebraCtx(n, a)
    data, rels = centre_relations(n, a, degree_bound=args.degree)
    sform = [str(data.member_poly(ctx, e)) for e in data.S]
    rel_strs = ["%s = %s" % (_side_str(l), _side_str(r)) for l, r in rels]
    result = {
        "p": data.p, "q": data.q,
        "u": {str(i): data.u[i] for i in data.u},
        "v": {str(i): data.v[i] for i in data.v},
        "alpha": data.alpha,
        "generators": {"Y%d'" % i: str(data.y_prime_poly(ctx, i))
                       for i in data.y_primes},
        "S": sform,
        "S_names": data.S_names,
        "relations": rel_strs,
    }
    checks = [
        _check("members have eigenvalue zero and vanish under the downward "
               "derivation", verify_mod.centre_members_ok(data)),
    ]
    if n == 3:
        checks.append(_check("|S| = alpha", len(data.S) == data.alpha,
                             "%d" % len(data.S)))
    return _report(args, ctx, "centre", result, checks)


def _side_str(side):
    return "*".join(k if e == 1 else "%s^%d" % (k, e)
                    for k, e in sorted(side.items()))


def cmd_spectrum(args):
    if args.a == "symbolic":
        print("spectrum needs a rational a", file=sys.stderr)
        return 2
    a = rat(args.a)
    cat = pspec_n2(a, D=args.degree)
    if args.dot:
        print(catalogue_dot(cat))
        return 0
    strata = [{
        "name": s.name,
        "generators": s.gen_strings(),
        "primitive": s.primitive,
        "poisson_maximal": s.poisson_maximal,
    } for s in cat.strata]
    checks = [_check("all strata Poisson closed and inclusions verified", True)]
    return _report(args, cat.ctx, "spectrum",
                   {"strata": strata, "edges": [list(e) for e in cat.edges]},
                   checks)


def cmd_points(args):
    if args.a == "symbolic":
        print("points need a rational a", file=sys.stderr)
        return 2
    ctx = _ctx_from_args(args, default_n=3)
    samples = [rat(s) for s in args.samples.split(",")] if args.samples \
        else [0, 1, -1, 2, -2, rat(1, 2), rat(7, 3)]
    mat = rel_matrix(ctx, "R")
    checks = []
    ks = [args.k] if args.k else list(range(1, ctx.n + 1))
    for k in ks:
        for u0 in samples:
            p = curve_point(ctx, k, u0)
            ok = verify_point_module(ctx, p, depth=args.depth, matrix=mat)
            checks.append(_check("curve %d, u0 = %s, depth %d"
                                 % (k, u0, args.depth), ok))
        p = curve_point(ctx, k, None)
        checks.append(_check("curve %d point at infinity" % k,
                             verify_point_module(ctx, p, args.depth, mat)))
    return _report(args, ctx, "points",
                   {"curves": ks, "samples": [str(s) for s in samples]},
                   checks)


def cmd_zeta(args):
    ctx = _ctx_from_args(args, default_n=2)
    if args.operands:
        f = parse_poly(ctx, args.operands[0], ctx.xl)
        im = zeta(ctx, f)
        return _report(args, ctx, "zeta", {"image": str(im)}, [])
    import math
    table = zeta_generator_table(ctx)
    checks = []
    rows = []
    for k, im in enumerate(table):
        rows.append(str(im))
        checks.append(_check(
            "f_%d has degree %d with leading coefficient 1/%d!" % (k, k, k),
            im.degree() == k
            and im.leading() == ctx.scalar(rat(1, math.factorial(k)))))
    return _report(args, ctx, "zeta", {"table": rows}, checks)


def cmd_normal_form(args):
    ctx = _ctx_from_args(args, default_n=2)
    f = parse_poly(ctx, args.operands[0], ctx.xl)
    nf = to_ore_normal_form(ctx, f)
    from .localization import from_ore
    checks = [_check("round trip reproduces the input", from_ore(ctx, nf) == f)]
    return _report(args, ctx, "normal-form",
                   {"coefficients": [str(p) for p in nf.coeffs]}, checks)


def cmd_nakayama(args):
    n = args.n if args.n is not None else 3
    if args.a == "symbolic":
        c = nakayama_c(n)
        ctx = AlgebraCtx(n, "symbolic")
    else:
        c = nakayama_c(n, rat(args.a))
        ctx = AlgebraCtx(n, rat(args.a))
    cy = cy_param(n)
    result = {"c": scalar_str(c), "cy_a": str(cy)}
    checks = [_check("nakayama parameter vanishes at the Calabi-Yau value",
                     nakayama_c(n, cy) == 0)]
    return _report(args, ctx, "nakayama", result, checks)


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def _build_parser():
    ap = argparse.ArgumentParser(
        prog="starpoly",
        description="Exact computations in the deformed polynomial algebras "
                    "defined by the downward derivation and a weighted Euler "
                    "operator.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, operands=0):
        p.add_argument("--n", type=int, default=None, help="number of "
                       "generators minus one")
        p.add_argument("--a", default="symbolic",
                       help="rational parameter value, or 'symbolic'")
        p.add_argument("--degree", type=int, default=6,
                       help="degree bound for sweeps and truncations")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized sweeps")
        p.add_argument("--json", action="store_true")
        p.add_argument("--laurent", action="store_true",
                       help="allow negative powers of X0 in inputs")
        if operands:
            p.add_argument("operands", nargs=operands)

    common(sub.add_parser("mul", help="star product of two polynomials"), 2)
    common(sub.add_parser("bracket", help="Poisson bracket"), 2)
    common(sub.add_parser("relations", help="the quadratic relation family"))
    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite")
    common(pv)
    common(sub.add_parser("centre", help="Poisson centre data for rational a"))
    ps = sub.add_parser("spectrum", help="the n = 2 spectrum catalogue")
    ps.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    common(ps)
    pp = sub.add_parser("points", help="verify curve sample point modules")
    pp.add_argument("--samples", default=None,
                    help="comma-separated rational curve parameters")
    pp.add_argument("--depth", type=int, default=4)
    pp.add_argument("--k", type=int, default=None, help="restrict to one curve")
    common(pp)
    pz = sub.add_parser("zeta", help="graded image (one operand) or the "
                        "generator table")
    common(pz)
    pz.add_argument("operands", nargs="*")
    common(sub.add_parser("normal-form", help="left-coefficient Ore normal "
                          "form over the localization"), 1)
    common(sub.add_parser("nakayama", help="Nakayama parameter and the "
                          "Calabi-Yau value"))
    return ap


_HANDLERS = {
    "mul": cmd_mul,
    "bracket": cmd_bracket,
    "relations": cmd_relations,
    "verify": cmd_verify,
    "centre": cmd_centre,
    "spectrum": cmd_spectrum,
    "points": cmd_points,
    "zeta": cmd_zeta,
    "normal-form": cmd_normal_form,
    "nakayama": cmd_nakayama,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    if getattr(args, "degree", None) is not None and args.command == "spectrum":
        if args.degree == 6:
            args.degree = 8  # catalogue closures are specified at degree 8
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
