"""Exact coefficient arithmetic: rationals, and rational functions in the
formal parameter `a`.

Two coefficient modes are used throughout the package.  In fixed mode every
scalar is an exact rational (gmpy2.mpq when available, fractions.Fraction
otherwise).  In symbolic mode scalars live in Q(a), represented by RatFunc.

RatFunc keeps a canonical form at all times: value = q * num / den where
num and den are primitive integer coefficient tuples (low degree first)
with positive leading coefficient, gcd(num, den) = 1, and q is a rational
carrying all content and sign.  Dividing den by its leading coefficient
gives the monic mathematical denominator, so structural equality of
(q, num, den) is exact equality in Q(a).
"""

from __future__ import annotations

import math

try:
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover
    from fractions import Fraction as RAT

__all__ = [
    "RAT",
    "RatFunc",
    "A",
    "rat",
    "binom_scalar",
    "falling_product",
    "vandermonde_check",
    "scalar_str",
    "coeff_str",
]


def rat(p, q=1):
    """Exact rational from integers or a 'p/q' string."""
    if isinstance(p, str):
        return RAT(p) if q == 1 else RAT(p) / q
    return RAT(p, q)


# ---------------------------------------------------------------------------
# integer polynomial helpers (dense tuples, lowest degree first, () is zero)
# ---------------------------------------------------------------------------

def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _zadd(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, v in enumerate(g):
        out[i] += v
    return _trim(out)


def _zscale(f, c):
    if c == 0:
        return ()
    return tuple(v * c for v in f)


def _zmul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return tuple(out)


def _content(f):
    c = 0
    for v in f:
        c = math.gcd(c, abs(v))
        if c == 1:
            break
    return c


def _primitive(f):
    """Split f into (content, primitive part with positive leading coeff)."""
    if not f:
        return 0, ()
    c = _content(f)
    if f[-1] < 0:
        c = -c
    if c == 1:
        return 1, f
    return c, tuple(v // c for v in f)


def _prem(f, g):
    """Pseudo-remainder of f by g (deg f >= deg g >= 0, g nonzero)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and _trim(f):
        f = _trim(f)
        if len(f) - 1 < dg:
            break
        lf = f[-1]
        shift = len(f) - 1 - dg
        f = [v * lg for v in f]
        for i, b in enumerate(g):
            f[shift + i] -= lf * b
        f = f[:-1]
    return _trim(f)


def _zgcd(f, g):
    """Gcd of integer polynomials, primitive with positive leading coeff."""
    _, f = _primitive(f)
    _, g = _primitive(g)
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, _primitive(r)[1]
    return f


def _zdiv_exact(f, g):
    """Exact quotient f/g in Q[a], returned as (rational factor, primitive)."""
    q = []
    rem = [RAT(v) for v in f]
    dg = len(g) - 1
    lg = RAT(g[-1])
    while len(rem) - 1 >= dg:
        c = rem[-1] / lg
        q.append(c)
        for i, b in enumerate(g):
            rem[len(rem) - 1 - dg + i] -= c * b
        rem.pop()
    assert all(v == 0 for v in rem), "non-exact polynomial division"
    q.reverse()
    den = 1
    for c in q:
        den = den * c.denominator // math.gcd(den, int(c.denominator))
    ints = _trim([int(c * den) for c in q])
    cont, prim = _primitive(ints)
    return RAT(cont, den), prim


_ONE = (1,)
_MUL_MEMO = {}
_MUL_MEMO_LIMIT = 1 << 18


class RatFunc:
    """Element of Q(a) in canonical form; immutable and hashable."""

    __slots__ = ("q", "num", "den", "_hash")

    def __init__(self, q, num, den, _raw=False):
        # internal constructor: trusts canonical inputs when _raw is set
        if not _raw:
            q, num, den = _canonical(q, num, den)
        self.q = q
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def from_rat(x):
        x = RAT(x)
        if x == 0:
            return _ZERO_RF
        return RatFunc(x, _ONE, _ONE, _raw=True)

    @staticmethod
    def from_int_coeffs(coeffs):
        """Polynomial in a with integer coefficients, lowest degree first."""
        c, prim = _primitive(_trim(coeffs))
        if c == 0:
            return _ZERO_RF
        return RatFunc(RAT(c), prim, _ONE, _raw=True)

    @staticmethod
    def from_coeffs(coeffs):
        """Polynomial in a with rational coefficients, lowest degree first."""
        coeffs = [RAT(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, int(c.denominator))
        ints = _trim([int(c * den) for c in coeffs])
        c, prim = _primitive(ints)
        if c == 0:
            return _ZERO_RF
        return RatFunc(RAT(c, den), prim, _ONE, _raw=True)

    # -- predicates --------------------------------------------------------

    def __bool__(self):
        return self.q != 0

    def is_polynomial(self):
        return self.den == _ONE

    def poly_coeffs(self):
        """Rational coefficients of a polynomial element, low degree first."""
        if self.den != _ONE:
            raise ValueError("not a polynomial in a: %s" % self)
        return [self.q * v for v in self.num]

    def degree(self):
        return len(self.num) - 1 if self.num else -1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.q == 0:
            return self
        if self.q == 0:
            return other
        if self.den == other.den:
            den = self.den
        else:
            den = None
        if den is not None:
            q1, q2 = self.q, other.q
            d1, d2 = q1.denominator, q2.denominator
            m = d1 * d2 // math.gcd(int(d1), int(d2))
            s1 = int(q1 * m)
            s2 = int(q2 * m)
            num = _zadd(_zscale(self.num, s1), _zscale(other.num, s2))
            if not num:
                return _ZERO_RF
            c, prim = _primitive(num)
            return RatFunc(RAT(c, m), prim, den, _raw=True) if den == _ONE \
                else RatFunc(RAT(c, m), prim, den)
        # distinct denominators: go through the generic canonicaliser
        num = _zadd(
            _zscale(_zmul(self.num, other.den), int(self.q.numerator) * int(other.q.denominator)),
            _zscale(_zmul(other.num, self.den), int(other.q.numerator) * int(self.q.denominator)),
        )
        den = _zmul(self.den, other.den)
        scale = RAT(1, int(self.q.denominator) * int(other.q.denominator))
        return RatFunc(scale, num, den)

    __radd__ = __add__

    def __neg__(self):
        if self.q == 0:
            return self
        return RatFunc(-self.q, self.num, self.den, _raw=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.q == 0 or other.q == 0:
            return _ZERO_RF
        q = self.q * other.q
        if self.num == _ONE and self.den == _ONE:
            return RatFunc(q, other.num, other.den, _raw=True)
        if other.num == _ONE and other.den == _ONE:
            return RatFunc(q, self.num, self.den, _raw=True)
        if self.den == _ONE and other.den == _ONE:
            key = (self.num, other.num) if self.num <= other.num else (other.num, self.num)
            num = _MUL_MEMO.get(key)
            if num is None:
                num = _zmul(key[0], key[1])
                c, num = _primitive(num)
                num = (c, num)
                if len(_MUL_MEMO) < _MUL_MEMO_LIMIT:
                    _MUL_MEMO[key] = num
            return RatFunc(q * num[0], num[1], _ONE, _raw=True)
        return RatFunc(q, _zmul(self.num, other.num), _zmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.q == 0:
            raise ZeroDivisionError("division by the zero rational function")
        if self.q == 0:
            return self
        inv = RatFunc(1 / other.q, other.den, other.num)
        return self * inv

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k):
        if k < 0:
            return (RatFunc(RAT(1), _ONE, _ONE, _raw=True) / self) ** (-k)
        out = RatFunc(RAT(1), _ONE, _ONE, _raw=True)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.q == other.q and self.num == other.num and self.den == other.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            if self.num == _ONE and self.den == _ONE:
                # agree with the hash of the underlying rational
                self._hash = hash(self.q)
            else:
                self._hash = hash((self.q, self.num, self.den))
        return self._hash

    # -- printing -------------------------------------------------------------

    def __str__(self):
        return scalar_str(self)

    __repr__ = __str__


def _canonical(q, num, den):
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num or q == 0:
        return RAT(0), (), _ONE
    cn, num = _primitive(num)
    cd, den = _primitive(den)
    q = q * cn / cd
    if den != _ONE and len(num) + len(den) > 2:
        g = _zgcd(num, den)
        if len(g) > 1:
            qn, num = _zdiv_exact(num, g)
            qd, den = _zdiv_exact(den, g)
            q = q * qn / qd
    return q, num, den


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, int):
        return _ZERO_RF if x == 0 else RatFunc(RAT(x), _ONE, _ONE, _raw=True)
    if isinstance(x, type(RAT(1))):
        return RatFunc.from_rat(x)
    return NotImplemented


_ZERO_RF = RatFunc.__new__(RatFunc)
_ZERO_RF.q = RAT(0)
_ZERO_RF.num = ()
_ZERO_RF.den = _ONE
_ZERO_RF._hash = None

#: the generator of Q(a)
A = RatFunc.from_int_coeffs((0, 1))


# ---------------------------------------------------------------------------
# generic scalar operations (work on RAT and RatFunc alike)
# ---------------------------------------------------------------------------

def binom_scalar(z, ell):
    """Generalised binomial coefficient z(z-1)...(z-ell+1)/ell!."""
    if ell < 0:
        raise ValueError("binomial order must be nonnegative")
    out = z - z + 1  # one in the field of z
    for i in range(ell):
        out = out * (z - i)
    return out / math.factorial(ell)


def falling_product(z, step, m):
    """z (z - step) (z - 2 step) ... (z - (m-1) step)."""
    out = z - z + 1
    for i in range(m):
        out = out * (z - i * step)
    return out


def vandermonde_check(x, y, k):
    """True iff sum_u binom(x,u) binom(y,k-u) equals binom(x+y,k) exactly."""
    total = binom_scalar(x, 0) - 1  # zero in the field of x
    for u in range(k + 1):
        total = total + binom_scalar(x, u) * binom_scalar(y, k - u)
    return total == binom_scalar(x + y, k)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _qpoly_str(coeffs):
    """Render a polynomial in a from rational coefficients, high degree first."""
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        if d == 0:
            mono = None
        elif d == 1:
            mono = "a"
        else:
            mono = "a^%d" % d
        if mono is None:
            body = str(c if c > 0 else -c)
        elif c == 1 or c == -1:
            body = mono
        else:
            body = "%s*%s" % (str(c if c > 0 else -c), mono)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    if not parts:
        return "0"
    return "".join(parts)


def scalar_str(s):
    """Canonical text of a scalar: 'p/q' for rationals, poly or
    (num)/(den) form for rational functions."""
    if not isinstance(s, RatFunc):
        return str(s)
    if s.den == _ONE:
        return _qpoly_str([s.q * v for v in s.num])
    num = _qpoly_str([s.q * v for v in s.num])
    den = _qpoly_str([RAT(v) for v in s.den])
    return "(%s)/(%s)" % (num, den)


def coeff_str(s):
    """Text of a scalar for use as a coefficient factor, parenthesised when
    it is a sum or a quotient."""
    text = scalar_str(s)
    if isinstance(s, RatFunc):
        nterms = sum(1 for v in s.num if v)
        if s.den != _ONE or nterms > 1:
            return "(%s)" % text
    return text
