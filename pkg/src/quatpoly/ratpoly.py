"""Dense polynomials over Q: gcd, resultants, Sturm counting, factoring.

Coefficients are fractions.Fraction, stored ascending (constant term
first) with no trailing zeros; the zero polynomial has an empty tuple.
Degrees in this package never exceed a few dozen, so everything is kept
dense and the factoring routine uses plain Zassenhaus recombination.
"""

import math
import random
from fractions import Fraction

from .errors import DegenerateInput, NotSquarefree
from .intarith import is_prime

Fr = Fraction


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RatPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(Fr(c) for c in coeffs)

    @classmethod
    def const(cls, c):
        return cls((Fr(c),))

    @classmethod
    def x_power(cls, n, c=1):
        return cls([0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise DegenerateInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fr(0)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((Fr(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, RatPoly) else RatPoly.const(-Fr(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatPoly()
        out = [Fr(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = RatPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        if other.is_zero:
            raise DegenerateInput("division by zero polynomial")
        if self.degree < other.degree:
            return RatPoly(), self
        rem = list(self.coeffs)
        dlc = other.lc
        dd = other.degree
        quot = [Fr(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i]:
                c = rem[i] / dlc
                quot[i - dd] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dd + j] -= c * b
        return RatPoly(quot), RatPoly(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise DegenerateInput("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def derivative(self):
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def shift_up(self, n):
        """Multiply by x^n."""
        if self.is_zero:
            return self
        return RatPoly((Fr(0),) * n + self.coeffs)

    def __call__(self, v):
        out = Fr(0)
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def compose(self, other):
        out = RatPoly()
        for c in reversed(self.coeffs):
            out = out * other + RatPoly.const(c)
        return out

    def denominator_lcm(self):
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d

    def int_coeffs(self):
        """Integer coefficient list of d*self, d = lcm of denominators."""
        d = self.denominator_lcm()
        return [int(c * d) for c in self.coeffs]

    def primitive_int(self):
        """Primitive integer poly with positive lc in the same Q*-class."""
        ic = self.int_coeffs()
        g = 0
        for c in ic:
            g = math.gcd(g, c)
        if g == 0:
            return []
        if ic[-1] < 0:
            g = -g
        return [c // g for c in ic]

    def __repr__(self):
        return "RatPoly(%s)" % (list(self.coeffs),)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if not c:
                continue
            if i == 0:
                term = str(c)
            else:
                xs = "x" if i == 1 else "x^%d" % i
                if c == 1:
                    term = xs
                elif c == -1:
                    term = "-" + xs
                else:
                    term = "%s*%s" % (c, xs)
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def from_int_list(ic):
    return RatPoly([Fr(c) for c in ic])


def rp_gcd(a, b):
    """Monic gcd in Q[x]."""
    if a.is_zero and b.is_zero:
        raise DegenerateInput("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def rp_xgcd(a, b):
    """(g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = a, b
    u0, u1 = RatPoly.const(1), RatPoly()
    v0, v1 = RatPoly(), RatPoly.const(1)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero:
        raise DegenerateInput("xgcd(0, 0) is undefined")
    s = 1 / r0.lc
    return r0 * s, u0 * s, v0 * s


def resultant(f, g):
    """Res(f, g) over Q, computed by the Euclidean scheme."""
    if f.is_zero or g.is_zero:
        return Fr(0)
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    sign = 1
    a, b = f, g
    res = Fr(1)
    while b.degree > 0:
        if a.degree < b.degree:
            if (a.degree * b.degree) % 2 == 1:
                sign = -sign
            a, b = b, a
            continue
        r = a % b
        if r.is_zero:
            return Fr(0)
        if (a.degree * b.degree) % 2 == 1:
            sign = -sign
        res *= b.lc ** (a.degree - r.degree)
        a, b = b, r
    return sign * res * b.coeffs[0] ** a.degree


def rp_discriminant(p):
    """disc(p) = (-1)^(n(n-1)/2) * Res(p, p') / lc(p)."""
    n = p.degree
    if n < 1:
        raise DegenerateInput("discriminant needs degree >= 1")
    if n == 1:
        return Fr(1)
    r = resultant(p, p.derivative())
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * r / p.lc


def _sign(x):
    return (x > 0) - (x < 0)


def sturm_sequence(p):
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        seq.append(-(seq[-2] % seq[-1]))
        if seq[-1].is_zero:
            seq.pop()
            break
    return seq


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def rp_real_root_count(p):
    """Number of distinct real roots of a squarefree polynomial."""
    if p.degree < 1:
        raise DegenerateInput("root counting needs a nonconstant polynomial")
    if rp_gcd(p, p.derivative()).degree > 0:
        raise NotSquarefree("input must be squarefree")
    seq = sturm_sequence(p)
    at_minus = [_sign(q.lc) * (-1) ** q.degree for q in seq if not q.is_zero]
    at_plus = [_sign(q.lc) for q in seq if not q.is_zero]
    return _variations(at_minus) - _variations(at_plus)


def squarefree_decomposition(p):
    """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
    if p.is_zero:
        raise DegenerateInput("cannot decompose the zero polynomial")
    p = p.monic()
    if p.degree < 1:
        return []
    g = rp_gcd(p, p.derivative())
    out = []
    b = p.exact_div(g)
    c = p.derivative().exact_div(g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = rp_gcd(b, d) if not d.is_zero else b.monic()
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# arithmetic in GF(p)[x]: polynomials as lists of ints in [0, p)

def _gtrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _gmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _gtrim(out)


def _gdivmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    if len(f) - 1 < dg:
        return [], _gtrim(f)
    quot = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        if f[i]:
            c = f[i] * inv % p
            quot[i - dg] = c
            for j, b in enumerate(g):
                f[i - dg + j] = (f[i - dg + j] - c * b) % p
    return _gtrim(quot), _gtrim(f)


def _gmonic(f, p):
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _ggcd(f, g, p):
    while g:
        f, g = g, _gdivmod(f, g, p)[1]
    return _gmonic(f, p) if f else []


def _gpowmod(f, e, m, p):
    out = [1]
    base = _gdivmod(f, m, p)[1]
    while e:
        if e & 1:
            out = _gdivmod(_gmul(out, base, p), m, p)[1]
        base = _gdivmod(_gmul(base, base, p), m, p)[1]
        e >>= 1
    return out


def _gsub(f, g, p):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
           for i in range(n)]
    return _gtrim(out)


def _gfp_deriv(f, p):
    return _gtrim([i * c % p for i, c in enumerate(f)][1:])


def _edf(f, d, p, rng):
    """Equal-degree splitting of monic squarefree f into factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        r = _gtrim(r)
        if len(r) < 2:
            continue
        if p == 2:
            s = []
            t = _gdivmod(r, f, p)[1]
            for _ in range(d):
                s = _gsub(s, [p - c for c in t], p)  # s += t
                t = _gpowmod(t, 2, f, p)
            g = _ggcd(s, f, p) if s else []
        else:
            s = _gpowmod(r, (p ** d - 1) // 2, f, p)
            s = _gsub(s, [1], p)
            g = _ggcd(s, f, p) if s else []
        if g and 0 < len(g) - 1 < n:
            return _edf(g, d, p, rng) + _edf(_gdivmod(f, g, p)[0], d, p, rng)


def gfp_factor_squarefree(f, p, seed=0):
    """Irreducible factors of a monic squarefree poly over GF(p)."""
    rng = random.Random((seed, tuple(f), p).__hash__())
    out = []
    h = [0, 1]
    v = list(f)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _gpowmod(h, p, v, p)
        g = _ggcd(_gsub(h, [0, 1], p), v, p)
        if len(g) > 1:
            out.extend(_edf(g, d, p, rng))
            v = _gdivmod(v, g, p)[0]
            h = _gdivmod(h, v, p)[1]
    if len(v) > 1:
        out.append(v)
    return out


def gfp_factor(f, p, seed=0):
    """Factor any nonzero poly over GF(p): list of (monic irreducible, mult)."""
    f = _gmonic(_gtrim([c % p for c in f]), p)
    out = {}

    def rec(g, mult):
        if len(g) - 1 < 1:
            return
        dg = _gfp_deriv(g, p)
        if not dg:
            # g = h(x^p) = h(x)^p over the prime field
            rec(_gtrim([g[i] for i in range(0, len(g), p)]), mult * p)
            return
        s = _ggcd(g, dg, p)
        w = _gdivmod(g, s, p)[0]
        k = 1
        while len(w) > 1:
            y = _ggcd(w, s, p)
            z = _gdivmod(w, y, p)[0]
            if len(z) > 1:
                for q in gfp_factor_squarefree(z, p, seed):
                    out[tuple(q)] = out.get(tuple(q), 0) + mult * k
            w = y
            s = _gdivmod(s, y, p)[0]
            k += 1
        if len(s) > 1:
            # leftover multiplicities are divisible by p: s = t(x^p)
            rec(_gtrim([s[i] for i in range(0, len(s), p)]), mult * p)

    rec(f, 1)
    return [(list(q), m) for q, m in sorted(out.items())]


# ---------------------------------------------------------------------------
# Zassenhaus factorization over Z / Q

def _good_prime(f_int):
    """Smallest prime >= 3 not dividing lc * disc of the squarefree input."""
    fp = from_int_list(f_int)
    disc = resultant(fp, fp.derivative())
    bad = abs(f_int[-1] * disc.numerator)
    p = 3
    while bad % p == 0:
        p = p + 2
        while not is_prime(p):
            p += 2
    return p


def _mignotte_bound(f_int):
    n = len(f_int) - 1
    norm2 = math.isqrt(sum(c * c for c in f_int)) + 1
    return 2 ** n * norm2 * abs(f_int[-1])


def _lift_linear(f, g, h, p, k):
    """Lift f = g*h (mod p) to (mod p^k); g stays monic.  f, g, h int lists."""
    # Bezout over GF(p), fixed throughout the linear iteration
    def xgcd_gfp(a, b):
        r0, r1 = a, b
        s0, s1 = [1], []
        t0, t1 = [], [1]
        while r1:
            q, r = _gdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _gsub(s0, _gmul(q, s1, p), p)
            t0, t1 = t1, _gsub(t0, _gmul(q, t1, p), p)
        inv = pow(r0[-1], -1, p)
        return ([c * inv % p for c in s0], [c * inv % p for c in t0])

    s, t = xgcd_gfp([c % p for c in g], [c % p for c in h])
    g = list(g)
    h = list(h)
    mod = p
    while mod < p ** k:
        mod2 = mod * p
        # error term f - g*h, divided by mod, taken mod p
        prod = _imul(g, h)
        e = [( (f[i] if i < len(f) else 0) - (prod[i] if i < len(prod) else 0) )
             for i in range(max(len(f), len(prod)))]
        e = [(c // mod) % p for c in e]
        e = _gtrim(e)
        if e:
            te = _gmul(t, e, p)
            q, dg = _gdivmod(te, [c % p for c in g], p)
            dh = _gadd(_gmul(s, e, p), _gmul([c % p for c in h], q, p), p)
            g = _iadd(g, [c * mod for c in dg])
            h = _iadd(h, [c * mod for c in dh])
        mod = mod2
    m = p ** k
    g = [c % m for c in g]
    h = [c % m for c in h]
    return _gtrim(g), _gtrim(h)


def _gadd(f, g, p):
    n = max(len(f), len(g))
    return _gtrim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
                   for i in range(n)])


def _imul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _iadd(f, g):
    n = max(len(f), len(g))
    return [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
            for i in range(n)]


def _lift_list(f, factors, p, k):
    """Given f = lc(f) * prod(factors) mod p (factors monic, coprime),
    return monic lifts mod p^k with f = lc * prod mod p^k."""
    m = p ** k
    if len(factors) == 1:
        inv = pow(f[-1], -1, m)
        return [_gtrim([c * inv % m for c in f])]
    g = factors[0]
    h = [f[-1] % p]
    for q in factors[1:]:
        h = _gmul(h, q, p)
    g2, h2 = _lift_linear(f, g, h, p, k)
    return [g2] + _lift_list(h2, factors[1:], p, k)


def _symmetric(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _factor_squarefree_int(f):
    """Irreducible integer factors of a primitive squarefree int poly, lc > 0."""
    if len(f) - 1 == 1:
        return [f]
    p = _good_prime(f)
    fbar = _gmonic([c % p for c in f], p)
    modular = sorted(gfp_factor_squarefree(fbar, p), key=lambda g: (len(g), g))
    if len(modular) == 1:
        return [f]
    bound = _mignotte_bound(f)
    k = 1
    while p ** k <= 2 * bound:
        k += 1
    modular = _lift_list(f, modular, p, k)
    m = p ** k

    out = []
    from itertools import combinations
    current = list(f)
    pool = list(modular)
    size = 1
    while 2 * size <= len(pool):
        found = True
        while found:
            found = False
            for combo in combinations(range(len(pool)), size):
                cand = [current[-1] % m]
                for idx in combo:
                    cand = [c % m for c in _imul(cand, pool[idx])]
                cand = [_symmetric(c, m) for c in cand]
                cand_pp = from_int_list(cand).primitive_int()
                if not cand_pp:
                    continue
                q, r = divmod(from_int_list(current), from_int_list(cand_pp))
                if r.is_zero:
                    out.append(cand_pp)
                    current = q.primitive_int()
                    pool = [g for i, g in enumerate(pool) if i not in combo]
                    found = True
                    break
            if 2 * size > len(pool):
                break
        size += 1
    if len(current) - 1 >= 1:
        out.append(current)
    return out


class RatFactorization:
    """content * prod(factor^mult) reconstructs the input exactly."""

    def __init__(self, content, factors):
        self.content = Fr(content)
        self.factors = list(factors)

    def expand(self):
        out = RatPoly.const(self.content)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def __repr__(self):
        return "RatFactorization(%s, %s)" % (self.content, self.factors)

    def __eq__(self, other):
        return (isinstance(other, RatFactorization)
                and self.content == other.content
                and self.factors == other.factors)


def rp_factor(p):
    """Complete factorization over Q into monic irreducibles.

    Returns a RatFactorization; factors are sorted by (degree,
    coefficient sequence) and pairwise distinct.
    """
    if p.is_zero:
        raise DegenerateInput("cannot factor the zero polynomial")
    content = p.lc
    monic = p.monic()
    found = {}
    for sf, mult in squarefree_decomposition(monic):
        f_int = sf.primitive_int()
        for g in _factor_squarefree_int(f_int):
            gm = from_int_list(g).monic()
            found[gm.coeffs] = found.get(gm.coeffs, 0) + mult
    factors = sorted(((RatPoly(c), m) for c, m in found.items()),
                     key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return RatFactorization(content, factors)


def rp_is_irreducible(p):
    if p.degree < 1:
        return False
    fac = rp_factor(p)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
