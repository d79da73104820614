import random
from fractions import Fraction as Fr

import pytest

from quatpoly.errors import DegenerateInput, NotSquarefree
from quatpoly.ratpoly import (RatPoly, from_int_list, gfp_factor, resultant,
                              rp_discriminant, rp_factor, rp_gcd,
                              rp_is_irreducible, rp_real_root_count, rp_xgcd,
                              squarefree_decomposition)


def sylvester_resultant(p, q):
    """Independent oracle: determinant of the Sylvester matrix."""
    n, m = p.degree, q.degree
    size = n + m
    rows = []
    for r in range(m):
        row = [Fr(0)] * size
        for idx in range(n + 1):
            row[r + idx] = p[n - idx]
        rows.append(row)
    for r in range(n):
        row = [Fr(0)] * size
        for idx in range(m + 1):
            row[r + idx] = q[m - idx]
        rows.append(row)
    # fraction-free-ish Gaussian elimination determinant
    det = Fr(1)
    for col in range(size):
        piv = None
        for r in range(col, size):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fr(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            f = rows[r][col] * inv
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return det


def descartes_root_count(p):
    """Independent oracle: exact real-root count of a squarefree p by
    bisection with Descartes' rule of signs (Vincent–Collins–Akritas)."""
    count = 1 if p(Fr(0)) == 0 else 0
    bound = 1 + max(abs(c) for c in p.coeffs) / abs(p.lc)
    for mirror in (1, -1):
        q = RatPoly([c * mirror ** m for m, c in enumerate(p.coeffs)])
        scaled = RatPoly([c * bound ** m for m, c in enumerate(q.coeffs)])
        count += _vca_01(scaled, 0)
    return count


def _sign_variations(coeffs):
    v = 0
    prev = 0
    for c in coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _vca_01(q, depth):
    """Number of roots of q in the open interval (0, 1)."""
    assert depth < 64, "VCA recursion ran away"
    n = q.degree
    # Descartes bound for (0,1): variations of (x+1)^n q(1/(x+1))
    rev = RatPoly(list(reversed([q[m] for m in range(n + 1)])))
    shifted = rev.compose(from_int_list([1, 1]))
    v = _sign_variations(shifted.coeffs)
    if v == 0:
        return 0
    if v == 1:
        return 1
    half = q.compose(RatPoly([Fr(0), Fr(1, 2)]))      # roots in (0, 1/2)
    other = q.compose(RatPoly([Fr(1, 2), Fr(1, 2)]))  # roots in (1/2, 1)
    mid = 1 if q(Fr(1, 2)) == 0 else 0
    return _vca_01(half, depth + 1) + mid + _vca_01(other, depth + 1)


def rnd_poly(rng, deg, height=9):
    coeffs = [Fr(rng.randint(-height, height)) for _ in range(deg)]
    coeffs.append(Fr(rng.randint(1, height)))
    return RatPoly(coeffs)


class TestArithmetic:
    def test_divmod_identity(self):
        rng = random.Random(1)
        for _ in range(300):
            p = rnd_poly(rng, rng.randint(0, 6))
            d = rnd_poly(rng, rng.randint(0, 4))
            q, r = divmod(p, d)
            assert q * d + r == p
            assert r.is_zero or r.degree < d.degree

    def test_gcd_properties(self):
        rng = random.Random(2)
        for _ in range(100):
            g = rnd_poly(rng, rng.randint(0, 3))
            a = g * rnd_poly(rng, rng.randint(0, 3))
            b = g * rnd_poly(rng, rng.randint(0, 3))
            got = rp_gcd(a, b)
            assert (a % got).is_zero and (b % got).is_zero
            assert (got % rp_gcd(g, got)).is_zero
            gx, u, v = rp_xgcd(a, b)
            assert u * a + v * b == gx

    def test_gcd_zero_zero(self):
        with pytest.raises(DegenerateInput):
            rp_gcd(RatPoly([]), RatPoly([]))


class TestResultant:
    def test_against_sylvester(self):
        rng = random.Random(3)
        for _ in range(60):
            p = rnd_poly(rng, rng.randint(1, 5))
            q = rnd_poly(rng, rng.randint(1, 5))
            assert resultant(p, q) == sylvester_resultant(p, q)

    def test_shared_root(self):
        c = from_int_list([-1, 1])
        p = c * from_int_list([3, 1])
        q = c * from_int_list([-7, 1])
        assert resultant(p, q) == 0

    def test_discriminant_square_detection(self):
        assert rp_discriminant(from_int_list([-1, 0, 1])) == 4
        assert rp_discriminant(from_int_list([1, 1, 1])) == -3


class TestRealRoots:
    def test_against_bisection(self):
        rng = random.Random(4)
        done = 0
        while done < 40:
            p = rnd_poly(rng, rng.randint(1, 5))
            if rp_gcd(p, p.derivative()).degree > 0:
                continue
            assert rp_real_root_count(p) == descartes_root_count(p)
            done += 1

    def test_rejects_repeated_roots(self):
        p = from_int_list([1, 2, 1])
        with pytest.raises(NotSquarefree):
            rp_real_root_count(p)


class TestSquarefreeDecomposition:
    def test_reconstruction(self):
        rng = random.Random(5)
        for _ in range(40):
            p = RatPoly([Fr(1)])
            for mult in range(1, 4):
                f = rnd_poly(rng, rng.randint(1, 2))
                p = p * f ** mult
            parts = squarefree_decomposition(p.monic())
            rebuilt = RatPoly([Fr(1)])
            for f, m in parts:
                rebuilt = rebuilt * f ** m
                assert rp_gcd(f, f.derivative()).degree == 0
            assert rebuilt == p.monic()


class TestFactorModP:
    def test_multiply_back_and_irreducible(self):
        rng = random.Random(6)
        for p in (2, 3, 5, 13):
            for _ in range(30):
                deg = rng.randint(1, 6)
                f = [rng.randrange(p) for _ in range(deg)] + [1]
                fac = gfp_factor(f, p)
                prod = [1]
                for g, e in fac:
                    for _ in range(e):
                        prod = _gmul_naive(prod, g, p)
                assert prod == f
                for g, e in fac:
                    assert _is_irreducible_bruteforce(g, p)


def _gmul_naive(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _is_irreducible_bruteforce(g, p):
    """Oracle: degree <= 3 has a root test; higher degrees via trial
    division by all monic polynomials of degree <= deg/2."""
    deg = len(g) - 1
    if deg == 1:
        return True
    from itertools import product as iproduct
    for d in range(1, deg // 2 + 1):
        for tail in iproduct(range(p), repeat=d):
            cand = list(tail) + [1]
            if _gdiv_exact(g, cand, p):
                return False
    return True


def _gdiv_exact(a, b, p):
    a = list(a)
    while len(a) >= len(b):
        c = a[-1] * pow(b[-1], p - 2, p) % p if p > 2 else a[-1] * b[-1] % p
        for idx in range(len(b)):
            a[len(a) - len(b) + idx] = (a[len(a) - len(b) + idx]
                                        - c * b[idx]) % p
        a.pop()
    return all(x % p == 0 for x in a)


class TestFactorOverQ:
    def test_planted_factors(self):
        rng = random.Random(7)
        for _ in range(60):
            parts = []
            p = RatPoly([Fr(rng.randint(1, 5))])
            for _ in range(rng.randint(1, 4)):
                f = rnd_poly(rng, rng.randint(1, 3), height=5)
                parts.append(f)
                p = p * f
            fac = rp_factor(p)
            assert fac.expand() == p
            for g, _e in fac.factors:
                assert g.is_monic
                assert rp_is_irreducible(g)

    def test_known_values(self):
        fac = rp_factor(from_int_list([-1, 0, 0, 0, 0, 0, 1]))
        names = sorted(str(g) for g, _ in fac.factors)
        assert names == ["x + 1", "x - 1", "x^2 + x + 1", "x^2 - x + 1"]
        assert rp_is_irreducible(from_int_list([6, 16, 11, 0, 1]))
        assert rp_is_irreducible(from_int_list([-2, 0, 0, 1]))
        assert not rp_is_irreducible(from_int_list([1, 2, 1]))

    def test_norm_example(self):
        n = (from_int_list([1, 0, 1]) * from_int_list([5, -4, 1])
             * from_int_list([5, 0, -3, 0, 1]))
        fac = rp_factor(n)
        got = sorted((str(g), e) for g, e in fac.factors)
        assert got == [("x^2 + 1", 1), ("x^2 - 4*x + 5", 1),
                       ("x^4 - 3*x^2 + 5", 1)]

    def test_multiplicities(self):
        p = from_int_list([1, 1]) ** 3 * from_int_list([1, 0, 1]) ** 2
        fac = rp_factor(p)
        assert sorted((str(g), e) for g, e in fac.factors) == \
            [("x + 1", 3), ("x^2 + 1", 2)]
