import random
from fractions import Fraction as F

from monodyn.polynomials import (UniPoly, cyclotomic_poly, cyclotomic_value,
                                 newton_polygon_root_valuations, poly_gcd,
                                 squarefree_decomposition)
from monodyn.primes import euler_phi


def P(*cs):
    return UniPoly.from_coeffs(cs)


def test_basic_arithmetic():
    f = P(1, 2, 1)          # (X+1)^2
    g = P(1, 1)
    assert g * g == f
    q, r = divmod(f, g)
    assert q == g and r.is_zero
    assert f(F(3)) == 16
    assert f.derivative() == P(2, 2)
    assert (f - f).is_zero
    assert P(0, 0, 0).is_zero
    assert f.shift(F(1)) == P(4, 4, 1)      # (X+2)^2
    assert P(0, 1).compose_monomial(3) == P(0, 0, 0, 1)
    assert P(1, 1).scale_arg(F(2)) == P(1, 2)


def test_division_random():
    rng = random.Random(5)
    for _ in range(60):
        f = P(*[rng.randint(-9, 9) for _ in range(rng.randint(1, 8))])
        g = P(*[rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])
        if g.is_zero:
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree or r.is_zero


def test_content_primitive():
    f = P(F(2, 3), F(4, 3), F(2, 3))
    c, prim = f.content_and_primitive()
    assert c == F(2, 3)
    assert prim.int_coeffs() == [1, 2, 1]
    assert c * prim == f


def test_gcd_and_squarefree():
    f = P(-1, 0, 1)  # (X-1)(X+1)
    g = P(-1, 1)
    assert poly_gcd(f, g) == P(-1, 1)
    h = g * g * P(1, 1) ** 3
    parts = squarefree_decomposition(h)
    total = UniPoly.one()
    for fac, mult in parts:
        total = total * fac ** mult
    assert total.monic() == h.monic()
    assert sorted(m for _, m in parts) == [2, 3]


def test_cyclotomic():
    assert cyclotomic_poly(1) == P(-1, 1)
    assert cyclotomic_poly(6) == P(1, -1, 1)
    assert cyclotomic_poly(12).degree == euler_phi(12) == 4
    # division oracle: X^n - 1 = prod over divisors
    for n in (1, 2, 6, 12, 30):
        prod = UniPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == UniPoly.binomial(n, 1)


def test_cyclotomic_value_matches_coeffs():
    rng = random.Random(2)
    for n in (1, 2, 3, 4, 6, 8, 12, 15, 36):
        poly = cyclotomic_poly(n)
        for _ in range(5):
            x = F(rng.randint(-20, 20), rng.randint(1, 9))
            if x in (0, 1, -1):
                continue
            assert cyclotomic_value(n, x) == poly(x)
        assert cyclotomic_value(n, F(1)) == poly(F(1))
        assert cyclotomic_value(n, F(-1)) == poly(F(-1))


def test_newton_polygon_examples():
    assert newton_polygon_root_valuations(UniPoly.binomial(2, 2), 2) == [F(1, 2)] * 2
    assert newton_polygon_root_valuations(P(-1, 0, 1), 3) == [F(0), F(0)]
    assert newton_polygon_root_valuations(P(2, 1, 1), 2) == [F(0), F(1)]
    assert newton_polygon_root_valuations(
        UniPoly.binomial(5, F(1, 24)), 2) == [F(-3, 5)] * 5


def test_newton_polygon_sum_rule():
    # valuations sum to ord_p(f(0)/lead) when f(0) != 0
    from monodyn.primes import ord_p
    rng = random.Random(9)
    for _ in range(80):
        cs = [rng.randint(-40, 40) for _ in range(rng.randint(2, 7))]
        if cs[0] == 0 or cs[-1] == 0:
            continue
        f = P(*cs)
        for p in (2, 3, 5):
            vals = newton_polygon_root_valuations(f, p)
            assert sum(vals) == ord_p(F(cs[0], cs[-1]), p)
