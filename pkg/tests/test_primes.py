import random
from fractions import Fraction as F

import pytest

from monodyn.errors import RootOfUnityInput, ZeroInput
from monodyn.primes import (euler_phi, factor_fraction, factorint, is_prime,
                            kronecker, max_power_exponent, ord_p,
                            quadratic_conductor, squarefree_kernel)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(2, 48):
        assert is_prime(n) == (n in primes)


def test_is_prime_large():
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 61 + 1)
    assert is_prime(1000000007)
    # strong pseudoprime to several bases
    assert not is_prime(3215031751)


def test_factorint_reconstructs():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.getrandbits(rng.randint(2, 50)) + 2
        fac = factorint(n)
        prod = 1
        for p, e in fac.items():
            assert is_prime(p)
            assert e >= 1
            prod *= p ** e
        assert prod == n


def test_factorint_edges():
    assert factorint(1) == {}
    assert factorint(-12) == {2: 2, 3: 1}
    assert factorint(997 ** 3) == {997: 3}
    with pytest.raises(ZeroInput):
        factorint(0)


def test_factor_fraction():
    f = factor_fraction(F(-12, 35))
    assert f.sign == -1
    assert f.as_dict() == {2: 2, 3: 1, 5: -1, 7: -1}
    assert f.value() == F(-12, 35)


def test_ord_p():
    assert ord_p(F(12), 2) == 2
    assert ord_p(F(12), 3) == 1
    assert ord_p(F(5, 8), 2) == -3
    assert ord_p(F(7), 5) == 0


def test_euler_phi_brute():
    import math
    for n in range(1, 200):
        brute = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert euler_phi(n) == brute
    assert euler_phi(12) == 4


@pytest.mark.parametrize("a,expect", [
    (F(16), (4, F(2), 1)),
    (F(-8), (3, F(-2), 1)),
    (F(12), (1, F(12), 1)),
    (F(-4), (2, F(2), -1)),
    (F(8, 27), (3, F(2, 3), 1)),
    (F(-1, 32), (5, F(-1, 2), 1)),
    (F(4, 9), (2, F(2, 3), 1)),
])
def test_max_power_exponent(a, expect):
    ell, x, xi = max_power_exponent(a)
    assert (ell, x, xi) == expect
    assert xi * x ** ell == a


def test_max_power_exponent_maximal():
    # no larger exponent admits a rational witness with either sign
    for a in (F(16), F(-4), F(36), F(-27, 8)):
        ell, x, xi = max_power_exponent(a)
        for bigger in range(ell + 1, 3 * ell + 1):
            found = False
            for num in range(-40, 41):
                for den in range(1, 12):
                    y = F(num, den)
                    if y != 0 and (y ** bigger == a or -(y ** bigger) == a):
                        found = True
            assert not found, (a, bigger)


def test_max_power_exponent_rejects_units():
    for a in (0, 1, -1):
        with pytest.raises((RootOfUnityInput, ZeroInput)):
            max_power_exponent(F(a))


def test_kronecker_against_legendre():
    # quadratic residues by brute force at odd primes
    for p in (3, 5, 7, 11, 13):
        residues = {pow(a, 2, p) for a in range(1, p)}
        for a in range(1, p):
            expect = 1 if a in residues else -1
            assert kronecker(a, p) == expect
    assert [kronecker(2, k) for k in (1, 3, 5, 7)] == [1, -1, -1, 1]


def test_quadratic_kernel_conductor():
    assert squarefree_kernel(F(8)) == 2
    assert squarefree_kernel(F(12)) == 3
    assert squarefree_kernel(F(1, 3)) == 3
    assert quadratic_conductor(2) == 8
    assert quadratic_conductor(3) == 12
    assert quadratic_conductor(5) == 5
